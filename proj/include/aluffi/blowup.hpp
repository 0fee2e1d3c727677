#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aluffi/ideal.hpp"
#include "aluffi/ideal_ops.hpp"
#include "aluffi/polynomial.hpp"

namespace aluffi {

/// A pair J ⊆ I with, for each generator a_k of J, coefficients c_k such that
/// a_k = Σ_j c_kj b_j over the generators b_j of I.
struct PairInput {
  RingPtr ring;
  std::vector<Polynomial> I_gens;
  std::vector<Polynomial> J_gens;
  std::vector<std::vector<Polynomial>> certificates;

  /// Validates the certificates, solving for any that are missing (an empty
  /// list solves all). Throws DomainError when J ⊄ I or a certificate does
  /// not reproduce its generator.
  static PairInput make(std::vector<Polynomial> I_gens, std::vector<Polynomial> J_gens,
                        std::vector<std::vector<Polynomial>> certificates = {});

  Ideal I() const { return Ideal(ring, I_gens); }
  Ideal J() const { return Ideal(ring, J_gens); }
};

/// R[T_1..T_n]: the base ring with a "fiber" block of n fresh variables.
RingPtr fiber_ring(const RingPtr& base, std::size_t n);

/// Kernel of R[T] → R[u], T_i ↦ b_i u.
Ideal rees_ideal(std::span<const Polynomial> I_gens);
/// Linear forms Σ_i φ_ij T_i over the syzygy columns of the generators.
Ideal sym_part(std::span<const Polynomial> I_gens);

struct AluffiPresentation {
  RingPtr ring;
  std::vector<int> fiber_vars;
  /// Syzygy forms only: presents the symmetric algebra of I.
  Ideal sym_part;
  Ideal rees_ideal;
  /// sym_part + (J) + (J̃).
  Ideal sym_ideal;
  /// rees_ideal + (J) + (J̃).
  Ideal aluffi_ideal;
  /// Kernel of R[T] → (R/J)[u], T_i ↦ b_i u: the Rees algebra of I/J.
  Ideal relative_rees_ideal;
  /// ã_k = Σ_j c_kj T_j.
  std::vector<Polynomial> tilde_J;
};

AluffiPresentation aluffi_presentation(const PairInput& pair);

struct TorsionPiece {
  int t = 0;
  bool zero = true;
  /// Generators of J ∩ I^t outside J·I^(t-1).
  std::vector<Polynomial> witnesses;
  /// (internal degree, dimension of the piece in that degree); only filled
  /// when J ∩ I^t and J·I^(t-1) are homogeneous.
  std::vector<std::pair<int, int>> graded_dims;
  /// Least k ≤ bound with I^k · witnesses ⊆ J·I^(t-1); unset for zero pieces
  /// or when no k up to the bound works.
  std::optional<int> annihilator_exponent;
};

struct TorsionReport {
  int bound = 0;
  int degree_cap = 0;
  std::vector<TorsionPiece> pieces;

  bool all_zero() const;
};

/// Pieces (J ∩ I^t)/(J·I^(t-1)) for t = 2..bound. `degree_cap` limits the
/// graded dimension count (default: twice the largest generator degree).
TorsionReport vv_pieces(const PairInput& pair, int bound, std::optional<int> degree_cap = std::nullopt);

/// The syzygy forms generate the whole Rees ideal.
bool is_linear_type(std::span<const Polynomial> I_gens);
bool is_linear_type(const PairInput& pair);

/// Least k ≤ bound with J ∩ I^t = (J ∩ I^k)·I^(t-k) for k ≤ t ≤ bound;
/// unset when it exceeds the bound.
std::optional<int> artin_rees_number(const PairInput& pair, int bound);

struct StandardBaseReport {
  /// I-order of each generator of J, capped at bound + 1.
  std::vector<int> nu;
  /// (t, J ∩ I^t = Σ a_i I^(t-ν_i)) for t = 1..bound.
  std::vector<std::pair<int, bool>> degrees;
  bool passes() const;
  std::optional<int> first_failure() const;
};

StandardBaseReport standard_base_check(const PairInput& pair, int bound);

/// Largest T-degree among minimal homogeneous generators of the Rees ideal;
/// unset when it exceeds the bound.
std::optional<int> relation_type(std::span<const Polynomial> I_gens, int bound);

/// dim k[T]/fiber, computed as the dimension of R[T]/(Rees ideal + (base
/// variables)). Throws DomainError when a generator has a constant term.
int analytic_spread(std::span<const Polynomial> I_gens);

DimensionReport aluffi_dimension(const AluffiPresentation& pres);

struct ComponentCheck {
  Ideal candidate;
  bool contains_aluffi = false;
  DimensionReport dim;
};

struct ComponentReport {
  std::vector<ComponentCheck> checks;
  /// Every Aluffi generator lies in the radical of the candidates' intersection.
  bool covers = false;
  /// Every generator of the intersection lies in the radical of the Aluffi ideal.
  bool exhausts = false;
  /// All candidate dimensions agree.
  bool equidimensional = false;

  bool complete() const { return covers && exhausts; }
};

ComponentReport verify_component_list(const AluffiPresentation& pres, std::span<const Ideal> candidates);

}  // namespace aluffi
