#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aluffi/ideal.hpp"
#include "aluffi/polynomial.hpp"

namespace aluffi {

Ideal ideal_sum(const Ideal& I, const Ideal& J);
/// Pairwise products of generators.
Ideal ideal_product(const Ideal& I, const Ideal& J);
/// t-fold product; I^0 = (1). One generator per multiset of t generators of
/// I, before interreduction.
Ideal ideal_power(const Ideal& I, int t);

/// I ∩ J by eliminating a tag variable w from w·I + (1-w)·J.
Ideal intersect(const Ideal& I, const Ideal& J);
Ideal intersect(std::span<const Ideal> ideals);

/// I : (g). Throws DomainError for g = 0.
Ideal quotient(const Ideal& I, const Polynomial& g);
/// I : J = ∩_g I : (g) over the generators of J. Throws DomainError for J = 0.
Ideal quotient(const Ideal& I, const Ideal& J);

enum class SaturationMethod {
  /// I : g^∞ by eliminating y from (I, 1 - y·g), intersected over the
  /// generators of J. When J is generated by variables and I is homogeneous
  /// in them, each I : x^∞ is read off a basis in a degree-compatible order
  /// instead.
  Rabinowitsch,
  /// I : J, (I : J) : J, ... until the chain stabilizes.
  IteratedQuotient,
};

struct Saturation {
  Ideal ideal;
  /// Least k with I : J^k = I : J^∞; empty if it exceeds the search cap.
  std::optional<int> exponent;
};

/// I : J^∞. Throws DomainError for J = 0.
Saturation saturate(const Ideal& I, const Ideal& J, SaturationMethod method = SaturationMethod::Rabinowitsch);

/// I ∩ Q[variables outside `vars`], returned in I's ring.
Ideal eliminate(const Ideal& I, std::span<const int> vars);
Ideal eliminate(const Ideal& I, std::string_view block);

/// Re-homes an ideal whose generators only involve `block` into the ring of
/// that block alone.
Ideal restrict_to_block(const Ideal& I, std::string_view block);

/// J ⊆ I.
bool ideal_contains(const Ideal& I, const Ideal& J);
bool ideal_equal(const Ideal& I, const Ideal& J);

/// Krull dimension of ring/I and codimension of I.
struct DimensionReport {
  /// The unit ideal: the empty scheme. dim and codim are then unset.
  bool empty = false;
  std::optional<int> dim;
  std::optional<int> codim;
  /// A maximal independent set of variables modulo the initial ideal.
  std::vector<int> witness;

  std::string to_string() const;
};

DimensionReport dimension(const Ideal& I);
/// Dimension from an already computed basis.
DimensionReport dimension(const class GroebnerBasis& G);

struct GradedGenerator {
  Polynomial poly;
  int degree = 0;
};

/// Degree of a monomial under a nonnegative weight vector.
int weighted_degree(const Monomial& m, std::span<const int> weights);

/// Irredundant homogeneous generating set for the grading given by `weights`
/// (one weight per variable, zero allowed), built degree by degree: a
/// generator of degree d is kept when it is not in the ideal generated by the
/// lower-degree part and the elements already kept in degree d. Throws
/// DomainError when a generator is not homogeneous.
std::vector<GradedGenerator> minimal_homogeneous_generators(const Ideal& I, std::span<const int> weights);

/// Exact quotient f / g; nullopt when g does not divide f.
std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g);

/// Greatest common divisor (monic), via lcm = generator of (f) ∩ (g).
Polynomial polynomial_gcd(const Polynomial& f, const Polynomial& g);

}  // namespace aluffi
