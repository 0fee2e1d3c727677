#pragma once

#include <cstddef>
#include <vector>

#include "aluffi/ideal.hpp"
#include "aluffi/polynomial.hpp"

namespace aluffi {

enum class PairSelection {
  /// Smallest lcm degree first (the normal strategy).
  Normal,
  /// Smallest sugar degree first.
  Sugar,
};

struct GbOptions {
  /// Maximum number of S-pair reductions before ResourceExhausted.
  std::size_t work_limit = 1'000'000;
  /// Largest coefficient size, in bits, of a new basis element before
  /// ResourceExhausted; 0 disables the check.
  std::size_t coefficient_bit_limit = 0;
  PairSelection selection = PairSelection::Normal;
};

/// Options used by every Groebner computation on the calling thread.
const GbOptions& current_gb_options() noexcept;

/// Installs options for the calling thread for the lifetime of the scope.
class GbOptionsScope {
 public:
  explicit GbOptionsScope(GbOptions options);
  ~GbOptionsScope();
  GbOptionsScope(const GbOptionsScope&) = delete;
  GbOptionsScope& operator=(const GbOptionsScope&) = delete;

 private:
  GbOptions saved_;
};

/// Reduced Groebner basis: monic elements sorted by ascending leading
/// monomial, unique for (ideal, order).
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements);

  const RingPtr& ring() const noexcept { return ring_; }
  const MonomialOrder& order() const noexcept { return ring_->order(); }
  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  bool reduced() const noexcept { return true; }

  bool is_zero() const noexcept { return elements_.empty(); }
  bool is_unit() const noexcept;
  std::vector<Monomial> leading_monomials() const;

  /// Remainder of f on division by the basis: no term is divisible by a
  /// leading monomial. Linear in f.
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

 private:
  RingPtr ring_;
  std::vector<Polynomial> elements_;
};

/// Reduced Groebner basis of I for the order carried by I's ring.
GroebnerBasis buchberger(const Ideal& I);
/// Same, under another order on the same variables.
GroebnerBasis buchberger(const Ideal& I, const MonomialOrder& order);

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

/// S-polynomial of two nonzero polynomials (rational, leading terms cancel).
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// f ∈ I.
bool ideal_member(const Polynomial& f, const Ideal& I);

/// f ∈ √I, decided by 1 ∈ (I, 1 - y·f) over the ring extended by an
/// auxiliary variable y.
bool radical_member(const Polynomial& f, const Ideal& I);

}  // namespace aluffi
