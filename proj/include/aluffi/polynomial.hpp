#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aluffi/monomial.hpp"
#include "aluffi/ring.hpp"

namespace aluffi {

using Rational = mpq_class;
using Integer = mpz_class;

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse polynomial over Q in a fixed ring.
///
/// Canonical form: nonzero coefficients only, terms sorted strictly
/// descending in the ring's monomial order. Values are immutable in the
/// public interface; every operation returns a new polynomial.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Normalizes: sorts, merges equal monomials, drops zeros.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::string_view name);
  static Polynomial variable(RingPtr ring, int index);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const Rational& c = 1);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;

  /// Leading term under the ring order; requires a nonzero polynomial.
  const Term& leading() const;
  const Monomial& leading_monomial() const { return leading().mono; }
  const Rational& leading_coefficient() const { return leading().coeff; }

  /// Total degree; nullopt for the zero polynomial.
  std::optional<int> degree() const;
  /// Degree in the variables of a subset; nullopt for zero.
  std::optional<int> degree_in(std::span<const int> vars) const;
  /// Exponent of variable `var` maximized over terms (0 for zero).
  int degree_of(int var) const;

  /// Coefficient of monomial m (zero if absent).
  Rational coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Rational& c) { return c * a; }
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  /// Multiplies by c·m.
  Polynomial mul_term(const Monomial& m, const Rational& c) const;
  Polynomial pow(int e) const;

  /// Scales to leading coefficient 1 (zero stays zero).
  Polynomial monic() const;
  /// Scales to integer coefficients with gcd 1 and positive leading coefficient.
  Polynomial primitive() const;

  /// Re-expresses in another ring, matching variables by name. Every
  /// variable used by this polynomial must exist in `target`.
  Polynomial in_ring(const RingPtr& target) const;

  /// Text form parseable by parse_polynomial, e.g. "x^2*y - 3/2*z + 1".
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Formal partial derivative with respect to variable `var`.
Polynomial partial_derivative(const Polynomial& f, int var);
Polynomial partial_derivative(const Polynomial& f, std::string_view var);

/// Ring homomorphism sending variable i of f's ring to images[i] (all in the
/// same target ring).
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images);

/// Evaluates the variables of `block` at `values` (block order). The result
/// lives in the ring without that block; an empty or missing block with no
/// values returns f unchanged.
Polynomial evaluate_block(const Polynomial& f, std::string_view block, std::span<const Rational> values);

struct Homogeneity {
  bool homogeneous = false;
  /// Common degree in the block variables; empty for the zero polynomial.
  std::optional<int> degree;
  /// The zero polynomial is flagged explicitly and never reported homogeneous.
  bool zero = false;
};

/// Homogeneity with respect to the total degree in `block`'s variables;
/// other variables (parameters) are ignored.
Homogeneity is_homogeneous(const Polynomial& f, std::string_view block);
Homogeneity is_homogeneous(const Polynomial& f, std::span<const int> vars);

/// Greatest common divisor of the coefficients' numerators over the lcm of
/// denominators, i.e. f = content(f) * primitive(f) up to sign.
Rational content(const Polynomial& f);

}  // namespace aluffi
