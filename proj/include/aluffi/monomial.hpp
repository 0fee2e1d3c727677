#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace aluffi {

/// Hard cap on ring arity. Exponent vectors are stored inline.
inline constexpr std::size_t kMaxVars = 32;

/// Exponent vector with cached total degree and support bitmask.
///
/// The support mask gives a cheap necessary condition for divisibility,
/// which dominates the cost of reducer lookup in Buchberger's algorithm.
class Monomial {
 public:
  using Exponent = std::uint8_t;

  Monomial() = default;
  explicit Monomial(std::span<const int> exponents);

  static Monomial variable(std::size_t index, int power = 1);

  int operator[](std::size_t i) const noexcept { return exps_[i]; }
  int degree() const noexcept { return static_cast<int>(degree_); }
  std::uint32_t support() const noexcept { return support_; }
  bool is_one() const noexcept { return degree_ == 0; }

  void set(std::size_t i, int e);

  bool divides(const Monomial& other) const noexcept {
    if ((support_ & ~other.support_) != 0 || degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  bool coprime(const Monomial& other) const noexcept { return (support_ & other.support_) == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.support_ == b.support_ && a.degree_ == b.degree_ &&
           std::memcmp(a.exps_.data(), b.exps_.data(), kMaxVars) == 0;
  }

  std::size_t hash() const noexcept;

 private:
  void refresh() noexcept;

  std::array<Exponent, kMaxVars> exps_{};
  std::uint32_t degree_ = 0;
  std::uint32_t support_ = 0;
};

/// Weight and RevLex are refinement rows: they only break ties, may overlap
/// other segments and do not count towards covering the variables.
enum class OrderKind { Lex, Grevlex, WeightedGrevlex, Weight, RevLex };

/// One block of a product order: a set of variables ordered internally by
/// `kind`. `weights` is read for WeightedGrevlex and Weight and is parallel to `vars`.
struct OrderSegment {
  OrderKind kind = OrderKind::Grevlex;
  std::vector<int> vars;
  std::vector<int> weights;
};

/// Monomial order as a lexicographic product of segments. A single segment
/// is a plain lex / grevlex / weighted-grevlex order; several segments form a
/// block (elimination) order in which earlier segments dominate.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  explicit MonomialOrder(std::vector<OrderSegment> segments);

  static MonomialOrder lex(std::size_t nvars);
  static MonomialOrder grevlex(std::size_t nvars);
  static MonomialOrder weighted_grevlex(std::vector<int> weights);
  /// Elimination order: `first` (grevlex) strictly dominates the remaining
  /// variables (grevlex).
  static MonomialOrder elimination(std::size_t nvars, std::span<const int> first);
  /// Total degree in `graded`, then smaller powers of `var` first, then
  /// grevlex. For ideals homogeneous in `graded`, dividing each Gröbner basis
  /// element by its largest power of `var` saturates by `var`.
  static MonomialOrder variable_saturation(std::size_t nvars, std::span<const int> graded, int var);

  /// Negative, zero or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const noexcept;
  bool greater(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) > 0; }

  const std::vector<OrderSegment>& segments() const noexcept { return segments_; }
  std::size_t arity() const noexcept { return arity_; }
  bool is_block() const noexcept { return segments_.size() > 1; }

  /// "lex", "grevlex", "weighted-grevlex(w1,...)" or "block(...)".
  std::string name() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) noexcept;

 private:
  std::vector<OrderSegment> segments_;
  std::size_t arity_ = 0;
};

bool operator==(const OrderSegment& a, const OrderSegment& b) noexcept;

}  // namespace aluffi

template <>
struct std::hash<aluffi::Monomial> {
  std::size_t operator()(const aluffi::Monomial& m) const noexcept { return m.hash(); }
};
