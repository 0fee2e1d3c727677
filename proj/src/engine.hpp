#pragma once

// Integer-coefficient Buchberger engine shared by the ideal and module code.
// Not part of the public interface.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "aluffi/groebner.hpp"
#include "aluffi/monomial.hpp"
#include "aluffi/polynomial.hpp"

namespace aluffi::detail {

struct ETerm {
  Monomial m;
  std::uint32_t comp = 0;
  Integer c;
};

/// Terms sorted strictly descending in the engine order.
using EPoly = std::vector<ETerm>;

/// Free-module term order. Under PositionOverTerm a smaller component index
/// dominates; under TermOverPosition the monomial is compared first.
enum class ModuleOrder { PositionOverTerm, TermOverPosition };

struct EngineOrder {
  const MonomialOrder* order = nullptr;
  ModuleOrder module = ModuleOrder::PositionOverTerm;

  int compare(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const noexcept {
    if (module == ModuleOrder::PositionOverTerm) {
      if (ca != cb) return ca < cb ? 1 : -1;
      return order->compare(a, b);
    }
    int c = order->compare(a, b);
    if (c != 0) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }
  int compare(const ETerm& a, const ETerm& b) const noexcept { return compare(a.m, a.comp, b.m, b.comp); }
};

struct EngineSpec {
  EngineOrder order;
  /// True when elements have several components: disables the product criterion.
  bool module = false;
  GbOptions options;
};

/// Scales a rational polynomial (component `comp`) to a primitive integer one.
EPoly to_engine(const Polynomial& f, std::uint32_t comp, const EngineOrder& order);
/// Sorts and merges terms; drops zeros.
void normalize(EPoly& f, const EngineOrder& order);
/// Divides by the coefficient content; makes the leading coefficient positive.
void make_primitive(EPoly& f);
/// Rational polynomial from the terms of component `comp`.
Polynomial from_engine(const EPoly& f, std::uint32_t comp, const RingPtr& ring);

/// Reduced Groebner basis (primitive, positive leading coefficients, sorted by
/// ascending leading term).
std::vector<EPoly> groebner(std::vector<EPoly> input, const EngineSpec& spec);

/// Full reduction of f modulo `basis` (any generating set with leading terms
/// in front). The result equals the normal form up to a nonzero scalar.
EPoly reduce(EPoly f, const std::vector<EPoly>& basis, const EngineSpec& spec);

}  // namespace aluffi::detail
