#include "aluffi/ideal_ops.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <optional>

#include "aluffi/errors.hpp"
#include "aluffi/groebner.hpp"

namespace aluffi {

namespace {

std::uint32_t mask_of(std::span<const int> vars) {
  std::uint32_t m = 0;
  for (int v : vars) m |= 1u << v;
  return m;
}

std::uint32_t poly_support(const Polynomial& f) {
  std::uint32_t m = 0;
  for (const auto& t : f.terms()) m |= t.mono.support();
  return m;
}

// Generators of I ∩ Q[vars not in `drop`], with I living in `ring` (which may
// be larger than `target`); results are re-homed into `target`.
Ideal eliminate_into(const Ideal& I, std::span<const int> drop, const RingPtr& target) {
  if (I.is_zero()) return Ideal(target);
  const RingPtr& ring = I.ring();
  std::vector<int> first(drop.begin(), drop.end());
  std::sort(first.begin(), first.end());
  auto elim = ring->with_order(MonomialOrder::elimination(ring->size(), first));
  auto G = buchberger(I.in_ring(elim));
  const std::uint32_t dropped = mask_of(first);
  std::vector<Polynomial> keep;
  for (const auto& g : G.elements())
    if ((poly_support(g) & dropped) == 0) keep.push_back(g.in_ring(target));
  return Ideal(target, std::move(keep));
}

RingPtr with_tag(const RingPtr& ring, std::string_view prefix, std::string& name) {
  name = ring->fresh_names(prefix, 1)[0];
  return ring->extended(blocks::kAux, {name});
}

void check_same(const Ideal& I, const Ideal& J, std::string_view what) {
  require_same_ring(I.ring(), J.ring(), what);
}

// I : g^∞ by eliminating a fresh y from (I, 1 - y g).
Ideal rabinowitsch(const Ideal& I, const Polynomial& g) {
  std::string y;
  RingPtr ext = with_tag(I.ring(), "_y", y);
  std::vector<Polynomial> gens;
  for (const auto& p : I.gens()) gens.push_back(p.in_ring(ext));
  gens.push_back(Polynomial::constant(ext, 1) - Polynomial::variable(ext, y) * g.in_ring(ext));
  int yi = ext->require_index(y);
  return eliminate_into(Ideal(ext, std::move(gens)), std::span<const int>(&yi, 1), I.ring());
}

// I : x_v^∞ for I homogeneous in `graded` (which contains v): divide each
// basis element by the largest power of x_v it carries.
Ideal variable_saturation(const Ideal& I, std::span<const int> graded, int v) {
  const RingPtr& ring = I.ring();
  auto order_ring = ring->with_order(MonomialOrder::variable_saturation(ring->size(), graded, v));
  auto G = buchberger(I.in_ring(order_ring));
  std::vector<Polynomial> out;
  for (const auto& g : G.elements()) {
    int a = 255;
    for (const auto& t : g.terms()) a = std::min<int>(a, t.mono[v]);
    std::vector<Term> terms;
    for (const auto& t : g.terms()) terms.push_back({t.mono / Monomial::variable(v, a), t.coeff});
    out.push_back(Polynomial(order_ring, std::move(terms)).in_ring(ring));
  }
  return Ideal(ring, std::move(out));
}

// Variables generating J, when J is generated by distinct variables.
std::optional<std::vector<int>> variable_generators(const Ideal& J) {
  std::vector<int> vars;
  for (const auto& g : J.gens()) {
    if (g.terms().size() != 1 || g.terms()[0].mono.degree() != 1) return std::nullopt;
    std::uint32_t sup = g.terms()[0].mono.support();
    vars.push_back(std::countr_zero(sup));
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

// Least k ≤ cap with J^k · sat ⊆ I.
std::optional<int> saturation_exponent(const Ideal& I, const Ideal& J, const Ideal& sat, int cap) {
  Ideal Jk = Ideal::unit(I.ring());
  for (int k = 0; k <= cap; ++k) {
    if (ideal_contains(I, ideal_product(Jk, sat))) return k;
    Jk = Ideal(I.ring(), buchberger(ideal_product(Jk, J)).elements());
  }
  return std::nullopt;
}

// I : (vars)^∞ = ∩_v I : x_v^∞ for I homogeneous in `vars`. Terms that
// contain another one are dropped before intersecting.
Saturation graded_saturation(const Ideal& I, const Ideal& J, const std::vector<int>& vars, int cap) {
  std::vector<Ideal> parts;
  for (int v : vars) parts.push_back(variable_saturation(I, vars, v));
  std::vector<bool> keep(parts.size(), true);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = 0; j < parts.size() && keep[i]; ++j)
      if (j != i && keep[j] && ideal_contains(parts[i], parts[j])) keep[i] = false;
  std::vector<Ideal> minimal;
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (keep[i]) minimal.push_back(std::move(parts[i]));
  Ideal sat = intersect(minimal);
  return {sat, saturation_exponent(I, J, sat, cap)};
}

}  // namespace

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  check_same(I, J, "ideal_sum");
  auto gens = I.gens();
  gens.insert(gens.end(), J.gens().begin(), J.gens().end());
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  check_same(I, J, "ideal_product");
  std::vector<Polynomial> gens;
  gens.reserve(I.size() * J.size());
  for (const auto& a : I.gens())
    for (const auto& b : J.gens()) gens.push_back(a * b);
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& I, int t) {
  if (t < 0) throw DomainError("ideal_power: negative exponent");
  if (t == 0) return Ideal::unit(I.ring());
  // Multisets of size t: products g_{i1}...g_{it} with i1 <= ... <= it.
  std::vector<Polynomial> current;
  std::vector<std::size_t> last;
  for (std::size_t i = 0; i < I.size(); ++i) {
    current.push_back(I.gens()[i]);
    last.push_back(i);
  }
  for (int step = 1; step < t; ++step) {
    std::vector<Polynomial> next;
    std::vector<std::size_t> next_last;
    for (std::size_t k = 0; k < current.size(); ++k)
      for (std::size_t i = last[k]; i < I.size(); ++i) {
        next.push_back(current[k] * I.gens()[i]);
        next_last.push_back(i);
      }
    current = std::move(next);
    last = std::move(next_last);
  }
  return Ideal(I.ring(), std::move(current));
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  check_same(I, J, "intersect");
  if (I.is_zero() || J.is_zero()) return Ideal(I.ring());
  std::string w;
  RingPtr ext = with_tag(I.ring(), "_w", w);
  auto tw = Polynomial::variable(ext, w);
  auto one_minus = Polynomial::constant(ext, 1) - tw;
  std::vector<Polynomial> gens;
  for (const auto& p : I.gens()) gens.push_back(tw * p.in_ring(ext));
  for (const auto& p : J.gens()) gens.push_back(one_minus * p.in_ring(ext));
  int wi = ext->require_index(w);
  return eliminate_into(Ideal(ext, std::move(gens)), std::span<const int>(&wi, 1), I.ring());
}

Ideal intersect(std::span<const Ideal> ideals) {
  if (ideals.empty()) throw DomainError("intersect: empty list");
  Ideal acc = ideals[0];
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i]);
  return acc;
}

Ideal quotient(const Ideal& I, const Polynomial& g) {
  require_same_ring(I.ring(), g.ring(), "quotient");
  if (g.is_zero()) throw DomainError("quotient by the zero ideal");
  if (g.is_constant()) return I;
  auto cap = intersect(I, Ideal(I.ring(), {g}));
  std::vector<Polynomial> gens;
  for (const auto& h : cap.gens()) {
    auto q = exact_divide(h, g);
    if (!q) throw std::logic_error("quotient: intersection element not divisible");
    gens.push_back(q->monic());
  }
  return Ideal(I.ring(), std::move(gens));
}

Ideal quotient(const Ideal& I, const Ideal& J) {
  check_same(I, J, "quotient");
  if (J.is_zero()) throw DomainError("quotient by the zero ideal");
  std::vector<Ideal> parts;
  for (const auto& g : J.gens()) parts.push_back(quotient(I, g));
  return intersect(parts);
}

Saturation saturate(const Ideal& I, const Ideal& J, SaturationMethod method) {
  check_same(I, J, "saturate");
  if (J.is_zero()) throw DomainError("saturation by the zero ideal");
  constexpr int kCap = 64;
  if (method == SaturationMethod::IteratedQuotient) {
    Ideal cur = I;
    for (int k = 0; k <= kCap; ++k) {
      Ideal next = quotient(cur, J);
      if (ideal_contains(cur, next)) return {cur, k};
      cur = std::move(next);
    }
    return {cur, std::nullopt};
  }
  if (auto vars = variable_generators(J)) {
    bool graded = std::all_of(I.gens().begin(), I.gens().end(),
                              [&](const Polynomial& g) { return is_homogeneous(g, *vars).homogeneous; });
    if (graded) return graded_saturation(I, J, *vars, kCap);
  }
  std::vector<Ideal> parts;
  for (const auto& g : J.gens()) parts.push_back(rabinowitsch(I, g));
  Ideal sat = intersect(parts);
  return {sat, saturation_exponent(I, J, sat, kCap)};
}

Ideal eliminate(const Ideal& I, std::span<const int> vars) { return eliminate_into(I, vars, I.ring()); }

Ideal eliminate(const Ideal& I, std::string_view block) {
  auto vars = I.ring()->block(block).vars;
  return eliminate(I, vars);
}

Ideal restrict_to_block(const Ideal& I, std::string_view block) {
  auto sub = I.ring()->only_block(block);
  return I.in_ring(sub);
}

bool ideal_contains(const Ideal& I, const Ideal& J) {
  check_same(I, J, "ideal_contains");
  if (J.is_zero()) return true;
  if (I.is_zero()) return false;
  const auto& G = I.groebner();
  return std::all_of(J.gens().begin(), J.gens().end(), [&](const Polynomial& g) { return G.contains(g); });
}

bool ideal_equal(const Ideal& I, const Ideal& J) { return ideal_contains(I, J) && ideal_contains(J, I); }

std::string DimensionReport::to_string() const {
  if (empty) return "empty";
  return "dim " + std::to_string(*dim) + ", codim " + std::to_string(*codim);
}

DimensionReport dimension(const GroebnerBasis& G) {
  const int n = static_cast<int>(G.ring()->size());
  DimensionReport r;
  if (G.is_unit()) {
    r.empty = true;
    return r;
  }
  // Minimum set of variables meeting every leading-monomial support; its
  // complement is a maximum independent set.
  std::vector<std::uint32_t> supports;
  for (const auto& m : G.leading_monomials()) supports.push_back(m.support());
  std::sort(supports.begin(), supports.end(), [](auto a, auto b) { return std::popcount(a) < std::popcount(b); });
  std::vector<std::uint32_t> minimal;
  for (auto s : supports)
    if (std::none_of(minimal.begin(), minimal.end(), [&](auto t) { return (t & ~s) == 0; })) minimal.push_back(s);

  std::uint32_t best = (n >= 32) ? ~0u : ((1u << n) - 1);
  int best_size = n;
  std::function<void(std::uint32_t, int)> search = [&](std::uint32_t chosen, int size) {
    if (size >= best_size) return;
    const std::uint32_t* unhit = nullptr;
    for (const auto& s : minimal)
      if ((s & chosen) == 0 && (!unhit || std::popcount(s) < std::popcount(*unhit))) unhit = &s;
    if (!unhit) {
      best = chosen;
      best_size = size;
      return;
    }
    for (std::uint32_t bits = *unhit; bits; bits &= bits - 1) search(chosen | (bits & -bits), size + 1);
  };
  if (minimal.empty()) {
    best = 0;
    best_size = 0;
  } else {
    search(0, 0);
  }
  r.codim = best_size;
  r.dim = n - best_size;
  for (int v = 0; v < n; ++v)
    if (!(best >> v & 1u)) r.witness.push_back(v);
  return r;
}

DimensionReport dimension(const Ideal& I) {
  if (I.is_zero()) {
    const int n = static_cast<int>(I.ring()->size());
    DimensionReport r;
    r.dim = n;
    r.codim = 0;
    for (int v = 0; v < n; ++v) r.witness.push_back(v);
    return r;
  }
  return dimension(I.groebner());
}

int weighted_degree(const Monomial& m, std::span<const int> weights) {
  int d = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) d += weights[i] * m[i];
  return d;
}

std::vector<GradedGenerator> minimal_homogeneous_generators(const Ideal& I, std::span<const int> weights) {
  if (weights.size() != I.ring()->size()) throw DomainError("grading: one weight per variable required");
  std::vector<GradedGenerator> input;
  for (const auto& g : I.gens()) {
    int d = weighted_degree(g.leading_monomial(), weights);
    for (const auto& t : g.terms())
      if (weighted_degree(t.mono, weights) != d)
        throw DomainError("minimal_homogeneous_generators: non-homogeneous generator " + g.to_string());
    input.push_back({g, d});
  }
  // Within a degree, fewer terms first so simpler representatives survive.
  std::stable_sort(input.begin(), input.end(), [](const auto& a, const auto& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.poly.size() < b.poly.size();
  });
  std::vector<GradedGenerator> kept;
  for (auto& g : input) {
    std::vector<Polynomial> span;
    for (const auto& k : kept) span.push_back(k.poly);
    if (!span.empty() && ideal_member(g.poly, Ideal(I.ring(), std::move(span)))) continue;
    kept.push_back({g.poly.monic(), g.degree});
  }
  return kept;
}

std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring(), "exact_divide");
  if (g.is_zero()) throw DomainError("division by zero polynomial");
  Polynomial rest = f;
  std::vector<Term> q;
  const auto& lg = g.leading();
  while (!rest.is_zero()) {
    const auto& lt = rest.leading();
    if (!lg.mono.divides(lt.mono)) return std::nullopt;
    Monomial m = lt.mono / lg.mono;
    Rational c = lt.coeff / lg.coeff;
    rest -= g.mul_term(m, c);
    q.push_back(Term{m, std::move(c)});
  }
  return Polynomial(f.ring(), std::move(q));
}

Polynomial polynomial_gcd(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring(), "polynomial_gcd");
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  if (f.is_constant() || g.is_constant()) return Polynomial::constant(f.ring(), 1);
  auto cap = intersect(Ideal(f.ring(), {f}), Ideal(f.ring(), {g}));
  auto prod = exact_divide(f * g, cap.gens().front());
  return prod->monic();
}

}  // namespace aluffi
