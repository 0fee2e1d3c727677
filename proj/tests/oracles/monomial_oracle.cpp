#include "monomial_oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "aluffi/groebner.hpp"

namespace aluffi::oracle {

namespace {

bool divides(const Exp& a, const Exp& b) { return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2]; }

Exp times(const Exp& a, const Exp& b, int k = 1) { return {a[0] + k * b[0], a[1] + k * b[1], a[2] + k * b[2]}; }

std::string show(const Exp& e) {
  return "x^" + std::to_string(e[0]) + "*y^" + std::to_string(e[1]) + "*z^" + std::to_string(e[2]);
}

}  // namespace

bool MonomialIdeal::contains(const Exp& m) const {
  return std::any_of(gens.begin(), gens.end(), [&](const Exp& g) { return divides(g, m); });
}

MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, int nvars, int max_degree, int max_gens) {
  MonomialIdeal I;
  I.nvars = nvars;
  std::uniform_int_distribution<int> count(1, max_gens), degree(1, max_degree), var(0, nvars - 1);
  int n = count(rng);
  for (int k = 0; k < n; ++k) {
    Exp e{0, 0, 0};
    int d = degree(rng);
    for (int j = 0; j < d; ++j) ++e[var(rng)];
    I.gens.push_back(e);
  }
  return I;
}

bool in_intersection(const MonomialIdeal& I, const MonomialIdeal& J, const Exp& m) {
  return I.contains(m) && J.contains(m);
}

bool in_quotient(const MonomialIdeal& I, const MonomialIdeal& J, const Exp& m) {
  return std::all_of(J.gens.begin(), J.gens.end(), [&](const Exp& g) { return I.contains(times(m, g)); });
}

bool in_saturation(const MonomialIdeal& I, const MonomialIdeal& J, const Exp& m) {
  const int K = max_exponent(I) + 1;
  return std::all_of(J.gens.begin(), J.gens.end(), [&](const Exp& g) { return I.contains(times(m, g, K)); });
}

std::vector<Exp> minimal_in_box(const std::function<bool(const Exp&)>& pred, int nvars, int box) {
  std::vector<Exp> hits;
  int bx = box, by = nvars > 1 ? box : 0, bz = nvars > 2 ? box : 0;
  for (int a = 0; a <= bx; ++a)
    for (int b = 0; b <= by; ++b)
      for (int c = 0; c <= bz; ++c)
        if (pred({a, b, c})) hits.push_back({a, b, c});
  std::vector<Exp> minimal;
  for (const auto& h : hits) {
    bool is_min = std::none_of(hits.begin(), hits.end(), [&](const Exp& o) { return o != h && divides(o, h); });
    if (is_min) minimal.push_back(h);
  }
  return minimal;
}

int max_exponent(const MonomialIdeal& I) {
  int m = 0;
  for (const auto& g : I.gens) m = std::max({m, g[0], g[1], g[2]});
  return m;
}

RingPtr oracle_ring(int nvars) {
  std::vector<std::string> names{"x", "y", "z"};
  names.resize(nvars);
  return Ring::make(names);
}

Ideal to_ideal(const RingPtr& ring, const std::vector<Exp>& monomials) {
  std::vector<Polynomial> gens;
  for (const auto& e : monomials) {
    std::vector<int> ex(e.begin(), e.begin() + ring->size());
    gens.push_back(Polynomial::monomial(ring, Monomial(ex)));
  }
  return Ideal(ring, gens);
}

Ideal to_ideal(const RingPtr& ring, const MonomialIdeal& I) { return to_ideal(ring, I.gens); }

Exp exponents(const Polynomial& p) {
  if (p.size() != 1) throw std::logic_error("not a monomial: " + p.to_string());
  Exp e{0, 0, 0};
  for (std::size_t i = 0; i < p.ring()->size(); ++i) e[i] = p.leading_monomial()[i];
  return e;
}

std::string compare(const Ideal& computed, const std::function<bool(const Exp&)>& pred, int box) {
  const auto nvars = static_cast<int>(computed.ring()->size());
  for (const auto& g : computed.groebner().elements()) {
    if (g.size() != 1) return "basis element " + g.to_string() + " is not a monomial";
    if (!pred(exponents(g))) return "basis element " + g.to_string() + " is outside the oracle ideal";
  }
  for (const auto& m : minimal_in_box(pred, nvars, box)) {
    std::vector<int> ex(m.begin(), m.begin() + nvars);
    if (!computed.groebner().contains(Polynomial::monomial(computed.ring(), Monomial(ex))))
      return "oracle generator " + show(m) + " is missing";
  }
  return {};
}

}  // namespace aluffi::oracle
