#include "aluffi/blowup.hpp"

#include <algorithm>
#include <functional>

#include "aluffi/errors.hpp"
#include "aluffi/groebner.hpp"
#include "aluffi/syzygy.hpp"

namespace aluffi {

namespace {

const RingPtr& common_ring(std::span<const Polynomial> gens, std::string_view what) {
  if (gens.empty()) throw DomainError(std::string(what) + ": empty generator list");
  for (const auto& g : gens) require_same_ring(g.ring(), gens[0].ring(), what);
  return gens[0].ring();
}

std::vector<Polynomial> fiber_variables(const RingPtr& ext) {
  std::vector<Polynomial> T;
  for (int v : ext->block_vars(blocks::kFiber)) T.push_back(Polynomial::variable(ext, v));
  return T;
}

// Kernel of R[T] → R[u] (or (R/extra)[u]) by eliminating u.
Ideal kernel_of_u_map(std::span<const Polynomial> I_gens, std::span<const Polynomial> extra) {
  const RingPtr& base = common_ring(I_gens, "rees_ideal");
  RingPtr ext = fiber_ring(base, I_gens.size());
  auto names = ext->fresh_names("_u", 1);
  RingPtr with_u = ext->extended(blocks::kAux, names);
  auto u = Polynomial::variable(with_u, names[0]);
  auto T = fiber_variables(with_u);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < I_gens.size(); ++i) gens.push_back(T[i] - I_gens[i].in_ring(with_u) * u);
  for (const auto& e : extra) gens.push_back(e.in_ring(with_u));
  int ui = with_u->require_index(names[0]);
  return eliminate(Ideal(with_u, std::move(gens)), std::span<const int>(&ui, 1)).in_ring(ext);
}

// The ideal generated by GB elements, which is usually far smaller than the
// raw generator list of a power or product.
Ideal compact(const Ideal& I) { return Ideal(I.ring(), I.groebner().elements()); }

bool homogeneous_ideal(const Ideal& I) {
  std::vector<int> all(I.ring()->size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return std::all_of(I.gens().begin(), I.gens().end(),
                     [&](const Polynomial& g) { return is_homogeneous(g, all).homogeneous; });
}

// Number of monomials of degree d in the monomial ideal generated by `lead`.
int count_in_initial(const std::vector<Monomial>& lead, std::size_t nvars, int d) {
  int count = 0;
  std::vector<int> e(nvars, 0);
  std::function<void(std::size_t, int)> walk = [&](std::size_t i, int left) {
    if (i + 1 == nvars) {
      e[i] = left;
      Monomial m(e);
      if (std::any_of(lead.begin(), lead.end(), [&](const Monomial& l) { return l.divides(m); })) ++count;
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[i] = k;
      walk(i + 1, left - k);
    }
  };
  if (nvars == 0) return 0;
  walk(0, d);
  return count;
}

int max_degree(std::span<const Polynomial> gens) {
  int d = 0;
  for (const auto& g : gens)
    if (auto gd = g.degree()) d = std::max(d, *gd);
  return d;
}

// powers[t] = I^t as a compacted ideal, t = 0..bound.
std::vector<Ideal> powers_of(const Ideal& I, int bound) {
  std::vector<Ideal> out{Ideal::unit(I.ring())};
  for (int t = 1; t <= bound; ++t) out.push_back(t == 1 ? I : compact(ideal_product(out.back(), I)));
  return out;
}

}  // namespace

PairInput PairInput::make(std::vector<Polynomial> I_gens, std::vector<Polynomial> J_gens,
                          std::vector<std::vector<Polynomial>> certificates) {
  PairInput p;
  p.ring = common_ring(I_gens, "pair");
  for (const auto& a : J_gens) require_same_ring(a.ring(), p.ring, "pair");
  if (!certificates.empty() && certificates.size() != J_gens.size())
    throw DomainError("pair: one certificate per generator of J required");
  certificates.resize(J_gens.size());
  for (std::size_t k = 0; k < J_gens.size(); ++k) {
    auto& c = certificates[k];
    if (c.empty()) {
      auto solved = lift(J_gens[k], I_gens);
      if (!solved) throw DomainError("pair: J is not contained in I (" + J_gens[k].to_string() + ")");
      c = std::move(*solved);
    }
    if (c.size() != I_gens.size()) throw DomainError("pair: certificate length mismatch");
    if (dot(I_gens, c) != J_gens[k])
      throw DomainError("pair: certificate failure for " + J_gens[k].to_string());
  }
  p.I_gens = std::move(I_gens);
  p.J_gens = std::move(J_gens);
  p.certificates = std::move(certificates);
  return p;
}

RingPtr fiber_ring(const RingPtr& base, std::size_t n) {
  return base->extended(blocks::kFiber, base->fresh_names("T", n));
}

Ideal rees_ideal(std::span<const Polynomial> I_gens) { return kernel_of_u_map(I_gens, {}); }

Ideal sym_part(std::span<const Polynomial> I_gens) {
  const RingPtr& base = common_ring(I_gens, "sym_part");
  RingPtr ext = fiber_ring(base, I_gens.size());
  auto T = fiber_variables(ext);
  auto phi = syzygies(I_gens);
  std::vector<Polynomial> forms;
  for (std::size_t j = 0; j < phi.cols(); ++j) {
    Polynomial s(ext);
    for (std::size_t i = 0; i < phi.rows(); ++i) s += phi(i, j).in_ring(ext) * T[i];
    forms.push_back(std::move(s));
  }
  return Ideal(ext, std::move(forms));
}

AluffiPresentation aluffi_presentation(const PairInput& pair) {
  AluffiPresentation pres;
  pres.ring = fiber_ring(pair.ring, pair.I_gens.size());
  pres.fiber_vars = pres.ring->block_vars(blocks::kFiber);
  auto T = fiber_variables(pres.ring);
  pres.sym_part = sym_part(pair.I_gens);
  pres.rees_ideal = rees_ideal(pair.I_gens);
  std::vector<Polynomial> extra;
  for (const auto& a : pair.J_gens) extra.push_back(a.in_ring(pres.ring));
  for (const auto& c : pair.certificates) {
    Polynomial s(pres.ring);
    for (std::size_t j = 0; j < c.size(); ++j) s += c[j].in_ring(pres.ring) * T[j];
    pres.tilde_J.push_back(s);
    extra.push_back(std::move(s));
  }
  pres.sym_ideal = ideal_sum(pres.sym_part, Ideal(pres.ring, extra));
  pres.aluffi_ideal = ideal_sum(pres.rees_ideal, Ideal(pres.ring, extra));
  pres.relative_rees_ideal = kernel_of_u_map(pair.I_gens, pair.J_gens);
  return pres;
}

bool TorsionReport::all_zero() const {
  return std::all_of(pieces.begin(), pieces.end(), [](const TorsionPiece& p) { return p.zero; });
}

TorsionReport vv_pieces(const PairInput& pair, int bound, std::optional<int> degree_cap) {
  if (bound < 2) throw DomainError("vv_pieces: bound must be at least 2");
  TorsionReport report;
  report.bound = bound;
  report.degree_cap = degree_cap.value_or(2 * std::max(max_degree(pair.I_gens), max_degree(pair.J_gens)));
  const Ideal I = pair.I();
  const Ideal J = pair.J();
  auto pw = powers_of(I, bound);
  const std::size_t n = pair.ring->size();
  for (int t = 2; t <= bound; ++t) {
    TorsionPiece piece;
    piece.t = t;
    Ideal cap = intersect(J, pw[t]);
    Ideal low = compact(ideal_product(J, pw[t - 1]));
    const auto& G = low.groebner();
    // Irredundant modulo J·I^(t-1): lowest degree and shortest first.
    auto candidates = cap.gens();
    std::stable_sort(candidates.begin(), candidates.end(), [](const Polynomial& a, const Polynomial& b) {
      if (*a.degree() != *b.degree()) return *a.degree() < *b.degree();
      return a.size() < b.size();
    });
    std::vector<Polynomial> span = low.gens();
    for (const auto& g : candidates) {
      if (G.contains(g)) continue;
      if (!piece.witnesses.empty() && ideal_member(g, Ideal(pair.ring, span))) continue;
      piece.witnesses.push_back(g);
      span.push_back(g);
    }
    piece.zero = piece.witnesses.empty();
    if (homogeneous_ideal(cap) && homogeneous_ideal(low)) {
      auto lead_cap = cap.groebner().leading_monomials();
      auto lead_low = G.leading_monomials();
      for (int d = 0; d <= report.degree_cap; ++d) {
        int dim = count_in_initial(lead_cap, n, d) - count_in_initial(lead_low, n, d);
        if (dim != 0) piece.graded_dims.emplace_back(d, dim);
      }
    }
    if (!piece.zero) {
      for (int k = 1; k <= bound && !piece.annihilator_exponent; ++k) {
        bool ok = true;
        for (const auto& w : piece.witnesses)
          for (const auto& p : pw[k].gens())
            if (ok && !G.contains(p * w)) ok = false;
        if (ok) piece.annihilator_exponent = k;
      }
    }
    report.pieces.push_back(std::move(piece));
  }
  return report;
}

bool is_linear_type(std::span<const Polynomial> I_gens) {
  return ideal_contains(sym_part(I_gens), rees_ideal(I_gens));
}

bool is_linear_type(const PairInput& pair) { return is_linear_type(pair.I_gens); }

std::optional<int> artin_rees_number(const PairInput& pair, int bound) {
  if (bound < 1) throw DomainError("artin_rees_number: bound must be positive");
  const Ideal I = pair.I();
  const Ideal J = pair.J();
  auto pw = powers_of(I, bound);
  std::vector<Ideal> cap{Ideal::unit(pair.ring), J};
  for (int t = 2; t <= bound; ++t) cap.push_back(intersect(J, pw[t]));
  for (int k = 1; k <= bound; ++k) {
    bool ok = true;
    for (int t = k + 1; t <= bound && ok; ++t) ok = ideal_contains(ideal_product(cap[k], pw[t - k]), cap[t]);
    if (ok) return k;
  }
  return std::nullopt;
}

bool StandardBaseReport::passes() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const auto& d) { return d.second; });
}

std::optional<int> StandardBaseReport::first_failure() const {
  for (const auto& [t, ok] : degrees)
    if (!ok) return t;
  return std::nullopt;
}

StandardBaseReport standard_base_check(const PairInput& pair, int bound) {
  if (bound < 1) throw DomainError("standard_base_check: bound must be positive");
  StandardBaseReport report;
  const Ideal I = pair.I();
  const Ideal J = pair.J();
  auto pw = powers_of(I, bound + 1);
  for (const auto& a : pair.J_gens) {
    int nu = 0;
    while (nu < bound + 1 && ideal_member(a, pw[nu + 1])) ++nu;
    report.nu.push_back(nu);
  }
  for (int t = 1; t <= bound; ++t) {
    Ideal cap = t == 1 ? J : intersect(J, pw[t]);
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < pair.J_gens.size(); ++i) {
      auto part = ideal_product(Ideal(pair.ring, {pair.J_gens[i]}), pw[std::max(0, t - report.nu[i])]);
      gens.insert(gens.end(), part.gens().begin(), part.gens().end());
    }
    Ideal rhs(pair.ring, std::move(gens));
    report.degrees.emplace_back(t, ideal_equal(cap, rhs));
  }
  return report;
}

std::optional<int> relation_type(std::span<const Polynomial> I_gens, int bound) {
  auto rees = rees_ideal(I_gens);
  std::vector<int> weights(rees.ring()->size(), 0);
  for (int v : rees.ring()->block_vars(blocks::kFiber)) weights[v] = 1;
  int top = 0;
  for (const auto& g : minimal_homogeneous_generators(rees, weights)) top = std::max(top, g.degree);
  if (top > bound) return std::nullopt;
  return top;
}

int analytic_spread(std::span<const Polynomial> I_gens) {
  const RingPtr& base = common_ring(I_gens, "analytic_spread");
  for (const auto& g : I_gens) {
    for (const auto& t : g.terms())
      if (t.mono.is_one()) throw DomainError("analytic_spread: ideal not contained in the maximal ideal of the variables");
  }
  auto rees = rees_ideal(I_gens);
  const RingPtr& ext = rees.ring();
  std::vector<Polynomial> gens = rees.gens();
  for (std::size_t v = 0; v < base->size(); ++v) gens.push_back(Polynomial::variable(ext, static_cast<int>(v)));
  auto d = dimension(Ideal(ext, std::move(gens)));
  return d.empty ? 0 : *d.dim;
}

DimensionReport aluffi_dimension(const AluffiPresentation& pres) { return dimension(pres.aluffi_ideal); }

ComponentReport verify_component_list(const AluffiPresentation& pres, std::span<const Ideal> candidates) {
  ComponentReport report;
  const Ideal& A = pres.aluffi_ideal;
  for (const auto& P : candidates) {
    require_same_ring(P.ring(), pres.ring, "verify_component_list");
    report.checks.push_back({P, ideal_contains(P, A), dimension(P)});
  }
  if (candidates.empty()) return report;
  Ideal meet = intersect(candidates);
  report.covers = std::all_of(A.gens().begin(), A.gens().end(),
                              [&](const Polynomial& g) { return radical_member(g, meet); });
  report.exhausts = std::all_of(meet.gens().begin(), meet.gens().end(),
                                [&](const Polynomial& g) { return radical_member(g, A); });
  const auto& first = report.checks.front().dim;
  report.equidimensional = std::all_of(report.checks.begin(), report.checks.end(), [&](const ComponentCheck& c) {
    return c.dim.empty == first.empty && c.dim.dim == first.dim;
  });
  return report;
}

}  // namespace aluffi
