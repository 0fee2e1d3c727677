#include "aluffi/gradient_family.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "aluffi/errors.hpp"
#include "aluffi/groebner.hpp"
#include "aluffi/parse.hpp"

namespace aluffi {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::LinearType: return "LinearType";
    case Verdict::NotLinearType: return "NotLinearType";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

constexpr std::size_t kSaturationCoefficientBits = 4096;

std::vector<int> geometric_vars(const RingPtr& ring) {
  auto vars = ring->block_vars(blocks::kGeom);
  if (vars.empty())
    for (std::size_t i = 0; i < ring->size(); ++i) vars.push_back(static_cast<int>(i));
  return vars;
}

std::vector<Polynomial> gradient(const Polynomial& f, std::span<const int> vars) {
  std::vector<Polynomial> g;
  for (int v : vars) g.push_back(partial_derivative(f, v));
  return g;
}

Ideal variables_ideal(const RingPtr& ring, std::span<const int> vars) {
  std::vector<Polynomial> gens;
  for (int v : vars) gens.push_back(Polynomial::variable(ring, v));
  return Ideal(ring, std::move(gens));
}

}  // namespace

GradientPair gradient_pair(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("gradient_pair: zero polynomial");
  GradientPair gp;
  gp.f = f;
  gp.vars = geometric_vars(f.ring());
  auto h = is_homogeneous(f, gp.vars);
  if (!h.homogeneous) throw DomainError("gradient_pair: " + f.to_string() + " is not homogeneous");
  if (*h.degree == 0) throw DomainError("gradient_pair: constant polynomial");
  gp.degree = *h.degree;
  auto partials = gradient(f, gp.vars);
  std::vector<Polynomial> c;
  for (int v : gp.vars) c.push_back(Polynomial::variable(f.ring(), v) * Rational(1, gp.degree));
  gp.pair = PairInput::make(std::move(partials), {f}, {std::move(c)});
  return gp;
}

LinearTypeCertificate linear_type_certificate(const GradientPair& gp) {
  LinearTypeCertificate cert;
  cert.n = static_cast<int>(gp.vars.size());
  const Ideal I = gp.pair.I();
  cert.gradient_dim = dimension(I);
  const int extra = static_cast<int>(gp.f.ring()->size()) - cert.n;
  if (cert.gradient_dim.empty) {
    cert.verdict = Verdict::LinearType;
    cert.reason = "unit gradient ideal";
    return cert;
  }
  const int codim = *cert.gradient_dim.codim;
  if (codim >= cert.n) {
    cert.verdict = Verdict::LinearType;
    cert.reason = "regular sequence";
    return cert;
  }
  auto phi = syzygies(gp.pair.I_gens);
  cert.minors1 = minors(phi, 1);
  cert.minors1_dim = dimension(*cert.minors1);
  cert.phi = std::move(phi);
  if (*cert.gradient_dim.dim - extra != 1) {
    cert.verdict = Verdict::Inconclusive;
    cert.reason = "singular locus is not a nonempty finite set of points (dim R/I_f = " +
                  std::to_string(*cert.gradient_dim.dim - extra) + ")";
    return cert;
  }
  const int c1 = cert.minors1_dim->empty ? cert.n + 1 : *cert.minors1_dim->codim;
  if (c1 >= codim + 1) {
    cert.verdict = Verdict::LinearType;
    cert.reason = "codim I1(phi) = " + std::to_string(c1) + " >= codim I_f + 1";
  } else {
    cert.verdict = Verdict::NotLinearType;
    cert.reason = "codim I1(phi) = " + std::to_string(c1) + " <= codim I_f";
  }
  return cert;
}

std::vector<Rational> sample_parameters(std::size_t count, std::span<const Polynomial> avoid, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 7);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Rational> alpha;
    for (std::size_t i = 0; i < count; ++i) {
      Rational a(num(rng), den(rng));
      a.canonicalize();
      alpha.push_back(a);
    }
    bool ok = std::all_of(avoid.begin(), avoid.end(), [&](const Polynomial& p) {
      return !evaluate_block(p, blocks::kParam, alpha).is_zero();
    });
    if (ok) return alpha;
  }
  throw DomainError("sample_parameters: no admissible parameter values found");
}

MemberReport evaluate_member(const Polynomial& F, std::span<const Rational> alpha, const Ideal* minors1) {
  const auto& params = F.ring()->block_vars(blocks::kParam);
  if (alpha.size() != params.size())
    throw DomainError("evaluate_member: expected " + std::to_string(params.size()) + " parameter values, got " +
                      std::to_string(alpha.size()));
  MemberReport m;
  m.alpha.assign(alpha.begin(), alpha.end());
  m.member = evaluate_block(F, blocks::kParam, alpha);
  auto gp = gradient_pair(m.member);
  m.certificate = linear_type_certificate(gp);
  if (minors1) {
    std::vector<Polynomial> gens;
    for (const auto& g : minors1->gens()) gens.push_back(evaluate_block(g, blocks::kParam, alpha));
    m.specialized_minors = Ideal(m.member.ring(), std::move(gens));
    m.specialized_dim = dimension(*m.specialized_minors);
    Ideal own = m.certificate.minors1 ? *m.certificate.minors1 : minors(syzygies(gp.pair.I_gens), 1);
    m.specialization_contained = ideal_contains(own, *m.specialized_minors);
    m.specialization_strict = *m.specialization_contained && !ideal_contains(*m.specialized_minors, own);
  }
  return m;
}

FamilyReport analyze_family(const Polynomial& F, const FamilyOptions& options) {
  if (F.is_zero()) throw DomainError("analyze_family: zero polynomial");
  const RingPtr& ring = F.ring();
  const auto geom = geometric_vars(ring);
  const auto params = ring->block_vars(blocks::kParam);
  auto h = is_homogeneous(F, geom);
  if (!h.homogeneous) throw DomainError("analyze_family: family is not homogeneous in the geometric variables");

  // Parameter content: gcd of the k[u]-coefficients of the geometric monomials.
  if (!params.empty()) {
    std::map<std::vector<int>, std::vector<Term>> groups;
    for (const auto& t : F.terms()) {
      std::vector<int> key;
      for (int v : geom) key.push_back(t.mono[v]);
      Monomial rest = t.mono;
      for (int v : geom) rest.set(v, 0);
      groups[key].push_back(Term{rest, t.coeff});
    }
    Polynomial g(ring);
    for (auto& [key, terms] : groups) {
      g = polynomial_gcd(g, Polynomial(ring, std::move(terms)));
      if (g.is_constant()) break;
    }
    if (!g.is_constant())
      throw DomainError("analyze_family: parameter coefficients share the factor " + g.to_string());
  }

  FamilyReport r;
  r.F = F;
  r.seed = options.seed;
  for (int v : params) r.params.push_back(ring->name(v));
  const int n = static_cast<int>(geom.size());

  auto partials = gradient(F, geom);
  r.dim_IF = dimension(Ideal(ring, partials));
  r.codim_IF = r.dim_IF.empty ? static_cast<int>(ring->size()) + 1 : *r.dim_IF.codim;
  if (r.codim_IF != n - 1)
    r.warnings.push_back("gradient ideal has codimension " + std::to_string(r.codim_IF) + ", expected " +
                         std::to_string(n - 1));

  auto full = syzygies(partials, false);
  r.phi = minimalize_columns(full);
  r.minors1 = minors(r.phi, 1);
  r.minimalized_agrees = ideal_equal(r.minors1, minors(full, 1));
  if (!r.minimalized_agrees) r.warnings.push_back("I1 of the minimalized syzygy matrix differs");
  for (std::size_t i = 0; i < r.phi.rows(); ++i)
    for (std::size_t j = 0; j < r.phi.cols(); ++j)
      for (const auto& t : r.phi(i, j).terms()) {
        int gd = 0;
        for (int v : geom) gd += t.mono[v];
        if (gd == 0) r.syzygies_in_irrelevant = false;
      }
  if (!r.syzygies_in_irrelevant) r.warnings.push_back("a syzygy coordinate has a term free of the geometric variables");

  auto d1 = dimension(r.minors1);
  r.codim_minors1 = d1.empty ? static_cast<int>(ring->size()) + 1 : *d1.codim;
  if (r.codim_minors1 > n) r.warnings.push_back("I1 has codimension above " + std::to_string(n));

  // Contraction commutes with intersection, so the per-variable saturations
  // give the contraction without forming their intersection.
  std::vector<Ideal> contractions;
  for (int v : geom) {
    auto sat_v = saturate(r.minors1, Ideal(ring, {Polynomial::variable(ring, v)})).ideal;
    auto c = eliminate(sat_v, geom);
    contractions.push_back(params.empty() ? c : restrict_to_block(c, blocks::kParam));
  }
  Ideal contraction = intersect(contractions);
  r.contraction = contraction.in_ring(ring);
  try {
    GbOptions budget = current_gb_options();
    budget.coefficient_bit_limit = kSaturationCoefficientBits;
    GbOptionsScope scope(budget);
    r.saturation = saturate(r.minors1, variables_ideal(ring, geom));
  } catch (const ResourceExhausted& e) {
    r.warnings.push_back(std::string("saturation not computed: ") + e.what());
  }
  if (params.empty()) {
    r.contraction_unit = r.contraction.groebner().is_unit();
  } else {
    auto dc = dimension(contraction);
    r.contraction_unit = dc.empty;
    r.contraction_codim = dc.empty ? 0 : *dc.codim;
  }
  r.generic_linear_type = r.codim_minors1 >= n;

  std::vector<Polynomial> avoid;
  for (const auto& text : options.avoid) avoid.push_back(parse_polynomial(ring, text));
  for (const auto& alpha : options.members) r.members.push_back(evaluate_member(F, alpha, &r.minors1));
  for (int s = 0; s < options.samples; ++s) {
    auto alpha = sample_parameters(params.size(), avoid, options.seed + static_cast<std::uint64_t>(s));
    r.members.push_back(evaluate_member(F, alpha, &r.minors1));
  }

  if (!avoid.empty() && !params.empty()) {
    auto pring = ring->only_block(blocks::kParam);
    Polynomial locus = Polynomial::constant(pring, 1);
    for (const auto& p : avoid) locus *= p.in_ring(pring);
    r.locus_in_contraction_radical = radical_member(locus, contraction);
    Ideal locus_ideal(pring, {locus});
    r.contraction_in_locus_radical = std::all_of(contraction.gens().begin(), contraction.gens().end(),
                                                 [&](const Polynomial& g) { return radical_member(g, locus_ideal); });
  }
  return r;
}

namespace {

using R = Rational;

std::vector<CatalogFamily> build_catalog() {
  std::vector<CatalogFamily> c;
  c.push_back(CatalogFamily{
      "a", "three-nodes", "three nodes", "ring: x,y,z | params: u4,u5,u6",
      "y^2*z^2 + x^2*z^2 + x^2*y^2 + 2*x*y*z*(u4*x + u5*y + u6*z)",
      {{"u4-1", "u4 != 1"}, {"u4+1", "u4 != -1"}, {"u5-1", "u5 != 1"}, {"u5+1", "u5 != -1"},
       {"u6-1", "u6 != 1"}, {"u6+1", "u6 != -1"},
       {"2*u4*u5*u6 - u4^2 - u5^2 - u6^2 + 1", "discriminant"}},
      {{"a1", {{"u4", R(0)}, {"u5", R(0)}, {"u6", R(0)}}, {"x*y^2 - x*z^2", "-y^3 - y*z^2", "y^2*z + z^3"}, {}, ""},
       {"a2", {{"u4", R(0)}, {"u5", R(0)}, {"u6", R(0)}}, {"-x^3 - x*z^2", "x^2*y - y*z^2", "x^2*z + z^3"}, {}, ""}},
      {R(0), R(0), R(0)},
      "rational quartics (a): three nodes"});
  c.push_back(CatalogFamily{
      "b", "two-nodes-cusp", "two nodes and one cusp", "ring: x,y,z | params: u4,u5",
      "y^2*z^2 + x^2*z^2 + x^2*y^2 + 2*x*y*z^2 + 2*x*y*z*(u4*x + u5*y)",
      {{"u4-1", "u4 != 1"}, {"u4+1", "u4 != -1"}, {"u5-1", "u5 != 1"}, {"u5+1", "u5 != -1"},
       {"2*u4*u5 - u4^2 - u5^2", "discriminant -(u4-u5)^2"}},
      {{"b1",
        {},
        {"x^2*(u4^2-1) + x*y*(u4*u5-1) + 2*x*z*(u4-u5) + y*z*(u4-u5)",
         "y^2*(u5^2-1) + x*y*(u4*u5-1) + x*z*(u5-u4) + 2*y*z*(u5-u4)",
         "3*z^2*(u4-u5) + x*y*(u4-u5) + x*z*(2*u4^2-u5*u4-1) + y*z*(-2*u5^2+u5*u4+1)"},
        {"-(x^2*(u4^2-1) + x*y*(u4*u5-1) + 2*x*z*(u4-u5) + y*z*(u4-u5))",
         "y^2*(u5^2-1) + x*y*(u4*u5-1) + x*z*(u5-u4) + 2*y*z*(u5-u4)",
         "3*z^2*(u4-u5) + x*y*(u4-u5) + x*z*(2*u4^2-u5*u4-1) + y*z*(-2*u5^2+u5*u4+1)"},
        "first coordinate sign flipped"}},
      {},
      "rational quartics (b): two nodes and one cusp"});
  c.push_back(CatalogFamily{
      "c", "node-two-cusps", "one node and two cusps", "ring: x,y,z | params: u4",
      "y^2*z^2 + x^2*z^2 + x^2*y^2 + 2*x*y^2*z + 2*x*y*z^2 + 2*u4*x^2*y*z",
      {{"u4-1", "u4 != 1"}, {"u4+1", "u4 != -1"}},
      {{"c1",
        {},
        {"-x*y + x*z", "3*y^2 + 2*x*y*u4 + x*z + 3*y*z", "-3*z^2 - 2*x*z*u4 - 2*x*y - 3*y*z"},
        {"-x*y + x*z", "3*y^2 + 2*x*y*u4 + 2*x*z + 3*y*z", "-3*z^2 - 2*x*z*u4 - 2*x*y - 3*y*z"},
        "second coordinate: x*z -> 2*x*z"},
       {"c2",
        {},
        {"x^2*(u4+1) + 3/2*x*y + 3/2*x*z + y*z", "3/2*y^2 - x*y*(u4+1) + 1/2*y*z", "3/2*z^2 + y*z + x*z*(u4+1)"},
        {"x^2*(u4+1) + 3/2*x*y + 3/2*x*z + y*z", "-3/2*y^2 - x*y*(u4+1) + 1/2*y*z",
         "-3/2*z^2 + 1/2*y*z - x*z*(u4+1)"},
        "second coordinate: 3/2*y^2 -> -3/2*y^2; third coordinate: 3/2*z^2 + y*z + (u4+1)*x*z -> "
        "-3/2*z^2 + 1/2*y*z - (u4+1)*x*z"}},
      {},
      "rational quartics (c): one node and two cusps"});
  c.push_back(CatalogFamily{
      "d", "three-cusps", "three cusps", "ring: x,y,z", "y^2*z^2 + x^2*z^2 + x^2*y^2 - 2*x*y*z*(x + y + z)",
      {},
      {{"d1", {}, {"x^2 + x*y + 2/3*x*z - 2/3*y*z", "-x*y - y^2 + 2/3*x*z - 2/3*y*z", "-1/3*x*z + 1/3*y*z"}, {}, ""},
       {"d2", {}, {"x*y + x*z - 2/3*y*z", "-y^2 + 1/3*y*z", "1/3*y*z - z^2"}, {}, ""}},
      {},
      "rational quartics (d): three cusps"});
  c.push_back(CatalogFamily{
      "e", "tacnode-cusp", "one tacnode and one cusp", "ring: x,y,z | params: u5",
      "x^2*z^2 + y^4 + 2*y^3*z + 2*u5*x*y^2*z",
      {{"u5-1", "u5 != 1"}, {"u5+1", "u5 != -1"}},
      {{"e1", {{"u5", R(0)}}, {"2*x^2 - 3*y^2", "x*z", "-2*x*z"}, {}, ""},
       {"e2", {{"u5", R(0)}}, {"2*x*y + 3*x*z", "y*z", "-2*y*z - 3*z^2"}, {}, ""}},
      {R(0)},
      "rational quartics (e): one tacnode and one cusp"});
  c.push_back(CatalogFamily{
      "f", "tacnode-node", "one tacnode and one node", "ring: x,y,z | params: u4,u5",
      "z^2*(x^2 + y^2) + y^4 + 2*y^2*z*(u4*y + 2*u5*x)",
      {{"u5-1", "u5 != 1"}, {"u5+1", "u5 != -1"}, {"u4^2 + u5^2 - 1", "discriminant"}},
      {{"f1", {{"u4", R(0)}, {"u5", R(0)}}, {"x^2 + y^2", "0", "-x*z"}, {}, ""},
       {"f2", {{"u4", R(0)}, {"u5", R(0)}}, {"2*x*y^2 + x*z^2", "y*z^2", "-2*y^2*z - z^3"}, {}, ""}},
      {R(0), R(0)},
      "rational quartics (f): one tacnode and one node"});
  c.push_back(CatalogFamily{
      "g", "ramphoid-cusp-node", "one ramphoid cusp and one node", "ring: x,y,z | params: u2",
      "x^2*z^2 + y^4 + 2*z*y^3 + 2*x*y^2*z + u2*z^2*y^2",
      {{"u2", "u2 != 0"}},
      {{"g1",
        {{"u2", R(1)}},
        {"5*x^2 - y^2 + x*z - y*z", "y^2 + x*y + x*z + y*z", "-z^2 - 2*y^2 - x*z - 2*y*z"},
        {"5*x^2 - y^2 + x*z - y*z", "y^2 + x*y + x*z + y*z", "-z^2 - 2*y^2 - 5*x*z - 2*y*z"},
        "third coordinate: -x*z -> -5*x*z"}},
      {R(1)},
      "rational quartics (g): one ramphoid cusp and one node"});
  c.push_back(CatalogFamily{
      "h", "ramphoid-cusp-cusp", "one ramphoid cusp and one cusp", "ring: x,y,z", "x^2*z^2 + y^4 + 2*z*y^3 + 2*x*y^2*z",
      {},
      {{"h1", {}, {"2*y^2 - 3*x*z", "-y*z", "3*z^2"}, {}, ""},
       {"h2",
        {},
        {"x^2 - 27/50*x*z", "1/5*x*y + 1/5*y^2 + 3/25*x*z - 9/50*y*z", "-2/5*y^2 - x*z - 6/25*y*z + 27/50*z^2"},
        {},
        ""}},
      {},
      "rational quartics (h): one ramphoid cusp and one cusp"});
  c.push_back(CatalogFamily{"i", "oscnode", "one oscnode", "ring: x,y,z | params: u3",
                            "(y^2 - x*z)^2 + y^2*z^2 + u3*z^4", {{"u3", "u3 != 0"}}, {}, {R(1)},
                            "rational quartics (i): one oscnode"});
  c.push_back(CatalogFamily{
      "j", "a6", "one singularity of type A6", "ring: x,y,z", "(y^2 - x*z)^2 + 2*y*z^3",
      {},
      {{"j1", {}, {"6*y^2 + x*z", "3*y*z", "-z^2"}, {}, ""},
       {"j2", {}, {"7*x^2 + 18*y*z", "3*x*y", "6*y^2 - 7*x*z"}, {}, ""}},
      {},
      "rational quartics (j): one singularity of type A6"});
  c.push_back(CatalogFamily{
      "k", "ordinary-triple-point", "an ordinary triple point", "ring: x,y,z | params: u1,u2",
      "x*(y^2 - x^2)*z + y^4 + x^2*y*(u1*y + u2*x)",
      {},
      {{"k1", {{"u1", R(0)}, {"u2", R(0)}}, {"x^2 - 2/3*y^2 + 1/6*x*z", "1/6*y*z", "-(3*x + 1/2*z)*z"}, {}, ""}},
      {R(0), R(0)},
      "rational quartics (k): an ordinary triple point"});
  c.push_back(CatalogFamily{"l", "triple-point-double-tangent", "a triple point with double tangent",
                            "ring: x,y,z | params: u1", "x*y^2*z + x^4 + y^4 + u1*x^3*y",
                            {},
                            {{"l1", {{"u1", R(0)}}, {"0", "x*y", "-4*y^2 - 2*x*z"}, {}, ""}},
                            {R(0)},
                            "rational quartics (l): a triple point with double tangent"});
  c.push_back(CatalogFamily{"m", "higher-cusp", "a higher cusp", "ring: x,y,z | params: u1", "y^3*z + x^4 + u1*x^2*y^2",
                            {},
                            {{"m1", {{"u1", R(0)}}, {"0", "y", "-3*z"}, {}, ""}},
                            {R(0)},
                            "rational quartics (m): a higher cusp"});
  return c;
}

}  // namespace

const std::vector<CatalogFamily>& fixture_catalog() {
  static const std::vector<CatalogFamily> catalog = build_catalog();
  return catalog;
}

const CatalogFamily* find_fixture(std::string_view key_or_name) {
  for (const auto& f : fixture_catalog())
    if (f.key == key_or_name || f.name == key_or_name) return &f;
  return nullptr;
}

Polynomial catalog_polynomial(const CatalogFamily& fam) {
  auto ring = parse_ring_header(fam.header);
  return parse_polynomial(ring, fam.polynomial);
}

std::vector<Polynomial> catalog_constraints(const CatalogFamily& fam) {
  auto ring = parse_ring_header(fam.header);
  std::vector<Polynomial> out;
  for (const auto& c : fam.constraints) out.push_back(parse_polynomial(ring, c.polynomial));
  return out;
}

}  // namespace aluffi
