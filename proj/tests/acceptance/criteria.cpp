#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#include "acceptance.hpp"
#include "aluffi/blowup.hpp"
#include "aluffi/gradient_family.hpp"
#include "aluffi/groebner.hpp"
#include "aluffi/ideal_ops.hpp"
#include "aluffi/parse.hpp"
#include "aluffi/syzygy.hpp"
#include "monomial_oracle.hpp"

namespace aluffi::acceptance {

namespace {

class Checker {
 public:
  explicit Checker(CriterionResult& r) : r_(r) {}

  bool operator()(bool ok, const std::string& what) {
    r_.details.push_back((ok ? "ok   " : "FAIL ") + what);
    if (!ok) r_.passed = false;
    return ok;
  }

 private:
  CriterionResult& r_;
};

struct Context {
  Checker& check;
  bool inject;
  std::uint64_t seed;
};

RingPtr xyz() { return Ring::make({"x", "y", "z"}); }

Polynomial P(const RingPtr& r, std::string_view text) { return parse_polynomial(r, text); }

std::vector<Polynomial> Ps(const RingPtr& r, std::string_view text) { return parse_polynomial_list(r, text); }

std::vector<Polynomial> joined(std::vector<Polynomial> a, const std::vector<Polynomial>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// c_i = x_i / d, so that f = Σ c_i ∂f/∂x_i; `flip` negates the first entry.
std::vector<Polynomial> euler_certificate(const GradientPair& gp, bool flip) {
  std::vector<Polynomial> c;
  for (int v : gp.vars) c.push_back(Rational(1, gp.degree) * Polynomial::variable(gp.f.ring(), v));
  if (flip) c[0] = -c[0];
  return c;
}

PairInput euler_pair(const GradientPair& gp, bool flip) {
  return PairInput::make(gp.pair.I_gens, gp.pair.J_gens, {euler_certificate(gp, flip)});
}

bool codim_is(const std::optional<DimensionReport>& d, int codim) {
  return d && !d->empty && d->codim && *d->codim == codim;
}

bool dim_is(const DimensionReport& d, int dim) { return !d.empty && d.dim && *d.dim == dim; }

// ---- 1 --------------------------------------------------------------------

void four_points(Context& cx) {
  auto R = xyz();
  auto J = Ps(R, "x^2 - x*z, y^2 - y*z");
  std::vector<int> vars{0, 1, 2};
  auto I = joined(J, minors(jacobian(J, vars), 2).gens());
  cx.check(ideal_equal(Ideal(R, I), Ideal(R, Ps(R, "x^2 - x*z, y^2 - y*z, x*(2*y - z), y*(2*x - z), (2*x - z)*(2*y - z)"))),
           "Jacobian ideal I = (J, x(2y-z), y(2x-z), (2x-z)(2y-z))");
  auto pair = PairInput::make(I, J);
  auto t = vv_pieces(pair, 2);
  cx.check(!t.pieces.empty() && t.pieces[0].t == 2 && !t.pieces[0].zero, "piece t=2 of J cap I^t / J I^(t-1) nonzero");
  auto JI2 = intersect(pair.J(), ideal_power(pair.I(), 2));
  auto JI = ideal_product(pair.J(), pair.I());
  for (std::string w : {"x*z^2*(x - z)", cx.inject ? "y*z^2*(y + z)" : "y*z^2*(y - z)"}) {
    auto p = P(R, w);
    cx.check(ideal_member(p, JI2), w + " in J cap I^2");
    cx.check(!ideal_member(p, JI), w + " not in J*I");
  }
}

// ---- 2, 3 -----------------------------------------------------------------

void three_node_quartic(Context& cx) {
  auto gp = gradient_pair(P(xyz(), "x^2*y^2 + x^2*z^2 + y^2*z^2"));
  auto pair = euler_pair(gp, cx.inject);
  auto cert = linear_type_certificate(gp);
  cx.check(cert.verdict == Verdict::LinearType, "certificate LinearType (" + cert.reason + ")");
  cx.check(codim_is(cert.minors1_dim, 3), "codim I1(phi) = 3");
  cx.check(is_linear_type(pair), "Rees ideal equals the symmetric ideal");
  auto d = aluffi_dimension(aluffi_presentation(pair));
  cx.check(dim_is(d, 3), "dim Aluffi algebra = 3 (" + d.to_string() + ")");
}

void bad_quintic(Context& cx) {
  auto gp = gradient_pair(P(xyz(), "y^4*z + x^5 + x^3*y^2"));
  auto pair = euler_pair(gp, cx.inject);
  auto cert = linear_type_certificate(gp);
  cx.check(cert.verdict == Verdict::NotLinearType, "certificate NotLinearType (" + cert.reason + ")");
  cx.check(codim_is(cert.minors1_dim, 2), "codim I1(phi) = 2");
  auto pres = aluffi_presentation(pair);
  cx.check(!ideal_equal(pres.sym_ideal, pres.aluffi_ideal), "symmetric ideal != Aluffi ideal");
  cx.check(!ideal_equal(pres.sym_ideal, pres.relative_rees_ideal), "symmetric ideal != relative Rees ideal");
  cx.check(!ideal_equal(pres.aluffi_ideal, pres.relative_rees_ideal), "Aluffi ideal != relative Rees ideal");
  cx.check(dim_is(dimension(pres.sym_ideal), 3), "dim symmetric algebra = 3");
  cx.check(dim_is(aluffi_dimension(pres), 3), "dim Aluffi algebra = 3");
  cx.check(dim_is(dimension(pres.relative_rees_ideal), 3), "dim relative Rees algebra = 3");
}

// ---- 4 --------------------------------------------------------------------

void quintic_family(Context& cx) {
  auto R = parse_ring_header("ring: x,y,z | params: u");
  auto F = P(R, "y^4*z + x^5 + u*x^3*y^2");
  std::vector<Polynomial> grad, cert;
  for (int v : R->block_vars(blocks::kGeom)) {
    grad.push_back(partial_derivative(F, v));
    cert.push_back(Rational(1, 5) * Polynomial::variable(R, v));
  }
  if (cx.inject) cert[0] = -cert[0];
  cx.check(dot(grad, cert) == F, "Euler certificate reproduces F");
  FamilyOptions fo;
  fo.seed = cx.seed;
  fo.avoid = {"u"};
  fo.members = {{Rational(0)}};
  auto rep = analyze_family(F, fo);
  cx.check(rep.codim_minors1 == 2, "codim of the family's I1 = 2");
  cx.check(!rep.generic_linear_type, "generic member not of linear type");
  cx.check(rep.members.at(0).certificate.verdict == Verdict::LinearType, "member u = 0 LinearType");
}

// ---- 5 --------------------------------------------------------------------

void saturation_contractions(Context& cx) {
  struct Case {
    const char* key;
    const char* injected;
    const char* element;
  };
  const Case cases[] = {
      {"g", "x^2*z^2 - y^4 + 2*z*y^3 + 2*x*y^2*z + u2*z^2*y^2", "u2^2"},
      {"i", "(y^2 - x*z)^2 - y^2*z^2 + u3*z^4", "u3"},
  };
  for (const auto& c : cases) {
    const auto* fam = find_fixture(c.key);
    auto ring = parse_ring_header(fam->header);
    auto F = cx.inject ? P(ring, c.injected) : catalog_polynomial(*fam);
    FamilyOptions fo;
    fo.seed = cx.seed;
    fo.samples = 0;
    auto rep = analyze_family(F, fo);
    auto e = P(rep.contraction.ring(), c.element);
    cx.check(ideal_member(e, rep.contraction),
             std::string(c.element) + " in (I1 : m^inf) cap k[u] for family (" + c.key + ")");
  }
}

// ---- 6 --------------------------------------------------------------------

bool column_annihilates(const Polynomial& F, const std::vector<std::string>& column,
                        const std::vector<std::pair<std::string, Rational>>& at) {
  Polynomial G = F;
  auto params = F.ring()->block_vars(blocks::kParam);
  if (!at.empty()) {
    std::vector<Rational> values;
    for (int v : params) {
      auto it = std::find_if(at.begin(), at.end(), [&](const auto& p) { return p.first == F.ring()->name(v); });
      values.push_back(it->second);
    }
    G = evaluate_block(F, blocks::kParam, values);
  }
  std::vector<Polynomial> grad, col;
  for (int v : G.ring()->block_vars(blocks::kGeom)) grad.push_back(partial_derivative(G, v));
  for (const auto& s : column) col.push_back(P(G.ring(), s));
  return dot(grad, col).is_zero();
}

std::string negate_text(const std::string& s) { return "-(" + s + ")"; }

void catalog(Context& cx) {
  bool first_column = true;
  for (const auto& fam : fixture_catalog()) {
    auto F = catalog_polynomial(fam);
    const int n = static_cast<int>(F.ring()->block_vars(blocks::kGeom).size());
    for (const auto& c : fam.columns) {
      auto effective = c.effective();
      if (cx.inject && first_column) effective[0] = negate_text(effective[0]);
      first_column = false;
      bool printed = column_annihilates(F, c.printed, c.at);
      cx.check(column_annihilates(F, effective, c.at), "(" + fam.key + ") column " + c.label + " annihilates the gradient");
      cx.check(printed == c.erratum.empty(),
               "(" + fam.key + ") column " + c.label + (printed ? " annihilates as printed" : " erratum: " + c.erratum));
    }
    FamilyOptions fo;
    fo.seed = cx.seed;
    fo.samples = 1;
    for (const auto& c : fam.constraints) fo.avoid.push_back(c.polynomial);
    auto rep = analyze_family(F, fo);
    bool generic = rep.codim_minors1 >= n;
    bool contraction = rep.contraction_nonzero();
    bool sampled = !rep.members.empty() &&
                   std::all_of(rep.members.begin(), rep.members.end(), [](const MemberReport& m) {
                     return m.certificate.verdict == Verdict::LinearType;
                   });
    cx.check(generic == contraction && contraction == sampled,
             "(" + fam.key + ") codim I1 = 3 [" + (generic ? "yes" : "no") + "], contraction nonzero [" +
                 (contraction ? "yes" : "no") + "], sampled member LinearType [" + (sampled ? "yes" : "no") + "]");
  }
}

// ---- 7 --------------------------------------------------------------------

void monomial_fixtures(Context& cx) {
  auto R = xyz();
  std::vector<int> vars{0, 1, 2};
  auto f = P(R, "x*y*z");
  std::vector<Polynomial> J;
  for (int v : vars) J.push_back(partial_derivative(f, v));
  // A monomial ideal is blind to coefficient signs; the fault turns the
  // first comma of the partials' text into a minus sign.
  if (cx.inject) J = Ps(R, "y*z - x*z, x*y");
  auto partials = joined(J, minors(jacobian(J, vars), 2).gens());
  auto Jc = Ps(R, "x*y, x*z, y*z");
  auto points = joined(Jc, Ps(R, "x^2, y^2, z^2"));
  const std::pair<const char*, PairInput> cases[] = {
      {"partials of x1*x2*x3 with the 2-minors of their Jacobian", PairInput::make(partials, J)},
      {"coordinate points with pure powers", PairInput::make(points, Jc)},
  };
  for (const auto& [name, pair] : cases) {
    auto t = vv_pieces(pair, 4);
    std::string zeros;
    for (const auto& p : t.pieces) zeros += p.zero ? "0" : "1";
    cx.check(t.all_zero(), std::string(name) + ": pieces t=2..4 zero [" + zeros + "]");
  }
}

// ---- 8 --------------------------------------------------------------------

Polynomial random_form(std::mt19937_64& rng, const RingPtr& R, int degree, int max_terms) {
  std::vector<int> vars{0, 1, 2};
  std::uniform_int_distribution<int> coeff(-3, 3), terms(1, max_terms), var(0, 2);
  Polynomial p(R);
  while (p.is_zero()) {
    int k = terms(rng);
    for (int t = 0; t < k; ++t) {
      std::vector<int> e(3, 0);
      for (int j = 0; j < degree; ++j) ++e[var(rng)];
      p += Polynomial::monomial(R, Monomial(e), coeff(rng));
    }
  }
  return p;
}

void regular_sequences(Context& cx, std::mt19937_64& rng) {
  auto R = xyz();
  std::uniform_int_distribution<int> deg(1, 2), len(2, 3);
  int good = 0, made = 0;
  while (made < 10) {
    int k = len(rng);
    std::vector<Polynomial> seq;
    for (int i = 0; i < k; ++i) seq.push_back(random_form(rng, R, deg(rng), 3));
    auto d = dimension(Ideal(R, seq));
    if (d.empty || *d.codim != k) continue;
    ++made;
    auto pair = PairInput::make(seq, {seq[0]});
    bool zero = vv_pieces(pair, 3).all_zero();
    bool ar1 = artin_rees_number(pair, 3) == std::optional<int>(1);
    if (zero && ar1) {
      ++good;
    } else {
      cx.check(false, "regular sequence " + Ideal(R, seq).to_string() + ": torsion zero " + (zero ? "yes" : "no") +
                          ", Artin-Rees number 1 " + (ar1 ? "yes" : "no"));
    }
  }
  cx.check(good == made, "(i) " + std::to_string(good) + "/" + std::to_string(made) +
                             " regular-sequence pairs: zero torsion and Artin-Rees number 1");
}

void monomial_oracle(Context& cx, std::mt19937_64& rng) {
  using namespace oracle;
  int agree = 0, total = 0;
  std::uniform_int_distribution<int> nv(1, 3);
  for (int k = 0; k < 100; ++k) {
    int n = nv(rng);
    auto R = oracle_ring(n);
    auto I = random_monomial_ideal(rng, n, 8, 4), J = random_monomial_ideal(rng, n, 8, 3);
    Ideal LI = to_ideal(R, I), LJ = to_ideal(R, J);
    const int box = std::max(max_exponent(I), max_exponent(J));
    const std::pair<const char*, std::function<std::string()>> ops[] = {
        {"intersect", [&] { return compare(intersect(LI, LJ), [&](const Exp& m) { return in_intersection(I, J, m); }, box); }},
        {"quotient", [&] { return compare(quotient(LI, LJ), [&](const Exp& m) { return in_quotient(I, J, m); }, box); }},
        {"saturate",
         [&] { return compare(saturate(LI, LJ).ideal, [&](const Exp& m) { return in_saturation(I, J, m); }, box); }},
    };
    for (const auto& [name, run] : ops) {
      ++total;
      auto failure = run();
      if (failure.empty())
        ++agree;
      else
        cx.check(false, std::string(name) + " of " + LI.to_string() + " and " + LJ.to_string() + ": " + failure);
    }
  }
  cx.check(agree == total, "(ii) " + std::to_string(agree) + "/" + std::to_string(total) +
                               " intersect/quotient/saturate results agree with the monomial oracle");
}

void gb_uniqueness(Context& cx, std::mt19937_64& rng) {
  auto R = xyz();
  std::uniform_int_distribution<int> count(2, 3), deg(1, 3), scale(1, 5);
  int agree = 0;
  for (int k = 0; k < 100; ++k) {
    std::vector<Polynomial> gens;
    int m = count(rng);
    for (int i = 0; i < m; ++i) gens.push_back(random_form(rng, R, deg(rng), 3) + random_form(rng, R, deg(rng) - 1, 1));
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (auto& g : shuffled) g = Rational(scale(rng), scale(rng)) * g;
    const auto& a = Ideal(R, gens).groebner().elements();
    const auto& b = Ideal(R, shuffled).groebner().elements();
    if (a == b)
      ++agree;
    else
      cx.check(false, "reduced bases differ for " + Ideal(R, gens).to_string());
  }
  cx.check(agree == 100, "(iii) " + std::to_string(agree) + "/100 reduced bases unchanged by permuting and scaling");
}

std::vector<std::pair<std::string, Polynomial>> homogeneous_fixtures() {
  std::vector<std::pair<std::string, Polynomial>> out;
  auto R = xyz();
  out.emplace_back("three-node quartic", P(R, "x^2*y^2 + x^2*z^2 + y^2*z^2"));
  out.emplace_back("bad quintic", P(R, "y^4*z + x^5 + x^3*y^2"));
  out.emplace_back("Fermat quartic", P(R, "x^4 + y^4 + z^4"));
  out.emplace_back("quintic family", P(parse_ring_header("ring: x,y,z | params: u"), "y^4*z + x^5 + u*x^3*y^2"));
  for (const auto& fam : fixture_catalog()) out.emplace_back("family (" + fam.key + ")", catalog_polynomial(fam));
  return out;
}

void euler_identity(Context& cx) {
  int ok = 0, total = 0;
  for (const auto& [name, F] : homogeneous_fixtures()) {
    auto geom = F.ring()->block_vars(blocks::kGeom);
    auto h = is_homogeneous(F, geom);
    Polynomial sum(F.ring());
    for (int v : geom) sum += Polynomial::variable(F.ring(), v) * partial_derivative(F, v);
    ++total;
    if (h.homogeneous && sum == Rational(*h.degree) * F)
      ++ok;
    else
      cx.check(false, "Euler identity fails for " + name);
  }
  cx.check(ok == total, "(iv) Euler identity on " + std::to_string(ok) + "/" + std::to_string(total) +
                            " homogeneous fixtures");
}

void lift_independence(Context& cx) {
  auto R = xyz();
  std::vector<std::pair<std::string, PairInput>> pairs;
  bool flip = cx.inject;
  for (const char* f : {"x^2*y^2 + x^2*z^2 + y^2*z^2", "y^4*z + x^5 + x^3*y^2", "x^4 + y^4 + z^4"}) {
    auto gp = gradient_pair(P(R, f));
    pairs.emplace_back(gp.f.to_string(), euler_pair(gp, flip));
    flip = false;
  }
  for (const char* key : {"d", "h", "j"}) {
    auto F = catalog_polynomial(*find_fixture(key));
    auto gp = gradient_pair(F);
    pairs.emplace_back("family (" + std::string(key) + ")", euler_pair(gp, false));
  }
  pairs.emplace_back("four points", PairInput::make(Ps(R, "x^2 - x*z, y^2 - y*z, x*(2*y - z), y*(2*x - z), (2*x - z)*(2*y - z)"),
                                                    Ps(R, "x^2 - x*z, y^2 - y*z")));
  int ok = 0;
  for (const auto& [name, pair] : pairs) {
    // Adding a syzygy of I's generators gives another valid certificate.
    auto phi = syzygies(pair.I_gens);
    auto certs = pair.certificates;
    auto col = phi.column(0);
    for (std::size_t j = 0; j < col.size(); ++j) certs[0][j] += col[j];
    auto other = PairInput::make(pair.I_gens, pair.J_gens, certs);
    if (ideal_equal(aluffi_presentation(pair).aluffi_ideal, aluffi_presentation(other).aluffi_ideal))
      ++ok;
    else
      cx.check(false, "Aluffi ideal depends on the certificate for " + name);
  }
  cx.check(ok == static_cast<int>(pairs.size()), "(v) Aluffi ideal unchanged under certificate swap on " +
                                                     std::to_string(ok) + "/" + std::to_string(pairs.size()) +
                                                     " fixtures");
}

void properties(Context& cx) {
  std::mt19937_64 rng(cx.seed);
  const std::pair<const char*, std::function<void()>> parts[] = {
      {"(i)", [&] { regular_sequences(cx, rng); }},    {"(ii)", [&] { monomial_oracle(cx, rng); }},
      {"(iii)", [&] { gb_uniqueness(cx, rng); }},      {"(iv)", [&] { euler_identity(cx); }},
      {"(v)", [&] { lift_independence(cx); }},
  };
  for (const auto& [label, part] : parts) {
    try {
      part();
    } catch (const std::exception& e) {
      cx.check(false, std::string(label) + " raised: " + e.what());
    }
  }
}

// ---- 9 --------------------------------------------------------------------

void dimension_bounds(Context& cx) {
  std::vector<std::pair<std::string, Polynomial>> curves;
  auto R = xyz();
  curves.emplace_back("three-node quartic", P(R, "x^2*y^2 + x^2*z^2 + y^2*z^2"));
  curves.emplace_back("bad quintic", P(R, "y^4*z + x^5 + x^3*y^2"));
  curves.emplace_back("Fermat quartic", P(R, "x^4 + y^4 + z^4"));
  curves.emplace_back("quintic family at u = 0", P(R, "y^4*z + x^5"));
  for (const auto& fam : fixture_catalog()) {
    auto F = catalog_polynomial(fam);
    auto params = F.ring()->block_vars(blocks::kParam);
    std::vector<Rational> alpha = fam.known_member;
    if (alpha.empty() && !params.empty()) {
      auto avoid = catalog_constraints(fam);
      alpha = sample_parameters(params.size(), avoid, cx.seed);
    }
    auto member = evaluate_block(F, blocks::kParam, alpha);
    curves.emplace_back("family (" + fam.key + ") member", member);
  }
  bool flip = cx.inject;
  for (const auto& [name, f] : curves) {
    try {
      auto gp = gradient_pair(f);
      auto pair = euler_pair(gp, flip);
      flip = false;
      auto cert = linear_type_certificate(gp);
      auto d = aluffi_dimension(aluffi_presentation(pair));
      bool dim_ok = dim_is(d, 3) && dim_is(dimension(Ideal(pair.ring)), 3);
      std::string line = name + ": " + to_string(cert.verdict) + ", Aluffi algebra " + d.to_string();
      bool spread_ok = true;
      if (cert.verdict == Verdict::LinearType) {
        int l = analytic_spread(pair.I_gens);
        spread_ok = l == 3;
        line += ", analytic spread " + std::to_string(l);
      }
      cx.check(dim_ok && spread_ok, line);
    } catch (const std::exception& e) {
      cx.check(false, name + " raised: " + e.what());
    }
  }
}

struct Criterion {
  CriterionInfo info;
  std::function<void(Context&)> run;
};

const std::vector<Criterion>& all_criteria() {
  static const std::vector<Criterion> all{
      {{1, "four-points torsion", {"vv", "torsion", "four-points"}}, four_points},
      {{2, "three-node quartic", {"three-nodes", "linear-type", "curves"}}, three_node_quartic},
      {{3, "bad quintic", {"bad-quintic", "linear-type", "curves"}}, bad_quintic},
      {{4, "quintic family", {"quintic-family", "family"}}, quintic_family},
      {{5, "saturation contractions", {"saturation", "family"}}, saturation_contractions},
      {{6, "catalog families", {"catalog", "family"}}, catalog},
      {{7, "torsion-free monomial fixtures", {"vv", "torsion", "monomial"}}, monomial_fixtures},
      {{8, "property suites", {"properties"}}, properties},
      {{9, "dimension bounds", {"dimension", "curves"}}, dimension_bounds},
  };
  return all;
}

}  // namespace

std::vector<CriterionInfo> criteria() {
  std::vector<CriterionInfo> out;
  for (const auto& c : all_criteria()) out.push_back(c.info);
  return out;
}

bool selected(const CriterionInfo& c, const std::optional<std::string>& only) {
  if (!only) return true;
  if (*only == std::to_string(c.id)) return true;
  return std::find(c.tags.begin(), c.tags.end(), *only) != c.tags.end();
}

std::vector<CriterionResult> run_suite(const SuiteOptions& options) {
  std::vector<CriterionResult> out;
  for (const auto& c : all_criteria()) {
    if (!selected(c.info, options.only)) continue;
    CriterionResult r;
    r.id = c.info.id;
    r.title = c.info.title;
    r.tags = c.info.tags;
    r.passed = true;
    Checker check(r);
    Context cx{check, std::find(options.inject.begin(), options.inject.end(), c.info.id) != options.inject.end(),
               options.seed};
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(cx);
    } catch (const std::exception& e) {
      check(false, std::string("raised: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

std::string summary_line(const CriterionResult& r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, " (%.2f s)", r.seconds);
  return std::string(r.passed ? "PASS" : "FAIL") + "  criterion " + std::to_string(r.id) + "  " + r.title + buf;
}

}  // namespace aluffi::acceptance
