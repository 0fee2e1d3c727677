#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <sstream>

#include "acceptance/acceptance.hpp"
#include "aluffi/blowup.hpp"
#include "aluffi/errors.hpp"
#include "aluffi/gradient_family.hpp"
#include "aluffi/groebner.hpp"
#include "aluffi/ideal_ops.hpp"
#include "aluffi/parse.hpp"

namespace aluffi::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_commas(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.emplace_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.emplace_back(trim(cur));
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? std::string(sep) : "") + parts[i];
  return out;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) throw DomainError("not a rational number: '" + text + "'");
  if (q.get_den() == 0) throw DomainError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& s : split_commas(text)) out.push_back(parse_rational(s));
  return out;
}

Json strings(const std::vector<Polynomial>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

Json strings(const Ideal& I) { return strings(I.gens()); }

Json reduced_basis(const Ideal& I) { return strings(I.groebner().elements()); }

Json dim_json(const DimensionReport& d) {
  Json j;
  j["empty"] = d.empty;
  j["dim"] = d.dim ? Json(*d.dim) : Json(nullptr);
  j["codim"] = d.codim ? Json(*d.codim) : Json(nullptr);
  return j;
}

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

Json rationals(std::span<const Rational> v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(q.get_str());
  return a;
}

Json matrix_json(const PolyMatrix& M) {
  Json j;
  j["rows"] = M.rows();
  j["cols"] = M.cols();
  Json cols = Json::array();
  for (const auto& c : M.columns()) cols.push_back(strings(c));
  j["columns"] = std::move(cols);
  return j;
}

Json certificate_json(const LinearTypeCertificate& c) {
  Json j;
  j["verdict"] = to_string(c.verdict);
  j["reason"] = c.reason;
  j["n"] = c.n;
  j["gradient_ideal"] = dim_json(c.gradient_dim);
  if (c.phi) j["phi"] = matrix_json(*c.phi);
  if (c.minors1) j["I1"] = strings(*c.minors1);
  if (c.minors1_dim) j["I1_dimension"] = dim_json(*c.minors1_dim);
  return j;
}

Json torsion_json(const TorsionReport& t) {
  Json j;
  j["bound"] = t.bound;
  j["degree_cap"] = t.degree_cap;
  j["all_zero"] = t.all_zero();
  Json pieces = Json::array();
  for (const auto& p : t.pieces) {
    Json q;
    q["t"] = p.t;
    q["zero"] = p.zero;
    q["witnesses"] = strings(p.witnesses);
    Json dims = Json::array();
    for (auto [deg, n] : p.graded_dims) dims.push_back(Json::array({deg, n}));
    q["graded_dims"] = std::move(dims);
    q["annihilator_exponent"] = optional_int(p.annihilator_exponent);
    pieces.push_back(std::move(q));
  }
  j["pieces"] = std::move(pieces);
  return j;
}

Json member_json(const MemberReport& m) {
  Json j;
  j["alpha"] = rationals(m.alpha);
  j["member"] = m.member.to_string();
  j["certificate"] = certificate_json(m.certificate);
  if (m.specialized_dim) j["specialized_I1"] = dim_json(*m.specialized_dim);
  if (m.specialization_contained) j["specialization_contained"] = *m.specialization_contained;
  if (m.specialization_strict) j["specialization_strict"] = *m.specialization_strict;
  return j;
}

Json family_json(const FamilyReport& r) {
  Json j;
  j["F"] = r.F.to_string();
  j["params"] = r.params;
  j["seed"] = r.seed;
  j["gradient_ideal"] = dim_json(r.dim_IF);
  j["codim_IF"] = r.codim_IF;
  j["phi"] = matrix_json(r.phi);
  j["I1"] = strings(r.minors1);
  j["codim_I1"] = r.codim_minors1;
  j["minimalized_agrees"] = r.minimalized_agrees;
  j["syzygies_in_irrelevant"] = r.syzygies_in_irrelevant;
  if (r.saturation) {
    j["saturation"] = strings(r.saturation->ideal);
    j["saturation_exponent"] = optional_int(r.saturation->exponent);
  } else {
    j["saturation"] = nullptr;
  }
  j["contraction"] = strings(r.contraction);
  j["contraction_codim"] = r.contraction_codim;
  j["contraction_unit"] = r.contraction_unit;
  j["generic_verdict"] = r.generic_linear_type ? "LinearType" : "NotLinearType";
  Json members = Json::array();
  for (const auto& m : r.members) members.push_back(member_json(m));
  j["members"] = std::move(members);
  if (r.locus_in_contraction_radical) j["locus_in_contraction_radical"] = *r.locus_in_contraction_radical;
  if (r.contraction_in_locus_radical) j["contraction_in_locus_radical"] = *r.contraction_in_locus_radical;
  j["warnings"] = r.warnings;
  return j;
}

std::vector<Polynomial> require_gens(const InputFile& in, std::size_t index = 0) {
  if (index < in.ideals.size()) return in.ideals[index];
  if (index == 0 && in.I) return *in.I;
  if (index == 1 && in.J) return *in.J;
  throw DomainError("input needs " + std::to_string(index + 1) + " 'ideal:' line(s)");
}

Json inputs_json(const InputFile& in) {
  Json j;
  j["ring"] = in.ring->header();
  if (!in.ideals.empty()) {
    Json a = Json::array();
    for (const auto& g : in.ideals) a.push_back(strings(g));
    j["ideals"] = std::move(a);
  }
  if (in.I) j["I"] = strings(*in.I);
  if (in.J) j["J"] = strings(*in.J);
  if (in.curve) j["curve"] = in.curve->to_string();
  if (in.family) j["family"] = in.family->to_string();
  if (in.matrix) j["matrix"] = in.matrix->to_string();
  if (!in.candidates.empty()) {
    Json a = Json::array();
    for (const auto& c : in.candidates) a.push_back(c.text);
    j["candidates"] = std::move(a);
  }
  return j;
}

// The pair J ⊆ I of the input: a gradient pair for `curve:`, else I:/J:.
PairInput input_pair(const InputFile& in, bool need_J) {
  if (in.curve) return gradient_pair(*in.curve).pair;
  if (!in.I) throw DomainError("input needs 'I:' (or 'curve:')");
  if (!in.J) {
    if (need_J) throw DomainError("input needs 'J:'");
    return PairInput::make(*in.I, {});
  }
  return PairInput::make(*in.I, *in.J, in.certificates);
}

std::vector<Polynomial> input_I(const InputFile& in) {
  if (in.curve) return gradient_pair(*in.curve).pair.I_gens;
  if (in.I) return *in.I;
  return require_gens(in, 0);
}

void check_bound(const Options& o) {
  if (o.bound < 1) throw DomainError("--bound must be positive");
}

// ---- commands -------------------------------------------------------------

int cmd_gb(const InputFile& in, Json& results) {
  Ideal I(in.ring, require_gens(in, 0));
  const auto& G = I.groebner();
  results["order"] = in.ring->order().name();
  results["basis"] = strings(G.elements());
  results["unit"] = G.is_unit();
  return kSuccess;
}

int cmd_ideal(const std::string& op, const InputFile& in, const Options& o, Json& results) {
  const RingPtr& ring = in.ring;
  auto ideal_at = [&](std::size_t k) { return Ideal(ring, require_gens(in, k)); };
  if (op == "sum") {
    results["ideal"] = reduced_basis(ideal_sum(ideal_at(0), ideal_at(1)));
  } else if (op == "product") {
    results["ideal"] = reduced_basis(ideal_product(ideal_at(0), ideal_at(1)));
  } else if (op == "power") {
    if (o.power < 0) throw DomainError("--power must be nonnegative");
    results["t"] = o.power;
    results["ideal"] = reduced_basis(ideal_power(ideal_at(0), o.power));
  } else if (op == "intersect") {
    std::vector<Ideal> parts;
    for (std::size_t k = 0; k < std::max<std::size_t>(2, in.ideals.size()); ++k) parts.push_back(ideal_at(k));
    results["ideal"] = reduced_basis(intersect(parts));
  } else if (op == "quotient") {
    results["ideal"] = reduced_basis(quotient(ideal_at(0), ideal_at(1)));
  } else if (op == "saturate") {
    auto s = saturate(ideal_at(0), ideal_at(1));
    results["ideal"] = reduced_basis(s.ideal);
    results["exponent"] = optional_int(s.exponent);
  } else if (op == "eliminate") {
    Ideal I = ideal_at(0);
    Ideal E;
    if (o.block) {
      E = eliminate(I, *o.block);
      results["eliminated"] = *o.block;
    } else {
      if (o.vars.empty()) throw DomainError("eliminate needs --vars or --block");
      std::vector<int> idx;
      for (const auto& v : o.vars) idx.push_back(ring->require_index(v));
      E = eliminate(I, idx);
      results["eliminated"] = o.vars;
    }
    results["ideal"] = reduced_basis(E);
  } else if (op == "contains") {
    results["second_in_first"] = ideal_contains(ideal_at(0), ideal_at(1));
  } else if (op == "equal") {
    results["equal"] = ideal_equal(ideal_at(0), ideal_at(1));
  } else if (op == "dim") {
    results["dimension"] = dim_json(dimension(ideal_at(0)));
  } else if (op == "mingens") {
    std::vector<int> weights(ring->size(), 1);
    Json a = Json::array();
    for (const auto& g : minimal_homogeneous_generators(ideal_at(0), weights))
      a.push_back(Json::array({g.poly.to_string(), g.degree}));
    results["generators"] = std::move(a);
  } else if (op == "member") {
    if (!o.poly) throw DomainError("member needs --poly");
    auto f = parse_polynomial(ring, *o.poly);
    Ideal I = ideal_at(0);
    results["poly"] = f.to_string();
    results["member"] = ideal_member(f, I);
    results["radical_member"] = radical_member(f, I);
  } else {
    throw DomainError("unknown ideal operation '" + op + "'");
  }
  return kSuccess;
}

int cmd_syz(const InputFile& in, const Options& o, Json& results) {
  auto gens = require_gens(in, 0);
  auto phi = syzygies(gens, !o.full);
  results["minimalized"] = !o.full;
  results["phi"] = matrix_json(phi);
  bool annihilates = true;
  for (const auto& c : phi.columns()) annihilates = annihilates && dot(gens, c).is_zero();
  results["annihilates"] = annihilates;
  return kSuccess;
}

int cmd_minors(const InputFile& in, const Options& o, Json& results) {
  if (!in.matrix) throw DomainError("input needs 'matrix:'");
  auto M = minors(*in.matrix, o.size);
  results["size"] = o.size;
  results["minors"] = strings(M);
  results["dimension"] = dim_json(dimension(M));
  return kSuccess;
}

int cmd_aluffi(const std::string& sub, const InputFile& in, const Options& o, Json& results) {
  check_bound(o);
  if (sub == "linear-type") {
    auto I = input_I(in);
    results["linear_type"] = is_linear_type(std::span<const Polynomial>(I));
    return kSuccess;
  }
  if (sub == "reltype") {
    auto I = input_I(in);
    results["bound"] = o.bound;
    results["relation_type"] = optional_int(relation_type(I, o.bound));
    return kSuccess;
  }
  if (sub == "spread") {
    auto I = input_I(in);
    results["analytic_spread"] = analytic_spread(I);
    return kSuccess;
  }
  auto pair = input_pair(in, true);
  if (sub == "torsion") {
    results["torsion"] = torsion_json(vv_pieces(pair, std::max(o.bound, 2), o.degree_cap));
    return kSuccess;
  }
  if (sub == "ar-number") {
    results["bound"] = o.bound;
    results["artin_rees_number"] = optional_int(artin_rees_number(pair, o.bound));
    auto sb = standard_base_check(pair, o.bound);
    results["nu"] = sb.nu;
    Json degs = Json::array();
    for (auto [t, ok] : sb.degrees) degs.push_back(Json::array({t, ok}));
    results["standard_base_degrees"] = std::move(degs);
    results["standard_base_first_failure"] = optional_int(sb.first_failure());
    return kSuccess;
  }
  auto pres = aluffi_presentation(pair);
  std::vector<std::string> fiber;
  for (int v : pres.fiber_vars) fiber.push_back(pres.ring->name(v));
  results["fiber_variables"] = fiber;
  if (sub == "present") {
    results["sym_part"] = strings(pres.sym_part);
    results["rees_ideal"] = strings(pres.rees_ideal);
    results["tilde_J"] = strings(pres.tilde_J);
    results["sym_ideal"] = strings(pres.sym_ideal);
    results["aluffi_ideal"] = reduced_basis(pres.aluffi_ideal);
    results["relative_rees_ideal"] = reduced_basis(pres.relative_rees_ideal);
    results["sym_in_aluffi"] = ideal_contains(pres.aluffi_ideal, pres.sym_ideal);
    results["rees_in_aluffi"] = ideal_contains(pres.aluffi_ideal, pres.rees_ideal);
    results["sym_equals_aluffi"] = ideal_equal(pres.sym_ideal, pres.aluffi_ideal);
    results["aluffi_equals_relative_rees"] = ideal_equal(pres.aluffi_ideal, pres.relative_rees_ideal);
    return kSuccess;
  }
  if (sub == "dim") {
    results["aluffi"] = dim_json(aluffi_dimension(pres));
    results["sym"] = dim_json(dimension(pres.sym_ideal));
    results["relative_rees"] = dim_json(dimension(pres.relative_rees_ideal));
    results["base"] = dim_json(dimension(Ideal(pair.ring)));
    return kSuccess;
  }
  if (sub == "verify-components") {
    if (in.candidates.empty()) throw DomainError("verify-components needs 'candidate:' lines");
    std::vector<Ideal> cands;
    for (const auto& c : in.candidates)
      cands.emplace_back(pres.ring, parse_polynomial_list(pres.ring, c.text, c.line, c.column));
    auto rep = verify_component_list(pres, cands);
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
      Json q;
      q["candidate"] = strings(c.candidate);
      q["contains_aluffi"] = c.contains_aluffi;
      q["dimension"] = dim_json(c.dim);
      checks.push_back(std::move(q));
    }
    results["candidates"] = std::move(checks);
    results["covers"] = rep.covers;
    results["exhausts"] = rep.exhausts;
    results["equidimensional"] = rep.equidimensional;
    results["complete"] = rep.complete();
    return kSuccess;
  }
  throw DomainError("unknown aluffi command '" + sub + "'");
}

int cmd_curve_cert(const InputFile& in, Json& results) {
  if (!in.curve) throw DomainError("input needs 'curve:'");
  auto gp = gradient_pair(*in.curve);
  results["degree"] = gp.degree;
  results["certificate"] = certificate_json(linear_type_certificate(gp));
  return kSuccess;
}

FamilyOptions family_options(const InputFile& in, const Options& o) {
  FamilyOptions fo;
  fo.seed = o.seed;
  fo.samples = o.samples;
  fo.avoid = o.avoid;
  for (const auto& m : o.members) fo.members.push_back(parse_rationals(m));
  (void)in;
  return fo;
}

int cmd_family(const std::string& sub, const InputFile& in, const Options& o, Json& results) {
  if (!in.family) throw DomainError("input needs 'family:'");
  if (sub == "analyze") {
    results["report"] = family_json(analyze_family(*in.family, family_options(in, o)));
    return kSuccess;
  }
  if (sub == "member") {
    if (o.alpha.empty()) throw DomainError("family member needs --alpha");
    Json members = Json::array();
    for (const auto& a : o.alpha) {
      auto alpha = parse_rationals(a);
      members.push_back(member_json(evaluate_member(*in.family, alpha)));
    }
    results["members"] = std::move(members);
    return kSuccess;
  }
  throw DomainError("unknown family command '" + sub + "'");
}

// ---- fixtures -------------------------------------------------------------

struct FixtureResult {
  Json report;
  bool passed = true;
};

void check(Json& checks, bool& passed, const std::string& name, bool ok) {
  checks[name] = ok;
  passed = passed && ok;
}

RingPtr xyz() { return Ring::make({"x", "y", "z"}); }

Polynomial poly(const RingPtr& r, std::string_view text) { return parse_polynomial(r, text); }

std::vector<Polynomial> polys(const RingPtr& r, std::string_view text) { return parse_polynomial_list(r, text); }

// Gradient of F over the geometric block, evaluated at the column's parameter values.
bool column_annihilates(const CatalogFamily& fam, const Polynomial& F, const std::vector<std::string>& column,
                        const std::vector<std::pair<std::string, Rational>>& at) {
  Polynomial G = F;
  if (!at.empty()) {
    auto params = F.ring()->block_vars(blocks::kParam);
    std::vector<Rational> values;
    for (int v : params) {
      auto it = std::find_if(at.begin(), at.end(), [&](const auto& p) { return p.first == F.ring()->name(v); });
      if (it == at.end()) throw std::logic_error("catalog column " + fam.key + " misses a parameter value");
      values.push_back(it->second);
    }
    G = evaluate_block(F, blocks::kParam, values);
  }
  auto geom = G.ring()->block_vars(blocks::kGeom);
  if (geom.empty())
    for (std::size_t i = 0; i < G.ring()->size(); ++i) geom.push_back(static_cast<int>(i));
  std::vector<Polynomial> grad, col;
  for (int v : geom) grad.push_back(partial_derivative(G, v));
  for (const auto& c : column) col.push_back(poly(G.ring(), c));
  return dot(grad, col).is_zero();
}

FixtureResult run_catalog_fixture(const CatalogFamily& fam, const Options& o) {
  FixtureResult out;
  Json& r = out.report;
  auto F = catalog_polynomial(fam);
  FamilyOptions fo;
  fo.seed = o.seed;
  fo.samples = std::max(o.samples, 1);
  for (const auto& c : fam.constraints) fo.avoid.push_back(c.polynomial);
  if (!fam.known_member.empty()) fo.members.push_back(fam.known_member);
  auto rep = analyze_family(F, fo);
  const int n = static_cast<int>(F.ring()->block_vars(blocks::kGeom).size());

  Json checks;
  Json columns = Json::array();
  for (const auto& c : fam.columns) {
    Json q;
    q["label"] = c.label;
    bool printed = column_annihilates(fam, F, c.printed, c.at);
    bool effective = column_annihilates(fam, F, c.effective(), c.at);
    q["printed_annihilates"] = printed;
    q["annihilates"] = effective;
    if (!c.erratum.empty()) q["erratum"] = c.erratum;
    check(checks, out.passed, "column " + c.label + " annihilates", effective);
    check(checks, out.passed, "column " + c.label + " erratum recorded iff printed fails", printed == c.erratum.empty());
    columns.push_back(std::move(q));
  }
  bool generic = rep.codim_minors1 >= n;
  bool contraction = rep.contraction_nonzero();
  bool specialized = std::any_of(rep.members.begin(), rep.members.end(), [&](const MemberReport& m) {
    return m.specialized_dim && !m.specialized_dim->empty && *m.specialized_dim->codim >= n;
  });
  bool sampled = true;
  for (std::size_t k = fo.members.size(); k < rep.members.size(); ++k)
    sampled = sampled && rep.members[k].certificate.verdict == Verdict::LinearType;
  check(checks, out.passed, "codim I1 = n iff contraction nonzero", generic == contraction);
  check(checks, out.passed, "contraction nonzero iff some member keeps codim n", contraction == specialized);
  check(checks, out.passed, "sampled members agree with the generic verdict", sampled == generic);

  r["verdict"] = generic ? "LinearType" : "NotLinearType";
  r["codim_I1"] = rep.codim_minors1;
  r["contraction"] = strings(rep.contraction);
  r["contraction_codim"] = rep.contraction_codim;
  r["contraction_unit"] = rep.contraction_unit;
  Json members = Json::array();
  for (const auto& m : rep.members) {
    Json q;
    q["alpha"] = rationals(m.alpha);
    q["verdict"] = to_string(m.certificate.verdict);
    members.push_back(std::move(q));
  }
  r["members"] = std::move(members);
  r["columns"] = std::move(columns);
  r["warnings"] = rep.warnings;
  r["checks"] = std::move(checks);
  return out;
}

FixtureResult curve_fixture(std::string_view f_text, Verdict expected, std::optional<int> codim_I1) {
  FixtureResult out;
  auto R = xyz();
  auto gp = gradient_pair(poly(R, f_text));
  auto cert = linear_type_certificate(gp);
  Json checks;
  out.report["curve"] = gp.f.to_string();
  out.report["verdict"] = to_string(cert.verdict);
  out.report["reason"] = cert.reason;
  check(checks, out.passed, "verdict " + to_string(expected), cert.verdict == expected);
  if (codim_I1) {
    bool ok = cert.minors1_dim && !cert.minors1_dim->empty && *cert.minors1_dim->codim == *codim_I1;
    check(checks, out.passed, "codim I1 = " + std::to_string(*codim_I1), ok);
  }
  bool lt = is_linear_type(gp.pair.I_gens);
  check(checks, out.passed, "rees ideal generated in degree 1 iff LinearType", lt == (expected == Verdict::LinearType));
  auto pres = aluffi_presentation(gp.pair);
  auto d = aluffi_dimension(pres);
  out.report["aluffi_dimension"] = dim_json(d);
  check(checks, out.passed, "dim aluffi = 3", d.dim && *d.dim == 3);
  out.report["checks"] = std::move(checks);
  return out;
}

FixtureResult pair_fixture(std::string_view I_text, std::string_view J_text, const Options& o,
                           const std::vector<std::string>& witnesses) {
  FixtureResult out;
  auto R = xyz();
  auto pair = PairInput::make(polys(R, I_text), polys(R, J_text));
  auto t = vv_pieces(pair, std::max(o.bound, 2), o.degree_cap);
  out.report["I"] = strings(pair.I_gens);
  out.report["J"] = strings(pair.J_gens);
  out.report["torsion"] = torsion_json(t);
  Json checks;
  if (witnesses.empty()) {
    check(checks, out.passed, "all pieces zero", t.all_zero());
    check(checks, out.passed, "Artin-Rees number 1", artin_rees_number(pair, o.bound) == 1);
  } else {
    check(checks, out.passed, "piece t=2 nonzero", !t.pieces.empty() && !t.pieces[0].zero);
    Ideal J = pair.J(), I = pair.I();
    auto JI2 = intersect(J, ideal_power(I, 2));
    auto JI = ideal_product(J, I);
    for (const auto& w : witnesses) {
      auto p = poly(R, w);
      check(checks, out.passed, w + " in J cap I^2", ideal_member(p, JI2));
      check(checks, out.passed, w + " not in J*I", !ideal_member(p, JI));
    }
  }
  out.report["checks"] = std::move(checks);
  return out;
}

FixtureResult quintic_family_fixture(const Options& o) {
  FixtureResult out;
  auto R = parse_ring_header("ring: x,y,z | params: u");
  auto F = poly(R, "y^4*z + x^5 + u*x^3*y^2");
  FamilyOptions fo;
  fo.seed = o.seed;
  fo.samples = std::max(o.samples, 1);
  fo.avoid = {"u"};
  fo.members = {{Rational(0)}};
  auto rep = analyze_family(F, fo);
  Json checks;
  check(checks, out.passed, "codim I1 = 2", rep.codim_minors1 == 2);
  check(checks, out.passed, "member u=0 LinearType", rep.members[0].certificate.verdict == Verdict::LinearType);
  out.report["verdict"] = rep.generic_linear_type ? "LinearType" : "NotLinearType";
  out.report["codim_I1"] = rep.codim_minors1;
  out.report["contraction"] = strings(rep.contraction);
  out.report["checks"] = std::move(checks);
  return out;
}

struct Fixture {
  FixtureInfo info;
  std::function<FixtureResult(const Options&)> run;
};

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = [] {
    std::vector<Fixture> v;
    for (const auto& fam : fixture_catalog())
      v.push_back({{fam.name, "family", fam.provenance},
                   [&fam](const Options& o) { return run_catalog_fixture(fam, o); }});
    v.push_back({{"three-node-quartic", "curve", "worked example: three-node quartic, gradient ideal of linear type"},
                 [](const Options&) {
                   return curve_fixture("x^2*y^2 + x^2*z^2 + y^2*z^2", Verdict::LinearType, 3);
                 }});
    v.push_back({{"bad-quintic", "curve", "worked example: quintic whose gradient ideal is not of linear type"},
                 [](const Options&) { return curve_fixture("y^4*z + x^5 + x^3*y^2", Verdict::NotLinearType, 2); }});
    v.push_back({{"fermat-quartic", "curve", "smooth curve: gradient ideal is a regular sequence"},
                 [](const Options&) { return curve_fixture("x^4 + y^4 + z^4", Verdict::LinearType, std::nullopt); }});
    v.push_back({{"quintic-family", "family", "worked example: quintic family degenerating to linear type at u = 0"},
                 quintic_family_fixture});
    v.push_back({{"four-points", "pair", "worked example: four points, torsion in degree 2"}, [](const Options& o) {
                   return pair_fixture("x^2-x*z, y^2-y*z, x*(2*y-z), y*(2*x-z), (2*x-z)*(2*y-z)", "x^2-x*z, y^2-y*z",
                                       o, {"x*z^2*(x-z)", "y*z^2*(y-z)"});
                 }});
    v.push_back({{"monomial-partials", "pair", "worked example: partials of x*y*z with their Jacobian ideal"},
                 [](const Options& o) { return pair_fixture("y*z, x*z, x*y, x^2, y^2, z^2", "y*z, x*z, x*y", o, {}); }});
    v.push_back({{"coordinate-points", "pair", "worked example: coordinate points with pure powers"},
                 [](const Options& o) { return pair_fixture("x*y, x*z, y*z, x^2, y^2, z^2", "x*y, x*z, y*z", o, {}); }});
    v.push_back({{"regular-sequence", "pair", "regular sequence modulo J: J = (x) in I = (x, y)"},
                 [](const Options& o) { return pair_fixture("x, y", "x", o, {}); }});
    return v;
  }();
  return all;
}

int cmd_fixtures(const std::string& sub, const Options& o, Json& results) {
  if (sub == "list") {
    Json a = Json::array();
    for (const auto& f : fixture_list()) {
      Json q;
      q["name"] = f.name;
      q["kind"] = f.kind;
      q["provenance"] = f.provenance;
      a.push_back(std::move(q));
    }
    results["fixtures"] = std::move(a);
    return kSuccess;
  }
  if (sub != "run") throw DomainError("unknown fixtures command '" + sub + "'");
  std::vector<const Fixture*> chosen;
  if (o.all || o.names.empty()) {
    if (!o.all) throw DomainError("fixtures run needs fixture names or --all");
    for (const auto& f : fixtures()) chosen.push_back(&f);
  } else {
    for (const auto& name : o.names) {
      auto it = std::find_if(fixtures().begin(), fixtures().end(), [&](const Fixture& f) {
        const auto* fam = find_fixture(name);
        return f.info.name == name || (fam && f.info.name == fam->name);
      });
      if (it == fixtures().end()) throw DomainError("unknown fixture '" + name + "'");
      chosen.push_back(&*it);
    }
  }
  // Independent jobs; the report keeps the requested order.
  const GbOptions gb = current_gb_options();
  std::vector<std::future<FixtureResult>> jobs;
  for (const auto* f : chosen)
    jobs.push_back(std::async(std::launch::async, [f, &o, gb] {
      GbOptionsScope scope(gb);
      return f->run(o);
    }));
  Json a = Json::array();
  bool all_passed = true;
  std::optional<std::string> limit;
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    Json q;
    q["name"] = chosen[k]->info.name;
    q["kind"] = chosen[k]->info.kind;
    q["provenance"] = chosen[k]->info.provenance;
    try {
      auto res = jobs[k].get();
      for (auto& [key, value] : res.report.items()) q[key] = value;
      q["passed"] = res.passed;
      all_passed = all_passed && res.passed;
    } catch (const ResourceExhausted& e) {
      q["limit"] = e.what();
      limit = e.what();
    }
    a.push_back(std::move(q));
  }
  results["fixtures"] = std::move(a);
  results["all_passed"] = all_passed;
  if (limit) throw ResourceExhausted(*limit);
  return all_passed ? kSuccess : kVerdictFailure;
}

int cmd_acceptance(const Options& o, Json& results) {
  acceptance::SuiteOptions so;
  so.only = o.only;
  so.inject = o.inject;
  so.seed = o.seed;
  auto rs = acceptance::run_suite(so);
  if (rs.empty()) throw DomainError("--only '" + o.only.value_or("") + "' selects no criterion");
  Json a = Json::array();
  bool ok = true;
  for (const auto& r : rs) {
    Json q;
    q["criterion"] = r.id;
    q["title"] = r.title;
    q["tags"] = r.tags;
    q["passed"] = r.passed;
    q["details"] = r.details;
    a.push_back(std::move(q));
    ok = ok && r.passed;
  }
  results["criteria"] = std::move(a);
  results["all_passed"] = ok;
  return ok ? kSuccess : kVerdictFailure;
}

// ---- human rendering ----------------------------------------------------------

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

bool flat(const Json& v) {
  if (!v.is_array()) return !v.is_object();
  return std::all_of(v.begin(), v.end(), [](const Json& e) { return !e.is_object() && !e.is_array(); });
}

void render(std::ostringstream& out, const Json& v, int indent) {
  const std::string pad(indent, ' ');
  if (v.is_object()) {
    std::size_t width = 0;
    for (auto& [k, _] : v.items()) width = std::max(width, k.size());
    for (auto& [k, e] : v.items()) {
      if (flat(e)) {
        std::string text;
        if (e.is_array()) {
          std::vector<std::string> parts;
          for (const auto& x : e) parts.push_back(scalar(x));
          text = join(parts, ", ");
          if (text.size() > 76) {
            out << pad << k << ":\n";
            for (const auto& p : parts) out << pad << "  " << p << "\n";
            continue;
          }
        } else {
          text = scalar(e);
        }
        out << pad << k << std::string(width - k.size() + 2, ' ') << text << "\n";
      } else {
        out << pad << k << ":\n";
        render(out, e, indent + 2);
      }
    }
  } else if (v.is_array()) {
    for (const auto& e : v) {
      if (flat(e)) {
        out << pad << "- " << scalar(e) << "\n";
      } else if (e.is_array()) {
        std::vector<std::string> parts;
        for (const auto& x : e) parts.push_back(flat(x) ? scalar(x) : x.dump());
        out << pad << "- [" << join(parts, ", ") << "]\n";
      } else {
        out << pad << "-\n";
        render(out, e, indent + 2);
      }
    }
  } else {
    out << pad << scalar(v) << "\n";
  }
}

}  // namespace

PolyMatrix parse_matrix(const RingPtr& ring, std::string_view text, std::size_t line, std::size_t column) {
  std::size_t lead = text.find_first_not_of(" \t");
  if (lead == std::string_view::npos || text[lead] != '[') throw ParseError("matrix must start with '['", line, column);
  std::size_t close = text.find_last_not_of(" \t\r");
  if (text[close] != ']') throw ParseError("matrix must end with ']'", line, column + close);
  std::vector<std::vector<Polynomial>> rows;
  int depth = 0;
  std::size_t start = lead + 1;
  for (std::size_t i = lead + 1; i <= close; ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if ((c == ';' && depth == 0) || i == close) {
      rows.push_back(parse_polynomial_list(ring, text.substr(start, i - start), line, column + start));
      start = i + 1;
    }
  }
  for (const auto& r : rows)
    if (r.size() != rows[0].size() || r.empty()) throw ParseError("matrix rows differ in length or are empty", line, column);
  return PolyMatrix(ring, std::move(rows));
}

InputFile parse_input(std::string_view text, std::optional<std::string> order) {
  InputFile in;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::size_t first = raw.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    std::size_t colon = raw.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected 'key: value'", line_no, first + 1);
    std::string key(trim(raw.substr(first, colon - first)));
    std::size_t vstart = raw.find_first_not_of(" \t", colon + 1);
    if (vstart == std::string_view::npos) vstart = raw.size();
    std::string_view value = trim(raw.substr(vstart));
    const std::size_t col = vstart + 1;

    if (key == "ring") {
      if (in.ring) throw ParseError("repeated ring header", line_no, first + 1);
      in.ring = parse_ring_header(trim(raw.substr(first)), line_no);
      if (order) in.ring = in.ring->with_order(parse_order(*order, in.ring->size()));
      continue;
    }
    if (!in.ring) throw ParseError("the ring header must come first", line_no, first + 1);
    auto once = [&](bool present) {
      if (present) throw ParseError("repeated '" + key + ":' line", line_no, first + 1);
    };
    if (key == "ideal") {
      in.ideals.push_back(parse_polynomial_list(in.ring, value, line_no, col));
    } else if (key == "I") {
      once(in.I.has_value());
      in.I = parse_polynomial_list(in.ring, value, line_no, col);
    } else if (key == "J") {
      once(in.J.has_value());
      in.J = parse_polynomial_list(in.ring, value, line_no, col);
    } else if (key == "certificate") {
      in.certificates.push_back(parse_polynomial_list(in.ring, value, line_no, col));
    } else if (key == "curve") {
      once(in.curve.has_value());
      in.curve = parse_polynomial(in.ring, value, line_no, col);
    } else if (key == "family") {
      once(in.family.has_value());
      in.family = parse_polynomial(in.ring, value, line_no, col);
    } else if (key == "matrix") {
      once(in.matrix.has_value());
      in.matrix = parse_matrix(in.ring, value, line_no, col);
    } else if (key == "candidate" || key == "candidates") {
      in.candidates.push_back({std::string(value), line_no, col});
    } else {
      throw ParseError("unknown key '" + key + "'", line_no, first + 1);
    }
  }
  if (!in.ring) throw ParseError("missing ring header", 1, 1);
  return in;
}

std::vector<FixtureInfo> fixture_list() {
  std::vector<FixtureInfo> out;
  for (const auto& f : fixtures()) out.push_back(f.info);
  return out;
}

Outcome run(const Job& job) {
  Outcome out;
  Json& r = out.report;
  r["command"] = join(job.command, " ");
  const Options& o = job.options;
  try {
    if (job.command.empty()) throw DomainError("no command");
    GbOptions gb = current_gb_options();
    if (o.work_limit) gb.work_limit = *o.work_limit;
    GbOptionsScope scope(gb);
    check_bound(o);
    const std::string& cmd = job.command[0];
    const std::string sub = job.command.size() > 1 ? job.command[1] : "";
    r["results"] = Json::object();
    if (cmd == "fixtures") {
      r["seed"] = o.seed;
      out.exit_code = cmd_fixtures(sub, o, r["results"]);
    } else if (cmd == "acceptance") {
      r["seed"] = o.seed;
      out.exit_code = cmd_acceptance(o, r["results"]);
    } else {
      InputFile in = parse_input(job.input, o.order);
      r["inputs"] = inputs_json(in);
      // Results are written in place so a resource limit leaves a partial report.
      Json& res = r["results"];
      if (cmd == "gb") {
        out.exit_code = cmd_gb(in, res);
      } else if (cmd == "ideal") {
        out.exit_code = cmd_ideal(sub, in, o, res);
      } else if (cmd == "syz") {
        out.exit_code = cmd_syz(in, o, res);
      } else if (cmd == "minors") {
        out.exit_code = cmd_minors(in, o, res);
      } else if (cmd == "aluffi") {
        out.exit_code = cmd_aluffi(sub, in, o, res);
      } else if (cmd == "curve-cert" || (cmd == "curve" && sub == "cert")) {
        out.exit_code = cmd_curve_cert(in, res);
      } else if (cmd == "family") {
        r["seed"] = o.seed;
        out.exit_code = cmd_family(sub, in, o, res);
      } else {
        throw DomainError("unknown command '" + cmd + "'");
      }
    }
    r["status"] = out.exit_code == kSuccess ? "ok" : "verdict-failure";
  } catch (const ParseError& e) {
    r["status"] = "input-error";
    r["error"] = e.what();
    r["line"] = e.line();
    r["column"] = e.column();
    out.exit_code = kInputError;
  } catch (const ResourceExhausted& e) {
    r["status"] = "resource-limit";
    r["limit"] = e.what();
    out.exit_code = kResourceLimit;
  } catch (const std::invalid_argument& e) {
    // DomainError and RingMismatch.
    r["status"] = "input-error";
    r["error"] = e.what();
    out.exit_code = kInputError;
  }
  return out;
}

std::string render_human(const Json& report, std::optional<double> seconds) {
  std::ostringstream out;
  render(out, report, 0);
  if (seconds) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "elapsed  %.3f s\n", *seconds);
    out << buf;
  }
  return out.str();
}

std::string render_machine(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace aluffi::cli
