#include "aluffi/groebner.hpp"

#include <algorithm>
#include <mutex>
#include <optional>

#include "aluffi/errors.hpp"
#include "engine.hpp"

namespace aluffi {

namespace detail {

struct GbCache {
  std::mutex mutex;
  std::optional<GroebnerBasis> basis;
};

}  // namespace detail

namespace {

thread_local GbOptions tls_options;

}  // namespace

const GbOptions& current_gb_options() noexcept { return tls_options; }

GbOptionsScope::GbOptionsScope(GbOptions options) : saved_(tls_options) { tls_options = options; }
GbOptionsScope::~GbOptionsScope() { tls_options = saved_; }

Ideal::Ideal() : cache_(std::make_shared<detail::GbCache>()) {}

Ideal::Ideal(RingPtr ring) : ring_(std::move(ring)), cache_(std::make_shared<detail::GbCache>()) {}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<detail::GbCache>()) {
  gens_.reserve(generators.size());
  for (auto& g : generators) {
    require_same_ring(g.ring(), ring_, "ideal generator");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {std::move(one)});
}

const GroebnerBasis& Ideal::groebner() const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->basis) cache_->basis.emplace(buchberger(*this));
  return *cache_->basis;
}

Ideal Ideal::in_ring(const RingPtr& target) const {
  std::vector<Polynomial> g;
  g.reserve(gens_.size());
  for (const auto& p : gens_) g.push_back(p.in_ring(target));
  return Ideal(target, std::move(g));
}

std::string Ideal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) out += (i ? ", " : "") + gens_[i].to_string();
  return out + ")";
}

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements)
    : ring_(std::move(ring)), elements_(std::move(elements)) {}

bool GroebnerBasis::is_unit() const noexcept {
  return elements_.size() == 1 && elements_[0].is_constant() && !elements_[0].is_zero();
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements_.size());
  for (const auto& g : elements_) out.push_back(g.leading_monomial());
  return out;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  require_same_ring(f.ring(), ring_, "normal_form");
  const auto& order = ring_->order();
  // Rational reduction against the monic basis; terms are processed from the
  // top, so each step is an exact linear operation on f.
  std::vector<Term> rest(f.terms().begin(), f.terms().end());
  std::vector<Term> remainder;
  std::size_t pos = 0;
  while (pos < rest.size()) {
    const Term& t = rest[pos];
    const Polynomial* red = nullptr;
    for (const auto& g : elements_) {
      if (g.leading_monomial().divides(t.mono)) {
        red = &g;
        break;
      }
    }
    if (!red) {
      remainder.push_back(rest[pos]);
      ++pos;
      continue;
    }
    Monomial q = t.mono / red->leading_monomial();
    Rational c = t.coeff / red->leading_coefficient();
    std::vector<Term> next;
    next.reserve(rest.size() - pos + red->size());
    const auto& gt = red->terms();
    std::size_t i = pos + 1, j = 1;
    while (i < rest.size() || j < gt.size()) {
      Monomial mj;
      if (j < gt.size()) mj = gt[j].mono * q;
      int cmp = i == rest.size() ? -1 : j == gt.size() ? 1 : order.compare(rest[i].mono, mj);
      if (cmp > 0) {
        next.push_back(std::move(rest[i++]));
      } else if (cmp < 0) {
        next.push_back(Term{mj, -(c * gt[j].coeff)});
        ++j;
      } else {
        Rational s = rest[i].coeff - c * gt[j].coeff;
        if (sgn(s) != 0) next.push_back(Term{mj, std::move(s)});
        ++i;
        ++j;
      }
    }
    rest = std::move(next);
    pos = 0;
  }
  return Polynomial(ring_, std::move(remainder));
}

GroebnerBasis buchberger(const Ideal& I) {
  const RingPtr& ring = I.ring();
  detail::EngineSpec spec;
  spec.order = detail::EngineOrder{&ring->order(), detail::ModuleOrder::PositionOverTerm};
  spec.options = current_gb_options();
  std::vector<detail::EPoly> input;
  input.reserve(I.size());
  for (const auto& g : I.gens()) input.push_back(detail::to_engine(g, 0, spec.order));
  auto basis = detail::groebner(std::move(input), spec);
  std::vector<Polynomial> elements;
  elements.reserve(basis.size());
  for (const auto& b : basis) elements.push_back(detail::from_engine(b, 0, ring).monic());
  return GroebnerBasis(ring, std::move(elements));
}

GroebnerBasis buchberger(const Ideal& I, const MonomialOrder& order) {
  auto ring = I.ring()->with_order(order);
  return buchberger(I.in_ring(ring));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) { return G.normal_form(f); }

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring(), "s_polynomial");
  const auto& lf = f.leading();
  const auto& lg = g.leading();
  Monomial L = lcm(lf.mono, lg.mono);
  return f.mul_term(L / lf.mono, 1 / lf.coeff) - g.mul_term(L / lg.mono, 1 / lg.coeff);
}

bool ideal_member(const Polynomial& f, const Ideal& I) {
  require_same_ring(f.ring(), I.ring(), "ideal_member");
  if (f.is_zero()) return true;
  if (I.is_zero()) return false;
  return I.groebner().contains(f);
}

bool radical_member(const Polynomial& f, const Ideal& I) {
  require_same_ring(f.ring(), I.ring(), "radical_member");
  if (f.is_zero()) return true;
  if (I.is_zero()) return false;
  auto names = I.ring()->fresh_names("_y", 1);
  RingPtr ext = I.ring()->extended(blocks::kAux, names);
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) gens.push_back(g.in_ring(ext));
  auto y = Polynomial::variable(ext, names[0]);
  gens.push_back(Polynomial::constant(ext, 1) - y * f.in_ring(ext));
  return buchberger(Ideal(ext, std::move(gens))).is_unit();
}

}  // namespace aluffi
