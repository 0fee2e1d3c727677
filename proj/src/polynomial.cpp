#include "aluffi/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "aluffi/errors.hpp"

namespace aluffi {

namespace {

void sort_and_merge(const MonomialOrder& order, std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
  terms = std::move(out);
}

// Merges two canonical term lists: a + sign*b.
std::vector<Term> merge(const MonomialOrder& order, const std::vector<Term>& a, const std::vector<Term>& b,
                        bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : j == b.size() ? 1 : order.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (subtract) out.back().coeff = -out.back().coeff;
    } else {
      Rational s = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (sgn(s) != 0) out.push_back(Term{a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  for (auto& t : terms_) t.coeff.canonicalize();
  sort_and_merge(ring_->order(), terms_);
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(std::move(ring));
  if (sgn(c) != 0) p.terms_.push_back(Term{Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  int i = ring->require_index(name);
  return variable(std::move(ring), i);
}

Polynomial Polynomial::variable(RingPtr ring, int index) {
  if (index < 0 || static_cast<std::size_t>(index) >= ring->size()) throw DomainError("variable index out of range");
  return monomial(std::move(ring), Monomial::variable(index), 1);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Rational& c) {
  Polynomial p(std::move(ring));
  if (sgn(c) != 0) p.terms_.push_back(Term{m, c});
  return p;
}

bool Polynomial::is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

const Term& Polynomial::leading() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return terms_.front();
}

std::optional<int> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::optional<int> Polynomial::degree_in(std::span<const int> vars) const {
  if (terms_.empty()) return std::nullopt;
  int d = 0;
  for (const auto& t : terms_) {
    int s = 0;
    for (int v : vars) s += t.mono[v];
    d = std::max(d, s);
  }
  return d;
}

int Polynomial::degree_of(int var) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return 0;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_, "add");
  Polynomial r(a.ring_);
  r.terms_ = merge(a.ring_->order(), a.terms_, b.terms_, false);
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_, "sub");
  Polynomial r(a.ring_);
  r.terms_ = merge(a.ring_->order(), a.terms_, b.terms_, true);
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_, "mul");
  Polynomial r(a.ring_);
  if (a.is_zero() || b.is_zero()) return r;
  if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].mono, b.terms_[0].coeff);
  if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].mono, a.terms_[0].coeff);
  std::unordered_map<Monomial, Rational> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc[s.mono * t.mono] += s.coeff * t.coeff;
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) terms.push_back(Term{m, std::move(c)});
  std::sort(terms.begin(), terms.end(),
            [&](const Term& x, const Term& y) { return a.ring_->order().compare(x.mono, y.mono) > 0; });
  r.terms_ = std::move(terms);
  return r;
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
  Polynomial r(a.ring_);
  if (sgn(c) == 0) return r;
  r.terms_ = a.terms_;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
  Polynomial r(ring_);
  if (sgn(c) == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves a monomial order.
  for (const auto& t : terms_) r.terms_.push_back(Term{t.mono * m, t.coeff * c});
  return r;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw DomainError("negative power");
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading_coefficient();
  return inv * *this;
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  Rational c = content(*this);
  if (sgn(leading_coefficient()) < 0) c = -c;
  return Rational(1 / c) * *this;
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  if (same_ring(ring_, target)) {
    Polynomial r(target);
    r.terms_ = terms_;
    return r;
  }
  std::vector<int> map(ring_->size(), -1);
  std::uint32_t used = 0;
  for (const auto& t : terms_) used |= t.mono.support();
  for (std::size_t v = 0; v < ring_->size(); ++v) {
    auto idx = target->index_of(ring_->name(v));
    if (idx) {
      map[v] = *idx;
    } else if (used & (1u << v)) {
      throw RingMismatch("variable '" + ring_->name(v) + "' does not exist in the target ring");
    }
  }
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t v = 0; v < ring_->size(); ++v)
      if (t.mono[v]) m.set(map[v], t.mono[v]);
    terms.push_back(Term{m, t.coeff});
  }
  Polynomial r(target);
  r.terms_ = std::move(terms);
  std::sort(r.terms_.begin(), r.terms_.end(),
            [&](const Term& x, const Term& y) { return target->order().compare(x.mono, y.mono) > 0; });
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (sgn(c) < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
      if (sgn(c) < 0) c = -c;
    }
    first = false;
    bool one = c == 1;
    bool need_star = false;
    if (!one || t.mono.is_one()) {
      os << c.get_str();
      need_star = true;
    }
    for (std::size_t v = 0; v < ring_->size(); ++v) {
      int e = t.mono[v];
      if (e == 0) continue;
      if (need_star) os << "*";
      os << ring_->name(v);
      if (e > 1) os << "^" << e;
      need_star = true;
    }
  }
  return os.str();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

Polynomial partial_derivative(const Polynomial& f, int var) {
  if (var < 0 || static_cast<std::size_t>(var) >= f.ring()->size()) throw DomainError("unknown variable index");
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    int e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    terms.push_back(Term{m, t.coeff * e});
  }
  return Polynomial(f.ring(), std::move(terms));
}

Polynomial partial_derivative(const Polynomial& f, std::string_view var) {
  return partial_derivative(f, f.ring()->require_index(var));
}

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images) {
  if (images.size() != f.ring()->size()) throw DomainError("substitution arity mismatch");
  if (images.empty()) throw DomainError("substitution into a ring without variables");
  const RingPtr& target = images.front().ring();
  for (const auto& p : images) require_same_ring(p.ring(), target, "substitute");
  // Cache powers of the images.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t v, int e) -> const Polynomial& {
    auto& pw = powers[v];
    if (pw.empty()) pw.push_back(Polynomial::constant(target, 1));
    while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[v]);
    return pw[e];
  };
  Polynomial out(target);
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (std::size_t v = 0; v < images.size(); ++v)
      if (t.mono[v]) term = term * power(v, t.mono[v]);
    out += term;
  }
  return out;
}

Polynomial evaluate_block(const Polynomial& f, std::string_view block, std::span<const Rational> values) {
  const auto& ring = f.ring();
  const Ring::Block* b = ring->find_block(block);
  if (!b || b->vars.empty()) {
    if (!values.empty()) throw DomainError("evaluate_block: arity mismatch");
    return f;
  }
  if (b->vars.size() != values.size()) throw DomainError("evaluate_block: arity mismatch");
  RingPtr target = ring->without_block(block);
  std::vector<Polynomial> images;
  images.reserve(ring->size());
  for (std::size_t v = 0; v < ring->size(); ++v) {
    auto it = std::find(b->vars.begin(), b->vars.end(), static_cast<int>(v));
    if (it != b->vars.end()) {
      images.push_back(Polynomial::constant(target, values[it - b->vars.begin()]));
    } else {
      images.push_back(Polynomial::variable(target, ring->name(v)));
    }
  }
  return substitute(f, images);
}

Homogeneity is_homogeneous(const Polynomial& f, std::span<const int> vars) {
  Homogeneity h;
  if (f.is_zero()) {
    h.zero = true;
    return h;
  }
  std::optional<int> d;
  for (const auto& t : f.terms()) {
    int s = 0;
    for (int v : vars) s += t.mono[v];
    if (!d) d = s;
    if (*d != s) return h;
  }
  h.homogeneous = true;
  h.degree = d;
  return h;
}

Homogeneity is_homogeneous(const Polynomial& f, std::string_view block) {
  return is_homogeneous(f, f.ring()->block(block).vars);
}

Rational content(const Polynomial& f) {
  if (f.is_zero()) return 0;
  Integer num = 0, den = 1;
  for (const auto& t : f.terms()) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational c(num, den);
  c.canonicalize();
  return c;
}

}  // namespace aluffi
