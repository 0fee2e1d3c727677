#include "aluffi/monomial.hpp"

#include <numeric>
#include <stdexcept>

#include "aluffi/errors.hpp"

namespace aluffi {

namespace {

constexpr int kMaxExponent = 255;

int checked_exponent(int e) {
  if (e < 0) throw DomainError("negative exponent");
  if (e > kMaxExponent) throw ResourceExhausted("exponent overflow (max 255)");
  return e;
}

}  // namespace

Monomial::Monomial(std::span<const int> exponents) {
  if (exponents.size() > kMaxVars) throw DomainError("too many variables (max 32)");
  for (std::size_t i = 0; i < exponents.size(); ++i)
    exps_[i] = static_cast<Exponent>(checked_exponent(exponents[i]));
  refresh();
}

Monomial Monomial::variable(std::size_t index, int power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, int e) {
  if (i >= kMaxVars) throw DomainError("variable index out of range");
  exps_[i] = static_cast<Exponent>(checked_exponent(e));
  refresh();
}

void Monomial::refresh() noexcept {
  degree_ = 0;
  support_ = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    degree_ += exps_[i];
    if (exps_[i] != 0) support_ |= (1u << i);
  }
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    int e = int{a.exps_[i]} + int{b.exps_[i]};
    if (e > kMaxExponent) throw ResourceExhausted("exponent overflow (max 255)");
    r.exps_[i] = static_cast<Monomial::Exponent>(e);
  }
  r.degree_ = a.degree_ + b.degree_;
  r.support_ = a.support_ | b.support_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (b.exps_[i] > a.exps_[i]) throw DomainError("monomial quotient is not exact");
    r.exps_[i] = static_cast<Monomial::Exponent>(a.exps_[i] - b.exps_[i]);
  }
  r.refresh();
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  r.refresh();
  return r;
}

std::size_t Monomial::hash() const noexcept {
  // FNV-1a over the exponent bytes.
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

MonomialOrder::MonomialOrder(std::vector<OrderSegment> segments) : segments_(std::move(segments)) {
  std::vector<bool> seen;
  for (auto& s : segments_) {
    if (s.kind == OrderKind::Weight || s.kind == OrderKind::RevLex) {
      if (s.kind == OrderKind::Weight) {
        if (s.weights.size() != s.vars.size()) throw DomainError("weight vector arity mismatch");
        for (int w : s.weights)
          if (w < 0) throw DomainError("weights must be nonnegative");
      } else {
        s.weights.assign(s.vars.size(), 1);
      }
      for (int v : s.vars)
        if (v < 0 || static_cast<std::size_t>(v) >= kMaxVars) throw DomainError("order variable out of range");
      continue;
    }
    if (s.kind == OrderKind::WeightedGrevlex) {
      if (s.weights.size() != s.vars.size()) throw DomainError("weight vector arity mismatch");
      for (int w : s.weights)
        if (w <= 0) throw DomainError("weights must be positive");
    } else {
      s.weights.assign(s.vars.size(), 1);
    }
    for (int v : s.vars) {
      if (v < 0 || static_cast<std::size_t>(v) >= kMaxVars) throw DomainError("order variable out of range");
      if (seen.size() <= static_cast<std::size_t>(v)) seen.resize(v + 1, false);
      if (seen[v]) throw DomainError("variable appears twice in monomial order");
      seen[v] = true;
    }
  }
  for (bool b : seen)
    if (!b) throw DomainError("monomial order does not cover every variable");
  arity_ = seen.size();
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
  OrderSegment s{OrderKind::Lex, std::vector<int>(nvars), {}};
  std::iota(s.vars.begin(), s.vars.end(), 0);
  return MonomialOrder({s});
}

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) {
  OrderSegment s{OrderKind::Grevlex, std::vector<int>(nvars), {}};
  std::iota(s.vars.begin(), s.vars.end(), 0);
  return MonomialOrder({s});
}

MonomialOrder MonomialOrder::weighted_grevlex(std::vector<int> weights) {
  OrderSegment s{OrderKind::WeightedGrevlex, std::vector<int>(weights.size()), std::move(weights)};
  std::iota(s.vars.begin(), s.vars.end(), 0);
  return MonomialOrder({s});
}

MonomialOrder MonomialOrder::variable_saturation(std::size_t nvars, std::span<const int> graded, int var) {
  OrderSegment w{OrderKind::Weight, {graded.begin(), graded.end()}, std::vector<int>(graded.size(), 1)};
  OrderSegment r{OrderKind::RevLex, {var}, {}};
  OrderSegment g{OrderKind::Grevlex, std::vector<int>(nvars), {}};
  std::iota(g.vars.begin(), g.vars.end(), 0);
  return MonomialOrder({std::move(w), std::move(r), std::move(g)});
}

MonomialOrder MonomialOrder::elimination(std::size_t nvars, std::span<const int> first) {
  std::vector<bool> in_first(nvars, false);
  OrderSegment a{OrderKind::Grevlex, {}, {}};
  OrderSegment b{OrderKind::Grevlex, {}, {}};
  for (int v : first) in_first.at(v) = true;
  for (std::size_t v = 0; v < nvars; ++v) (in_first[v] ? a : b).vars.push_back(static_cast<int>(v));
  std::vector<OrderSegment> segs;
  if (!a.vars.empty()) segs.push_back(std::move(a));
  if (!b.vars.empty()) segs.push_back(std::move(b));
  return MonomialOrder(std::move(segs));
}


int MonomialOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
  for (const auto& s : segments_) {
    const auto& vars = s.vars;
    switch (s.kind) {
      case OrderKind::Lex:
        for (int v : vars)
          if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
        break;
      case OrderKind::Grevlex:
      case OrderKind::WeightedGrevlex: {
        long da = 0, db = 0;
        if (s.kind == OrderKind::Grevlex && s.vars.size() == arity_) {
          da = a.degree();
          db = b.degree();
        } else {
          for (std::size_t i = 0; i < vars.size(); ++i) {
            da += static_cast<long>(s.weights[i]) * a[vars[i]];
            db += static_cast<long>(s.weights[i]) * b[vars[i]];
          }
        }
        if (da != db) return da > db ? 1 : -1;
        for (std::size_t i = vars.size(); i-- > 0;) {
          int v = vars[i];
          if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
        }
        break;
      }
      case OrderKind::Weight: {
        long da = 0, db = 0;
        for (std::size_t i = 0; i < vars.size(); ++i) {
          da += static_cast<long>(s.weights[i]) * a[vars[i]];
          db += static_cast<long>(s.weights[i]) * b[vars[i]];
        }
        if (da != db) return da > db ? 1 : -1;
        break;
      }
      case OrderKind::RevLex:
        for (std::size_t i = vars.size(); i-- > 0;) {
          int v = vars[i];
          if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
        }
        break;
    }
  }
  return 0;
}

namespace {

std::string kind_name(const OrderSegment& s) {
  switch (s.kind) {
    case OrderKind::Lex:
      return "lex";
    case OrderKind::Grevlex:
      return "grevlex";
    case OrderKind::WeightedGrevlex: {
      std::string out = "weighted-grevlex(";
      for (std::size_t i = 0; i < s.weights.size(); ++i) out += (i ? "," : "") + std::to_string(s.weights[i]);
      return out + ")";
    }
    case OrderKind::Weight: {
      std::string out = "weight(";
      for (std::size_t i = 0; i < s.weights.size(); ++i) out += (i ? "," : "") + std::to_string(s.weights[i]);
      return out + ")";
    }
    case OrderKind::RevLex:
      return "revlex";
  }
  return "?";
}

}  // namespace

std::string MonomialOrder::name() const {
  if (segments_.size() == 1) return kind_name(segments_.front());
  std::string out = "block(";
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (i) out += " > ";
    out += kind_name(segments_[i]) + "[";
    for (std::size_t j = 0; j < segments_[i].vars.size(); ++j)
      out += (j ? "," : "") + std::to_string(segments_[i].vars[j]);
    out += "]";
  }
  return out + ")";
}

bool operator==(const OrderSegment& a, const OrderSegment& b) noexcept {
  return a.kind == b.kind && a.vars == b.vars && a.weights == b.weights;
}

bool operator==(const MonomialOrder& a, const MonomialOrder& b) noexcept { return a.segments_ == b.segments_; }

}  // namespace aluffi
