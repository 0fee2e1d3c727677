#include "aluffi/syzygy.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "aluffi/errors.hpp"
#include "aluffi/groebner.hpp"
#include "engine.hpp"

namespace aluffi {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring_)) {}

PolyMatrix::PolyMatrix(RingPtr ring, std::vector<std::vector<Polynomial>> rows) : ring_(std::move(ring)) {
  rows_ = rows.size();
  cols_ = rows_ ? rows[0].size() : 0;
  entries_.reserve(rows_ * cols_);
  for (auto& r : rows) {
    if (r.size() != cols_) throw DomainError("PolyMatrix: ragged rows");
    for (auto& p : r) {
      require_same_ring(p.ring(), ring_, "matrix entry");
      entries_.push_back(std::move(p));
    }
  }
}

PolyMatrix PolyMatrix::from_columns(RingPtr ring, std::size_t rows, const std::vector<std::vector<Polynomial>>& columns) {
  PolyMatrix m(ring, rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw DomainError("PolyMatrix: column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m.set(i, j, columns[j][i]);
  }
  return m;
}

void PolyMatrix::set(std::size_t i, std::size_t j, Polynomial p) {
  require_same_ring(p.ring(), ring_, "matrix entry");
  entries_.at(i * cols_ + j) = std::move(p);
}

std::vector<Polynomial> PolyMatrix::column(std::size_t j) const {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

std::vector<Polynomial> PolyMatrix::row(std::size_t i) const {
  return {entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_};
}

std::vector<std::vector<Polynomial>> PolyMatrix::columns() const {
  std::vector<std::vector<Polynomial>> out;
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, (*this)(i, j));
  return t;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_ring(a.ring(), b.ring(), "matrix product");
  if (a.cols() != b.rows()) throw DomainError("matrix product: dimension mismatch");
  PolyMatrix c(a.ring(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Polynomial s(a.ring());
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c.set(i, j, std::move(s));
    }
  return c;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string PolyMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < cols_; ++j) out += (j ? ", " : "") + (*this)(i, j).to_string();
  }
  return out + "]";
}

Polynomial dot(std::span<const Polynomial> gens, std::span<const Polynomial> v) {
  if (gens.size() != v.size() || gens.empty()) throw DomainError("dot: length mismatch");
  Polynomial s(gens[0].ring());
  for (std::size_t i = 0; i < gens.size(); ++i) s += gens[i] * v[i];
  return s;
}

namespace {

detail::EngineSpec module_spec(const RingPtr& ring) {
  detail::EngineSpec spec;
  spec.order = detail::EngineOrder{&ring->order(), detail::ModuleOrder::PositionOverTerm};
  spec.module = true;
  spec.options = current_gb_options();
  return spec;
}

// Vector with entries in components offset, offset+1, ...
detail::EPoly vector_to_engine(std::span<const Polynomial> v, std::uint32_t offset, const detail::EngineSpec& spec) {
  detail::EPoly out;
  // Common denominator across all components keeps the vector proportional.
  Integer den = 1;
  for (const auto& p : v)
    for (const auto& t : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (const auto& t : v[i].terms()) {
      Rational c = t.coeff * den;
      out.push_back(detail::ETerm{t.mono, offset + static_cast<std::uint32_t>(i), c.get_num()});
    }
  detail::normalize(out, spec.order);
  return out;
}

std::vector<Polynomial> vector_from_engine(const detail::EPoly& f, std::uint32_t offset, std::size_t len,
                                           const RingPtr& ring) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < len; ++i) out.push_back(detail::from_engine(f, offset + static_cast<std::uint32_t>(i), ring));
  return out;
}

int column_degree(const std::vector<Polynomial>& col) {
  int d = 0;
  for (const auto& p : col)
    if (auto pd = p.degree()) d = std::max(d, *pd);
  return d;
}

std::size_t column_length(const std::vector<Polynomial>& col) {
  std::size_t n = 0;
  for (const auto& p : col) n += p.size();
  return n;
}

std::vector<detail::EPoly> module_basis(const std::vector<std::vector<Polynomial>>& columns,
                                         const detail::EngineSpec& spec) {
  std::vector<detail::EPoly> input;
  for (const auto& c : columns) {
    auto e = vector_to_engine(c, 0, spec);
    if (!e.empty()) input.push_back(std::move(e));
  }
  return detail::groebner(std::move(input), spec);
}

}  // namespace

PolyMatrix syzygies(std::span<const Polynomial> gens, bool minimalize) {
  if (gens.empty()) throw DomainError("syzygies: empty generator list");
  const RingPtr& ring = gens[0].ring();
  for (const auto& g : gens) require_same_ring(g.ring(), ring, "syzygies");
  const std::size_t m = gens.size();
  auto spec = module_spec(ring);
  // Rows g_i e_0 + e_i; basis elements leading outside component 0 have no
  // component-0 part and are the syzygies.
  std::vector<detail::EPoly> input;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Polynomial> row(m + 1, Polynomial(ring));
    row[0] = gens[i];
    row[i + 1] = Polynomial::constant(ring, 1);
    input.push_back(vector_to_engine(row, 0, spec));
  }
  auto basis = detail::groebner(std::move(input), spec);
  std::vector<std::vector<Polynomial>> cols;
  for (const auto& b : basis)
    if (b[0].comp != 0) cols.push_back(vector_from_engine(b, 1, m, ring));
  auto M = PolyMatrix::from_columns(ring, m, cols);
  return minimalize ? minimalize_columns(M) : M;
}

PolyMatrix minimalize_columns(const PolyMatrix& M) {
  auto cols = M.columns();
  std::stable_sort(cols.begin(), cols.end(), [](const auto& a, const auto& b) {
    int da = column_degree(a), db = column_degree(b);
    if (da != db) return da < db;
    return column_length(a) < column_length(b);
  });
  for (std::size_t k = cols.size(); k-- > 0;) {
    if (cols.size() == 1) break;
    std::vector<std::vector<Polynomial>> others;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (j != k) others.push_back(cols[j]);
    auto rest = PolyMatrix::from_columns(M.ring(), M.rows(), others);
    if (module_member(cols[k], rest)) cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return PolyMatrix::from_columns(M.ring(), M.rows(), cols);
}

bool module_member(std::span<const Polynomial> v, const PolyMatrix& M) {
  if (v.size() != M.rows()) throw DomainError("module_member: length mismatch");
  auto spec = module_spec(M.ring());
  auto e = vector_to_engine(v, 0, spec);
  if (e.empty()) return true;
  auto basis = module_basis(M.columns(), spec);
  return detail::reduce(std::move(e), basis, spec).empty();
}

std::optional<std::vector<Polynomial>> lift(const Polynomial& a, std::span<const Polynomial> gens) {
  if (gens.empty()) throw DomainError("lift: empty generator list");
  const RingPtr& ring = gens[0].ring();
  require_same_ring(a.ring(), ring, "lift");
  const std::size_t m = gens.size();
  if (a.is_zero()) return std::vector<Polynomial>(m, Polynomial(ring));
  auto spec = module_spec(ring);
  std::vector<detail::EPoly> input;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Polynomial> row(m + 1, Polynomial(ring));
    row[0] = gens[i];
    row[i + 1] = Polynomial::constant(ring, 1);
    input.push_back(vector_to_engine(row, 0, spec));
  }
  auto basis = detail::groebner(std::move(input), spec);
  // a e_0 + e_{m+1}: the marker component records the scalar picked up by
  // fraction-free reduction.
  std::vector<Polynomial> target(m + 2, Polynomial(ring));
  target[0] = a;
  target[m + 1] = Polynomial::constant(ring, 1);
  auto r = detail::reduce(vector_to_engine(target, 0, spec), basis, spec);
  auto parts = vector_from_engine(r, 0, m + 2, ring);
  if (!parts[0].is_zero()) return std::nullopt;
  const Polynomial& marker = parts[m + 1];
  if (!marker.is_constant() || marker.is_zero()) throw std::logic_error("lift: marker component reduced");
  Rational scale = -1 / marker.leading_coefficient();
  std::vector<Polynomial> c;
  for (std::size_t i = 1; i <= m; ++i) c.push_back(scale * parts[i]);
  return c;
}

Polynomial determinant(const PolyMatrix& M) {
  if (M.rows() != M.cols()) throw DomainError("determinant: matrix not square");
  const std::size_t n = M.rows();
  if (n == 0) return Polynomial::constant(M.ring(), 1);
  if (n == 1) return M(0, 0);
  if (n == 2) return M(0, 0) * M(1, 1) - M(0, 1) * M(1, 0);
  Polynomial det(M.ring());
  for (std::size_t j = 0; j < n; ++j) {
    if (M(0, j).is_zero()) continue;
    PolyMatrix sub(M.ring(), n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k)
        if (k != j) sub.set(i - 1, c++, M(i, k));
    auto term = M(0, j) * determinant(sub);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

namespace {

void combinations(std::size_t n, std::size_t r, const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  if (r > n) return;
  for (;;) {
    visit(idx);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t k = i; k < r; ++k) idx[k] = idx[k - 1] + 1;
  }
}

}  // namespace

Ideal minors(const PolyMatrix& M, int r) {
  if (r < 1 || static_cast<std::size_t>(r) > std::min(M.rows(), M.cols()))
    throw DomainError("minors: size " + std::to_string(r) + " out of range");
  std::vector<Polynomial> gens;
  const auto rr = static_cast<std::size_t>(r);
  combinations(M.rows(), rr, [&](const std::vector<std::size_t>& rows) {
    combinations(M.cols(), rr, [&](const std::vector<std::size_t>& cols) {
      PolyMatrix sub(M.ring(), rr, rr);
      for (std::size_t i = 0; i < rr; ++i)
        for (std::size_t j = 0; j < rr; ++j) sub.set(i, j, M(rows[i], cols[j]));
      auto d = determinant(sub);
      if (!d.is_zero() && std::find(gens.begin(), gens.end(), d) == gens.end()) gens.push_back(std::move(d));
    });
  });
  return Ideal(M.ring(), std::move(gens));
}

PolyMatrix jacobian(std::span<const Polynomial> gens, std::span<const int> vars) {
  if (gens.empty()) throw DomainError("jacobian: empty generator list");
  const RingPtr& ring = gens[0].ring();
  PolyMatrix J(ring, vars.size(), gens.size());
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) J.set(i, j, partial_derivative(gens[j], vars[i]));
  return J;
}

PolyMatrix hessian(const Polynomial& f, std::span<const int> vars) {
  std::vector<Polynomial> grad;
  for (int v : vars) grad.push_back(partial_derivative(f, v));
  PolyMatrix H(f.ring(), vars.size(), vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = 0; j < vars.size(); ++j) H.set(i, j, partial_derivative(grad[j], vars[i]));
  return H;
}

}  // namespace aluffi
