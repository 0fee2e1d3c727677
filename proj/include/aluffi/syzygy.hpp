#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aluffi/ideal.hpp"
#include "aluffi/polynomial.hpp"

namespace aluffi {

/// Dense matrix of polynomials over one ring, stored row-major.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  /// Zero matrix.
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  PolyMatrix(RingPtr ring, std::vector<std::vector<Polynomial>> rows);
  static PolyMatrix from_columns(RingPtr ring, std::size_t rows, const std::vector<std::vector<Polynomial>>& columns);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_.at(i * cols_ + j); }
  void set(std::size_t i, std::size_t j, Polynomial p);

  std::vector<Polynomial> column(std::size_t j) const;
  std::vector<Polynomial> row(std::size_t i) const;
  std::vector<std::vector<Polynomial>> columns() const;
  PolyMatrix transpose() const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  /// "[a, b; c, d]", rows separated by ';'.
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial> entries_;
};

/// Row vector times column: Σ gens[i] * v[i].
Polynomial dot(std::span<const Polynomial> gens, std::span<const Polynomial> v);

/// Matrix whose columns generate the first syzygy module of `gens`
/// (gens · φ = 0), from a position-over-term module Groebner basis. With
/// `minimalize`, redundant columns are dropped (see minimalize_columns).
PolyMatrix syzygies(std::span<const Polynomial> gens, bool minimalize = true);

/// Drops columns lying in the submodule generated by the others, trying the
/// largest (degree, length) first. The result generates the same module.
PolyMatrix minimalize_columns(const PolyMatrix& M);

/// v ∈ column module of M.
bool module_member(std::span<const Polynomial> v, const PolyMatrix& M);

/// Coefficients c with a = Σ c_j gens[j], or nullopt when a ∉ (gens).
std::optional<std::vector<Polynomial>> lift(const Polynomial& a, std::span<const Polynomial> gens);

/// Determinant of a square matrix (cofactor expansion).
Polynomial determinant(const PolyMatrix& M);

/// Ideal of r×r minors. I₁ is the ideal of entries. Throws DomainError for r
/// outside 1..min(rows, cols).
Ideal minors(const PolyMatrix& M, int r);

/// Rows indexed by `vars`, columns by `gens`: entry (i, j) = ∂gens[j]/∂vars[i].
PolyMatrix jacobian(std::span<const Polynomial> gens, std::span<const int> vars);
/// Matrix of second partials of f in `vars`.
PolyMatrix hessian(const Polynomial& f, std::span<const int> vars);

}  // namespace aluffi
