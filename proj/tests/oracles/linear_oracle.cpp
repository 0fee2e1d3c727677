#include "linear_oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace aluffi::oracle {

namespace {

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

using Index = std::map<Monomial, std::size_t, MonomialLess>;

Index index_of(const std::vector<Monomial>& ms) {
  Index idx;
  for (std::size_t i = 0; i < ms.size(); ++i) idx.emplace(ms[i], i);
  return idx;
}

std::vector<int> all_vars(const Polynomial& p) {
  std::vector<int> v(p.ring()->size());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

void fill(std::vector<Rational>& row, std::size_t offset, const Index& idx, const Polynomial& p) {
  for (const auto& t : p.terms()) row[offset + idx.at(t.mono)] = t.coeff;
}

void enumerate(std::span<const int> vars, std::size_t k, int left, Monomial& cur, std::vector<Monomial>& out) {
  if (k + 1 == vars.size()) {
    cur.set(vars[k], left);
    out.push_back(cur);
    cur.set(vars[k], 0);
    return;
  }
  for (int e = left; e >= 0; --e) {
    cur.set(vars[k], e);
    enumerate(vars, k + 1, left - e, cur, out);
  }
  cur.set(vars[k], 0);
}

int degree(const Polynomial& p) { return p.degree().value_or(0); }

}  // namespace

std::size_t rank(std::vector<std::vector<Rational>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

std::vector<Monomial> monomials_of_degree(std::span<const int> vars, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (vars.empty()) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Monomial cur;
  enumerate(vars, 0, d, cur, out);
  return out;
}

std::size_t ideal_piece_dim(std::span<const Polynomial> gens, std::span<const int> vars, int d) {
  if (gens.empty()) return 0;
  auto target = monomials_of_degree(all_vars(gens[0]), d);
  auto idx = index_of(target);
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : gens)
    for (const auto& m : monomials_of_degree(vars, d - degree(g))) {
      std::vector<Rational> row(target.size());
      fill(row, 0, idx, g.mul_term(m, 1));
      rows.push_back(std::move(row));
    }
  return rank(std::move(rows));
}

std::size_t syzygy_piece_dim(std::span<const Polynomial> gens, int d) {
  if (gens.empty()) return 0;
  auto vars = all_vars(gens[0]);
  auto target = monomials_of_degree(vars, d);
  auto idx = index_of(target);
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : gens)
    for (const auto& m : monomials_of_degree(vars, d - degree(g))) {
      std::vector<Rational> row(target.size());
      fill(row, 0, idx, g.mul_term(m, 1));
      rows.push_back(std::move(row));
    }
  return rows.size() - rank(std::move(rows));
}

std::size_t module_piece_dim(std::span<const Polynomial> gens, const std::vector<std::vector<Polynomial>>& columns,
                             int d) {
  if (gens.empty()) return 0;
  auto vars = all_vars(gens[0]);
  std::vector<Index> blocks;
  std::vector<std::size_t> offsets;
  std::size_t width = 0;
  for (const auto& g : gens) {
    auto ms = monomials_of_degree(vars, d - degree(g));
    offsets.push_back(width);
    width += ms.size();
    blocks.push_back(index_of(ms));
  }
  std::vector<std::vector<Rational>> rows;
  for (const auto& col : columns) {
    std::optional<int> cdeg;
    for (std::size_t i = 0; i < col.size(); ++i)
      if (!col[i].is_zero()) cdeg = degree(col[i]) + degree(gens[i]);
    if (!cdeg) continue;
    for (const auto& m : monomials_of_degree(vars, d - *cdeg)) {
      std::vector<Rational> row(width);
      for (std::size_t i = 0; i < col.size(); ++i)
        if (!col[i].is_zero()) fill(row, offsets[i], blocks[i], col[i].mul_term(m, 1));
      rows.push_back(std::move(row));
    }
  }
  return rank(std::move(rows));
}

std::size_t elimination_piece_dim(std::span<const Polynomial> gens, std::span<const int> keep, int d) {
  if (gens.empty()) return 0;
  auto vars = all_vars(gens[0]);
  auto target = monomials_of_degree(vars, d);
  // Order columns so the monomials outside Q[keep] come first.
  std::uint32_t keep_mask = 0;
  for (int v : keep) keep_mask |= 1u << v;
  std::stable_partition(target.begin(), target.end(), [&](const Monomial& m) { return (m.support() & ~keep_mask) != 0; });
  const auto outside = static_cast<std::size_t>(std::count_if(
      target.begin(), target.end(), [&](const Monomial& m) { return (m.support() & ~keep_mask) != 0; }));
  auto idx = index_of(target);
  std::vector<std::vector<Rational>> rows, projected;
  for (const auto& g : gens)
    for (const auto& m : monomials_of_degree(vars, d - degree(g))) {
      std::vector<Rational> row(target.size());
      fill(row, 0, idx, g.mul_term(m, 1));
      projected.emplace_back(row.begin(), row.begin() + outside);
      rows.push_back(std::move(row));
    }
  return rank(std::move(rows)) - rank(std::move(projected));
}

}  // namespace aluffi::oracle
