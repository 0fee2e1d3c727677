#include "engine.hpp"

#include <algorithm>

#include "aluffi/errors.hpp"

namespace aluffi::detail {

namespace {

struct Reducer {
  Monomial lm;
  std::uint32_t comp;
  std::size_t index;
  std::size_t length;
};

class ReducerTable {
 public:
  void add(const EPoly& p, std::size_t index) { entries_.push_back(Reducer{p[0].m, p[0].comp, index, p.size()}); }
  void remove(std::size_t index) {
    std::erase_if(entries_, [&](const Reducer& r) { return r.index == index; });
  }

  /// Shortest element whose leading term divides (m, comp); `skip` is never returned.
  const Reducer* find(const Monomial& m, std::uint32_t comp, std::size_t skip = SIZE_MAX) const {
    const Reducer* best = nullptr;
    for (const auto& r : entries_) {
      if (r.comp != comp || r.index == skip || !r.lm.divides(m)) continue;
      if (!best || r.length < best->length) best = &r;
    }
    return best;
  }

 private:
  std::vector<Reducer> entries_;
};

// a_coef * a_mono * A[a_from..] + b_coef * b_mono * B[b_from..]
EPoly combine(const EPoly& A, std::size_t a_from, const Integer& a_coef, const Monomial& a_mono, const EPoly& B,
              std::size_t b_from, const Integer& b_coef, const Monomial& b_mono, const EngineOrder& order) {
  EPoly out;
  out.reserve(A.size() - a_from + B.size() - b_from);
  const bool a_shift = !a_mono.is_one();
  const bool b_shift = !b_mono.is_one();
  const bool a_unit = a_coef == 1;
  std::size_t i = a_from, j = b_from;
  Monomial ma, mb;
  bool have_a = false, have_b = false;
  while (i < A.size() || j < B.size()) {
    if (i < A.size() && !have_a) {
      ma = a_shift ? A[i].m * a_mono : A[i].m;
      have_a = true;
    }
    if (j < B.size() && !have_b) {
      mb = b_shift ? B[j].m * b_mono : B[j].m;
      have_b = true;
    }
    int c = !have_a ? -1 : !have_b ? 1 : order.compare(ma, A[i].comp, mb, B[j].comp);
    if (c > 0) {
      out.push_back(ETerm{ma, A[i].comp, a_unit ? A[i].c : Integer(A[i].c * a_coef)});
      ++i;
      have_a = false;
    } else if (c < 0) {
      out.push_back(ETerm{mb, B[j].comp, Integer(B[j].c * b_coef)});
      ++j;
      have_b = false;
    } else {
      Integer s = A[i].c * a_coef + B[j].c * b_coef;
      if (sgn(s) != 0) out.push_back(ETerm{ma, A[i].comp, std::move(s)});
      ++i;
      ++j;
      have_a = have_b = false;
    }
  }
  return out;
}

void divide_content(EPoly& done, EPoly& cur, std::size_t cur_from) {
  Integer g = 0;
  for (const auto& t : done) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) return;
  }
  for (std::size_t k = cur_from; k < cur.size(); ++k) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cur[k].c.get_mpz_t());
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (auto& t : done) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
  for (std::size_t k = cur_from; k < cur.size(); ++k)
    mpz_divexact(cur[k].c.get_mpz_t(), cur[k].c.get_mpz_t(), g.get_mpz_t());
}

EPoly reduce_with(EPoly cur, const std::vector<EPoly>& polys, const ReducerTable& table, const EngineOrder& order,
                  std::size_t skip = SIZE_MAX) {
  EPoly done;
  std::size_t pos = 0;
  std::size_t steps = 0;
  const Monomial one;
  while (pos < cur.size()) {
    const ETerm& t = cur[pos];
    const Reducer* r = table.find(t.m, t.comp, skip);
    if (!r) {
      done.push_back(std::move(cur[pos]));
      ++pos;
      continue;
    }
    const EPoly& g = polys[r->index];
    Integer d = gcd(t.c, g[0].c);
    Integer a = g[0].c / d;
    Integer b = -(t.c / d);
    Monomial q = t.m / g[0].m;
    cur = combine(cur, pos + 1, a, one, g, 1, b, q, order);
    pos = 0;
    if (a != 1)
      for (auto& x : done) x.c *= a;
    if (++steps % 16 == 0) divide_content(done, cur, 0);
  }
  return done;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint32_t comp;
  int degree;
  int sugar;
};

int poly_degree(const EPoly& p) {
  int d = 0;
  for (const auto& t : p) d = std::max(d, t.m.degree());
  return d;
}

}  // namespace

void normalize(EPoly& f, const EngineOrder& order) {
  std::sort(f.begin(), f.end(), [&](const ETerm& a, const ETerm& b) { return order.compare(a, b) > 0; });
  EPoly out;
  out.reserve(f.size());
  for (auto& t : f) {
    if (!out.empty() && out.back().m == t.m && out.back().comp == t.comp) {
      out.back().c += t.c;
    } else {
      if (!out.empty() && sgn(out.back().c) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().c) == 0) out.pop_back();
  f = std::move(out);
}

void make_primitive(EPoly& f) {
  if (f.empty()) return;
  Integer g = 0;
  for (const auto& t : f) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(f[0].c) < 0) g = -g;
  if (g != 1)
    for (auto& t : f) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
}

EPoly to_engine(const Polynomial& f, std::uint32_t comp, const EngineOrder& order) {
  Integer den = 1;
  for (const auto& t : f.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  EPoly out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Integer c = t.coeff.get_num() * (den / t.coeff.get_den());
    out.push_back(ETerm{t.mono, comp, std::move(c)});
  }
  std::sort(out.begin(), out.end(), [&](const ETerm& a, const ETerm& b) { return order.compare(a, b) > 0; });
  make_primitive(out);
  return out;
}

Polynomial from_engine(const EPoly& f, std::uint32_t comp, const RingPtr& ring) {
  std::vector<Term> terms;
  for (const auto& t : f)
    if (t.comp == comp) terms.push_back(Term{t.m, Rational(t.c)});
  return Polynomial(ring, std::move(terms));
}

EPoly reduce(EPoly f, const std::vector<EPoly>& basis, const EngineSpec& spec) {
  ReducerTable table;
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (!basis[k].empty()) table.add(basis[k], k);
  EPoly r = reduce_with(std::move(f), basis, table, spec.order);
  make_primitive(r);
  return r;
}

std::vector<EPoly> groebner(std::vector<EPoly> input, const EngineSpec& spec) {
  const EngineOrder& order = spec.order;
  std::vector<EPoly> polys;
  std::vector<int> sugar;
  std::vector<bool> active;
  std::vector<Pair> pairs;  // best pair at the back
  ReducerTable table;
  std::size_t work = 0;

  auto pair_less = [&](const Pair& a, const Pair& b) {
    // "less" means selected later.
    int ka = spec.options.selection == PairSelection::Sugar ? a.sugar : a.degree;
    int kb = spec.options.selection == PairSelection::Sugar ? b.sugar : b.degree;
    if (ka != kb) return ka > kb;
    int c = order.compare(a.lcm, a.comp, b.lcm, b.comp);
    if (c != 0) return c > 0;
    if (a.j != b.j) return a.j > b.j;
    return a.i > b.i;
  };

  auto make_pair = [&](std::size_t i, std::size_t h) {
    Monomial L = lcm(polys[i][0].m, polys[h][0].m);
    int s = std::max(sugar[i] + L.degree() - polys[i][0].m.degree(), sugar[h] + L.degree() - polys[h][0].m.degree());
    return Pair{i, h, L, polys[h][0].comp, L.degree(), s};
  };

  auto update = [&](std::size_t h) {
    const ETerm& lh = polys[h][0];
    std::vector<Pair> C;
    for (std::size_t i = 0; i < polys.size(); ++i)
      if (active[i] && polys[i][0].comp == lh.comp) C.push_back(make_pair(i, h));
    auto coprime = [&](const Pair& p) { return !spec.module && polys[p.i][0].m.coprime(lh.m); };
    std::vector<Pair> D;
    while (!C.empty()) {
      Pair p = std::move(C.back());
      C.pop_back();
      bool keep = coprime(p);
      if (!keep) {
        keep = true;
        for (const auto& q : C)
          if (q.lcm.divides(p.lcm)) {
            keep = false;
            break;
          }
        if (keep)
          for (const auto& q : D)
            if (q.lcm.divides(p.lcm)) {
              keep = false;
              break;
            }
      }
      if (keep) D.push_back(std::move(p));
    }
    std::vector<Pair> E;
    for (auto& p : D)
      if (!coprime(p)) E.push_back(std::move(p));
    std::vector<Pair> kept;
    kept.reserve(pairs.size() + E.size());
    for (auto& p : pairs) {
      bool drop = false;
      if (p.comp == lh.comp && lh.m.divides(p.lcm)) {
        Monomial li = lcm(polys[p.i][0].m, lh.m);
        Monomial lj = lcm(polys[p.j][0].m, lh.m);
        drop = !(li == p.lcm) && !(lj == p.lcm);
      }
      if (!drop) kept.push_back(std::move(p));
    }
    std::sort(E.begin(), E.end(), pair_less);
    std::vector<Pair> merged;
    merged.reserve(kept.size() + E.size());
    std::merge(std::make_move_iterator(kept.begin()), std::make_move_iterator(kept.end()),
               std::make_move_iterator(E.begin()), std::make_move_iterator(E.end()), std::back_inserter(merged),
               pair_less);
    pairs = std::move(merged);
    for (std::size_t i = 0; i < polys.size(); ++i) {
      if (active[i] && i != h && polys[i][0].comp == lh.comp && lh.m.divides(polys[i][0].m)) {
        active[i] = false;
        table.remove(i);
      }
    }
    active[h] = true;
    table.add(polys[h], h);
  };

  auto add = [&](EPoly p, int s) -> bool {
    make_primitive(p);
    if (const std::size_t limit = spec.options.coefficient_bit_limit; limit != 0)
      for (const auto& t : p)
        if (mpz_sizeinbase(t.c.get_mpz_t(), 2) > limit)
          throw ResourceExhausted("Groebner basis coefficient limit exceeded (" + std::to_string(limit) + " bits)");
    polys.push_back(std::move(p));
    sugar.push_back(s);
    active.push_back(false);
    std::size_t h = polys.size() - 1;
    update(h);
    return !spec.module && polys[h][0].m.is_one();
  };

  // Seed with the inputs, smallest leading term first.
  for (auto& f : input) normalize(f, order);
  std::erase_if(input, [](const EPoly& f) { return f.empty(); });
  std::sort(input.begin(), input.end(), [&](const EPoly& a, const EPoly& b) { return order.compare(a[0], b[0]) < 0; });
  bool unit = false;
  for (auto& f : input) {
    int s = poly_degree(f);
    EPoly r = reduce_with(std::move(f), polys, table, order);
    if (r.empty()) continue;
    if (add(std::move(r), s)) {
      unit = true;
      break;
    }
  }

  while (!unit && !pairs.empty()) {
    Pair p = std::move(pairs.back());
    pairs.pop_back();
    if (++work > spec.options.work_limit)
      throw ResourceExhausted("Groebner basis work limit exceeded (" + std::to_string(spec.options.work_limit) +
                              " S-pair reductions)");
    const EPoly& f = polys[p.i];
    const EPoly& g = polys[p.j];
    Integer d = gcd(f[0].c, g[0].c);
    EPoly s = combine(f, 1, Integer(g[0].c / d), p.lcm / f[0].m, g, 1, Integer(-(f[0].c / d)), p.lcm / g[0].m, order);
    EPoly r = reduce_with(std::move(s), polys, table, order);
    if (r.empty()) continue;
    if (add(std::move(r), p.sugar)) unit = true;
  }

  std::vector<EPoly> result;
  if (unit) {
    result.push_back(EPoly{ETerm{Monomial{}, 0, Integer(1)}});
    return result;
  }
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (!active[i]) continue;
    EPoly tail = reduce_with(polys[i], polys, table, order, i);
    make_primitive(tail);
    result.push_back(std::move(tail));
  }
  std::sort(result.begin(), result.end(), [&](const EPoly& a, const EPoly& b) { return order.compare(a[0], b[0]) < 0; });
  return result;
}

}  // namespace aluffi::detail
