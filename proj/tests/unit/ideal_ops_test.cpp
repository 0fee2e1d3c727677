#include <random>

#include <gtest/gtest.h>

#include "aluffi/errors.hpp"
#include "aluffi/gradient_family.hpp"
#include "aluffi/groebner.hpp"
#include "aluffi/ideal_ops.hpp"
#include "monomial_oracle.hpp"
#include "test_util.hpp"

namespace aluffi {
namespace {

using test::Id;
using test::P;
using test::Ps;
using test::xyz;

TEST(SumProductPower, Examples) {
  auto R = xyz();
  EXPECT_TRUE(ideal_equal(ideal_product(Id(R, "x"), Id(R, "y")), Id(R, "x*y")));
  EXPECT_TRUE(ideal_equal(ideal_power(Id(R, "x, y"), 2), Id(R, "x^2, x*y, y^2")));
  EXPECT_TRUE(ideal_equal(ideal_sum(Id(R, "x"), Id(R, "y")), Id(R, "x, y")));
  EXPECT_TRUE(ideal_power(Id(R, "x, y"), 0).groebner().is_unit());
}

TEST(SumProductPower, FourPointsSquareHasFifteenProducts) {
  auto R = xyz();
  auto I = Id(R, "x^2 - x*z, y^2 - y*z, x*(2*y - z), y*(2*x - z), (2*x - z)*(2*y - z)");
  EXPECT_EQ(ideal_power(I, 2).size(), 15u);
}

TEST(Intersect, Examples) {
  auto R = xyz();
  EXPECT_TRUE(ideal_equal(intersect(Id(R, "x"), Id(R, "y")), Id(R, "x*y")));
  EXPECT_TRUE(ideal_equal(intersect(Id(R, "x^2"), Id(R, "x")), Id(R, "x^2")));
  auto J = Id(R, "x^2 - x*z, y^2 - y*z");
  auto I = Id(R, "x^2 - x*z, y^2 - y*z, x*(2*y - z), y*(2*x - z), (2*x - z)*(2*y - z)");
  auto JI2 = intersect(J, ideal_power(I, 2));
  EXPECT_TRUE(ideal_member(P(R, "x*z^2*(x - z)"), JI2));
  EXPECT_TRUE(ideal_member(P(R, "y*z^2*(y - z)"), JI2));
  for (const auto& g : JI2.gens()) {
    EXPECT_TRUE(ideal_member(g, J));
    EXPECT_TRUE(ideal_member(g, ideal_power(I, 2)));
  }
}

TEST(Quotient, Examples) {
  auto R = xyz();
  EXPECT_TRUE(ideal_equal(quotient(Id(R, "x*y"), Id(R, "x")), Id(R, "y")));
  EXPECT_TRUE(ideal_equal(quotient(Id(R, "x^2, x*y"), Id(R, "x")), Id(R, "x, y")));
  auto I = Id(R, "x^3 - y*z, x*y");
  EXPECT_TRUE(ideal_equal(quotient(I, Ideal::unit(R)), I));
  EXPECT_THROW(quotient(I, Ideal(R)), DomainError);
}

TEST(Saturate, Examples) {
  auto R = xyz();
  auto s = saturate(Id(R, "x^2*y"), Id(R, "x"));
  EXPECT_TRUE(ideal_equal(s.ideal, Id(R, "y")));
  EXPECT_EQ(s.exponent, 2);
  EXPECT_THROW(saturate(Id(R, "x"), Ideal(R)), DomainError);
}

TEST(Saturate, MethodsAgree) {
  auto R = xyz();
  std::mt19937_64 rng(31);
  for (int k = 0; k < 20; ++k) {
    std::vector<Polynomial> gens{test::random_form(rng, R, 2, 3) * P(R, "x"), test::random_form(rng, R, 3, 3),
                                test::random_form(rng, R, 2, 2) * P(R, "x*y")};
    Ideal I(R, gens);
    for (auto J : {Id(R, "x"), Id(R, "x, y"), Id(R, "x + y")}) {
      auto a = saturate(I, J, SaturationMethod::Rabinowitsch);
      auto b = saturate(I, J, SaturationMethod::IteratedQuotient);
      ASSERT_TRUE(ideal_equal(a.ideal, b.ideal)) << I.to_string() << " : " << J.to_string();
      ASSERT_EQ(a.exponent, b.exponent);
    }
  }
}

TEST(Saturate, ChainProperties) {
  auto R = xyz();
  std::mt19937_64 rng(32);
  for (int k = 0; k < 20; ++k) {
    Ideal I(R, {test::random_form(rng, R, 3, 3) * P(R, "z"), test::random_form(rng, R, 2, 3) * P(R, "y^2"),
                test::random_form(rng, R, 3, 2)});
    auto J = Id(R, "y, z");
    auto q = quotient(I, J);
    auto s = saturate(I, J).ideal;
    ASSERT_TRUE(ideal_contains(q, I));
    ASSERT_TRUE(ideal_contains(s, q));
    ASSERT_TRUE(ideal_equal(quotient(s, J), s));
  }
}

TEST(Saturate, CatalogContractions) {
  for (auto [key, element] : {std::pair{"g", "u2^2"}, std::pair{"i", "u3"}}) {
    const auto* fam = find_fixture(key);
    auto F = catalog_polynomial(*fam);
    auto ring = F.ring();
    auto geom = ring->block_vars("geom");
    std::vector<Polynomial> grad;
    for (int v : geom) grad.push_back(partial_derivative(F, v));
    auto I1 = minors(syzygies(grad), 1);
    std::vector<Polynomial> m;
    for (int v : geom) m.push_back(Polynomial::variable(ring, v));
    auto sat = saturate(I1, Ideal(ring, m)).ideal;
    auto contraction = eliminate(sat, "geom");
    EXPECT_TRUE(ideal_member(P(ring, element), contraction)) << key;
    auto in_params = restrict_to_block(contraction, "param");
    auto d = dimension(in_params);
    ASSERT_FALSE(d.empty);
    EXPECT_EQ(d.codim, 1) << key;
  }
}

// Brute-force comparison on random monomial ideals.
TEST(MonomialOracle, IntersectQuotientSaturate) {
  using namespace oracle;
  std::mt19937_64 rng(33);
  std::uniform_int_distribution<int> nv(1, 3);
  for (int k = 0; k < 150; ++k) {
    int n = nv(rng);
    auto R = oracle_ring(n);
    auto I = random_monomial_ideal(rng, n, 8, 4), J = random_monomial_ideal(rng, n, 8, 3);
    auto LI = to_ideal(R, I), LJ = to_ideal(R, J);
    int box = std::max(max_exponent(I), max_exponent(J));
    ASSERT_EQ(compare(intersect(LI, LJ), [&](const Exp& m) { return in_intersection(I, J, m); }, box), "");
    ASSERT_EQ(compare(quotient(LI, LJ), [&](const Exp& m) { return in_quotient(I, J, m); }, box), "");
    ASSERT_EQ(compare(saturate(LI, LJ).ideal, [&](const Exp& m) { return in_saturation(I, J, m); }, box), "");
    ASSERT_EQ(compare(saturate(LI, LJ, SaturationMethod::IteratedQuotient).ideal,
                      [&](const Exp& m) { return in_saturation(I, J, m); }, box),
              "");
  }
}

TEST(Eliminate, Examples) {
  auto R = Ring::make({"x", "u", "v"});
  auto E = eliminate(Id(R, "x - u, x^2 - v"), std::vector<int>{0});
  EXPECT_TRUE(ideal_equal(E, Id(R, "u^2 - v")));
  EXPECT_TRUE(eliminate(Ideal(R), std::vector<int>{0}).is_zero());
}

TEST(Eliminate, MembersAreExactlyTheIdealsMembersWithoutTheBlock) {
  auto R = xyz();
  std::mt19937_64 rng(34);
  for (int k = 0; k < 15; ++k) {
    Ideal I(R, {test::random_polynomial(rng, R, 2, 3), test::random_polynomial(rng, R, 2, 3)});
    auto E = eliminate(I, std::vector<int>{0});
    for (const auto& g : E.gens()) {
      ASSERT_EQ(g.degree_of(0), 0);
      ASSERT_TRUE(ideal_member(g, I));
    }
    // Elements of I free of x are in E: check the x-free elements of a lex basis.
    auto G = buchberger(I, MonomialOrder::lex(3));
    for (const auto& g : G.elements())
      if (g.degree_of(0) == 0) ASSERT_TRUE(ideal_member(g.in_ring(R), E));
  }
}

TEST(Equality, Examples) {
  auto R = xyz();
  EXPECT_TRUE(ideal_equal(Id(R, "x, y"), Id(R, "x + y, x - y")));
  EXPECT_FALSE(ideal_equal(Id(R, "x^2"), Id(R, "x")));
}

TEST(Dimension, Examples) {
  auto R = xyz();
  auto d = dimension(Id(R, "x"));
  EXPECT_EQ(d.dim, 2);
  EXPECT_EQ(d.codim, 1);
  auto f = P(R, "x^2*y^2 + x^2*z^2 + y^2*z^2");
  std::vector<Polynomial> grad;
  for (int v = 0; v < 3; ++v) grad.push_back(partial_derivative(f, v));
  EXPECT_EQ(dimension(Ideal(R, grad)).codim, 2);
  auto unit = dimension(Ideal::unit(R));
  EXPECT_TRUE(unit.empty);
  EXPECT_FALSE(unit.dim.has_value());
  auto zero = dimension(Ideal(R));
  EXPECT_EQ(zero.dim, 3);
  EXPECT_EQ(zero.codim, 0);
}

TEST(Dimension, QuinticFamilyMinorsHaveCodimTwo) {
  auto R = parse_ring_header("ring: x,y,z | params: u");
  auto F = P(R, "y^4*z + x^5 + u*x^3*y^2");
  std::vector<Polynomial> grad;
  for (int v : R->block_vars("geom")) grad.push_back(partial_derivative(F, v));
  EXPECT_EQ(dimension(minors(syzygies(grad), 1)).codim, 2);
}

TEST(Dimension, OrderIndependent) {
  auto R = xyz();
  std::mt19937_64 rng(35);
  for (int k = 0; k < 30; ++k) {
    std::vector<Polynomial> gens{test::random_polynomial(rng, R, 3, 3), test::random_polynomial(rng, R, 2, 3)};
    auto a = dimension(Ideal(R, gens));
    auto lexR = R->with_order(MonomialOrder::lex(3));
    std::vector<Polynomial> lexgens;
    for (const auto& g : gens) lexgens.push_back(g.in_ring(lexR));
    auto b = dimension(Ideal(lexR, lexgens));
    ASSERT_EQ(a.empty, b.empty);
    ASSERT_EQ(a.dim, b.dim);
    if (!a.empty) ASSERT_EQ(*a.dim + *a.codim, 3);
  }
}

TEST(MinimalGenerators, Examples) {
  auto R = xyz();
  std::vector<int> w{1, 1, 1};
  auto g = minimal_homogeneous_generators(Id(R, "x^2, x^3"), w);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g[0].poly, P(R, "x^2"));
  EXPECT_EQ(g[0].degree, 2);
  EXPECT_THROW(minimal_homogeneous_generators(Id(R, "x^2 + y"), w), DomainError);
  auto h = minimal_homogeneous_generators(Id(R, "x*y, x*z, x*y + x*z, x^2*y"), w);
  EXPECT_EQ(h.size(), 2u);
}

TEST(Helpers, ExactDivisionAndGcd) {
  auto R = xyz();
  EXPECT_EQ(exact_divide(P(R, "x^2 - y^2"), P(R, "x - y")), P(R, "x + y"));
  EXPECT_FALSE(exact_divide(P(R, "x^2 + y^2"), P(R, "x - y")).has_value());
  EXPECT_EQ(polynomial_gcd(P(R, "x^2*y - y^3"), P(R, "x*z + y*z")), P(R, "x + y"));
}

}  // namespace
}  // namespace aluffi
