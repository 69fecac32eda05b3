#include <doctest.h>

#include "extbar/algebra.hpp"

using namespace extbar;

namespace {

const FreeAlgebra& as_free(const AlgebraPtr& a) { return dynamic_cast<const FreeAlgebra&>(*a); }

Monomial pair(const Monomial& a, const Monomial& b) { return Monomial{{}, {a, b}}; }

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("divided power algebra of rank one") {
    AlgebraPtr g = make_free_algebra(Flavor::Gamma, {{2, 1, 1}}, Ring::integers());
    for (int d = 0; d <= 6; ++d) {
      const auto basis = g->basis_in_weight(d);
      REQUIRE(basis.size() == 1);
      CHECK(g->bidegree(basis[0]) == Bidegree{2 * d, d});
    }
    const auto& f = as_free(g);
    const Element sq = g->mul(f.generator_monomial(0), f.generator_monomial(0));
    CHECK(sq == Element::monomial(f.generator_monomial(0, 2), 2));
    // gamma_a gamma_b = binom(a+b, a) gamma_{a+b}
    for (int a = 0; a <= 5; ++a)
      for (int b = 0; b <= 5; ++b)
        CHECK(g->mul(f.generator_monomial(0, a), f.generator_monomial(0, b)) ==
              Element::monomial(f.generator_monomial(0, a + b), binomial(a + b, a)));
  }

  TEST_CASE("exterior basis sizes are binomial") {
    AlgebraPtr l = make_free_algebra(Flavor::Lambda, {{3, 1, 2}}, Ring::integers());
    const auto dims = slice_dimensions(*l, 4);
    CHECK(dims.at({0, 0}) == 1);
    CHECK(dims.at({3, 1}) == 2);
    CHECK(dims.at({6, 2}) == 1);
    CHECK(dims.count({9, 3}) == 0);
    const auto& f = as_free(l);
    CHECK(l->mul(f.generator_monomial(0), f.generator_monomial(0)).is_zero());
    CHECK(l->mul(f.generator_monomial(0), f.generator_monomial(1)).coefficient(
              l->mul(f.generator_monomial(1), f.generator_monomial(0)).terms().begin()->first) == 1);
  }

  TEST_CASE("symmetric algebra adds exponents") {
    AlgebraPtr s = make_free_algebra(Flavor::Sym, {{2, 1, 1}}, Ring::integers());
    const auto& f = as_free(s);
    CHECK(s->mul(f.generator_monomial(0, 2), f.generator_monomial(0, 3)) ==
          Element::monomial(f.generator_monomial(0, 5)));
  }

  TEST_CASE("commutativity checks") {
    const Ring z = Ring::integers();
    AlgebraPtr g = make_free_algebra(Flavor::Gamma, {{2, 1, 1}}, z);
    CHECK(check_one_eps_commutative(*g, 0, 4).holds);
    // Exterior letters anticommute. In odd degree that is ordinary graded
    // commutativity; in even degree and odd weight it is the weight sign.
    AlgebraPtr l1 = make_free_algebra(Flavor::Lambda, {{1, 1, 2}}, z);
    CHECK(check_one_eps_commutative(*l1, 0, 4).holds);
    const StructureCheck l1_eps = check_one_eps_commutative(*l1, 1, 4);
    CHECK_FALSE(l1_eps.holds);
    AlgebraPtr l0 = make_free_algebra(Flavor::Lambda, {{0, 1, 2}}, z);
    CHECK(check_one_eps_commutative(*l0, 1, 4).holds);
    const StructureCheck l0_plain = check_one_eps_commutative(*l0, 0, 4);
    CHECK_FALSE(l0_plain.holds);
    REQUIRE(l0_plain.witness);
    CHECK(l0_plain.witness->first != l0_plain.witness->second);
  }

  TEST_CASE("regrading") {
    const Ring z = Ring::integers();
    AlgebraPtr g = make_free_algebra(Flavor::Gamma, {{2, 1, 1}}, z);
    AlgebraPtr r = regrade(g, 2);
    for (int d = 0; d <= 4; ++d) CHECK(r->basis({0, d}).size() == 1);
    AlgebraPtr a = tensor_signed(g, make_free_algebra(Flavor::Lambda, {{3, 1, 2}}, z), 0);
    for (int alpha : {-3, 1, 2, 5}) {
      const auto dims = slice_dimensions(*a, 3);
      const auto rd = slice_dimensions(*regrade(a, alpha), 3);
      CHECK(rd.size() == dims.size());
      for (const auto& [b, c] : dims) CHECK(rd.at({b.degree - alpha * b.weight, b.weight}) == c);
    }
  }

  TEST_CASE("weight twist signs") {
    const Ring z = Ring::integers();
    AlgebraPtr g = make_free_algebra(Flavor::Gamma, {{2, 1, 1}}, z);
    AlgebraPtr t = weight_twist(g);
    const auto& f = as_free(g);
    const Monomial x = f.generator_monomial(0), x2 = f.generator_monomial(0, 2);
    CHECK(t->mul(x, x) == Element::monomial(x2, -2));
    CHECK(t->mul(x2, x) == g->mul(x2, x));
    AlgebraPtr tt = weight_twist(t);
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b)
        CHECK(tt->mul(f.generator_monomial(0, a), f.generator_monomial(0, b)) ==
              g->mul(f.generator_monomial(0, a), f.generator_monomial(0, b)));
  }

  TEST_CASE("signed tensor product") {
    const Ring z = Ring::integers();
    AlgebraPtr a = make_free_algebra(Flavor::Lambda, {{0, 1, 1}}, z);
    AlgebraPtr b = make_free_algebra(Flavor::Lambda, {{0, 1, 1}}, z);
    AlgebraPtr t1 = tensor_signed(a, b, 1);
    AlgebraPtr t0 = tensor_signed(a, b, 0);
    const auto& fa = as_free(a);
    const Monomial one = fa.unit(), v = fa.generator_monomial(0);
    // (1 (x) v)(v (x) 1): |a'| = |b| = 0, w(a') = w(b) = 1.
    CHECK(t1->mul(pair(one, v), pair(v, one)) == Element::monomial(pair(v, v), -1));
    CHECK(t0->mul(pair(one, v), pair(v, one)) == Element::monomial(pair(v, v), 1));
    CHECK(check_one_eps_commutative(*t1, 1, 4).holds);
    CHECK_FALSE(check_one_eps_commutative(*t0, 1, 4).holds);
    // Dimensions convolve.
    AlgebraPtr g = make_free_algebra(Flavor::Gamma, {{2, 1, 1}}, z);
    AlgebraPtr l = make_free_algebra(Flavor::Lambda, {{3, 1, 2}}, z);
    const auto dg = slice_dimensions(*g, 4), dl = slice_dimensions(*l, 4), dt = slice_dimensions(*tensor_signed(g, l, 1), 4);
    std::map<Bidegree, long> conv;
    for (const auto& [x, cx] : dg)
      for (const auto& [y, cy] : dl)
        if (x.weight + y.weight <= 4) conv[x + y] += cx * cy;
    CHECK(conv == dt);
  }

  TEST_CASE("free algebras with differential satisfy the dg axioms") {
    const Ring z = Ring::integers();
    // Gamma on u (degree 4) and Lambda on v (degree 3), d u = 2 v.
    std::vector<Generator> gens{{Flavor::Lambda, 3, 1}, {Flavor::Gamma, 4, 1}};
    FreeAlgebra::Differential d{{}, {{0, BigInt(2)}}};
    auto k = std::make_shared<FreeAlgebra>(z, gens, d);
    CHECK(check_differential_squares_to_zero(*k, 5).holds);
    CHECK(check_leibniz(*k, 5).holds);
    CHECK(check_associative(*k, 5).holds);
    std::vector<Generator> bad{{Flavor::Lambda, 3, 1}, {Flavor::Gamma, 5, 1}};
    CHECK_THROWS(FreeAlgebra(z, bad, d));
  }
}
