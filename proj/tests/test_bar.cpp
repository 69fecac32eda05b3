#include <doctest.h>

#include "extbar/bar.hpp"
#include "extbar/homology.hpp"

using namespace extbar;

namespace {

AlgebraPtr gamma2(int m = 1, Ring ring = Ring::integers()) { return make_free_algebra(Flavor::Gamma, {{2, 1, m}}, ring); }

long total_dimension(const WdgAlgebra& a, int w) { return static_cast<long>(a.basis_in_weight(w).size()); }

}  // namespace

TEST_SUITE("bar") {
  TEST_CASE("basis of the bar construction in weight 4") {
    auto b = bar(gamma2());
    std::map<int, std::size_t> sizes;
    for (const auto& [deg, basis] : b->basis_by_degree(4)) sizes[deg] = basis.size();
    CHECK(sizes == std::map<int, std::size_t>{{9, 1}, {10, 3}, {11, 3}, {12, 1}});
  }

  TEST_CASE("shuffle product of two letters") {
    AlgebraPtr g = gamma2();
    auto b = bar(g);
    const auto& f = dynamic_cast<const FreeAlgebra&>(*g);
    const Monomial x = f.generator_monomial(0), x2 = f.generator_monomial(0, 2);
    const Monomial a = BarAlgebra::word({x}), c = BarAlgebra::word({x2});
    // (|a|+1)(|b|+1) = 3 * 5 is odd.
    Element expected;
    expected.add(BarAlgebra::word({x, x2}), 1, g->ring());
    expected.add(BarAlgebra::word({x2, x}), -1, g->ring());
    CHECK(b->mul(a, c) == expected);
    CHECK(b->mul(a, a).is_zero());
  }

  TEST_CASE("bar differential of [x|x]") {
    AlgebraPtr g = gamma2();
    auto b = bar(g);
    const auto& f = dynamic_cast<const FreeAlgebra&>(*g);
    const Element d = b->diff(BarAlgebra::word({f.generator_monomial(0), f.generator_monomial(0)}));
    REQUIRE(d.size() == 1);
    CHECK(d.terms().begin()->first == BarAlgebra::word({f.generator_monomial(0, 2)}));
    CHECK(abs(d.terms().begin()->second) == 2);
  }

  TEST_CASE("iterated bar constructions") {
    AlgebraPtr g = gamma2();
    AlgebraPtr b0 = iterate_bar(g, 0);
    CHECK(b0 == g);
    CHECK(total_dimension(*iterate_bar(g, 2), 4) == 27);
    for (int n = 1; n <= 3; ++n) {
      auto basis = iterate_bar(g, n)->basis_in_weight(1);
      REQUIRE(basis.size() == 1);
      CHECK(iterate_bar(g, n)->bidegree(basis[0]) == Bidegree{n + 2, 1});
    }
  }

  TEST_CASE("bar algebras satisfy the dg axioms") {
    for (int m = 1; m <= 2; ++m) {
      auto b = bar(gamma2(m));
      const int w = m == 1 ? 5 : 4;
      CHECK(check_differential_squares_to_zero(*b, w).holds);
      CHECK(check_leibniz(*b, w).holds);
      CHECK(check_associative(*b, w).holds);
      CHECK(check_one_eps_commutative(*b, 0, w).holds);
    }
    AlgebraPtr b2 = iterate_bar(gamma2(), 2);
    CHECK(check_differential_squares_to_zero(*b2, 4).holds);
    CHECK(check_leibniz(*b2, 3).holds);
    CHECK(check_one_eps_commutative(*b2, 0, 3).holds);
    // Bar construction of an exterior algebra in odd degree.
    auto bl = bar(make_free_algebra(Flavor::Lambda, {{3, 1, 2}}, Ring::integers()));
    CHECK(check_differential_squares_to_zero(*bl, 4).holds);
    CHECK(check_leibniz(*bl, 4).holds);
  }

  TEST_CASE("suspension of cycles") {
    AlgebraPtr g = gamma2();
    auto b = bar(g);
    const auto& f = dynamic_cast<const FreeAlgebra&>(*g);
    const Element s = suspension_chain(*b, Element::monomial(f.generator_monomial(0)));
    CHECK(s == Element::monomial(BarAlgebra::word({f.generator_monomial(0)})));
    CHECK(b->bidegree(s.terms().begin()->first) == Bidegree{3, 1});
    // Cycles of the bar construction suspend to cycles of the double bar.
    auto bb = bar(b);
    for (int w = 1; w <= 4; ++w)
      for (const auto& x : b->basis_in_weight(w)) {
        if (!b->diff(x).is_zero()) continue;
        const Element sx = suspension_chain(*bb, Element::monomial(x));
        CHECK(bb->diff(sx).is_zero());
        CHECK(bb->bidegree(sx.terms().begin()->first) == Bidegree{b->bidegree(x).degree + 1, w});
      }
    CHECK_THROWS(suspension_chain(*b, Element::monomial(g->unit())));
  }
}
