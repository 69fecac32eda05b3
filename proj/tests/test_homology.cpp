#include <doctest.h>

#include "extbar/bar.hpp"
#include "extbar/homology.hpp"

using namespace extbar;

namespace {

AbelianGroup cyclic(long n) { return AbelianGroup{0, {BigInt(n)}}; }
AbelianGroup free_group(long r) { return AbelianGroup{r, {}}; }

HomologyGroup single(Bidegree b, AbelianGroup g) {
  HomologyGroup h;
  h.add(b, g);
  return h;
}

AlgebraPtr gamma2(Ring ring, int m = 1) { return make_free_algebra(Flavor::Gamma, {{2, 1, m}}, ring); }

}  // namespace

TEST_SUITE("homology") {
  TEST_CASE("integral homology of bar constructions") {
    const Ring z = Ring::integers();
    CHECK(homology(*bar(gamma2(z)), 4).weight_slice(4) ==
          std::map<int, AbelianGroup>{{9, cyclic(2)}, {10, cyclic(3)}, {11, cyclic(2)}});
    CHECK(homology(*iterate_bar(gamma2(z), 2), 4).weight_slice(4) ==
          std::map<int, AbelianGroup>{
              {10, cyclic(2)}, {12, cyclic(12)}, {13, cyclic(2)}, {14, cyclic(2)}, {16, free_group(1)}});
    CHECK(homology(*bar(gamma2(z)), 2).weight_slice(2) == std::map<int, AbelianGroup>{{5, cyclic(2)}});
  }

  TEST_CASE("homology over F_p in weight 1 and 2") {
    for (long p : {2L, 3L, 5L}) {
      auto h1 = homology(*bar(gamma2(Ring::prime_field(p))), 1).weight_slice(1);
      CHECK(h1 == std::map<int, AbelianGroup>{{3, free_group(1)}});
    }
    CHECK(homology(*bar(gamma2(Ring::prime_field(2))), 2).weight_slice(2) ==
          std::map<int, AbelianGroup>{{5, free_group(1)}, {6, free_group(1)}});
    CHECK(homology(*bar(gamma2(Ring::prime_field(3))), 2).weight_slice(2).empty());
  }

  TEST_CASE("Euler characteristic of slices equals that of homology") {
    for (long p : {0L, 2L, 3L}) {
      const Ring ring = p ? Ring::prime_field(p) : Ring::integers();
      for (int n = 1; n <= 2; ++n) {
        AlgebraPtr b = iterate_bar(gamma2(ring, 2), n);
        for (int w = 0; w <= 3; ++w) {
          long chi_chain = 0, chi_h = 0;
          for (const auto& [deg, basis] : b->basis_by_degree(w)) chi_chain += (deg % 2 ? -1 : 1) * static_cast<long>(basis.size());
          for (const auto& [deg, g] : homology(*b, w).weight_slice(w)) chi_h += (deg % 2 ? -1 : 1) * g.free_rank;
          CHECK(chi_chain == chi_h);
        }
      }
    }
  }

  TEST_CASE("nonzero square of the differential is reported") {
    // A deliberately broken differential: d u = v, d w = u on a Lambda/Gamma mix.
    std::vector<Generator> gens{{Flavor::Lambda, 3, 1}, {Flavor::Gamma, 4, 1}, {Flavor::Lambda, 5, 1}};
    FreeAlgebra::Differential d{{}, {{0, BigInt(1)}}, {{1, BigInt(1)}}};
    auto a = std::make_shared<FreeAlgebra>(Ring::integers(), gens, d);
    CHECK_THROWS_AS(build_slice(*a, 1), InternalAssertion);
  }

  TEST_CASE("Kunneth formula") {
    HomologyGroup unit = single({0, 0}, free_group(1));
    HomologyGroup h = single({0, 0}, free_group(1));
    h.add({5, 2}, cyclic(2));
    CHECK(kunneth(unit, h) == h);
    HomologyGroup a = single({5, 2}, cyclic(2)), b = single({5, 2}, cyclic(3));
    CHECK(kunneth(a, b).groups.empty());
    HomologyGroup c = single({1, 1}, cyclic(2)), d = single({2, 1}, cyclic(4));
    HomologyGroup expected = single({3, 2}, cyclic(2));
    expected.add({4, 2}, cyclic(2));
    CHECK(kunneth(c, d) == expected);
    CHECK(kunneth(c, d, 1).groups.empty());
  }

  TEST_CASE("p-primary parts") {
    HomologyGroup h = single({0, 0}, free_group(1));
    h.add({3, 1}, cyclic(6));
    HomologyGroup e2 = single({0, 0}, free_group(1));
    e2.add({3, 1}, cyclic(2));
    CHECK(p_primary_unitalize(h, 2) == e2);
    HomologyGroup f = single({0, 0}, free_group(1));
    f.add({2, 1}, free_group(3));
    CHECK(p_primary_unitalize(f, 2) == single({0, 0}, free_group(1)));
    HomologyGroup t = single({0, 0}, free_group(1));
    t.add({12, 4}, cyclic(12));
    HomologyGroup e3 = single({0, 0}, free_group(1));
    e3.add({12, 4}, cyclic(3));
    CHECK(p_primary_unitalize(t, 3) == e3);
  }

  TEST_CASE("universal coefficients") {
    for (long p : {2L, 3L, 5L})
      for (int n = 1; n <= 2; ++n) {
        const int w = n == 1 ? 6 : 4;
        auto hz = homology_up_to(*iterate_bar(gamma2(Ring::integers()), n), w);
        auto hp = homology_up_to(*iterate_bar(gamma2(Ring::prime_field(p)), n), w);
        CHECK_FALSE(first_difference(reduce_mod_p(hz, p).truncated(w), hp));
      }
  }

  TEST_CASE("homology ring of the bar construction over F_2") {
    auto ring = homology_ring_over_Fp(bar(gamma2(Ring::prime_field(2))), 4);
    // Unit acts as the identity.
    const Bidegree one{0, 0}, x{3, 1};
    REQUIRE(ring.dimension(one) == 1);
    REQUIRE(ring.dimension(x) == 1);
    CHECK(ring.product(one, 0, x, 0) == ModVector{1});
    // Generators at (3,1), (5,2), (9,4): divided powers, so x^2 = 0 and
    // (class at 5,2)^2 = 0 while x * y is nonzero.
    CHECK(ring.product(x, 0, x, 0) == ModVector(ring.dimension({6, 2}), 0));
    CHECK(ring.multiplication_rank(x, {5, 2}) == 1);
    CHECK(ring.multiplication_rank({5, 2}, {5, 2}) == 0);
    CHECK_THROWS_AS(ring.product({9, 4}, 0, x, 0), std::out_of_range);
  }

  TEST_CASE("homology ring of Gamma over F_3 matches divided powers") {
    auto ring = homology_ring_over_Fp(make_free_algebra(Flavor::Gamma, {{2, 1, 1}}, Ring::prime_field(3)), 4);
    // gamma_1 gamma_1 = 2 gamma_2, gamma_1 gamma_2 = 3 gamma_3 = 0.
    CHECK(ring.product({2, 1}, 0, {2, 1}, 0) == ModVector{2});
    CHECK(ring.product({2, 1}, 0, {4, 2}, 0) == ModVector{0});
    CHECK(ring.product({2, 1}, 0, {6, 3}, 0) == ModVector{1});
  }
}
