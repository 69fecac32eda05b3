#include "extbar/koszul.hpp"

#include "extbar/words.hpp"

namespace extbar {

AlgebraPtr build_koszul(const KoszulSpec& spec, const Ring& ring) {
  std::vector<Generator> gens;
  FreeAlgebra::Differential d;
  for (const auto& g : spec.generators) {
    const bool odd = (g.degree % 2 + 2) % 2 == 1;
    if ((g.variant == KoszulVariant::Koszul) != odd)
      throw std::invalid_argument("Koszul generators need odd degree, De Rham generators even degree");
    for (int c = 0; c < g.multiplicity; ++c) {
      const int base = static_cast<int>(gens.size());
      if (g.variant == KoszulVariant::Koszul) {
        gens.push_back({Flavor::Lambda, g.degree, g.weight});
        gens.push_back({Flavor::Gamma, g.degree + 1, g.weight});
        d.push_back({});
        d.push_back({{base, BigInt(spec.h)}});
      } else {
        gens.push_back({Flavor::Gamma, g.degree, g.weight});
        gens.push_back({Flavor::Lambda, g.degree + 1, g.weight});
        d.push_back({});
        d.push_back({{base, BigInt(spec.h)}});
      }
    }
  }
  return std::make_shared<FreeAlgebra>(ring, std::move(gens), std::move(d));
}

HomologyGroup koszul_homology_closed_form(int degree, long h, int weight_max, int weight) {
  HomologyGroup out;
  out.add({0, 0}, AbelianGroup{1, {}});
  const bool odd = (degree % 2 + 2) % 2 == 1;
  for (int d = 1; d * weight <= weight_max; ++d) {
    AbelianGroup g;
    if (odd) {
      g.torsion = normalize_cyclic_orders({BigInt(h)});
      out.add({d * (degree + 1) - 1, d * weight}, g);
    } else {
      g.torsion = normalize_cyclic_orders({BigInt(h) * d});
      out.add({d * degree, d * weight}, g);
    }
  }
  return out;
}

std::map<Bidegree, long> koszul_kernels_dims(const std::vector<GeneratorSpec>& w, long p, int weight_max) {
  KoszulSpec spec{1, {}};
  for (const auto& g : w) {
    if (g.degree <= 0 || g.degree % 2 == 0) throw std::invalid_argument("Koszul kernels need positive odd degrees");
    spec.generators.push_back({g.degree, g.weight, g.multiplicity, KoszulVariant::Koszul});
  }
  AlgebraPtr k = build_koszul(spec, Ring::prime_field(p));
  std::map<Bidegree, long> out;
  out[{0, 0}] = 1;
  for (int wt = 1; wt <= weight_max; ++wt) {
    ComplexSlice s = build_slice(*k, wt);
    for (const auto& [deg, basis] : s.bases) {
      if (deg <= 0) continue;
      const long cycles = static_cast<long>(basis.size() - rank_mod_p(s.boundary_from(deg), p));
      const long image = static_cast<long>(rank_mod_p(s.boundary_from(deg + 1), p));
      if (cycles != image) throw InternalAssertion("Koszul complex is not exact in positive degree");
      if (cycles > 0) out[{deg, wt}] = cycles;
    }
  }
  return out;
}

std::vector<KoszulGenerator> xp_generators(long p, int height, int weight_max, int m) {
  std::vector<KoszulGenerator> gens;
  // A word of height n and twisting t has degree at most 2 n p^t.
  const long bound = 2L * height * weight_max + 2;
  for (const auto& pr : enumerate_p_pairs(p, height, bound)) {
    if (pr.weight > weight_max) continue;
    const int deg = static_cast<int>(pr.degree);
    gens.push_back({deg, static_cast<int>(pr.weight), m, deg % 2 ? KoszulVariant::Koszul : KoszulVariant::DeRham});
  }
  return gens;
}

AlgebraPtr build_Xp(long p, int height, int weight_max, int m) {
  return build_koszul(KoszulSpec{p, xp_generators(p, height, weight_max, m)}, Ring::integers());
}

HomologyGroup x0_homology(int height, int m, int weight_max) {
  HomologyGroup out;
  for (int d = 0; d <= weight_max; ++d) {
    BigInt rank = height % 2 ? binomial(m, d) : binomial(m + d - 1, d);
    if (d == 0) rank = 1;
    out.add({height * d, d}, AbelianGroup{rank.get_si(), {}});
  }
  return out;
}

HomologyGroup xp_homology(long p, int height, int m, int weight_max) {
  HomologyGroup h;
  h.add({0, 0}, AbelianGroup{1, {}});
  for (const auto& g : xp_generators(p, height, weight_max, m))
    for (int c = 0; c < g.multiplicity; ++c)
      h = kunneth(h, koszul_homology_closed_form(g.degree, p, weight_max, g.weight), weight_max);
  return p_primary_unitalize(h, p);
}

HomologyGroup integral_bar_homology_predict(int n, int m, int weight_max) {
  const int height = n + 2;
  HomologyGroup h = x0_homology(height, m, weight_max);
  for (long p = 2; p <= weight_max; ++p)
    if (is_prime(p)) h = kunneth(h, xp_homology(p, height, m, weight_max), weight_max);
  return h;
}

}  // namespace extbar
