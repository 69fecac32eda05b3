#pragma once

#include <map>
#include <vector>

#include "extbar/algebra.hpp"
#include "extbar/homology.hpp"

namespace extbar {

// Koszul: odd generator v of degree `degree`, partner u of degree+1, d(u) = h v.
// DeRham: even generator x of degree `degree`, partner y of degree+1, d(y) = h x.
// Both partners carry the generator's weight.
enum class KoszulVariant { Koszul, DeRham };

struct KoszulGenerator {
  int degree = 1;
  int weight = 1;
  int multiplicity = 1;
  KoszulVariant variant = KoszulVariant::Koszul;
};

struct KoszulSpec {
  long h = 1;
  std::vector<KoszulGenerator> generators;
};

AlgebraPtr build_koszul(const KoszulSpec& spec, const Ring& ring);

// Homology over Z of the complex on one rank-1 generator of the given
// degree (odd: Koszul, even: De Rham) and weight, up to weight_max.
HomologyGroup koszul_homology_closed_form(int degree, long h, int weight_max, int weight = 1);

// Dimensions over F_p of the cycles of the Koszul complex on W (odd degrees),
// positive degrees plus the unit line. Keys are (degree, weight).
std::map<Bidegree, long> koszul_kernels_dims(const std::vector<GeneratorSpec>& w, long p, int weight_max);

// Generators of X_p for words of the given height: Koszul over odd-degree
// p-pairs, De Rham over even-degree p-pairs, pairs of weight <= weight_max.
std::vector<KoszulGenerator> xp_generators(long p, int height, int weight_max, int m);
AlgebraPtr build_Xp(long p, int height, int weight_max, int m);

// Homology of X_0: exterior algebra on Z^m in degree `height` if height is
// odd, divided powers otherwise; generators of weight 1.
HomologyGroup x0_homology(int height, int m, int weight_max);
// p-primary unitalized homology of X_p assembled from closed forms.
HomologyGroup xp_homology(long p, int height, int m, int weight_max);
// Predicted integral homology of the n-th iterated bar construction of
// divided powers on Z^m in degree 2.
HomologyGroup integral_bar_homology_predict(int n, int m, int weight_max);

}  // namespace extbar
