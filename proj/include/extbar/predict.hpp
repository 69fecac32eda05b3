#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "extbar/algebra.hpp"
#include "extbar/homology.hpp"

namespace extbar {

enum class Functor { S, Lambda, Gamma };

std::string to_string(Functor f);
Functor parse_functor(const std::string& text);
// Kuhn dual: S <-> Gamma, Lambda fixed.
Functor sharp(Functor f);
// (X, Y) -> (Y#, X#).
std::pair<Functor, Functor> duality_flip(Functor x, Functor y);
// Sign parameter of the commutativity of E(X, Y): Lambda contributes 1.
int commutativity_epsilon(Functor f);

struct GeneratorFamily {
  Flavor flavor = Flavor::Gamma;
  int cohom_degree = 0;
  long weight = 1;
  int twist = 0;
  int multiplicity = 1;

  friend bool operator==(const GeneratorFamily& a, const GeneratorFamily& b) {
    return a.flavor == b.flavor && a.cohom_degree == b.cohom_degree && a.weight == b.weight && a.twist == b.twist &&
           a.multiplicity == b.multiplicity;
  }
};

struct PredictFactor {
  Flavor flavor = Flavor::Gamma;
  std::vector<GeneratorFamily> generators;
  bool weight_twisted = false;
};

// Tensor product of free algebras. junction_eps[i] is the sign parameter of
// the tensor product joining factor i+1 to the product of factors 0..i.
// Generator lists are complete for all weights <= max_weight.
struct FreeAlgebraSpec {
  long p = 0;
  int max_weight = 0;
  std::vector<PredictFactor> factors;
  std::vector<int> junction_eps;

  std::vector<GeneratorFamily> all_generators() const;
};

// Dimensions keyed by (homological degree, weight); cohomological degree c
// is stored as -c. Zero entries omitted.
using PoincareTable = std::map<Bidegree, long>;

std::vector<GeneratorFamily> cartan_field_generators(long p, int n, int max_weight, int m = 1);
FreeAlgebraSpec cartan_field_spec(long p, int n, int max_weight, int m = 1);

PoincareTable poincare_dims(const FreeAlgebraSpec& spec, int max_weight);
PoincareTable poincare_dims(const FreeAlgebraSpec& spec);

// Explicit algebra over F_p realizing the spec up to its weight cap.
AlgebraPtr realize(const FreeAlgebraSpec& spec, const Ring& ring);

FreeAlgebraSpec ext_field_predict(Functor x, Functor y, long p, int max_weight, int m = 1);
FreeAlgebraSpec twist_shift(const FreeAlgebraSpec& spec, int t, Functor y);
FreeAlgebraSpec parametrize_by_Es(const FreeAlgebraSpec& spec, int s);
// Generators of E(X^(t+s), Y^(s)) over F_p with weight <= max_weight.
FreeAlgebraSpec ext_twisted_predict(Functor x, Functor y, long p, int s, int t, int max_weight, int m = 1);
// twist_shift followed by parametrize_by_Es applied to the untwisted answer.
FreeAlgebraSpec ext_twisted_composite(Functor x, Functor y, long p, int s, int t, int max_weight, int m = 1);

// Integral Ext between S and Y in {Lambda, Gamma} on Z^m, keyed by
// (-cohomological degree, weight).
HomologyGroup ext_integral_predict(Functor y, int m, int max_weight);

// Bar-homology table regraded to Ext: a class at (j, d) of the n-th bar
// construction moves to cohomological degree (n+2)d - j.
HomologyGroup regrade_bar_to_ext(const HomologyGroup& h, int n);

std::string describe(const FreeAlgebraSpec& spec);

}  // namespace extbar
