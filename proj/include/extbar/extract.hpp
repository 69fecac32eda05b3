#pragma once

#include <stdexcept>
#include <string>

#include "extbar/homology.hpp"
#include "extbar/predict.hpp"

namespace extbar {

// Raised for parameter combinations the engine does not answer.
class UnsupportedRequest : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Ext table of E(X^(t+s), Y^(s)). Keys use Bidegree with `degree` holding the
// cohomological degree (nonnegative) and `weight` the functor degree.
struct ExtTable {
  Functor source = Functor::S;
  Functor target = Functor::Lambda;
  int s = 0;
  int t = 0;
  int m = 1;
  int max_weight = 0;
  HomologyGroup groups;
};

enum class ExtMethod { Bar, Predict };

// Flips the sign of the degree: (-cohom, weight) <-> (cohom, weight).
HomologyGroup negate_degrees(const HomologyGroup& h);
HomologyGroup free_table(const PoincareTable& dims, const Ring& ring);

// E(S, Lambda) as the homology of ^t R_3 B(Gamma(k^m[2])) and E(S, Gamma) as
// the homology of R_4 B^2(Gamma(k^m[2])).
ExtTable ext_table_via_bar(Functor target, const Ring& ring, int max_weight, int m);

// Answers every (X, Y) pair. Over Z only untwisted tables are available.
ExtTable ext_table(Functor source, Functor target, const Ring& ring, int s, int t, int max_weight, int m,
                   ExtMethod method = ExtMethod::Bar);

// Dimension of Hom(X^d, Y^d) over F_p evaluated on F_p^m.
long hom_dimension(Functor source, Functor target, long p, int weight, int m = 1);

}  // namespace extbar
