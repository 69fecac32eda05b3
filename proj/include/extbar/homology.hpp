#pragma once

#include <map>
#include <string>
#include <vector>

#include "extbar/algebra.hpp"
#include "extbar/linalg.hpp"

namespace extbar {

// Z^free_rank plus cyclic summands Z/d_1 + Z/d_2 + ... with d_1 | d_2 | ...
// Over a field only free_rank (the dimension) is used.
struct AbelianGroup {
  long free_rank = 0;
  std::vector<BigInt> torsion;

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;
  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
  friend bool operator!=(const AbelianGroup& a, const AbelianGroup& b) { return !(a == b); }
};

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);
AbelianGroup tensor(const AbelianGroup& a, const AbelianGroup& b);
AbelianGroup tor(const AbelianGroup& a, const AbelianGroup& b);

// Bigraded group; zero entries are never stored.
struct HomologyGroup {
  Ring ring = Ring::integers();
  std::map<Bidegree, AbelianGroup> groups;

  void add(Bidegree b, const AbelianGroup& g);
  AbelianGroup at(Bidegree b) const;
  // Entries of a single weight keyed by degree.
  std::map<int, AbelianGroup> weight_slice(int weight) const;
  HomologyGroup truncated(int max_weight) const;

  friend bool operator==(const HomologyGroup& a, const HomologyGroup& b) {
    return a.ring == b.ring && a.groups == b.groups;
  }
  friend bool operator!=(const HomologyGroup& a, const HomologyGroup& b) { return !(a == b); }
};

std::string describe(const HomologyGroup& h);
// First bidegree where the two tables differ, with a readable message.
std::optional<std::string> first_difference(const HomologyGroup& expected, const HomologyGroup& actual);

struct ComplexSlice {
  Ring ring = Ring::integers();
  int weight = 0;
  std::map<int, std::vector<Monomial>> bases;
  // boundary.at(i) maps degree i to degree i-1: rows index bases[i-1], columns bases[i].
  std::map<int, Matrix> boundary;

  std::size_t dimension(int degree) const;
  const Matrix& boundary_from(int degree) const;
};

// Throws InternalAssertion when the differential does not square to zero.
ComplexSlice build_slice(const WdgAlgebra& a, int weight);

HomologyGroup homology_over_Z(const ComplexSlice& slice);
HomologyGroup homology_over_Fp(const ComplexSlice& slice, long p);
// Dispatches on the algebra's ring; weights 0..max_weight, slices in parallel.
HomologyGroup homology(const WdgAlgebra& a, int weight);
HomologyGroup homology_up_to(const WdgAlgebra& a, int max_weight);

// Tensor product plus shifted Tor terms; weights above max_weight are
// dropped when max_weight >= 0.
HomologyGroup kunneth(const HomologyGroup& h1, const HomologyGroup& h2, int max_weight = -1);
HomologyGroup p_primary_unitalize(const HomologyGroup& h, long p);
// Universal coefficients: dimensions of H(C tensor F_p) from H(C) over Z.
HomologyGroup reduce_mod_p(const HomologyGroup& integral, long p);

// Homology algebra over F_p up to a weight cap. Representatives are chosen
// by pivoting: cycles are reduced against an echelon basis of boundaries and
// the surviving echelon rows are the class representatives.
class HomologyRing {
 public:
  HomologyRing(AlgebraPtr algebra, int weight_max);

  int weight_max() const { return weight_max_; }
  std::vector<Bidegree> bidegrees() const;
  std::size_t dimension(Bidegree b) const;
  const std::vector<Element>& representatives(Bidegree b) const;
  // Coordinates of the class of a cycle in the representative basis.
  ModVector coordinates(Bidegree b, const Element& cycle) const;
  ModVector product(Bidegree a, std::size_t i, Bidegree b, std::size_t j) const;
  // Rank of the multiplication map H_a (x) H_b -> H_{a+b}.
  std::size_t multiplication_rank(Bidegree a, Bidegree b) const;

 private:
  struct Piece {
    std::vector<Monomial> basis;
    std::map<Monomial, std::size_t> index;
    ModEchelon boundaries;
    ModEchelon classes;
    std::vector<Element> reps;
  };
  const Piece& piece(Bidegree b) const;

  AlgebraPtr algebra_;
  int weight_max_;
  long p_;
  std::map<Bidegree, Piece> pieces_;
};

HomologyRing homology_ring_over_Fp(AlgebraPtr algebra, int weight_max);

}  // namespace extbar
