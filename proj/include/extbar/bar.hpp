#pragma once

#include "extbar/algebra.hpp"

namespace extbar {

// Reduced normalized bar construction. A basis word [a_1|...|a_n] is stored
// as a Monomial whose parts are the letters (basis monomials of positive
// weight of the underlying algebra). Degree n + sum |a_j|, weight sum w(a_j).
class BarAlgebra : public WdgAlgebra {
 public:
  explicit BarAlgebra(AlgebraPtr underlying);

  const AlgebraPtr& underlying() const { return a_; }

  Bidegree bidegree(const Monomial& m) const override;
  // Shuffle product.
  Element mul(const Monomial& x, const Monomial& y) const override;
  Element diff(const Monomial& x) const override;
  Monomial unit() const override { return Monomial{}; }
  std::string format(const Monomial& m) const override;
  using WdgAlgebra::diff;
  using WdgAlgebra::mul;

  static Monomial word(std::vector<Monomial> letters) { return Monomial{{}, std::move(letters)}; }

 protected:
  std::vector<Monomial> compute_basis_in_weight(int w) const override;

 private:
  AlgebraPtr a_;
};

std::shared_ptr<const BarAlgebra> bar(AlgebraPtr a);
AlgebraPtr iterate_bar(AlgebraPtr a, int n);

// c -> [c] for a homogeneous element of positive weight of bar.underlying().
Element suspension_chain(const BarAlgebra& bar, const Element& x);

}  // namespace extbar
