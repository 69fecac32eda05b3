#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "extbar/ring.hpp"

namespace extbar {

// Homological degree and weight. Cohomological degree i is stored as -i.
struct Bidegree {
  int degree = 0;
  int weight = 0;

  friend Bidegree operator+(Bidegree a, Bidegree b) { return {a.degree + b.degree, a.weight + b.weight}; }
  friend bool operator==(const Bidegree& a, const Bidegree& b) {
    return a.degree == b.degree && a.weight == b.weight;
  }
  friend bool operator!=(const Bidegree& a, const Bidegree& b) { return !(a == b); }
  // Ordered by weight first, then degree.
  friend bool operator<(const Bidegree& a, const Bidegree& b) {
    return a.weight != b.weight ? a.weight < b.weight : a.degree < b.degree;
  }
};

std::string to_string(const Bidegree& b);

// A basis element. Free algebras fill `exps` (one exponent per generator,
// at most 1 for exterior generators). Tensor products put the two factors in
// `parts`; bar words put their letters in `parts`.
struct Monomial {
  std::vector<int> exps;
  std::vector<Monomial> parts;

  friend bool operator<(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b);
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

// Sparse linear combination of monomials with nonzero coefficients.
class Element {
 public:
  using Terms = std::map<Monomial, BigInt>;

  Element() = default;
  static Element monomial(const Monomial& m, const BigInt& c = 1) {
    Element e;
    if (c != 0) e.terms_.emplace(m, c);
    return e;
  }

  void add(const Monomial& m, const BigInt& c, const Ring& ring);
  void add(const Element& other, const BigInt& scale, const Ring& ring);

  BigInt coefficient(const Monomial& m) const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

 private:
  Terms terms_;
};

// Weighted differential graded algebra with an explicit basis per weight.
// Every weight slice must be finite. Implementations are immutable apart
// from the memoized basis lists.
class WdgAlgebra {
 public:
  explicit WdgAlgebra(Ring ring) : ring_(ring) {}
  virtual ~WdgAlgebra() = default;
  WdgAlgebra(const WdgAlgebra&) = delete;
  WdgAlgebra& operator=(const WdgAlgebra&) = delete;

  const Ring& ring() const { return ring_; }

  // Sorted basis of the weight-w part, across all degrees.
  const std::vector<Monomial>& basis_in_weight(int w) const;
  std::vector<Monomial> basis(Bidegree b) const;
  std::map<int, std::vector<Monomial>> basis_by_degree(int w) const;

  virtual Bidegree bidegree(const Monomial& m) const = 0;
  virtual Element mul(const Monomial& a, const Monomial& b) const = 0;
  virtual Element diff(const Monomial& a) const = 0;
  virtual Monomial unit() const = 0;
  virtual std::string format(const Monomial& m) const;

  Element mul(const Element& a, const Element& b) const;
  Element diff(const Element& a) const;
  BigInt augmentation(const Monomial& m) const { return m == unit() ? 1 : 0; }

 protected:
  virtual std::vector<Monomial> compute_basis_in_weight(int w) const = 0;

 private:
  Ring ring_;
  mutable std::mutex memo_mutex_;
  mutable std::map<int, std::shared_ptr<const std::vector<Monomial>>> memo_;
};

using AlgebraPtr = std::shared_ptr<const WdgAlgebra>;

enum class Flavor { Gamma, Lambda, Sym };

std::string to_string(Flavor f);

struct Generator {
  Flavor flavor = Flavor::Gamma;
  int degree = 0;
  int weight = 1;
};

// (degree, weight, multiplicity) triple used by make_free_algebra.
struct GeneratorSpec {
  int degree = 0;
  int weight = 1;
  int multiplicity = 1;
};

// Free divided power / exterior / symmetric algebra on a list of
// generators, optionally with a differential given by its values on
// generators (each a linear combination of generators).
//
// Swapping two factors costs the intrinsic sign of the flavor when both
// generators share it (-1 for two exterior letters, +1 otherwise) and the
// Koszul sign of their degrees when the flavors differ.
class FreeAlgebra : public WdgAlgebra {
 public:
  using Differential = std::vector<std::vector<std::pair<int, BigInt>>>;

  FreeAlgebra(Ring ring, std::vector<Generator> generators, Differential differential = {});

  const std::vector<Generator>& generators() const { return gens_; }
  Monomial generator_monomial(int index, int exponent = 1) const;

  Bidegree bidegree(const Monomial& m) const override;
  Element mul(const Monomial& a, const Monomial& b) const override;
  Element diff(const Monomial& a) const override;
  Monomial unit() const override;
  std::string format(const Monomial& m) const override;
  using WdgAlgebra::diff;
  using WdgAlgebra::mul;

 protected:
  std::vector<Monomial> compute_basis_in_weight(int w) const override;

 private:
  int swap_parity(int j, int a, int k, int b) const;

  std::vector<Generator> gens_;
  Differential differential_;
  bool has_differential_ = false;
};

AlgebraPtr make_free_algebra(Flavor flavor, const std::vector<GeneratorSpec>& generators, const Ring& ring);
AlgebraPtr make_free_algebra(const std::vector<Generator>& generators, const Ring& ring);

// (R_alpha A)_{i,d} = A_{i+alpha d, d}.
AlgebraPtr regrade(AlgebraPtr a, int alpha);
// Product multiplied by (-1)^{w(x)w(y)}.
AlgebraPtr weight_twist(AlgebraPtr a);
// A tensor B with product sign (-1)^{|a'||b| + eps w(a')w(b)}.
AlgebraPtr tensor_signed(AlgebraPtr a, AlgebraPtr b, int eps);

struct StructureCheck {
  bool holds = true;
  std::optional<std::pair<Monomial, Monomial>> witness;
  std::string message;
};

// Exhaustive check of x y = (-1)^{|x||y| + eps w(x) w(y)} y x on basis
// pairs with w(x) + w(y) <= max_weight.
StructureCheck check_one_eps_commutative(const WdgAlgebra& a, int eps, int max_weight);
StructureCheck check_differential_squares_to_zero(const WdgAlgebra& a, int max_weight);
StructureCheck check_leibniz(const WdgAlgebra& a, int max_weight);
StructureCheck check_associative(const WdgAlgebra& a, int max_weight);

// Slice dimensions keyed by bidegree (zero entries omitted).
std::map<Bidegree, long> slice_dimensions(const WdgAlgebra& a, int max_weight);

}  // namespace extbar
