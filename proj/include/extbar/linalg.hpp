#pragma once

#include <cstdint>
#include <vector>

#include "extbar/ring.hpp"

namespace extbar {

// Dense row-major matrix of exact integers.
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<BigInt> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  BigInt& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  bool is_zero() const;
};

Matrix multiply(const Matrix& a, const Matrix& b);

struct SmithForm {
  std::vector<BigInt> invariant_factors;  // d_1 | d_2 | ... , all positive, includes 1s
  std::size_t rank = 0;
};

SmithForm smith_normal_form(Matrix m);

// Rewrites a list of cyclic orders as invariant factors d_1 | d_2 | ...,
// dropping trivial groups.
std::vector<BigInt> normalize_cyclic_orders(std::vector<BigInt> orders);

// Linear algebra over F_p with small p.
using ModVector = std::vector<std::int64_t>;

std::int64_t mod_inverse(std::int64_t a, std::int64_t p);
std::size_t rank_mod_p(const Matrix& m, long p);
// Basis of {x : m x = 0} over F_p.
std::vector<ModVector> nullspace_mod_p(const Matrix& m, long p);

// Row echelon basis over F_p supporting reduction with coefficient tracking.
class ModEchelon {
 public:
  ModEchelon(std::size_t dim, long p) : dim_(dim), p_(p) {}

  // Reduces v in place against stored rows (in pivot order) and returns the
  // coefficient of each stored row that was subtracted.
  std::vector<std::int64_t> reduce(ModVector& v) const;
  // Adds v if independent; returns true when added. Stored rows are reduced
  // against earlier rows only.
  bool insert(ModVector v);

  std::size_t size() const { return rows_.size(); }
  const std::vector<ModVector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t dim_;
  long p_;
  std::vector<ModVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace extbar
