#include "extbar/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace extbar {

bool Matrix::is_zero() const {
  return std::all_of(data.begin(), data.end(), [](const BigInt& x) { return x == 0; });
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix shape mismatch");
  Matrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j)
        if (b(k, j) != 0) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

namespace {

void chain_normalize(std::vector<BigInt>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      BigInt g, l;
      mpz_gcd(g.get_mpz_t(), v[i].get_mpz_t(), v[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), v[i].get_mpz_t(), v[j].get_mpz_t());
      v[i] = g;
      v[j] = l;
    }
}

}  // namespace

SmithForm smith_normal_form(Matrix m) {
  const std::size_t r = m.rows, c = m.cols;
  std::size_t t = 0;
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < c; ++k) std::swap(m(i, k), m(j, k));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < r; ++k) std::swap(m(k, i), m(k, j));
  };
  while (t < r && t < c) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pi = r, pj = c;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j)
        if (m(i, j) != 0 && (pi == r || abs(m(i, j)) < abs(m(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == r) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    for (;;) {
      bool clean = true;
      BigInt q;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (m(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), m(i, t).get_mpz_t(), m(t, t).get_mpz_t());
        if (q != 0)
          for (std::size_t k = t; k < c; ++k)
            if (m(t, k) != 0) m(i, k) -= q * m(t, k);
        if (m(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (m(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), m(t, j).get_mpz_t(), m(t, t).get_mpz_t());
        if (q != 0)
          for (std::size_t k = t; k < r; ++k)
            if (m(k, t) != 0) m(k, j) -= q * m(k, t);
        if (m(t, j) != 0) clean = false;
      }
      if (clean) break;
      // Move the smallest remainder in row t or column t to the pivot.
      std::size_t bi = t, bj = t;
      for (std::size_t i = t + 1; i < r; ++i)
        if (m(i, t) != 0 && abs(m(i, t)) < abs(m(bi, bj))) {
          bi = i;
          bj = t;
        }
      for (std::size_t j = t + 1; j < c; ++j)
        if (m(t, j) != 0 && abs(m(t, j)) < abs(m(bi, bj))) {
          bi = t;
          bj = j;
        }
      swap_rows(t, bi);
      swap_cols(t, bj);
    }
    ++t;
  }
  SmithForm out;
  for (std::size_t i = 0; i < t; ++i) out.invariant_factors.push_back(abs(m(i, i)));
  chain_normalize(out.invariant_factors);
  out.rank = t;
  return out;
}

std::vector<BigInt> normalize_cyclic_orders(std::vector<BigInt> orders) {
  for (auto& o : orders) {
    o = abs(o);
    if (o == 0) throw std::invalid_argument("cyclic order must be nonzero");
  }
  chain_normalize(orders);
  std::vector<BigInt> out;
  for (auto& o : orders)
    if (o != 1) out.push_back(o);
  return out;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (r != 1) throw std::invalid_argument("not invertible mod p");
  return (t % p + p) % p;
}

namespace {

std::vector<ModVector> to_mod_rows(const Matrix& m, long p) {
  std::vector<ModVector> rows(m.rows, ModVector(m.cols));
  BigInt x;
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) {
      x = m(i, j) % p;
      if (x < 0) x += p;
      rows[i][j] = x.get_si();
    }
  return rows;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<ModVector>& rows, std::size_t cols, long p) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows.size(); ++col) {
    std::size_t sel = lead;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[lead]);
    const std::int64_t inv = mod_inverse(rows[lead][col], p);
    for (auto& x : rows[lead]) x = x * inv % p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == lead || rows[i][col] == 0) continue;
      const std::int64_t f = rows[i][col];
      for (std::size_t k = 0; k < cols; ++k) rows[i][k] = ((rows[i][k] - f * rows[lead][k]) % p + p) % p;
    }
    pivots.push_back(col);
    ++lead;
  }
  return pivots;
}

}  // namespace

std::size_t rank_mod_p(const Matrix& m, long p) {
  auto rows = to_mod_rows(m, p);
  return rref(rows, m.cols, p).size();
}

std::vector<ModVector> nullspace_mod_p(const Matrix& m, long p) {
  auto rows = to_mod_rows(m, p);
  auto pivots = rref(rows, m.cols, p);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<ModVector> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    ModVector v(m.cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = (p - rows[i][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::int64_t> ModEchelon::reduce(ModVector& v) const {
  std::vector<std::int64_t> coeffs(rows_.size(), 0);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::int64_t f = v[pivots_[k]];
    if (f == 0) continue;
    coeffs[k] = f;
    for (std::size_t j = 0; j < dim_; ++j)
      if (rows_[k][j] != 0) v[j] = ((v[j] - f * rows_[k][j]) % p_ + p_) % p_;
  }
  return coeffs;
}

bool ModEchelon::insert(ModVector v) {
  reduce(v);
  std::size_t pivot = 0;
  while (pivot < dim_ && v[pivot] == 0) ++pivot;
  if (pivot == dim_) return false;
  const std::int64_t inv = mod_inverse(v[pivot], p_);
  for (auto& x : v) x = x * inv % p_;
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

}  // namespace extbar
