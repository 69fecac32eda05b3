#include "extbar/bar.hpp"

namespace extbar {

BarAlgebra::BarAlgebra(AlgebraPtr underlying) : WdgAlgebra(underlying->ring()), a_(std::move(underlying)) {}

Bidegree BarAlgebra::bidegree(const Monomial& m) const {
  Bidegree b{static_cast<int>(m.parts.size()), 0};
  for (const auto& letter : m.parts) b = b + a_->bidegree(letter);
  return b;
}

std::vector<Monomial> BarAlgebra::compute_basis_in_weight(int w) const {
  std::vector<Monomial> out;
  if (w == 0) {
    out.push_back(unit());
    return out;
  }
  std::vector<Monomial> letters;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(word(letters));
      return;
    }
    for (int c = 1; c <= remaining; ++c)
      for (const auto& letter : a_->basis_in_weight(c)) {
        letters.push_back(letter);
        self(self, remaining - c);
        letters.pop_back();
      }
  };
  rec(rec, w);
  return out;
}

Element BarAlgebra::diff(const Monomial& x) const {
  Element out;
  const auto& letters = x.parts;
  const std::size_t n = letters.size();
  // e[i] = i + sum_{j<=i} |a_j|, with e[0] = 0.
  std::vector<long> e(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) e[i] = e[i - 1] + 1 + a_->bidegree(letters[i - 1]).degree;

  for (std::size_t i = 1; i < n; ++i) {
    Element product = a_->mul(letters[i - 1], letters[i]);
    const BigInt s = (e[i] & 1) ? -1 : 1;
    for (const auto& [m, c] : product.terms()) {
      std::vector<Monomial> w;
      w.reserve(n - 1);
      w.insert(w.end(), letters.begin(), letters.begin() + static_cast<long>(i) - 1);
      w.push_back(m);
      w.insert(w.end(), letters.begin() + static_cast<long>(i) + 1, letters.end());
      out.add(word(std::move(w)), s * c, ring());
    }
  }
  for (std::size_t i = 1; i <= n; ++i) {
    Element d = a_->diff(letters[i - 1]);
    const BigInt s = (e[i - 1] & 1) ? 1 : -1;
    for (const auto& [m, c] : d.terms()) {
      std::vector<Monomial> w = letters;
      w[i - 1] = m;
      out.add(word(std::move(w)), s * c, ring());
    }
  }
  return out;
}

Element BarAlgebra::mul(const Monomial& x, const Monomial& y) const {
  const auto& a = x.parts;
  const auto& b = y.parts;
  std::vector<int> da(a.size()), db(b.size());
  // Letters carry degree |a_i| + 1 for the Koszul sign; only parities matter.
  for (std::size_t i = 0; i < a.size(); ++i) da[i] = (a_->bidegree(a[i]).degree + 1) & 1;
  for (std::size_t j = 0; j < b.size(); ++j) db[j] = (a_->bidegree(b[j]).degree + 1) & 1;
  std::vector<int> suffix_a(a.size() + 1, 0);
  for (std::size_t i = a.size(); i-- > 0;) suffix_a[i] = suffix_a[i + 1] ^ da[i];

  Element out;
  std::vector<Monomial> merged;
  merged.reserve(a.size() + b.size());
  auto rec = [&](auto&& self, std::size_t i, std::size_t j, int parity) -> void {
    if (i == a.size() && j == b.size()) {
      out.add(word(merged), parity ? -1 : 1, ring());
      return;
    }
    if (i < a.size()) {
      merged.push_back(a[i]);
      self(self, i + 1, j, parity);
      merged.pop_back();
    }
    if (j < b.size()) {
      merged.push_back(b[j]);
      self(self, i, j + 1, parity ^ (db[j] & suffix_a[i]));
      merged.pop_back();
    }
  };
  rec(rec, 0, 0, 0);
  return out;
}

std::string BarAlgebra::format(const Monomial& m) const {
  std::string s = "[";
  for (std::size_t i = 0; i < m.parts.size(); ++i) s += (i ? "|" : "") + a_->format(m.parts[i]);
  return s + "]";
}

std::shared_ptr<const BarAlgebra> bar(AlgebraPtr a) { return std::make_shared<BarAlgebra>(std::move(a)); }

AlgebraPtr iterate_bar(AlgebraPtr a, int n) {
  if (n < 0) throw std::invalid_argument("iterate_bar: negative count");
  for (int i = 0; i < n; ++i) a = bar(std::move(a));
  return a;
}

Element suspension_chain(const BarAlgebra& b, const Element& x) {
  Element out;
  std::optional<Bidegree> deg;
  for (const auto& [m, c] : x.terms()) {
    Bidegree bd = b.underlying()->bidegree(m);
    if (deg && *deg != bd) throw std::invalid_argument("suspension_chain: element is not homogeneous");
    if (bd.weight <= 0) throw std::invalid_argument("suspension_chain: element must have positive weight");
    deg = bd;
    out.add(BarAlgebra::word({m}), c, b.ring());
  }
  return out;
}

}  // namespace extbar
