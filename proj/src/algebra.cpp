#include "extbar/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace extbar {

std::string to_string(const Bidegree& b) {
  return "(" + std::to_string(b.degree) + "," + std::to_string(b.weight) + ")";
}

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::Gamma: return "Gamma";
    case Flavor::Lambda: return "Lambda";
    case Flavor::Sym: return "S";
  }
  return "?";
}

bool operator<(const Monomial& a, const Monomial& b) {
  if (a.exps != b.exps) return a.exps < b.exps;
  return std::lexicographical_compare(a.parts.begin(), a.parts.end(), b.parts.begin(), b.parts.end());
}

bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps && a.parts == b.parts; }

void Element::add(const Monomial& m, const BigInt& c, const Ring& ring) {
  BigInt v = ring.normalized(c);
  if (v == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, std::move(v));
    return;
  }
  it->second += v;
  ring.reduce(it->second);
  if (it->second == 0) terms_.erase(it);
}

void Element::add(const Element& other, const BigInt& scale, const Ring& ring) {
  if (scale == 0) return;
  for (const auto& [m, c] : other.terms_) add(m, c * scale, ring);
}

BigInt Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

const std::vector<Monomial>& WdgAlgebra::basis_in_weight(int w) const {
  static const std::vector<Monomial> empty;
  if (w < 0) return empty;
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = memo_.find(w);
    if (it != memo_.end()) return *it->second;
  }
  auto fresh = std::make_shared<std::vector<Monomial>>(compute_basis_in_weight(w));
  std::sort(fresh->begin(), fresh->end());
  std::lock_guard<std::mutex> lock(memo_mutex_);
  auto [it, inserted] = memo_.emplace(w, std::move(fresh));
  return *it->second;
}

std::vector<Monomial> WdgAlgebra::basis(Bidegree b) const {
  std::vector<Monomial> out;
  for (const auto& m : basis_in_weight(b.weight))
    if (bidegree(m).degree == b.degree) out.push_back(m);
  return out;
}

std::map<int, std::vector<Monomial>> WdgAlgebra::basis_by_degree(int w) const {
  std::map<int, std::vector<Monomial>> out;
  for (const auto& m : basis_in_weight(w)) out[bidegree(m).degree].push_back(m);
  return out;
}

std::string WdgAlgebra::format(const Monomial& m) const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < m.exps.size(); ++i) os << (i ? "," : "") << m.exps[i];
  for (std::size_t i = 0; i < m.parts.size(); ++i) os << (i ? "|" : ";") << format(m.parts[i]);
  os << ">";
  return os.str();
}

Element WdgAlgebra::mul(const Element& a, const Element& b) const {
  Element out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out.add(mul(ma, mb), ca * cb, ring());
  return out;
}

Element WdgAlgebra::diff(const Element& a) const {
  Element out;
  for (const auto& [m, c] : a.terms()) out.add(diff(m), c, ring());
  return out;
}

// ---------------------------------------------------------------------------
// Free algebras

FreeAlgebra::FreeAlgebra(Ring ring, std::vector<Generator> generators, Differential differential)
    : WdgAlgebra(ring), gens_(std::move(generators)), differential_(std::move(differential)) {
  for (const auto& g : gens_)
    if (g.weight < 1) throw std::invalid_argument("generator weights must be positive");
  if (differential_.empty()) differential_.resize(gens_.size());
  if (differential_.size() != gens_.size()) throw std::invalid_argument("differential size mismatch");
  for (std::size_t j = 0; j < gens_.size(); ++j) {
    for (const auto& [k, c] : differential_[j]) {
      if (k < 0 || static_cast<std::size_t>(k) >= gens_.size())
        throw std::invalid_argument("differential refers to unknown generator");
      if (gens_[k].degree != gens_[j].degree - 1 || gens_[k].weight != gens_[j].weight)
        throw std::invalid_argument("differential must have bidegree (-1,0)");
      if (c != 0) has_differential_ = true;
    }
  }
}

Monomial FreeAlgebra::generator_monomial(int index, int exponent) const {
  Monomial m;
  m.exps.assign(gens_.size(), 0);
  m.exps.at(index) = exponent;
  return m;
}

Monomial FreeAlgebra::unit() const {
  Monomial m;
  m.exps.assign(gens_.size(), 0);
  return m;
}

Bidegree FreeAlgebra::bidegree(const Monomial& m) const {
  Bidegree b;
  for (std::size_t j = 0; j < gens_.size(); ++j) {
    b.degree += m.exps[j] * gens_[j].degree;
    b.weight += m.exps[j] * gens_[j].weight;
  }
  return b;
}

std::vector<Monomial> FreeAlgebra::compute_basis_in_weight(int w) const {
  std::vector<Monomial> out;
  std::vector<int> exps(gens_.size(), 0);
  auto rec = [&](auto&& self, std::size_t j, int remaining) -> void {
    if (j == gens_.size()) {
      if (remaining == 0) out.push_back(Monomial{exps, {}});
      return;
    }
    int cap = remaining / gens_[j].weight;
    if (gens_[j].flavor == Flavor::Lambda) cap = std::min(cap, 1);
    for (int e = 0; e <= cap; ++e) {
      exps[j] = e;
      self(self, j + 1, remaining - e * gens_[j].weight);
    }
    exps[j] = 0;
  };
  rec(rec, 0, w);
  return out;
}

int FreeAlgebra::swap_parity(int j, int a, int k, int b) const {
  const Generator& gj = gens_[j];
  const Generator& gk = gens_[k];
  if (gj.flavor == gk.flavor) return gj.flavor == Flavor::Lambda ? (a * b) & 1 : 0;
  return (a * gj.degree) * (b * gk.degree) & 1;
}

Element FreeAlgebra::mul(const Monomial& a, const Monomial& b) const {
  const std::size_t n = gens_.size();
  Monomial r;
  r.exps.resize(n);
  BigInt coeff = 1;
  for (std::size_t j = 0; j < n; ++j) {
    int x = a.exps[j], y = b.exps[j];
    r.exps[j] = x + y;
    if (x == 0 || y == 0) continue;
    switch (gens_[j].flavor) {
      case Flavor::Lambda: return Element();
      case Flavor::Gamma: coeff *= binomial(x + y, x); break;
      case Flavor::Sym: break;
    }
  }
  int parity = 0;
  for (std::size_t j = 1; j < n; ++j) {
    if (a.exps[j] == 0) continue;
    for (std::size_t k = 0; k < j; ++k)
      if (b.exps[k] != 0) parity ^= swap_parity(static_cast<int>(j), a.exps[j], static_cast<int>(k), b.exps[k]);
  }
  if (parity) coeff = -coeff;
  Element out;
  out.add(r, coeff, ring());
  return out;
}

Element FreeAlgebra::diff(const Monomial& m) const {
  Element out;
  if (!has_differential_) return out;
  const std::size_t n = gens_.size();
  int prefix_degree = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const int a = m.exps[j];
    if (a == 0) continue;
    if (!differential_[j].empty()) {
      Monomial prefix = unit(), suffix = unit(), reduced = unit();
      for (std::size_t i = 0; i < j; ++i) prefix.exps[i] = m.exps[i];
      for (std::size_t i = j + 1; i < n; ++i) suffix.exps[i] = m.exps[i];
      BigInt scale = 1;
      switch (gens_[j].flavor) {
        case Flavor::Gamma: reduced.exps[j] = a - 1; break;
        case Flavor::Sym: reduced.exps[j] = a - 1; scale = a; break;
        case Flavor::Lambda: break;
      }
      if (prefix_degree & 1) scale = -scale;
      for (const auto& [k, c] : differential_[j]) {
        Element t = mul(generator_monomial(k), reduced);
        t = WdgAlgebra::mul(Element::monomial(prefix), t);
        t = WdgAlgebra::mul(t, Element::monomial(suffix));
        out.add(t, scale * c, ring());
      }
    }
    prefix_degree += a * gens_[j].degree;
  }
  return out;
}

std::string FreeAlgebra::format(const Monomial& m) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < gens_.size(); ++j) {
    int a = m.exps[j];
    if (a == 0) continue;
    if (!first) os << "*";
    first = false;
    switch (gens_[j].flavor) {
      case Flavor::Gamma: os << "g" << a << "(x" << j << ")"; break;
      case Flavor::Lambda: os << "x" << j; break;
      case Flavor::Sym: os << "x" << j << (a > 1 ? "^" + std::to_string(a) : ""); break;
    }
  }
  return first ? "1" : os.str();
}

AlgebraPtr make_free_algebra(Flavor flavor, const std::vector<GeneratorSpec>& generators, const Ring& ring) {
  std::vector<Generator> gens;
  for (const auto& g : generators)
    for (int i = 0; i < g.multiplicity; ++i) gens.push_back({flavor, g.degree, g.weight});
  return std::make_shared<FreeAlgebra>(ring, std::move(gens));
}

AlgebraPtr make_free_algebra(const std::vector<Generator>& generators, const Ring& ring) {
  return std::make_shared<FreeAlgebra>(ring, generators);
}

// ---------------------------------------------------------------------------
// Sign-modifying wrappers

namespace {

BigInt sign(int parity) { return (parity & 1) ? -1 : 1; }

class Regraded : public WdgAlgebra {
 public:
  Regraded(AlgebraPtr a, int alpha) : WdgAlgebra(a->ring()), a_(std::move(a)), alpha_(alpha) {}

  Bidegree bidegree(const Monomial& m) const override {
    Bidegree b = a_->bidegree(m);
    return {b.degree - alpha_ * b.weight, b.weight};
  }
  Element mul(const Monomial& x, const Monomial& y) const override {
    Element out;
    int parity = alpha_ * a_->bidegree(x).degree * a_->bidegree(y).weight;
    out.add(a_->mul(x, y), sign(parity), ring());
    return out;
  }
  Element diff(const Monomial& x) const override {
    Element out;
    out.add(a_->diff(x), sign(alpha_ * a_->bidegree(x).weight), ring());
    return out;
  }
  Monomial unit() const override { return a_->unit(); }
  std::string format(const Monomial& m) const override { return a_->format(m); }

 protected:
  std::vector<Monomial> compute_basis_in_weight(int w) const override { return a_->basis_in_weight(w); }

 private:
  AlgebraPtr a_;
  int alpha_;
};

class WeightTwisted : public WdgAlgebra {
 public:
  explicit WeightTwisted(AlgebraPtr a) : WdgAlgebra(a->ring()), a_(std::move(a)) {}

  Bidegree bidegree(const Monomial& m) const override { return a_->bidegree(m); }
  Element mul(const Monomial& x, const Monomial& y) const override {
    Element out;
    out.add(a_->mul(x, y), sign(a_->bidegree(x).weight * a_->bidegree(y).weight), ring());
    return out;
  }
  Element diff(const Monomial& x) const override { return a_->diff(x); }
  Monomial unit() const override { return a_->unit(); }
  std::string format(const Monomial& m) const override { return a_->format(m); }

 protected:
  std::vector<Monomial> compute_basis_in_weight(int w) const override { return a_->basis_in_weight(w); }

 private:
  AlgebraPtr a_;
};

class SignedTensor : public WdgAlgebra {
 public:
  SignedTensor(AlgebraPtr a, AlgebraPtr b, int eps)
      : WdgAlgebra(a->ring()), a_(std::move(a)), b_(std::move(b)), eps_(eps & 1) {
    if (a_->ring() != b_->ring()) throw std::invalid_argument("tensor factors over different rings");
  }

  Bidegree bidegree(const Monomial& m) const override {
    return a_->bidegree(m.parts[0]) + b_->bidegree(m.parts[1]);
  }
  Element mul(const Monomial& x, const Monomial& y) const override {
    const Bidegree ya = a_->bidegree(y.parts[0]);
    const Bidegree xb = b_->bidegree(x.parts[1]);
    const int parity = ya.degree * xb.degree + eps_ * ya.weight * xb.weight;
    Element left = a_->mul(x.parts[0], y.parts[0]);
    if (left.is_zero()) return {};
    Element right = b_->mul(x.parts[1], y.parts[1]);
    return combine(left, right, sign(parity));
  }
  Element diff(const Monomial& x) const override {
    Element out = combine(a_->diff(x.parts[0]), Element::monomial(x.parts[1]), 1);
    out.add(combine(Element::monomial(x.parts[0]), b_->diff(x.parts[1]), 1),
            sign(a_->bidegree(x.parts[0]).degree), ring());
    return out;
  }
  Monomial unit() const override { return Monomial{{}, {a_->unit(), b_->unit()}}; }
  std::string format(const Monomial& m) const override {
    return "(" + a_->format(m.parts[0]) + ")#(" + b_->format(m.parts[1]) + ")";
  }

 protected:
  std::vector<Monomial> compute_basis_in_weight(int w) const override {
    std::vector<Monomial> out;
    for (int wa = 0; wa <= w; ++wa)
      for (const auto& x : a_->basis_in_weight(wa))
        for (const auto& y : b_->basis_in_weight(w - wa)) out.push_back(Monomial{{}, {x, y}});
    return out;
  }

 private:
  Element combine(const Element& left, const Element& right, const BigInt& s) const {
    Element out;
    for (const auto& [l, cl] : left.terms())
      for (const auto& [r, cr] : right.terms()) out.add(Monomial{{}, {l, r}}, s * cl * cr, ring());
    return out;
  }

  AlgebraPtr a_, b_;
  int eps_;
};

}  // namespace

AlgebraPtr regrade(AlgebraPtr a, int alpha) { return std::make_shared<Regraded>(std::move(a), alpha); }
AlgebraPtr weight_twist(AlgebraPtr a) { return std::make_shared<WeightTwisted>(std::move(a)); }
AlgebraPtr tensor_signed(AlgebraPtr a, AlgebraPtr b, int eps) {
  return std::make_shared<SignedTensor>(std::move(a), std::move(b), eps);
}

// ---------------------------------------------------------------------------
// Structural checks

StructureCheck check_one_eps_commutative(const WdgAlgebra& a, int eps, int max_weight) {
  for (int wx = 0; wx <= max_weight; ++wx)
    for (int wy = 0; wx + wy <= max_weight; ++wy)
      for (const auto& x : a.basis_in_weight(wx))
        for (const auto& y : a.basis_in_weight(wy)) {
          const Bidegree bx = a.bidegree(x), by = a.bidegree(y);
          Element lhs = a.mul(x, y);
          Element rhs;
          rhs.add(a.mul(y, x), sign(bx.degree * by.degree + eps * bx.weight * by.weight), a.ring());
          if (lhs != rhs)
            return {false, std::make_pair(x, y), "x*y != sign*y*x for x=" + a.format(x) + ", y=" + a.format(y)};
        }
  return {};
}

StructureCheck check_differential_squares_to_zero(const WdgAlgebra& a, int max_weight) {
  for (int w = 0; w <= max_weight; ++w)
    for (const auto& x : a.basis_in_weight(w))
      if (!a.diff(a.diff(x)).is_zero()) return {false, std::make_pair(x, x), "d^2 != 0 on " + a.format(x)};
  return {};
}

StructureCheck check_leibniz(const WdgAlgebra& a, int max_weight) {
  for (int wx = 0; wx <= max_weight; ++wx)
    for (int wy = 0; wx + wy <= max_weight; ++wy)
      for (const auto& x : a.basis_in_weight(wx))
        for (const auto& y : a.basis_in_weight(wy)) {
          Element lhs = a.diff(a.mul(x, y));
          Element rhs = a.mul(a.diff(Element::monomial(x)), Element::monomial(y));
          rhs.add(a.mul(Element::monomial(x), a.diff(Element::monomial(y))), sign(a.bidegree(x).degree), a.ring());
          if (lhs != rhs)
            return {false, std::make_pair(x, y), "Leibniz fails for x=" + a.format(x) + ", y=" + a.format(y)};
        }
  return {};
}

StructureCheck check_associative(const WdgAlgebra& a, int max_weight) {
  for (int wx = 1; wx <= max_weight; ++wx)
    for (int wy = 1; wx + wy <= max_weight; ++wy)
      for (int wz = 1; wx + wy + wz <= max_weight; ++wz)
        for (const auto& x : a.basis_in_weight(wx))
          for (const auto& y : a.basis_in_weight(wy))
            for (const auto& z : a.basis_in_weight(wz)) {
              Element ex = Element::monomial(x), ey = Element::monomial(y), ez = Element::monomial(z);
              if (a.mul(a.mul(ex, ey), ez) != a.mul(ex, a.mul(ey, ez)))
                return {false, std::make_pair(x, z), "associativity fails at " + a.format(x) + "," + a.format(y) +
                                                         "," + a.format(z)};
            }
  return {};
}

std::map<Bidegree, long> slice_dimensions(const WdgAlgebra& a, int max_weight) {
  std::map<Bidegree, long> out;
  for (int w = 0; w <= max_weight; ++w)
    for (const auto& m : a.basis_in_weight(w)) ++out[a.bidegree(m)];
  return out;
}

}  // namespace extbar
