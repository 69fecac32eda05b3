#include "extbar/homology.hpp"

#include <sstream>

#include "extbar/parallel.hpp"

namespace extbar {

std::string AbelianGroup::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (const auto& d : torsion) {
    os << (first ? "" : " + ") << "Z/" << d.get_str();
    first = false;
  }
  return first ? "0" : os.str();
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  AbelianGroup g;
  g.free_rank = a.free_rank + b.free_rank;
  std::vector<BigInt> orders = a.torsion;
  orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
  g.torsion = normalize_cyclic_orders(std::move(orders));
  return g;
}

namespace {

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace

AbelianGroup tensor(const AbelianGroup& a, const AbelianGroup& b) {
  AbelianGroup g;
  g.free_rank = a.free_rank * b.free_rank;
  std::vector<BigInt> orders;
  for (const auto& e : b.torsion)
    for (long k = 0; k < a.free_rank; ++k) orders.push_back(e);
  for (const auto& d : a.torsion)
    for (long k = 0; k < b.free_rank; ++k) orders.push_back(d);
  for (const auto& d : a.torsion)
    for (const auto& e : b.torsion) orders.push_back(gcd(d, e));
  g.torsion = normalize_cyclic_orders(std::move(orders));
  return g;
}

AbelianGroup tor(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<BigInt> orders;
  for (const auto& d : a.torsion)
    for (const auto& e : b.torsion) orders.push_back(gcd(d, e));
  AbelianGroup g;
  g.torsion = normalize_cyclic_orders(std::move(orders));
  return g;
}

void HomologyGroup::add(Bidegree b, const AbelianGroup& g) {
  if (g.is_zero()) return;
  auto it = groups.find(b);
  if (it == groups.end())
    groups.emplace(b, g);
  else
    it->second = direct_sum(it->second, g);
}

AbelianGroup HomologyGroup::at(Bidegree b) const {
  auto it = groups.find(b);
  return it == groups.end() ? AbelianGroup{} : it->second;
}

std::map<int, AbelianGroup> HomologyGroup::weight_slice(int weight) const {
  std::map<int, AbelianGroup> out;
  for (const auto& [b, g] : groups)
    if (b.weight == weight) out.emplace(b.degree, g);
  return out;
}

HomologyGroup HomologyGroup::truncated(int max_weight) const {
  HomologyGroup h;
  h.ring = ring;
  for (const auto& [b, g] : groups)
    if (b.weight <= max_weight) h.groups.emplace(b, g);
  return h;
}

std::string describe(const HomologyGroup& h) {
  std::ostringstream os;
  for (const auto& [b, g] : h.groups) os << "weight " << b.weight << " degree " << b.degree << ": " << g.to_string() << "\n";
  return os.str();
}

std::optional<std::string> first_difference(const HomologyGroup& expected, const HomologyGroup& actual) {
  std::map<Bidegree, int> keys;
  for (const auto& [b, g] : expected.groups) keys[b];
  for (const auto& [b, g] : actual.groups) keys[b];
  for (const auto& [b, unused] : keys) {
    AbelianGroup e = expected.at(b), a = actual.at(b);
    if (e != a)
      return "at " + to_string(b) + ": expected " + e.to_string() + ", got " + a.to_string();
  }
  return std::nullopt;
}

std::size_t ComplexSlice::dimension(int degree) const {
  auto it = bases.find(degree);
  return it == bases.end() ? 0 : it->second.size();
}

const Matrix& ComplexSlice::boundary_from(int degree) const {
  static const Matrix empty;
  auto it = boundary.find(degree);
  return it == boundary.end() ? empty : it->second;
}

ComplexSlice build_slice(const WdgAlgebra& a, int weight) {
  ComplexSlice s;
  s.ring = a.ring();
  s.weight = weight;
  s.bases = a.basis_by_degree(weight);
  for (const auto& [deg, basis] : s.bases) {
    std::map<Monomial, std::size_t> target_index;
    auto target = s.bases.find(deg - 1);
    if (target != s.bases.end())
      for (std::size_t i = 0; i < target->second.size(); ++i) target_index.emplace(target->second[i], i);
    Matrix m(target_index.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Element d = a.diff(basis[j]);
      for (const auto& [mono, c] : d.terms()) {
        auto it = target_index.find(mono);
        if (it == target_index.end())
          throw InternalAssertion("differential leaves the slice at " + a.format(basis[j]));
        m(it->second, j) = c;
      }
    }
    s.boundary.emplace(deg, std::move(m));
  }
  for (const auto& [deg, m] : s.boundary) {
    auto prev = s.boundary.find(deg - 1);
    if (prev == s.boundary.end() || prev->second.rows == 0 || m.cols == 0) continue;
    Matrix sq = multiply(prev->second, m);
    for (auto& x : sq.data) s.ring.reduce(x);
    if (!sq.is_zero())
      throw InternalAssertion("differential does not square to zero in weight " + std::to_string(weight) +
                              ", degree " + std::to_string(deg));
  }
  return s;
}

HomologyGroup homology_over_Z(const ComplexSlice& slice) {
  HomologyGroup h;
  h.ring = Ring::integers();
  std::map<int, SmithForm> smith;
  for (const auto& [deg, m] : slice.boundary) smith.emplace(deg, smith_normal_form(m));
  for (const auto& [deg, basis] : slice.bases) {
    const std::size_t out_rank = smith.count(deg) ? smith.at(deg).rank : 0;
    AbelianGroup g;
    std::size_t in_rank = 0;
    if (auto it = smith.find(deg + 1); it != smith.end()) {
      in_rank = it->second.rank;
      std::vector<BigInt> orders;
      for (const auto& d : it->second.invariant_factors)
        if (d != 1) orders.push_back(d);
      g.torsion = normalize_cyclic_orders(orders);
    }
    g.free_rank = static_cast<long>(basis.size() - out_rank - in_rank);
    h.add({deg, slice.weight}, g);
  }
  return h;
}

HomologyGroup homology_over_Fp(const ComplexSlice& slice, long p) {
  HomologyGroup h;
  h.ring = Ring::prime_field(p);
  std::map<int, std::size_t> ranks;
  for (const auto& [deg, m] : slice.boundary) ranks.emplace(deg, rank_mod_p(m, p));
  for (const auto& [deg, basis] : slice.bases) {
    std::size_t out_rank = ranks.count(deg) ? ranks.at(deg) : 0;
    std::size_t in_rank = ranks.count(deg + 1) ? ranks.at(deg + 1) : 0;
    h.add({deg, slice.weight}, AbelianGroup{static_cast<long>(basis.size() - out_rank - in_rank), {}});
  }
  return h;
}

HomologyGroup homology(const WdgAlgebra& a, int weight) {
  ComplexSlice s = build_slice(a, weight);
  return a.ring().is_field() ? homology_over_Fp(s, a.ring().characteristic()) : homology_over_Z(s);
}

HomologyGroup homology_up_to(const WdgAlgebra& a, int max_weight) {
  std::vector<HomologyGroup> parts(static_cast<std::size_t>(max_weight + 1));
  parallel_for(parts.size(), [&](std::size_t w) { parts[w] = homology(a, static_cast<int>(w)); });
  HomologyGroup h;
  h.ring = a.ring();
  for (const auto& part : parts)
    for (const auto& [b, g] : part.groups) h.add(b, g);
  return h;
}

HomologyGroup kunneth(const HomologyGroup& h1, const HomologyGroup& h2, int max_weight) {
  if (h1.ring != h2.ring) throw std::invalid_argument("kunneth: rings differ");
  HomologyGroup h;
  h.ring = h1.ring;
  for (const auto& [b1, g1] : h1.groups)
    for (const auto& [b2, g2] : h2.groups) {
      Bidegree b = b1 + b2;
      if (max_weight >= 0 && b.weight > max_weight) continue;
      h.add(b, tensor(g1, g2));
      if (!h.ring.is_field()) h.add({b.degree + 1, b.weight}, tor(g1, g2));
    }
  return h;
}

HomologyGroup p_primary_unitalize(const HomologyGroup& h, long p) {
  HomologyGroup out;
  out.ring = Ring::integers();
  out.add({0, 0}, AbelianGroup{1, {}});
  for (const auto& [b, g] : h.groups) {
    if (b == Bidegree{0, 0}) continue;
    std::vector<BigInt> orders;
    for (const auto& d : g.torsion) {
      long v = p_valuation(d, p);
      if (v > 0) {
        BigInt q;
        mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(v));
        orders.push_back(q);
      }
    }
    AbelianGroup pg;
    pg.torsion = normalize_cyclic_orders(orders);
    out.add(b, pg);
  }
  return out;
}

HomologyGroup reduce_mod_p(const HomologyGroup& integral, long p) {
  HomologyGroup out;
  out.ring = Ring::prime_field(p);
  for (const auto& [b, g] : integral.groups) {
    long divisible = 0;
    for (const auto& d : g.torsion)
      if (mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p))) ++divisible;
    out.add(b, AbelianGroup{g.free_rank + divisible, {}});
    out.add({b.degree + 1, b.weight}, AbelianGroup{divisible, {}});
  }
  return out;
}

// ---------------------------------------------------------------------------

HomologyRing::HomologyRing(AlgebraPtr algebra, int weight_max)
    : algebra_(std::move(algebra)), weight_max_(weight_max), p_(algebra_->ring().characteristic()) {
  if (!algebra_->ring().is_field()) throw std::invalid_argument("homology ring requires a prime field");
  for (int w = 0; w <= weight_max; ++w) {
    ComplexSlice s = build_slice(*algebra_, w);
    for (const auto& [deg, basis] : s.bases) {
      Piece pc{basis, {}, ModEchelon(basis.size(), p_), ModEchelon(basis.size(), p_), {}};
      for (std::size_t i = 0; i < basis.size(); ++i) pc.index.emplace(basis[i], i);
      const Matrix& incoming = s.boundary_from(deg + 1);
      for (std::size_t j = 0; j < incoming.cols; ++j) {
        ModVector v(basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i) v[i] = incoming(i, j).get_si();
        pc.boundaries.insert(std::move(v));
      }
      const Matrix& outgoing = s.boundary_from(deg);
      std::vector<ModVector> cycles;
      if (outgoing.rows == 0) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
          ModVector v(basis.size(), 0);
          v[i] = 1;
          cycles.push_back(std::move(v));
        }
      } else {
        cycles = nullspace_mod_p(outgoing, p_);
      }
      for (auto& z : cycles) {
        pc.boundaries.reduce(z);
        pc.classes.insert(std::move(z));
      }
      for (const auto& row : pc.classes.rows()) {
        Element e;
        for (std::size_t i = 0; i < row.size(); ++i)
          if (row[i] != 0) e.add(basis[i], row[i], algebra_->ring());
        pc.reps.push_back(std::move(e));
      }
      if (!pc.reps.empty()) pieces_.emplace(Bidegree{deg, w}, std::move(pc));
    }
  }
}

std::vector<Bidegree> HomologyRing::bidegrees() const {
  std::vector<Bidegree> out;
  for (const auto& [b, pc] : pieces_) out.push_back(b);
  return out;
}

std::size_t HomologyRing::dimension(Bidegree b) const {
  auto it = pieces_.find(b);
  return it == pieces_.end() ? 0 : it->second.reps.size();
}

const HomologyRing::Piece& HomologyRing::piece(Bidegree b) const {
  if (b.weight > weight_max_) throw std::out_of_range("bidegree " + to_string(b) + " exceeds the weight cap");
  auto it = pieces_.find(b);
  if (it == pieces_.end()) throw std::out_of_range("no classes in bidegree " + to_string(b));
  return it->second;
}

const std::vector<Element>& HomologyRing::representatives(Bidegree b) const { return piece(b).reps; }

ModVector HomologyRing::coordinates(Bidegree b, const Element& cycle) const {
  if (b.weight > weight_max_) throw std::out_of_range("bidegree " + to_string(b) + " exceeds the weight cap");
  auto it = pieces_.find(b);
  if (it == pieces_.end()) {
    if (!algebra_->diff(cycle).is_zero()) throw std::invalid_argument("coordinates: not a cycle");
    return {};
  }
  const Piece& pc = it->second;
  ModVector v(pc.basis.size(), 0);
  for (const auto& [m, c] : cycle.terms()) {
    auto idx = pc.index.find(m);
    if (idx == pc.index.end()) throw std::invalid_argument("coordinates: element not in bidegree " + to_string(b));
    v[idx->second] = c.get_si();
  }
  pc.boundaries.reduce(v);
  ModVector coeffs = pc.classes.reduce(v);
  for (auto x : v)
    if (x != 0) throw std::invalid_argument("coordinates: not a cycle");
  return coeffs;
}

ModVector HomologyRing::product(Bidegree a, std::size_t i, Bidegree b, std::size_t j) const {
  if (a.weight + b.weight > weight_max_)
    throw std::out_of_range("product of classes beyond the weight cap " + std::to_string(weight_max_));
  const Element& x = piece(a).reps.at(i);
  const Element& y = piece(b).reps.at(j);
  return coordinates(a + b, algebra_->mul(x, y));
}

std::size_t HomologyRing::multiplication_rank(Bidegree a, Bidegree b) const {
  const std::size_t da = dimension(a), db = dimension(b), dc = dimension(a + b);
  if (da == 0 || db == 0 || dc == 0) return 0;
  Matrix m(da * db, dc);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) {
      ModVector c = product(a, i, b, j);
      for (std::size_t k = 0; k < dc; ++k) m(i * db + j, k) = c[k];
    }
  return rank_mod_p(m, p_);
}

HomologyRing homology_ring_over_Fp(AlgebraPtr algebra, int weight_max) {
  return HomologyRing(std::move(algebra), weight_max);
}

}  // namespace extbar
