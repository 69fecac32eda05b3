#include "extbar/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "extbar/bar.hpp"
#include "extbar/extract.hpp"
#include "extbar/koszul.hpp"
#include "extbar/words.hpp"

namespace extbar {

void SuiteResult::expect(bool ok, const std::string& what) {
  ++checks;
  if (!ok && passed) {
    passed = false;
    first_failure = what;
  }
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"cartan-field", "cartan-integral", "koszul",   "twist-consistency",
                                              "exponential",  "tables",          "structure"};
  return names;
}

PoincareTable convolve(const PoincareTable& a, const PoincareTable& b, int max_weight) {
  PoincareTable out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b)
      if (x.weight + y.weight <= max_weight) out[x + y] += cx * cy;
  return out;
}

namespace {

PoincareTable dims_of(const HomologyGroup& h) {
  PoincareTable out;
  for (const auto& [b, g] : h.groups)
    if (g.free_rank) out[b] = g.free_rank;
  return out;
}

std::string table_difference(const PoincareTable& expected, const PoincareTable& actual) {
  std::map<Bidegree, int> keys;
  for (const auto& [b, c] : expected) keys[b];
  for (const auto& [b, c] : actual) keys[b];
  for (const auto& [b, unused] : keys) {
    const long e = expected.count(b) ? expected.at(b) : 0;
    const long a = actual.count(b) ? actual.at(b) : 0;
    if (e != a)
      return "at " + to_string(b) + ": expected dimension " + std::to_string(e) + ", got " + std::to_string(a);
  }
  return {};
}

std::string pair_label(Functor x, Functor y, long p, int s, int t) {
  return "E(" + to_string(x) + ", " + to_string(y) + ") p=" + std::to_string(p) + " s=" + std::to_string(s) +
         " t=" + std::to_string(t);
}

// Same multiplication and differential on all basis elements up to the cap.
bool same_structure(const WdgAlgebra& a, const WdgAlgebra& b, int max_weight) {
  for (int w = 0; w <= max_weight; ++w) {
    if (a.basis_in_weight(w) != b.basis_in_weight(w)) return false;
    for (const auto& x : a.basis_in_weight(w))
      if (a.diff(x).terms() != b.diff(x).terms() || a.bidegree(x) != b.bidegree(x)) return false;
  }
  for (int wx = 0; wx <= max_weight; ++wx)
    for (int wy = 0; wx + wy <= max_weight; ++wy)
      for (const auto& x : a.basis_in_weight(wx))
        for (const auto& y : a.basis_in_weight(wy))
          if (a.mul(x, y).terms() != b.mul(x, y).terms()) return false;
  return true;
}

}  // namespace

SuiteResult verify_cartan_field(long p, int n, int m, int max_weight) {
  SuiteResult r;
  r.suite = "cartan-field";
  AlgebraPtr g = make_free_algebra(Flavor::Gamma, {{2, 1, m}}, Ring::prime_field(p));
  const PoincareTable computed = dims_of(homology_up_to(*iterate_bar(g, n), max_weight));
  const PoincareTable predicted = poincare_dims(cartan_field_spec(p, n, max_weight, m));
  const std::string diff = table_difference(predicted, computed);
  r.expect(diff.empty(), "p=" + std::to_string(p) + " n=" + std::to_string(n) + " m=" + std::to_string(m) + " " + diff);
  return r;
}

SuiteResult verify_cartan_integral(int n, int m, int max_weight) {
  SuiteResult r;
  r.suite = "cartan-integral";
  AlgebraPtr g = make_free_algebra(Flavor::Gamma, {{2, 1, m}}, Ring::integers());
  const HomologyGroup computed = homology_up_to(*iterate_bar(g, n), max_weight);
  const auto diff = first_difference(integral_bar_homology_predict(n, m, max_weight), computed);
  r.expect(!diff, "n=" + std::to_string(n) + " m=" + std::to_string(m) + " " + diff.value_or(""));
  return r;
}

SuiteResult verify_koszul(const std::vector<long>& hs, int max_weight) {
  SuiteResult r;
  r.suite = "koszul";
  for (long h : hs)
    for (int degree : {3, 2, 5, 4}) {
      const KoszulVariant v = degree % 2 ? KoszulVariant::Koszul : KoszulVariant::DeRham;
      AlgebraPtr k = build_koszul(KoszulSpec{h, {{degree, 1, 1, v}}}, Ring::integers());
      const HomologyGroup computed = homology_up_to(*k, max_weight);
      const auto diff = first_difference(koszul_homology_closed_form(degree, h, max_weight), computed);
      r.expect(!diff, "h=" + std::to_string(h) + " degree " + std::to_string(degree) + " " + diff.value_or(""));
    }
  return r;
}

SuiteResult verify_twist_consistency(long p, int max_s, int max_t, int cap) {
  SuiteResult r;
  r.suite = "twist-consistency";
  const Functor all[] = {Functor::S, Functor::Lambda, Functor::Gamma};
  for (Functor x : all)
    for (Functor y : all)
      for (int s = 0; s <= max_s; ++s)
        for (int t = 0; t <= max_t; ++t) {
          const int w = static_cast<int>(std::min<long>(3 * ipow(p, s + t), cap));
          const FreeAlgebraSpec direct = ext_twisted_predict(x, y, p, s, t, w);
          const FreeAlgebraSpec composite = ext_twisted_composite(x, y, p, s, t, w);
          const std::string diff = table_difference(poincare_dims(composite, w), poincare_dims(direct, w));
          r.expect(diff.empty(), pair_label(x, y, p, s, t) + " " + diff);
          for (const auto& g : direct.all_generators())
            r.expect(g.weight == ipow(p, g.twist), pair_label(x, y, p, s, t) + " generator weight is not p^twist");
          // Kuhn duality: E(X^(r), Y^(s)) and E(Y#^(s), X#^(r)) agree.
          auto [fx, fy] = duality_flip(x, y);
          if (t == 0) {
            const std::string dual =
                table_difference(poincare_dims(direct, w), poincare_dims(ext_twisted_predict(fx, fy, p, s, 0, w), w));
            r.expect(dual.empty(), pair_label(x, y, p, s, t) + " duality " + dual);
          }
        }
  return r;
}

SuiteResult verify_exponential(long p, int max_weight) {
  SuiteResult r;
  r.suite = "exponential";
  const Ring ring = Ring::prime_field(p);
  for (Flavor f : {Flavor::Gamma, Flavor::Lambda, Flavor::Sym})
    for (int degree : {2, 3}) {
      const auto one = slice_dimensions(*make_free_algebra(f, {{degree, 1, 1}}, ring), max_weight);
      const auto two = slice_dimensions(*make_free_algebra(f, {{degree, 1, 2}}, ring), max_weight);
      const std::string diff = table_difference(convolve(one, one, max_weight), two);
      r.expect(diff.empty(), "free " + to_string(f) + " degree " + std::to_string(degree) + " " + diff);
    }
  {
    const auto one = slice_dimensions(*build_koszul(KoszulSpec{p, {{3, 1, 1}}}, ring), max_weight);
    const auto two = slice_dimensions(*build_koszul(KoszulSpec{p, {{3, 1, 2}}}, ring), max_weight);
    r.expect(table_difference(convolve(one, one, max_weight), two).empty(), "Koszul algebra slice dimensions");
  }
  for (int n = 1; n <= 2; ++n) {
    auto h = [&](int m) {
      return dims_of(homology_up_to(*iterate_bar(make_free_algebra(Flavor::Gamma, {{2, 1, m}}, ring), n), max_weight));
    };
    const PoincareTable one = h(1);
    const std::string diff = table_difference(convolve(one, one, max_weight), h(2));
    r.expect(diff.empty(), "bar homology n=" + std::to_string(n) + " " + diff);
  }
  return r;
}

SuiteResult verify_tables() {
  SuiteResult r;
  r.suite = "tables";
  auto torsion = [](std::initializer_list<long> orders) {
    AbelianGroup g;
    for (long o : orders) g.torsion.emplace_back(o);
    return g;
  };
  auto check = [&](const std::string& label, const std::map<int, AbelianGroup>& expected,
                   const std::map<int, AbelianGroup>& actual) {
    std::map<int, AbelianGroup> e, a;
    for (const auto& [k, g] : expected)
      if (!g.is_zero()) e[k] = g;
    for (const auto& [k, g] : actual)
      if (!g.is_zero()) a[k] = g;
    std::string msg = label;
    if (e != a) {
      for (const auto& [k, g] : a) msg += " " + std::to_string(k) + ":" + g.to_string();
    }
    r.expect(e == a, msg);
  };
  AlgebraPtr g = make_free_algebra(Flavor::Gamma, {{2, 1, 1}}, Ring::integers());
  check("bar n=1 weight 4", {{9, torsion({2})}, {10, torsion({3})}, {11, torsion({2})}},
        homology(*iterate_bar(g, 1), 4).weight_slice(4));
  check("bar n=2 weight 4",
        {{10, torsion({2})}, {12, torsion({12})}, {13, torsion({2})}, {14, torsion({2})}, {16, AbelianGroup{1, {}}}},
        homology(*iterate_bar(g, 2), 4).weight_slice(4));
  const Ring z = Ring::integers();
  check("Ext(S^4, Lambda^4)", {{1, torsion({2})}, {2, torsion({3})}, {3, torsion({2})}},
        ext_table(Functor::S, Functor::Lambda, z, 0, 0, 4, 1).groups.weight_slice(4));
  check("Ext(S^4, Gamma^4)",
        {{0, AbelianGroup{1, {}}}, {2, torsion({2})}, {3, torsion({2})}, {4, torsion({12})}, {6, torsion({2})}},
        ext_table(Functor::S, Functor::Gamma, z, 0, 0, 4, 1).groups.weight_slice(4));
  return r;
}

SuiteResult verify_structure(int max_weight) {
  SuiteResult r;
  r.suite = "structure";
  const Ring z = Ring::integers();
  std::vector<std::pair<std::string, AlgebraPtr>> algebras;
  AlgebraPtr g = make_free_algebra(Flavor::Gamma, {{2, 1, 1}}, z);
  AlgebraPtr g2 = make_free_algebra(Flavor::Gamma, {{2, 1, 2}}, z);
  algebras.emplace_back("Gamma[2]", g);
  algebras.emplace_back("Lambda[3] rank 2", make_free_algebra(Flavor::Lambda, {{3, 1, 2}}, z));
  algebras.emplace_back("S[2] rank 2", make_free_algebra(Flavor::Sym, {{2, 1, 2}}, z));
  algebras.emplace_back("B Gamma[2]", bar(g));
  algebras.emplace_back("B Gamma[2] rank 2", bar(g2));
  algebras.emplace_back("B^2 Gamma[2]", iterate_bar(g, 2));
  algebras.emplace_back("K^2(Z[3])", build_koszul(KoszulSpec{2, {{3, 1, 1, KoszulVariant::Koszul}}}, z));
  algebras.emplace_back("Omega^3(Z[2])", build_koszul(KoszulSpec{3, {{2, 1, 1, KoszulVariant::DeRham}}}, z));
  algebras.emplace_back("^t R_3 B Gamma[2]", weight_twist(regrade(bar(g), 3)));
  algebras.emplace_back("R_4 B^2 Gamma[2]", regrade(iterate_bar(g, 2), 4));
  algebras.emplace_back("Gamma (x)^1 Lambda",
                        tensor_signed(g, make_free_algebra(Flavor::Lambda, {{1, 1, 1}}, z), 1));
  for (const auto& [name, a] : algebras) {
    const int w = name.find("B^2") != std::string::npos ? std::min(max_weight, 3) : max_weight;
    r.expect(check_differential_squares_to_zero(*a, w).holds, name + ": differential squares to nonzero");
    r.expect(check_leibniz(*a, w).holds, name + ": Leibniz rule fails");
    r.expect(check_associative(*a, w).holds, name + ": product not associative");
  }
  for (const auto& [name, a] : algebras) {
    if (name.rfind("B", 0) != 0) continue;
    r.expect(check_one_eps_commutative(*a, 0, max_weight).holds, name + ": shuffle product not commutative");
  }
  // Divided powers: gamma_k^l = (kl)! / (k!)^l gamma_{kl}.
  auto* fa = dynamic_cast<const FreeAlgebra*>(g.get());
  for (int k = 1; k <= max_weight; ++k)
    for (int l = 1; k * l <= 2 * max_weight; ++l) {
      Element power;
      power.add(fa->unit(), BigInt(1), z);
      for (int i = 0; i < l; ++i) power = g->mul(power, Element::monomial(fa->generator_monomial(0, k)));
      BigInt expected = factorial(k * l);
      for (int i = 0; i < l; ++i) expected /= factorial(k);
      r.expect(power.coefficient(fa->generator_monomial(0, k * l)) == expected && power.terms().size() == 1,
               "divided power axiom at k=" + std::to_string(k) + " l=" + std::to_string(l));
    }
  // Regrading: R_{-a} R_a is the identity for even a and the weight twist for odd a.
  for (const auto& [name, a] : algebras) {
    if (name.rfind("B", 0) != 0) continue;
    for (int alpha : {1, 2, 3, 4}) {
      AlgebraPtr back = regrade(regrade(a, alpha), -alpha);
      AlgebraPtr expected = alpha % 2 ? weight_twist(a) : a;
      r.expect(same_structure(*back, *expected, 3), name + ": regrade involution fails for alpha " + std::to_string(alpha));
    }
    r.expect(same_structure(*weight_twist(weight_twist(a)), *a, 3), name + ": weight twist is not an involution");
  }
  // Universal coefficients between Z and F_p.
  for (long p : {2L, 3L})
    for (int n = 1; n <= 2; ++n) {
      const int w = n == 2 ? std::min(max_weight, 4) : max_weight;
      const HomologyGroup hz = homology_up_to(*iterate_bar(g, n), w);
      const HomologyGroup hp =
          homology_up_to(*iterate_bar(make_free_algebra(Flavor::Gamma, {{2, 1, 1}}, Ring::prime_field(p)), n), w);
      const auto diff = first_difference(reduce_mod_p(hz, p).truncated(w), hp);
      r.expect(!diff, "universal coefficients p=" + std::to_string(p) + " n=" + std::to_string(n) + " " +
                          diff.value_or(""));
    }
  return r;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& o) {
  if (name == "cartan-field") return verify_cartan_field(o.p, o.n, o.m, o.max_weight);
  if (name == "cartan-integral") return verify_cartan_integral(o.n, o.m, o.max_weight);
  if (name == "koszul") return verify_koszul({2, 3, 5}, o.max_weight);
  if (name == "twist-consistency") return verify_twist_consistency(o.p, o.max_s, o.max_t);
  if (name == "exponential") return verify_exponential(o.p, o.max_weight);
  if (name == "tables") return verify_tables();
  if (name == "structure") return verify_structure(o.max_weight);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace extbar
