#include "extbar/predict.hpp"

#include <sstream>
#include <stdexcept>

#include "extbar/koszul.hpp"
#include "extbar/words.hpp"

namespace extbar {

std::string to_string(Functor f) {
  switch (f) {
    case Functor::S: return "S";
    case Functor::Lambda: return "Lambda";
    case Functor::Gamma: return "Gamma";
  }
  return "?";
}

Functor parse_functor(const std::string& text) {
  if (text == "S") return Functor::S;
  if (text == "Lambda" || text == "L") return Functor::Lambda;
  if (text == "Gamma" || text == "G") return Functor::Gamma;
  throw std::invalid_argument("unknown functor: " + text);
}

Functor sharp(Functor f) {
  switch (f) {
    case Functor::S: return Functor::Gamma;
    case Functor::Gamma: return Functor::S;
    case Functor::Lambda: return Functor::Lambda;
  }
  return f;
}

std::pair<Functor, Functor> duality_flip(Functor x, Functor y) { return {sharp(y), sharp(x)}; }

int commutativity_epsilon(Functor f) { return f == Functor::Lambda ? 1 : 0; }

namespace {

Flavor flavor_of(Functor f) {
  switch (f) {
    case Functor::S: return Flavor::Sym;
    case Functor::Lambda: return Flavor::Lambda;
    case Functor::Gamma: return Flavor::Gamma;
  }
  return Flavor::Gamma;
}

// Collects generators I^(twist)<cohom> of weight p^twist below the cap.
struct FactorBuilder {
  long p;
  int cap;
  int m;
  PredictFactor factor;

  FactorBuilder(long p_, int cap_, int m_, Flavor flavor, bool twisted = false) : p(p_), cap(cap_), m(m_) {
    factor.flavor = flavor;
    factor.weight_twisted = twisted;
  }
  // Returns false when the weight exceeds the cap.
  bool add(long cohom, int twist) {
    const long w = ipow(p, twist);
    if (w > cap) return false;
    factor.generators.push_back({factor.flavor, static_cast<int>(cohom), w, twist, m});
    return true;
  }
};

// Largest r with p^r <= cap (or -1 when cap < 1).
int max_twist(long p, int cap) {
  if (cap < 1) return -1;
  int r = 0;
  while (ipow(p, r + 1) <= cap) ++r;
  return r;
}

FreeAlgebraSpec single(long p, int cap, PredictFactor f) {
  FreeAlgebraSpec spec;
  spec.p = p;
  spec.max_weight = cap;
  spec.factors.push_back(std::move(f));
  return spec;
}

}  // namespace

std::vector<GeneratorFamily> FreeAlgebraSpec::all_generators() const {
  std::vector<GeneratorFamily> out;
  for (const auto& f : factors) out.insert(out.end(), f.generators.begin(), f.generators.end());
  return out;
}

std::vector<GeneratorFamily> cartan_field_generators(long p, int n, int max_weight, int m) {
  std::vector<GeneratorFamily> out;
  const int height = n + 2;
  const long bound = 2L * height * max_weight + 2;
  for (const Word& w : enumerate_words(p, height, bound, WordKind::Cartan)) {
    const int t = word_twisting(w);
    const long weight = ipow(p, t);
    if (weight > max_weight) continue;
    const long deg = word_degree(w, p);
    const Flavor fl = (p == 2 || deg % 2 == 0) ? Flavor::Gamma : Flavor::Lambda;
    out.push_back({fl, static_cast<int>(-deg), weight, t, m});
  }
  return out;
}

FreeAlgebraSpec cartan_field_spec(long p, int n, int max_weight, int m) {
  FreeAlgebraSpec spec;
  spec.p = p;
  spec.max_weight = max_weight;
  PredictFactor even{Flavor::Gamma, {}, false}, odd{Flavor::Lambda, {}, false};
  for (const auto& g : cartan_field_generators(p, n, max_weight, m))
    (g.flavor == Flavor::Gamma ? even : odd).generators.push_back(g);
  spec.factors.push_back(even);
  if (!odd.generators.empty()) {
    spec.factors.push_back(odd);
    spec.junction_eps.push_back(0);
  }
  return spec;
}

PoincareTable poincare_dims(const FreeAlgebraSpec& spec, int max_weight) {
  PoincareTable series{{Bidegree{0, 0}, 1}};
  for (const auto& g : spec.all_generators()) {
    const Bidegree shift{-g.cohom_degree, static_cast<int>(g.weight)};
    if (shift.weight > max_weight) continue;
    for (int copy = 0; copy < g.multiplicity; ++copy) {
      PoincareTable next = series;
      if (g.flavor == Flavor::Lambda) {
        for (const auto& [b, c] : series) {
          Bidegree nb = b + shift;
          if (nb.weight <= max_weight) next[nb] += c;
        }
      } else {
        // Multiplication by 1/(1 - x): walk in increasing weight so that
        // next[b - shift] is final before it is used.
        for (int w = shift.weight; w <= max_weight; ++w) {
          auto lo = next.lower_bound(Bidegree{std::numeric_limits<int>::min(), w - shift.weight});
          std::vector<std::pair<Bidegree, long>> adds;
          for (auto it = lo; it != next.end() && it->first.weight == w - shift.weight; ++it)
            adds.emplace_back(it->first + shift, it->second);
          for (const auto& [b, c] : adds) next[b] += c;
        }
      }
      series = std::move(next);
    }
  }
  PoincareTable out;
  for (const auto& [b, c] : series)
    if (c != 0) out.emplace(b, c);
  return out;
}

PoincareTable poincare_dims(const FreeAlgebraSpec& spec) { return poincare_dims(spec, spec.max_weight); }

AlgebraPtr realize(const FreeAlgebraSpec& spec, const Ring& ring) {
  AlgebraPtr result;
  for (std::size_t i = 0; i < spec.factors.size(); ++i) {
    const auto& f = spec.factors[i];
    std::vector<Generator> gens;
    for (const auto& g : f.generators)
      for (int c = 0; c < g.multiplicity; ++c) gens.push_back({f.flavor, -g.cohom_degree, static_cast<int>(g.weight)});
    AlgebraPtr a = make_free_algebra(gens, ring);
    if (f.weight_twisted) a = weight_twist(a);
    result = result ? tensor_signed(result, a, spec.junction_eps.at(i - 1)) : a;
  }
  return result ? result : make_free_algebra(std::vector<Generator>{}, ring);
}

FreeAlgebraSpec ext_field_predict(Functor x, Functor y, long p, int max_weight, int m) {
  if (!is_prime(p)) throw std::invalid_argument("ext_field_predict: p must be prime");
  const int cap = max_weight;
  if (x == Functor::Gamma || y == Functor::S || (x == Functor::Lambda && y == Functor::Lambda)) {
    Flavor fl = x == Functor::Gamma ? flavor_of(y) : (y == Functor::S ? flavor_of(sharp(x)) : Flavor::Gamma);
    FactorBuilder b(p, cap, m, fl);
    b.add(0, 0);
    return single(p, cap, b.factor);
  }
  if (x == Functor::Lambda && y == Functor::Gamma) {
    auto [x2, y2] = duality_flip(x, y);
    return ext_field_predict(x2, y2, p, max_weight, m);
  }
  const int top = max_twist(p, cap);
  if (y == Functor::Lambda) {  // (S, Lambda)
    if (p == 2) {
      FactorBuilder g(p, cap, m, Flavor::Gamma);
      for (int k = 0; k <= top; ++k) g.add(ipow(2, k) - 1, k);
      return single(p, cap, g.factor);
    }
    FactorBuilder l(p, cap, m, Flavor::Lambda), g(p, cap, m, Flavor::Gamma, true);
    for (int k = 0; k <= top; ++k) {
      l.add(ipow(p, k) - 1, k);
      g.add(ipow(p, k + 1) - 2, k + 1);
    }
    FreeAlgebraSpec spec = single(p, cap, l.factor);
    spec.factors.push_back(g.factor);
    spec.junction_eps.push_back(1);
    return spec;
  }
  // (S, Gamma)
  if (p == 2) {
    FactorBuilder g(p, cap, m, Flavor::Gamma);
    for (int k = 0; k <= top; ++k)
      for (int l = 0; k + l <= top; ++l) g.add(2 * ipow(2, k + l) - ipow(2, k) - 1, k + l);
    return single(p, cap, g.factor);
  }
  FactorBuilder a(p, cap, m, Flavor::Gamma), b(p, cap, m, Flavor::Lambda), c(p, cap, m, Flavor::Gamma);
  for (int k = 0; k <= top; ++k) {
    a.add(2 * ipow(p, k) - 2, k);
    for (int l = 0; k + l + 1 <= top; ++l) {
      b.add(2 * ipow(p, k + l + 1) - 2 * ipow(p, k) - 1, k + l + 1);
      c.add(2 * ipow(p, k + l + 2) - 2 * ipow(p, k + 1) - 2, k + l + 2);
    }
  }
  FreeAlgebraSpec spec = single(p, cap, a.factor);
  spec.factors.push_back(b.factor);
  spec.factors.push_back(c.factor);
  spec.junction_eps = {0, 0};
  return spec;
}

FreeAlgebraSpec twist_shift(const FreeAlgebraSpec& spec, int t, Functor y) {
  const long q = ipow(spec.p, t);
  const long alpha = y == Functor::S ? 0 : (y == Functor::Lambda ? q - 1 : 2 * (q - 1));
  FreeAlgebraSpec out = spec;
  out.max_weight = static_cast<int>(spec.max_weight * q);
  for (auto& f : out.factors)
    for (auto& g : f.generators) {
      g.cohom_degree = static_cast<int>(g.cohom_degree + g.weight * alpha);
      g.weight *= q;
      g.twist += t;
    }
  return out;
}

FreeAlgebraSpec parametrize_by_Es(const FreeAlgebraSpec& spec, int s) {
  const long q = ipow(spec.p, s);
  FreeAlgebraSpec out = spec;
  out.max_weight = static_cast<int>(spec.max_weight * q);
  for (auto& f : out.factors) {
    std::vector<GeneratorFamily> gens;
    for (const auto& g : f.generators)
      for (long i = 0; i < q; ++i) {
        GeneratorFamily h = g;
        h.cohom_degree = static_cast<int>(g.cohom_degree + 2 * i * ipow(spec.p, g.twist));
        h.weight = g.weight * q;
        h.twist = g.twist + s;
        gens.push_back(h);
      }
    f.generators = std::move(gens);
  }
  return out;
}

FreeAlgebraSpec ext_twisted_composite(Functor x, Functor y, long p, int s, int t, int max_weight, int m) {
  const long scale = ipow(p, s + t);
  FreeAlgebraSpec spec = ext_field_predict(x, y, p, static_cast<int>(max_weight / scale), m);
  spec = parametrize_by_Es(twist_shift(spec, t, y), s);
  spec.max_weight = max_weight;
  return spec;
}

FreeAlgebraSpec ext_twisted_predict(Functor x, Functor y, long p, int s, int t, int max_weight, int m) {
  if (!is_prime(p)) throw std::invalid_argument("ext_twisted_predict: p must be prime");
  if (s < 0 || t < 0) throw std::invalid_argument("ext_twisted_predict: negative twist");
  const int cap = max_weight;
  const long ns = ipow(p, s);
  const int top = max_twist(p, cap);
  auto P = [p](long e) { return ipow(p, static_cast<int>(e)); };

  if (y == Functor::S) {
    FactorBuilder b(p, cap, m, flavor_of(sharp(x)));
    for (long i = 0; i < ns; ++i) b.add(2 * i * P(t), t + s);
    return single(p, cap, b.factor);
  }
  if (x == Functor::Gamma || (x == Functor::Lambda && y == Functor::Lambda)) {
    Flavor fl = x == Functor::Gamma ? flavor_of(y) : Flavor::Gamma;
    FactorBuilder b(p, cap, m, fl);
    for (long i = 0; i < ns; ++i) b.add(y == Functor::Gamma ? (2 * i + 2) * P(t) - 2 : (2 * i + 1) * P(t) - 1, t + s);
    return single(p, cap, b.factor);
  }
  if (p == 2) {
    FactorBuilder g(p, cap, m, Flavor::Gamma);
    for (long i = 0; i < ns; ++i)
      for (int k = 0; k + t + s <= top; ++k) {
        if (x == Functor::S && y == Functor::Lambda) g.add((2 * i + 1) * P(k + t) - 1, k + t + s);
        if (x == Functor::Lambda && y == Functor::Gamma) g.add((2 * i + 2) * P(k + t) - P(k) - 1, k + t + s);
        if (x == Functor::S && y == Functor::Gamma)
          for (int l = 0; k + l + t + s <= top; ++l) g.add((2 * i + 2) * P(k + l + t) - P(k) - 1, k + l + t + s);
      }
    return single(p, cap, g.factor);
  }
  if (y == Functor::Lambda || x == Functor::Lambda) {  // (S, Lambda) or (Lambda, Gamma)
    const bool sl = y == Functor::Lambda;
    FactorBuilder l(p, cap, m, Flavor::Lambda), g(p, cap, m, Flavor::Gamma, true);
    for (long i = 0; i < ns; ++i)
      for (int k = 0; k + t + s <= top; ++k) {
        if (sl) {
          l.add((2 * i + 1) * P(k + t) - 1, k + t + s);
          g.add((2 * i + 1) * P(k + 1 + t) - 2, k + 1 + t + s);
        } else {
          l.add((2 * i + 2) * P(k + t) - P(k) - 1, k + t + s);
          g.add((2 * i + 2) * P(k + 1 + t) - P(k + 1) - 2, k + 1 + t + s);
        }
      }
    FreeAlgebraSpec spec = single(p, cap, l.factor);
    spec.factors.push_back(g.factor);
    spec.junction_eps.push_back(1);
    return spec;
  }
  // (S, Gamma), p odd
  FactorBuilder a(p, cap, m, Flavor::Gamma), b(p, cap, m, Flavor::Lambda), c(p, cap, m, Flavor::Gamma);
  for (long i = 0; i < ns; ++i)
    for (int k = 0; k + t + s <= top; ++k) {
      a.add((2 * i + 2) * P(k + t) - 2, k + t + s);
      for (int l = 0; k + l + 1 + t + s <= top; ++l) {
        b.add((2 * i + 2) * P(k + l + 1 + t) - 2 * P(k) - 1, k + l + 1 + t + s);
        c.add((2 * i + 2) * P(k + l + 2 + t) - 2 * P(k + 1) - 2, k + l + 2 + t + s);
      }
    }
  FreeAlgebraSpec spec = single(p, cap, a.factor);
  spec.factors.push_back(b.factor);
  spec.factors.push_back(c.factor);
  spec.junction_eps = {0, 0};
  return spec;
}

HomologyGroup regrade_bar_to_ext(const HomologyGroup& h, int n) {
  HomologyGroup out;
  out.ring = h.ring;
  for (const auto& [b, g] : h.groups) out.add({b.degree - (n + 2) * b.weight, b.weight}, g);
  return out;
}

HomologyGroup ext_integral_predict(Functor y, int m, int max_weight) {
  if (y == Functor::Gamma) return regrade_bar_to_ext(integral_bar_homology_predict(2, m, max_weight), 2);
  if (y != Functor::Lambda) throw std::invalid_argument("ext_integral_predict: target must be Lambda or Gamma");
  HomologyGroup out;
  std::map<int, long> free_part;  // weight -> rank of Lambda^a(Z^m) in degree 0
  for (int a = 0; a <= std::min(m, max_weight); ++a) free_part[a] = binomial(m, a).get_si();
  for (const auto& [a, r] : free_part) out.add({0, a}, AbelianGroup{r, {}});
  for (long p = 2; p <= max_weight; ++p) {
    if (!is_prime(p)) continue;
    std::vector<GeneratorSpec> w;
    for (int k = 0; ipow(p, k + 1) <= max_weight; ++k) {
      const long q = ipow(p, k + 1);
      w.push_back({static_cast<int>(2 * q + 1), static_cast<int>(q), m});
    }
    for (const auto& [b, dim] : koszul_kernels_dims(w, p, max_weight)) {
      if (b.degree <= 0) continue;
      const int cohom = 3 * b.weight - b.degree;
      for (const auto& [a, r] : free_part) {
        if (b.weight + a > max_weight) continue;
        AbelianGroup g;
        g.torsion.assign(static_cast<std::size_t>(dim * r), BigInt(p));
        out.add({-cohom, b.weight + a}, g);
      }
    }
  }
  return out;
}

std::string describe(const FreeAlgebraSpec& spec) {
  std::ostringstream os;
  for (std::size_t i = 0; i < spec.factors.size(); ++i) {
    const auto& f = spec.factors[i];
    if (i) os << (spec.junction_eps[i - 1] ? " (x)^1 " : " (x) ");
    os << (f.weight_twisted ? "^t" : "") << to_string(f.flavor) << "(";
    for (std::size_t j = 0; j < f.generators.size(); ++j) {
      const auto& g = f.generators[j];
      os << (j ? " + " : "") << "I^(" << g.twist << ")<" << g.cohom_degree << ">";
      if (g.multiplicity != 1) os << "^" << g.multiplicity;
    }
    os << ")";
  }
  return os.str();
}

}  // namespace extbar
