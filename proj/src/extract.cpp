#include "extbar/extract.hpp"

#include "extbar/bar.hpp"

namespace extbar {

HomologyGroup negate_degrees(const HomologyGroup& h) {
  HomologyGroup out;
  out.ring = h.ring;
  for (const auto& [b, g] : h.groups) out.add({-b.degree, b.weight}, g);
  return out;
}

HomologyGroup free_table(const PoincareTable& dims, const Ring& ring) {
  HomologyGroup out;
  out.ring = ring;
  for (const auto& [b, c] : dims) out.add(b, AbelianGroup{c, {}});
  return out;
}

ExtTable ext_table_via_bar(Functor target, const Ring& ring, int max_weight, int m) {
  AlgebraPtr g = make_free_algebra(Flavor::Gamma, {{2, 1, m}}, ring);
  AlgebraPtr a;
  if (target == Functor::Lambda)
    a = weight_twist(regrade(bar(g), 3));
  else if (target == Functor::Gamma)
    a = regrade(iterate_bar(g, 2), 4);
  else
    throw UnsupportedRequest("bar pipeline covers E(S, Lambda) and E(S, Gamma) only");
  ExtTable table{Functor::S, target, 0, 0, m, max_weight, {}};
  table.groups = negate_degrees(homology_up_to(*a, max_weight));
  return table;
}

ExtTable ext_table(Functor source, Functor target, const Ring& ring, int s, int t, int max_weight, int m,
                   ExtMethod method) {
  if (s < 0 || t < 0 || max_weight < 0 || m < 1) throw UnsupportedRequest("negative twist, weight or rank");
  ExtTable table{source, target, s, t, m, max_weight, {}};
  table.groups.ring = ring;
  const bool nontrivial = (source == Functor::S && target != Functor::S) ||
                          (source == Functor::Lambda && target == Functor::Gamma);
  if (!ring.is_field()) {
    if (s != 0 || t != 0) throw UnsupportedRequest("twisted Ext tables are only available over F_p");
    if (!nontrivial) {
      // Free answers: the Hilbert series does not depend on p.
      table.groups = negate_degrees(free_table(poincare_dims(ext_field_predict(source, target, 2, max_weight, m)), ring));
      return table;
    }
    const Functor y = source == Functor::S ? target : duality_flip(source, target).second;
    if (method == ExtMethod::Bar) {
      table.groups = ext_table_via_bar(y, ring, max_weight, m).groups;
    } else {
      table.groups = negate_degrees(ext_integral_predict(y, m, max_weight));
      table.groups.ring = ring;
    }
    return table;
  }
  const long p = ring.characteristic();
  if (method == ExtMethod::Bar && nontrivial && s == 0 && t == 0) {
    const Functor y = source == Functor::S ? target : duality_flip(source, target).second;
    table.groups = ext_table_via_bar(y, ring, max_weight, m).groups;
    return table;
  }
  table.groups = negate_degrees(free_table(poincare_dims(ext_twisted_predict(source, target, p, s, t, max_weight, m)), ring));
  return table;
}

long hom_dimension(Functor source, Functor target, long p, int weight, int m) {
  const ExtTable t = ext_table(source, target, Ring::prime_field(p), 0, 0, weight, m, ExtMethod::Bar);
  return t.groups.at({0, weight}).free_rank;
}

}  // namespace extbar
