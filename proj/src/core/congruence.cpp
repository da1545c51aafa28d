#include "congruence.hpp"

namespace latfact {

std::pair<Bitset, Bitset> congruence_bounds(const ConceptLattice& lat, Interval iv) {
  const FormalContext& ctx = lat.context();
  if (!is_reduced(ctx))
    throw PreconditionError(
        "congruence bounds require a reduced context; call reduce() first");
  lat.order().interval_members(iv);  // validates the interval
  const Concept& bot = lat.at(iv.bottom);
  const Concept& top = lat.at(iv.top);
  Bitset h = top.extent.complement();  // G \ C
  h |= bot.extent;                     // ∪ A
  Bitset n = bot.intent.complement();  // M \ B
  n |= top.intent;                     // ∪ D
  return {h, n};
}

bool is_compatible(const ConceptLattice& lat, const Subcontext& sub) {
  const FormalContext& ctx = lat.context();
  const Bitset& h = sub.object_subset;
  const Bitset& n = sub.attribute_subset;
  for (const Concept& c : lat.concepts()) {
    Bitset a = c.extent & h;
    Bitset b = c.intent & n;
    // Trace is a concept of [H,N] iff the restricted derivations close it.
    if ((ctx.derive_objects(a) & n) != b) return false;
    if ((ctx.derive_attributes(b) & h) != a) return false;
  }
  return true;
}

bool is_compatible(const FormalContext& ctx, const Subcontext& sub) {
  return is_compatible(ConceptLattice::build(ctx), sub);
}

namespace {

Subcontext arrow_closure_fixpoint(const FormalContext& ctx, Bitset objs, Bitset atts) {
  bool changed = true;
  while (changed) {
    changed = false;
    objs.for_each([&](std::size_t g) {
      for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
        if (!atts.test(m) && down_arrow(ctx, g, m)) {
          objs.reset(g);
          changed = true;
          return;
        }
    });
    atts.for_each([&](std::size_t m) {
      for (std::size_t g = 0; g < ctx.object_count(); ++g)
        if (!objs.test(g) && up_arrow(ctx, g, m)) {
          atts.reset(m);
          changed = true;
          return;
        }
    });
  }
  return Subcontext{objs, atts};
}

Subcontext brute_force_largest(const ConceptLattice& lat, const Bitset& h, const Bitset& n) {
  const FormalContext& ctx = lat.context();
  auto hs = h.members();
  auto ns = n.members();
  // The empty subcontext is always compatible; compatible subcontexts within
  // bounds are closed under union, so the maximum-cardinality one is their union.
  Subcontext best{Bitset(ctx.object_count()), Bitset(ctx.attribute_count())};
  std::size_t best_size = 0;
  for (std::size_t om = 0; om < (std::size_t{1} << hs.size()); ++om)
    for (std::size_t am = 0; am < (std::size_t{1} << ns.size()); ++am) {
      Subcontext cand{Bitset(ctx.object_count()), Bitset(ctx.attribute_count())};
      for (std::size_t i = 0; i < hs.size(); ++i)
        if (om >> i & 1) cand.object_subset.set(hs[i]);
      for (std::size_t i = 0; i < ns.size(); ++i)
        if (am >> i & 1) cand.attribute_subset.set(ns[i]);
      std::size_t sz = cand.object_subset.count() + cand.attribute_subset.count();
      if (sz <= best_size) continue;
      if (is_compatible(lat, cand)) {
        best = cand;
        best_size = sz;
      }
    }
  return best;
}

}  // namespace

CongruenceResult finest_imploding_congruence(const ConceptLattice& lat, Interval iv) {
  const FormalContext& ctx = lat.context();
  auto [h, n] = congruence_bounds(lat, iv);
  Subcontext sub = arrow_closure_fixpoint(ctx, h, n);
  if (!is_compatible(lat, sub)) sub = brute_force_largest(lat, h, n);

  ConceptLattice factor = ConceptLattice::build(sub.induced(ctx));

  // Factor extents are over the subcontext's objects; translate original
  // concept traces into that index space.
  std::vector<std::size_t> obj_pos(ctx.object_count(), 0);
  std::size_t pos = 0;
  sub.object_subset.for_each([&](std::size_t g) { obj_pos[g] = pos++; });

  std::vector<int> class_map(lat.size(), -1);
  for (std::size_t c = 0; c < lat.size(); ++c) {
    Bitset trace(sub.object_subset.count());
    (lat.at(c).extent & sub.object_subset).for_each([&](std::size_t g) { trace.set(obj_pos[g]); });
    auto idx = factor.find_by_extent(trace);
    if (!idx) throw StructuralError("congruence trace is not a factor concept");
    class_map[c] = *idx;
  }
  return CongruenceResult{sub, std::move(factor), std::move(class_map), h, n};
}

}  // namespace latfact
