#include "lattice.hpp"

#include <algorithm>

namespace latfact {

namespace {

// Ganter's NextClosure over attribute sets: all closed intents in lectic
// order, smallest attribute index most significant.
std::vector<Bitset> all_intents(const FormalContext& ctx) {
  const std::size_t m = ctx.attribute_count();
  std::vector<Bitset> out;
  Bitset a = ctx.closure_attributes(Bitset(m));
  out.push_back(a);
  while (a.count() != m) {
    bool advanced = false;
    for (int i = static_cast<int>(m) - 1; i >= 0; --i) {
      if (a.test(i)) continue;
      Bitset trunc(m);
      for (int j = 0; j < i; ++j)
        if (a.test(j)) trunc.set(j);
      trunc.set(i);
      Bitset closed = ctx.closure_attributes(trunc);
      bool canonical = true;
      for (int j = 0; j < i && canonical; ++j)
        if (closed.test(j) && !a.test(j)) canonical = false;
      if (canonical) {
        a = std::move(closed);
        out.push_back(a);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;  // unreachable: M is always closed
  }
  return out;
}

}  // namespace

ConceptLattice::ConceptLattice(FormalContext ctx, std::vector<Concept> concepts)
    : context_(std::move(ctx)), concepts_(std::move(concepts)) {
  const std::size_t n = concepts_.size();
  std::vector<Bitset> leq(n, Bitset(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (concepts_[a].extent.is_subset_of(concepts_[b].extent)) leq[a].set(b);
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = "c" + std::to_string(i);
  order_ = Poset::from_leq(std::move(leq), std::move(names));
  for (std::size_t i = 0; i < n; ++i) by_extent_.emplace(concepts_[i].extent, static_cast<int>(i));
}

ConceptLattice ConceptLattice::build(const FormalContext& ctx) {
  std::vector<Concept> concepts;
  for (auto& intent : all_intents(ctx)) {
    Bitset extent = ctx.derive_attributes(intent);
    concepts.push_back(Concept{std::move(extent), std::move(intent)});
  }
  return ConceptLattice(ctx, std::move(concepts));
}

int ConceptLattice::join(int a, int b) const {
  Bitset intent = concepts_[a].intent & concepts_[b].intent;
  Bitset extent = context_.derive_attributes(intent);
  return by_extent_.at(extent);
}

int ConceptLattice::meet(int a, int b) const {
  Bitset extent = concepts_[a].extent & concepts_[b].extent;
  extent = context_.closure_objects(extent);
  return by_extent_.at(extent);
}

std::optional<int> ConceptLattice::find_by_extent(const Bitset& extent) const {
  auto it = by_extent_.find(extent);
  if (it == by_extent_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> ConceptLattice::find_by_intent(const Bitset& intent) const {
  return find_by_extent(context_.derive_attributes(intent));
}

int ConceptLattice::object_concept(std::size_t g) const {
  Bitset a(context_.object_count());
  a.set(g);
  return by_extent_.at(context_.closure_objects(a));
}

int ConceptLattice::attribute_concept(std::size_t m) const {
  Bitset b(context_.attribute_count());
  b.set(m);
  return by_extent_.at(context_.derive_attributes(b));
}

std::pair<std::vector<int>, std::vector<int>> ConceptLattice::irreducibles() const {
  auto lowers = order_.lower_covers();
  auto uppers = order_.upper_covers();
  std::vector<int> join_irr, meet_irr;
  for (std::size_t c = 0; c < size(); ++c) {
    if (lowers[c].size() == 1) join_irr.push_back(static_cast<int>(c));
    if (uppers[c].size() == 1) meet_irr.push_back(static_cast<int>(c));
  }
  return {join_irr, meet_irr};
}

std::vector<std::string> ConceptLattice::object_labels(int c) const {
  std::vector<std::string> out;
  for (std::size_t g = 0; g < context_.object_count(); ++g)
    if (object_concept(g) == c) out.push_back(context_.object_name(g));
  return out;
}

std::vector<std::string> ConceptLattice::attribute_labels(int c) const {
  std::vector<std::string> out;
  for (std::size_t m = 0; m < context_.attribute_count(); ++m)
    if (attribute_concept(m) == c) out.push_back(context_.attribute_name(m));
  return out;
}

FormalContext ConceptLattice::generic_context() const {
  const std::size_t n = size();
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = "c" + std::to_string(i);
  std::vector<Bitset> rows(n, Bitset(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (order_.leq(static_cast<int>(a), static_cast<int>(b))) rows[a].set(b);
  return FormalContext(names, names, std::move(rows));
}

FormalContext order_context(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<Bitset> rows(n, Bitset(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (p.leq(static_cast<int>(a), static_cast<int>(b))) rows[a].set(b);
  return FormalContext(p.names(), p.names(), std::move(rows));
}

ConceptLattice lattice_from_poset(const Poset& p) {
  auto check = p.lattice_check();
  if (!check.ok) throw StructuralError("input order is not a lattice");
  return ConceptLattice::build(order_context(p));
}

namespace {

struct BooleanSearch {
  const FormalContext& ctx;
  int k;
  std::optional<std::size_t> pin_g, pin_m;
  std::vector<std::size_t> gs, ms;  // paired: (gs[i], ms[i]) is the diagonal

  bool pair_ok(std::size_t g, std::size_t m) const {
    if (ctx.incident(g, m)) return false;
    for (std::size_t j = 0; j < gs.size(); ++j) {
      if (gs[j] == g || ms[j] == m) return false;
      if (!ctx.incident(gs[j], m) || !ctx.incident(g, ms[j])) return false;
    }
    return true;
  }

  bool pins_satisfiable() const {
    // Pins must appear somewhere in the final witness.
    if (static_cast<int>(gs.size()) < k) return true;
    bool gok = !pin_g || std::find(gs.begin(), gs.end(), *pin_g) != gs.end();
    bool mok = !pin_m || std::find(ms.begin(), ms.end(), *pin_m) != ms.end();
    return gok && mok;
  }

  bool step() {
    if (static_cast<int>(gs.size()) == k) return pins_satisfiable();
    // Pairs may be reordered freely, so object indices ascend.
    std::size_t g0 = gs.empty() ? 0 : gs.back() + 1;
    for (std::size_t g = g0; g < ctx.object_count(); ++g)
      for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
        if (!pair_ok(g, m)) continue;
        gs.push_back(g);
        ms.push_back(m);
        if (step()) return true;
        gs.pop_back();
        ms.pop_back();
      }
    return false;
  }
};

}  // namespace

std::optional<Subcontext> find_boolean_subcontext(const FormalContext& ctx, int k,
                                                  std::optional<std::size_t> pin_object,
                                                  std::optional<std::size_t> pin_attribute) {
  if (k < 1) throw InputError("boolean subcontext dimension must be positive");
  BooleanSearch s{ctx, k, pin_object, pin_attribute, {}, {}};
  if (!s.step()) return std::nullopt;
  Subcontext sub{Bitset(ctx.object_count()), Bitset(ctx.attribute_count())};
  for (auto g : s.gs) sub.object_subset.set(g);
  for (auto m : s.ms) sub.attribute_subset.set(m);
  return sub;
}

}  // namespace latfact
