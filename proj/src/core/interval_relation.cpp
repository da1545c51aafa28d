#include "interval_relation.hpp"

#include <algorithm>

namespace latfact {

RegionPartition region_partition(const Poset& order, Interval iv) {
  const std::size_t n = order.size();
  RegionPartition r{order.interval_members(iv), Bitset(n), Bitset(n), Bitset(n)};
  for (std::size_t x = 0; x < n; ++x) {
    if (r.members.test(x)) continue;
    bool above = false, below = false;
    r.members.for_each([&](std::size_t y) {
      if (order.lt(static_cast<int>(y), static_cast<int>(x))) above = true;
      if (order.lt(static_cast<int>(x), static_cast<int>(y))) below = true;
    });
    if (above)
      r.above.set(x);
    else if (below)
      r.below.set(x);
    else
      r.incomparable.set(x);
  }
  return r;
}

IntervalRelation IntervalRelation::make(const Poset& order, const std::vector<Interval>& intervals) {
  IntervalRelation rel;
  rel.order_ = order;
  rel.generators_ = intervals;
  const std::size_t n = order.size();
  std::vector<Bitset> member_sets;
  Bitset covered(n);
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    Bitset members = order.interval_members(intervals[i]);
    for (std::size_t j = 0; j < member_sets.size(); ++j)
      if (members.intersects(member_sets[j]))
        throw InputError("interval relation: intervals " + std::to_string(j) + " and " +
                         std::to_string(i) + " overlap");
    covered |= members;
    member_sets.push_back(std::move(members));
  }
  rel.class_of_.assign(n, -1);
  for (std::size_t i = 0; i < member_sets.size(); ++i) {
    member_sets[i].for_each([&](std::size_t x) { rel.class_of_[x] = static_cast<int>(i); });
    rel.classes_.push_back(member_sets[i]);
    rel.inf_.push_back(intervals[i].bottom);
    rel.sup_.push_back(intervals[i].top);
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (covered.test(x)) continue;
    Bitset single(n);
    single.set(x);
    rel.class_of_[x] = static_cast<int>(rel.classes_.size());
    rel.classes_.push_back(std::move(single));
    rel.inf_.push_back(static_cast<int>(x));
    rel.sup_.push_back(static_cast<int>(x));
  }
  return rel;
}

Poset FactorStructure::as_poset() const {
  std::vector<std::string> names;
  for (const auto& cls : classes) {
    std::string label = "[";
    bool first = true;
    cls.for_each([&](std::size_t x) {
      if (!first) label += ",";
      label += std::to_string(x);
      first = false;
    });
    label += "]";
    names.push_back(std::move(label));
  }
  return Poset::from_leq(relation, std::move(names));
}

namespace {

// Smallest class cycle through <=* edges witnessing an antisymmetry
// violation, reported in canonical order (least class first).
std::vector<int> find_cycle(const std::vector<Bitset>& base, const std::vector<Bitset>& closed) {
  const int k = static_cast<int>(base.size());
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      if (a == b || !closed[a].test(b) || !closed[b].test(a)) continue;
      // BFS over base edges from a back to a through the mutual component.
      std::vector<int> parent(k, -2);
      std::vector<int> queue{a};
      parent[a] = -1;
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int cur = queue[qi];
        base[cur].for_each([&](std::size_t nxt) {
          int v = static_cast<int>(nxt);
          if (v == cur || parent[v] != -2) return;
          if (!closed[v].test(a) || !closed[a].test(v)) return;  // stay in the SCC
          parent[v] = cur;
          queue.push_back(v);
        });
      }
      // Close the cycle via any base edge back to a.
      for (int last = 0; last < k; ++last) {
        if (last == a || parent[last] == -2 || !base[last].test(a)) continue;
        std::vector<int> cyc;
        for (int cur = last; cur != -1; cur = parent[cur]) cyc.push_back(cur);
        std::reverse(cyc.begin(), cyc.end());
        return cyc;
      }
    }
  return {};
}

}  // namespace

FactorStructure leq_theta(const IntervalRelation& rel) {
  const int k = static_cast<int>(rel.class_count());
  FactorStructure out;
  out.classes.assign(rel.class_count(), Bitset(rel.order().size()));
  for (int c = 0; c < k; ++c) out.classes[c] = rel.class_members(c);
  out.class_of.assign(rel.order().size(), -1);
  for (std::size_t x = 0; x < rel.order().size(); ++x) out.class_of[x] = rel.class_of(static_cast<int>(x));

  // Base relation <=*: [x] <=* [y] iff inf [x] <= sup [y].
  std::vector<Bitset> base(k, Bitset(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (rel.order().leq(rel.class_inf(a), rel.class_sup(b))) base[a].set(b);

  std::vector<Bitset> closed = base;
  for (int via = 0; via < k; ++via)
    for (int a = 0; a < k; ++a)
      if (closed[a].test(via)) closed[a] |= closed[via];
  out.relation = closed;

  bool antisym = true;
  for (int a = 0; a < k && antisym; ++a)
    for (int b = a + 1; b < k && antisym; ++b)
      if (closed[a].test(b) && closed[b].test(a)) antisym = false;

  if (!antisym) {
    out.kind = FactorKind::preorder;
    out.cycle = find_cycle(base, closed);
    return out;
  }
  out.kind = FactorKind::partial_order;
  out.lattice_failure = out.as_poset().lattice_check();
  if (out.lattice_failure.ok) out.kind = FactorKind::lattice;
  return out;
}

FactorStructure factorize(const IntervalRelation& rel) { return leq_theta(rel); }

OrderPreservation is_order_preserving(const IntervalRelation& rel) {
  // Digraph on the multi-element intervals: S_i -> S_j iff inf S_i lies in
  // the strictly-below region of S_j. Singleton classes are transparent for
  // <=* chains, so they cannot contribute to a violating cycle.
  std::vector<int> fat;
  for (std::size_t i = 0; i < rel.generator_count(); ++i)
    if (rel.fat(static_cast<int>(i))) fat.push_back(static_cast<int>(i));
  const int f = static_cast<int>(fat.size());
  std::vector<Bitset> edges(f, Bitset(f));
  for (int a = 0; a < f; ++a) {
    for (int b = 0; b < f; ++b) {
      if (a == b) continue;
      int inf_a = rel.class_inf(fat[a]);
      // inf S_a in S_b-strictly-below: below sup(S_b), outside S_b; with
      // disjoint intervals this is exactly inf_a <= sup_b.
      if (rel.order().leq(inf_a, rel.class_sup(fat[b]))) edges[a].set(b);
    }
  }
  std::vector<Bitset> closed = edges;
  for (int via = 0; via < f; ++via)
    for (int a = 0; a < f; ++a)
      if (closed[a].test(via)) closed[a] |= closed[via];
  for (int a = 0; a < f; ++a)
    for (int b = 0; b < f; ++b) {
      if (a == b || !closed[a].test(b) || !closed[b].test(a)) continue;
      // Recover one simple cycle through a.
      std::vector<int> parent(f, -2);
      std::vector<int> queue{a};
      parent[a] = -1;
      for (std::size_t qi = 0; qi < queue.size(); ++qi)
        edges[queue[qi]].for_each([&](std::size_t nxt) {
          if (parent[nxt] == -2) {
            parent[nxt] = queue[qi];
            queue.push_back(static_cast<int>(nxt));
          }
        });
      for (int last = 0; last < f; ++last) {
        if (parent[last] == -2 || !edges[last].test(a)) continue;
        std::vector<int> cyc;
        for (int cur = last; cur != -1; cur = parent[cur]) cyc.push_back(fat[cur]);
        std::reverse(cyc.begin(), cyc.end());
        return OrderPreservation{false, PenroseWitness{std::move(cyc)}};
      }
    }
  return OrderPreservation{true, std::nullopt};
}

bool is_penrose_crown(const Poset& order, const std::vector<Interval>& intervals) {
  if (intervals.size() < 2) throw InputError("penrose crown needs at least two intervals");
  std::vector<Bitset> members;
  for (const auto& iv : intervals) members.push_back(order.interval_members(iv));
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (members[i].intersects(members[j])) return false;
  const std::size_t k = intervals.size();
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j = (i + 1) % k;
    int inf_i = intervals[i].bottom;
    if (members[j].test(inf_i)) return false;
    bool strictly_below_some = false;
    members[j].for_each([&](std::size_t y) {
      if (order.lt(inf_i, static_cast<int>(y))) strictly_below_some = true;
    });
    if (!strictly_below_some) return false;
  }
  return true;
}

namespace {

// Quadruple characterization, least witness in (x, y, a, v) index order.
std::optional<NestedWitness> nested_quadruple(const Poset& p, const RegionPartition& reg) {
  const int n = static_cast<int>(p.size());
  for (int x = 0; x < n; ++x) {
    if (!reg.incomparable.test(x)) continue;
    for (int y = 0; y < n; ++y) {
      if (!reg.incomparable.test(y)) continue;
      for (int a = 0; a < n; ++a) {
        if (!reg.above.test(a)) continue;
        if (p.leq(y, a)) continue;
        if (p.meet(y, a) != std::optional<int>(x)) continue;
        for (int v = 0; v < n; ++v) {
          if (!reg.below.test(v)) continue;
          if (p.leq(v, x)) continue;
          if (p.join(x, v) == std::optional<int>(y)) return NestedWitness{x, y, a, v};
        }
      }
    }
  }
  return std::nullopt;
}

// Crown characterization: the endpoints extend to a crown of order 3 with
// bottom among the lower elements and top the upper element of the same rung.
bool nested_crown(const Poset& p, Interval iv) {
  const int n = static_cast<int>(p.size());
  int b = iv.bottom, t = iv.top;
  if (b == t) return false;  // crown elements are distinct
  auto incomp = [&](int u, int v) { return !p.leq(u, v) && !p.leq(v, u); };
  for (int x2 = 0; x2 < n; ++x2) {
    if (x2 == b || x2 == t || !incomp(x2, b) || !incomp(x2, t)) continue;
    for (int x3 = 0; x3 < n; ++x3) {
      if (x3 == b || x3 == t || x3 == x2 || !incomp(x3, b) || !incomp(x3, x2)) continue;
      if (!p.lt(x3, t)) continue;
      for (int y2 = 0; y2 < n; ++y2) {
        if (y2 == b || y2 == t || y2 == x2 || y2 == x3) continue;
        if (!p.lt(b, y2) || !p.lt(x2, y2) || !incomp(y2, t)) continue;
        if (p.leq(y2, x3) || p.leq(x3, y2)) continue;
        for (int y3 = 0; y3 < n; ++y3) {
          if (y3 == b || y3 == t || y3 == x2 || y3 == x3 || y3 == y2) continue;
          if (!p.lt(x2, y3) || !p.lt(x3, y3)) continue;
          if (!incomp(y3, y2) || !incomp(y3, t) || p.leq(y3, b) || p.leq(b, y3)) continue;
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

Classification classify_interval(const Poset& lattice, Interval iv) {
  RegionPartition reg = region_partition(lattice, iv);
  auto witness = nested_quadruple(lattice, reg);
  bool crown = nested_crown(lattice, iv);
  if (witness.has_value() != crown)
    throw StructuralError("interval classification cross-check failed");
  if (witness) return Classification{false, witness};
  return Classification{true, std::nullopt};
}

bool check_interval_relation_axioms(const Poset& lattice, const std::vector<Bitset>& classes) {
  const std::size_t n = lattice.size();
  std::vector<int> class_of(n, -1);
  for (std::size_t c = 0; c < classes.size(); ++c)
    classes[c].for_each([&](std::size_t x) {
      if (class_of[x] != -1) throw InputError("equivalence classes overlap");
      class_of[x] = static_cast<int>(c);
    });
  for (std::size_t x = 0; x < n; ++x)
    if (class_of[x] == -1) throw InputError("equivalence classes do not cover the carrier");

  // i) joins and meets of related pairs stay related.
  for (std::size_t x1 = 0; x1 < n; ++x1)
    for (std::size_t x2 = 0; x2 < n; ++x2) {
      if (class_of[x1] != class_of[x2]) continue;
      auto j = lattice.join(static_cast<int>(x1), static_cast<int>(x2));
      auto m = lattice.meet(static_cast<int>(x1), static_cast<int>(x2));
      if (!j || !m) throw StructuralError("carrier is not a lattice");
      if (class_of[*j] != class_of[x1] || class_of[*m] != class_of[x1]) return false;
    }
  // ii) no order crossing between distinct classes.
  for (std::size_t x1 = 0; x1 < n; ++x1)
    for (std::size_t y1 = 0; y1 < n; ++y1) {
      if (class_of[x1] == class_of[y1]) continue;
      if (!lattice.lt(static_cast<int>(y1), static_cast<int>(x1))) continue;
      // x1 > y1: no x2 ~ x1, y2 ~ y1 with x2 < y2.
      const Bitset& xs = classes[class_of[x1]];
      const Bitset& ys = classes[class_of[y1]];
      bool crossing = false;
      xs.for_each([&](std::size_t x2) {
        ys.for_each([&](std::size_t y2) {
          if (lattice.lt(static_cast<int>(x2), static_cast<int>(y2))) crossing = true;
        });
      });
      if (crossing) return false;
    }
  return true;
}

std::vector<PreservationEntry> meet_join_preservation_report(const Poset& lattice, Interval iv) {
  Classification cls = classify_interval(lattice, iv);
  if (!cls.pure) throw PreconditionError("preservation report requires a pure interval");
  IntervalRelation rel = IntervalRelation::make(lattice, {iv});
  FactorStructure f = leq_theta(rel);
  if (f.kind != FactorKind::lattice)
    throw StructuralError("pure interval factor unexpectedly not a lattice");
  Poset factor = f.as_poset();

  std::vector<PreservationEntry> out;
  const int n = static_cast<int>(lattice.size());
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      int pj = *lattice.join(p, q), pm = *lattice.meet(p, q);
      int fj = *factor.join(f.class_of[p], f.class_of[q]);
      int fm = *factor.meet(f.class_of[p], f.class_of[q]);
      out.push_back({p, q, true, pj, fj == f.class_of[pj]});
      out.push_back({p, q, false, pm, fm == f.class_of[pm]});
    }
  return out;
}

}  // namespace latfact
