#include "oracle.hpp"

#include <algorithm>
#include <map>

#include "tolerance.hpp"

namespace latfact {

std::vector<Concept> oracle_concepts(const FormalContext& ctx, const OracleBudget& budget) {
  if (ctx.object_count() > static_cast<std::size_t>(budget.max_objects))
    throw BudgetError("oracle_concepts: object count exceeds budget");
  const std::size_t g = ctx.object_count();
  std::map<Bitset, Bitset> by_extent;  // extent -> intent, deduplicated
  for (std::size_t mask = 0; mask < (std::size_t{1} << g); ++mask) {
    Bitset a(g);
    for (std::size_t i = 0; i < g; ++i)
      if (mask >> i & 1) a.set(i);
    Bitset intent = ctx.derive_objects(a);
    Bitset extent = ctx.derive_attributes(intent);
    by_extent.emplace(std::move(extent), std::move(intent));
  }
  std::vector<Concept> out;
  for (auto& [e, i] : by_extent) out.push_back(Concept{e, i});
  return out;
}

std::vector<Interval> oracle_all_intervals(const Poset& order, const OracleBudget& budget) {
  if (order.size() > static_cast<std::size_t>(budget.max_elements))
    throw BudgetError("oracle_all_intervals: element count exceeds budget");
  std::vector<Interval> out;
  for (std::size_t u = 0; u < order.size(); ++u)
    for (std::size_t v = 0; v < order.size(); ++v)
      if (order.leq(static_cast<int>(u), static_cast<int>(v)))
        out.push_back(Interval{static_cast<int>(u), static_cast<int>(v)});
  return out;
}

std::vector<Bitset> oracle_leq_theta(const Poset& order, const std::vector<Interval>& intervals,
                                     const OracleBudget& budget, bool upset_form) {
  if (order.size() > static_cast<std::size_t>(budget.max_elements))
    throw BudgetError("oracle_leq_theta: element count exceeds budget");
  IntervalRelation rel = IntervalRelation::make(order, intervals);
  const int k = static_cast<int>(rel.class_count());
  const int g = static_cast<int>(rel.generator_count());

  std::vector<RegionPartition> regions;
  for (const auto& iv : intervals) regions.push_back(region_partition(order, iv));

  std::vector<Bitset> out(k, Bitset(k));
  for (int xc = 0; xc < k; ++xc) {
    int x_inf = rel.class_inf(xc);
    for (int yc = 0; yc < k; ++yc) {
      int y_sup = rel.class_sup(yc);
      if (order.leq(x_inf, y_sup)) {
        out[xc].set(yc);
        continue;
      }
      // Chain through the listed intervals. Downset form: x_inf below S_{i1},
      // inf S_{ij} below S_{ij+1}, ..., y_sup above S_{il}. Dual upset form:
      // the supremum of each later interval lies above the previous one.
      std::vector<bool> reach(g, false);
      std::vector<int> queue;
      for (int i = 0; i < g; ++i)
        if (regions[i].below.test(x_inf)) {
          reach[i] = true;
          queue.push_back(i);
        }
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int cur = queue[qi];
        for (int nxt = 0; nxt < g; ++nxt) {
          if (reach[nxt]) continue;
          bool hop = upset_form
                         ? regions[cur].above.test(rel.class_sup(nxt))
                         : regions[nxt].below.test(rel.class_inf(cur));
          if (hop) {
            reach[nxt] = true;
            queue.push_back(nxt);
          }
        }
      }
      for (int i = 0; i < g; ++i)
        if (reach[i] && regions[i].above.test(y_sup)) {
          out[xc].set(yc);
          break;
        }
    }
  }
  return out;
}

std::vector<std::vector<Bitset>> oracle_block_relations(const ConceptLattice& lat,
                                                        const std::vector<Bitset>& seed) {
  const FormalContext& ctx = lat.context();
  if (ctx.object_count() * ctx.attribute_count() > 30)
    throw BudgetError("oracle_block_relations: context exceeds the 30-cell budget");
  std::vector<std::pair<std::size_t, std::size_t>> free_cells;
  for (std::size_t g = 0; g < ctx.object_count(); ++g) {
    if (!ctx.row(g).is_subset_of(seed[g]))
      throw InputError("oracle_block_relations: seed does not contain I");
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
      if (!seed[g].test(m)) free_cells.emplace_back(g, m);
  }
  std::vector<std::vector<Bitset>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << free_cells.size()); ++mask) {
    std::vector<Bitset> rel = seed;
    for (std::size_t i = 0; i < free_cells.size(); ++i)
      if (mask >> i & 1) rel[free_cells[i].first].set(free_cells[i].second);
    if (is_block_relation(lat, rel)) out.push_back(std::move(rel));
  }
  return out;
}

}  // namespace latfact
