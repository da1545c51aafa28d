#include "tolerance.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

namespace latfact {

Bitset BlockRelation::column(std::size_t m) const {
  Bitset col(base.object_count());
  for (std::size_t g = 0; g < rows.size(); ++g)
    if (rows[g].test(m)) col.set(g);
  return col;
}

FormalContext BlockRelation::as_context() const {
  return FormalContext(base.objects(), base.attributes(), rows);
}

std::vector<Bitset> seed_relation(const ConceptLattice& lat, Interval iv) {
  lat.order().interval_members(iv);  // validates
  const FormalContext& ctx = lat.context();
  const Bitset& c = lat.at(iv.top).extent;
  const Bitset& b = lat.at(iv.bottom).intent;
  std::vector<Bitset> rows = ctx.rows();
  c.for_each([&](std::size_t g) { rows[g] |= b; });
  return rows;
}

std::optional<BlockViolation> block_relation_violation(const ConceptLattice& lat,
                                                       const std::vector<Bitset>& relation) {
  const FormalContext& ctx = lat.context();
  if (relation.size() != ctx.object_count())
    throw InputError("block relation: row count mismatch");
  for (std::size_t g = 0; g < relation.size(); ++g)
    if (!ctx.row(g).is_subset_of(relation[g]))
      throw InputError("block relation: J does not contain I");

  std::unordered_set<Bitset, BitsetHash> intents, extents;
  for (const Concept& c : lat.concepts()) {
    intents.insert(c.intent);
    extents.insert(c.extent);
  }
  for (std::size_t g = 0; g < relation.size(); ++g)
    if (!intents.count(relation[g])) return BlockViolation{true, static_cast<int>(g)};
  for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
    Bitset col(ctx.object_count());
    for (std::size_t g = 0; g < relation.size(); ++g)
      if (relation[g].test(m)) col.set(g);
    if (!extents.count(col)) return BlockViolation{false, static_cast<int>(m)};
  }
  return std::nullopt;
}

namespace {

// Worklist entries: objects are [0, |G|), attributes offset by |G|.
struct Worklist {
  std::vector<std::size_t> items;
  std::vector<bool> queued;
  std::mt19937_64 rng;
  bool shuffled;

  Worklist(std::size_t universe, std::uint64_t seed, bool do_shuffle)
      : queued(universe, false), rng(seed), shuffled(do_shuffle) {}

  void push(std::size_t x) {
    if (queued[x]) return;
    queued[x] = true;
    items.push_back(x);
  }
  bool empty() const { return items.empty(); }
  std::size_t pop() {
    std::size_t at = 0;
    if (shuffled && items.size() > 1)
      at = std::uniform_int_distribution<std::size_t>(0, items.size() - 1)(rng);
    std::size_t x = items[at];
    items.erase(items.begin() + static_cast<std::ptrdiff_t>(at));
    queued[x] = false;
    return x;
  }
};

}  // namespace

BlockRelation finest_block_relation(const ConceptLattice& lat, std::vector<Bitset> seed,
                                    std::optional<std::uint64_t> shuffle_seed) {
  const FormalContext& ctx = lat.context();
  const std::size_t gcount = ctx.object_count();
  const std::size_t mcount = ctx.attribute_count();

  std::vector<Bitset> rows = std::move(seed);
  std::vector<std::pair<int, int>> added;
  for (std::size_t g = 0; g < gcount; ++g) {
    if (!ctx.row(g).is_subset_of(rows[g]))
      throw InputError("block relation seed does not contain I");
    difference(rows[g], ctx.row(g)).for_each([&](std::size_t m) {
      added.emplace_back(static_cast<int>(g), static_cast<int>(m));
    });
  }

  Worklist work(gcount + mcount, shuffle_seed.value_or(0), shuffle_seed.has_value());
  for (std::size_t g = 0; g < gcount; ++g)
    if (rows[g] != ctx.row(g)) {
      work.push(g);
      difference(rows[g], ctx.row(g)).for_each([&](std::size_t m) { work.push(gcount + m); });
    }

  auto column = [&](std::size_t m) {
    Bitset col(gcount);
    for (std::size_t g = 0; g < gcount; ++g)
      if (rows[g].test(m)) col.set(g);
    return col;
  };

  while (!work.empty()) {
    std::size_t x = work.pop();
    if (x < gcount) {
      // The smallest intent strictly containing the row is its closure
      // under the original incidence (intents are an intersection-closed
      // family, so the closure is the unique minimum).
      Bitset closed = ctx.closure_attributes(rows[x]);
      if (closed != rows[x]) {
        Bitset gained = difference(closed, rows[x]);
        rows[x] = closed;
        gained.for_each([&](std::size_t m) {
          added.emplace_back(static_cast<int>(x), static_cast<int>(m));
          work.push(gcount + m);
        });
      }
    } else {
      std::size_t m = x - gcount;
      Bitset col = column(m);
      Bitset closed = ctx.closure_objects(col);
      if (closed != col) {
        Bitset gained = difference(closed, col);
        gained.for_each([&](std::size_t g) {
          rows[g].set(m);
          added.emplace_back(static_cast<int>(g), static_cast<int>(m));
          work.push(g);
        });
      }
    }
  }

  return BlockRelation{ctx, std::move(rows), std::move(added)};
}

ToleranceResult finest_imploding_block_relation(const ConceptLattice& lat, Interval iv,
                                                std::optional<std::uint64_t> shuffle_seed) {
  BlockRelation block = finest_block_relation(lat, seed_relation(lat, iv), shuffle_seed);
  ConceptLattice factor = ConceptLattice::build(block.as_context());

  std::vector<int> lower(lat.size(), -1), upper(lat.size(), -1);
  const FormalContext jctx = block.as_context();
  for (std::size_t c = 0; c < lat.size(); ++c) {
    Bitset a = lat.at(c).extent;
    Bitset b = lat.at(c).intent;
    Bitset lower_extent = jctx.derive_attributes(jctx.derive_objects(a));
    Bitset upper_extent = jctx.derive_attributes(b);
    lower[c] = *factor.find_by_extent(lower_extent);
    upper[c] = *factor.find_by_extent(upper_extent);
  }
  return ToleranceResult{std::move(block), std::move(factor), std::move(lower), std::move(upper)};
}

}  // namespace latfact
