#pragma once

#include "interval_relation.hpp"
#include "lattice.hpp"

namespace latfact {

// Hard limits for the brute-force reference implementations. Exceeding a
// budget is a refusal, never a silent truncation.
struct OracleBudget {
  int max_objects = 8;
  int max_attributes = 8;
  int max_elements = 16;
  std::uint64_t rng_seed = 0;
};

// All concepts by power-set scan over object subsets.
std::vector<Concept> oracle_concepts(const FormalContext& ctx, const OracleBudget& budget = {});

// All comparable pairs (u, v) with u <= v.
std::vector<Interval> oracle_all_intervals(const Poset& order, const OracleBudget& budget = {});

// The factor relation <=θ by literal chain enumeration over interval hops
// (breadth-first search), not by transitive closure. Returns one up-set row
// per class, classes indexed as in IntervalRelation::make. With
// `upset_form` the dual chain condition is evaluated instead.
std::vector<Bitset> oracle_leq_theta(const Poset& order, const std::vector<Interval>& intervals,
                                     const OracleBudget& budget = {}, bool upset_form = false);

// All block relations containing the seed, by subset enumeration over the
// free cells. Requires |G|·|M| <= 30.
std::vector<std::vector<Bitset>> oracle_block_relations(const ConceptLattice& lat,
                                                        const std::vector<Bitset>& seed);

}  // namespace latfact
