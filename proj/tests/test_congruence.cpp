#include <doctest.h>

#include "core/congruence.hpp"
#include "core/interval_relation.hpp"
#include "fixtures.hpp"

using namespace latfact;

namespace {

std::vector<Subcontext> all_compatible_within(const ConceptLattice& lat, const Bitset& h,
                                              const Bitset& n) {
  auto hs = h.members();
  auto ns = n.members();
  std::vector<Subcontext> out;
  for (std::size_t om = 0; om < (std::size_t{1} << hs.size()); ++om)
    for (std::size_t am = 0; am < (std::size_t{1} << ns.size()); ++am) {
      Subcontext cand{Bitset(lat.context().object_count()),
                      Bitset(lat.context().attribute_count())};
      for (std::size_t i = 0; i < hs.size(); ++i)
        if (om >> i & 1) cand.object_subset.set(hs[i]);
      for (std::size_t i = 0; i < ns.size(); ++i)
        if (am >> i & 1) cand.attribute_subset.set(ns[i]);
      if (is_compatible(lat, cand)) out.push_back(cand);
    }
  return out;
}

}  // namespace

TEST_CASE("congruence bounds on the running lattice") {
  ConceptLattice run = ConceptLattice::build(fixtures::running_context());
  auto [h2, n2] = congruence_bounds(run, fixtures::running_s2(run));
  CHECK(run.context().object_names(h2) == std::vector<std::string>{"1", "2", "3", "4", "7"});
  CHECK(run.context().attribute_names(n2) == std::vector<std::string>{"a", "e"});

  auto [h1, n1] = congruence_bounds(run, fixtures::running_s1(run));
  CHECK(run.context().object_names(h1) == std::vector<std::string>{"4"});
  CHECK(run.context().attribute_names(n1) == std::vector<std::string>{"d", "e"});

  // Whole lattice: C = G and B = M, so H = A and N = D.
  auto [hw, nw] = congruence_bounds(run, Interval{run.bottom(), run.top()});
  CHECK(hw == run.at(run.bottom()).extent);
  CHECK(nw == run.at(run.top()).intent);
}

TEST_CASE("congruence bounds require a reduced context") {
  ConceptLattice big = ConceptLattice::build(fixtures::running_generic_context());
  CHECK_THROWS_AS(congruence_bounds(big, Interval{big.bottom(), big.top()}), PreconditionError);
}

TEST_CASE("compatibility check") {
  ConceptLattice run = ConceptLattice::build(fixtures::running_context());
  const FormalContext& ctx = run.context();
  auto sub = [&](std::vector<std::string> objs, std::vector<std::string> atts) {
    return Subcontext{ctx.object_set(objs), ctx.attribute_set(atts)};
  };
  CHECK(is_compatible(run, sub({}, {})));
  CHECK(is_compatible(run, sub({"3"}, {"a"})));
  CHECK(is_compatible(run, sub({"1", "2", "3", "4", "5", "6", "7", "8"},
                               {"a", "b", "c", "d", "e"})));
  CHECK_FALSE(is_compatible(run, sub({"1"}, {"a"})));

  // These three are the only compatible subcontexts of the running context.
  auto all = all_compatible_within(run, Bitset::full(8), Bitset::full(5));
  CHECK(all.size() == 3);
}

TEST_CASE("finest imploding congruence on the running lattice") {
  ConceptLattice run = ConceptLattice::build(fixtures::running_context());

  CongruenceResult r2 = finest_imploding_congruence(run, fixtures::running_s2(run));
  CHECK(run.context().object_names(r2.compatible.object_subset) ==
        std::vector<std::string>{"3"});
  CHECK(run.context().attribute_names(r2.compatible.attribute_subset) ==
        std::vector<std::string>{"a"});
  CHECK(r2.factor.size() == 2);

  CongruenceResult r1 = finest_imploding_congruence(run, fixtures::running_s1(run));
  CHECK(r1.compatible.object_subset.none());
  CHECK(r1.compatible.attribute_subset.none());
  CHECK(r1.factor.size() == 1);
}

TEST_CASE("singleton interval at the top of a 2-chain") {
  FormalContext ctx = FormalContext::from_rows({"g"}, {"m"}, {"."});
  ConceptLattice chain = ConceptLattice::build(ctx);
  REQUIRE(chain.size() == 2);
  CongruenceResult r = finest_imploding_congruence(chain, Interval{chain.top(), chain.top()});
  // The identity congruence fits within the bounds.
  CHECK(r.factor.size() == 2);
  CHECK(r.class_map[0] != r.class_map[1]);
}

TEST_CASE("congruence fixpoint equals the brute-force union") {
  ConceptLattice run = ConceptLattice::build(fixtures::running_context());
  for (Interval iv : {fixtures::running_s2(run), fixtures::running_s1(run),
                      Interval{run.bottom(), run.top()}}) {
    auto [h, n] = congruence_bounds(run, iv);
    CongruenceResult r = finest_imploding_congruence(run, iv);
    Bitset uo(run.context().object_count()), ua(run.context().attribute_count());
    for (const auto& sub : all_compatible_within(run, h, n)) {
      uo |= sub.object_subset;
      ua |= sub.attribute_subset;
    }
    CHECK(r.compatible.object_subset == uo);
    CHECK(r.compatible.attribute_subset == ua);
  }
}

TEST_CASE("class map is a lattice homomorphism and classes are intervals") {
  ConceptLattice run = ConceptLattice::build(fixtures::running_context());
  for (Interval iv : {fixtures::running_s2(run), fixtures::running_s1(run)}) {
    CongruenceResult r = finest_imploding_congruence(run, iv);
    const int n = static_cast<int>(run.size());
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        CHECK(r.class_map[run.join(x, y)] ==
              r.factor.join(r.class_map[x], r.class_map[y]));
        CHECK(r.class_map[run.meet(x, y)] ==
              r.factor.meet(r.class_map[x], r.class_map[y]));
      }
    // Surjective, implodes S, and every class is an interval.
    CHECK(r.class_map[iv.bottom] == r.class_map[iv.top]);
    for (std::size_t f = 0; f < r.factor.size(); ++f) {
      Bitset members(run.size());
      for (int c = 0; c < n; ++c)
        if (r.class_map[c] == static_cast<int>(f)) members.set(c);
      CHECK(members.any());
      auto mins = run.order().minimal_of(members);
      auto maxs = run.order().maximal_of(members);
      REQUIRE(mins.size() == 1);
      REQUIRE(maxs.size() == 1);
      CHECK(run.order().interval_members({mins[0], maxs[0]}) == members);
    }
  }
}

TEST_CASE("congruence class order coincides with the factor relation") {
  ConceptLattice run = ConceptLattice::build(fixtures::running_context());
  CongruenceResult r = finest_imploding_congruence(run, fixtures::running_s2(run));

  const int n = static_cast<int>(run.size());
  std::vector<Bitset> classes(r.factor.size(), Bitset(run.size()));
  for (int c = 0; c < n; ++c) classes[r.class_map[c]].set(c);

  std::vector<Interval> intervals;
  for (const auto& cls : classes) {
    auto mins = run.order().minimal_of(cls);
    auto maxs = run.order().maximal_of(cls);
    intervals.push_back(Interval{mins[0], maxs[0]});
  }
  IntervalRelation rel = IntervalRelation::make(run.order(), intervals);
  FactorStructure f = leq_theta(rel);

  // [x]θ <=c [y]θ iff x θ (x∧y); compare against <=θ class against class.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool cong_leq = r.class_map[run.meet(x, y)] == r.class_map[x];
      bool theta_leq = f.leq(rel.class_of(x), rel.class_of(y));
      CHECK(cong_leq == theta_leq);
    }
}
