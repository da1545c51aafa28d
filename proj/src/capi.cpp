#include "latfact/latfact.h"

#include <cstring>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "core/congruence.hpp"
#include "core/enrichment.hpp"
#include "core/interval_relation.hpp"
#include "core/io.hpp"
#include "core/oracle.hpp"
#include "core/tolerance.hpp"

using namespace latfact;

struct lf_context {
  FormalContext ctx;
};

struct lf_lattice {
  ConceptLattice lat;
};

struct lf_factor {
  std::string method;
  nlohmann::json report;
  std::string dot;
  std::string context_cxt;  // tolerance / enrichment only
  std::size_t size = 0;
  bool is_lattice = false;
};

namespace {

thread_local std::string g_last_error;

lf_status fail(lf_status code, const std::string& what) {
  g_last_error = what;
  return code;
}

template <typename F>
lf_status guarded(F&& f) {
  try {
    f();
    return LF_OK;
  } catch (const BudgetError& e) {
    return fail(LF_ERR_BUDGET, e.what());
  } catch (const PreconditionError& e) {
    return fail(LF_ERR_SEMANTIC, e.what());
  } catch (const StructuralError& e) {
    return fail(LF_ERR_SEMANTIC, e.what());
  } catch (const InputError& e) {
    return fail(LF_ERR_INPUT, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(LF_ERR_INPUT, e.what());
  } catch (const std::exception& e) {
    return fail(LF_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* lf_last_error(void) { return g_last_error.c_str(); }

void lf_string_free(char* s) { ::free(s); }

lf_status lf_context_parse_cxt(const char* text, size_t len, lf_context** out) {
  return guarded([&] { *out = new lf_context{parse_cxt(std::string_view(text, len))}; });
}

lf_status lf_context_read_file(const char* path, lf_context** out) {
  return guarded([&] {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(std::string("cannot open '") + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    *out = new lf_context{parse_cxt(buf.str())};
  });
}

lf_status lf_context_to_cxt(const lf_context* ctx, char** out) {
  return guarded([&] { *out = dup_string(to_cxt(ctx->ctx)); });
}

void lf_context_free(lf_context* ctx) { delete ctx; }

size_t lf_context_objects(const lf_context* ctx) { return ctx->ctx.object_count(); }
size_t lf_context_attributes(const lf_context* ctx) { return ctx->ctx.attribute_count(); }

lf_status lf_context_clarify(const lf_context* ctx, lf_context** out, char** report) {
  return guarded([&] {
    ClarifyResult r = clarify(ctx->ctx);
    nlohmann::json j;
    j["object_groups"] = r.object_groups;
    j["attribute_groups"] = r.attribute_groups;
    *out = new lf_context{std::move(r.context)};
    if (report) *report = dup_string(j.dump(2) + "\n");
  });
}

lf_status lf_context_reduce(const lf_context* ctx, lf_context** out, char** report) {
  return guarded([&] {
    ReduceResult r = reduce(ctx->ctx);
    nlohmann::json j;
    j["removed_objects"] = r.removed_objects;
    j["removed_attributes"] = r.removed_attributes;
    *out = new lf_context{std::move(r.context)};
    if (report) *report = dup_string(j.dump(2) + "\n");
  });
}

lf_status lf_context_is_reduced(const lf_context* ctx, int* out) {
  return guarded([&] { *out = is_reduced(ctx->ctx) ? 1 : 0; });
}

lf_status lf_lattice_build(const lf_context* ctx, lf_lattice** out) {
  return guarded([&] { *out = new lf_lattice{ConceptLattice::build(ctx->ctx)}; });
}

void lf_lattice_free(lf_lattice* lat) { delete lat; }

size_t lf_lattice_size(const lf_lattice* lat) { return lat->lat.size(); }

lf_status lf_lattice_stats_json(const lf_lattice* lat, char** out) {
  return guarded([&] {
    auto [ji, mi] = lat->lat.irreducibles();
    nlohmann::json j;
    j["concepts"] = lat->lat.size();
    j["join_irreducible"] = ji.size();
    j["meet_irreducible"] = mi.size();
    j["objects"] = lat->lat.context().object_count();
    j["attributes"] = lat->lat.context().attribute_count();
    j["summary"] = std::to_string(lat->lat.size()) + " concepts, " + std::to_string(ji.size()) +
                   " join-irreducible, " + std::to_string(mi.size()) + " meet-irreducible";
    *out = dup_string(j.dump(2) + "\n");
  });
}

lf_status lf_lattice_to_json(const lf_lattice* lat, char** out) {
  return guarded([&] { *out = dup_string(lattice_to_json(lat->lat)); });
}

lf_status lf_lattice_to_dot(const lf_lattice* lat, char** out) {
  return guarded([&] { *out = dup_string(lattice_to_dot(lat->lat)); });
}

lf_status lf_lattice_generic_context(const lf_lattice* lat, lf_context** out) {
  return guarded([&] { *out = new lf_context{lat->lat.generic_context()}; });
}

lf_status lf_lattice_from_json(const char* text, size_t len, lf_lattice** out) {
  return guarded([&] {
    Poset p = parse_lattice_json(std::string_view(text, len));
    *out = new lf_lattice{lattice_from_poset(p)};
  });
}

lf_status lf_lattice_resolve_interval(const lf_lattice* lat, const char* spec, int* bottom,
                                      int* top) {
  return guarded([&] {
    Interval iv = resolve_interval_spec(lat->lat, spec);
    *bottom = iv.bottom;
    *top = iv.top;
  });
}

namespace {

nlohmann::json names_of(const ConceptLattice& lat, const Bitset& concepts) {
  nlohmann::json arr = nlohmann::json::array();
  concepts.for_each([&](std::size_t c) {
    arr.push_back({{"extent", lat.context().object_names(lat.at(c).extent)},
                   {"intent", lat.context().attribute_names(lat.at(c).intent)}});
  });
  return arr;
}

lf_factor* run_congruence(const ConceptLattice& lat, Interval iv) {
  CongruenceResult r = finest_imploding_congruence(lat, iv);
  auto* f = new lf_factor;
  f->method = "congruence";
  f->size = r.factor.size();
  f->is_lattice = true;
  f->dot = lattice_to_dot(r.factor);
  nlohmann::json j;
  j["method"] = "congruence";
  j["bound_objects"] = lat.context().object_names(r.bound_objects);
  j["bound_attributes"] = lat.context().attribute_names(r.bound_attributes);
  j["subcontext_objects"] = lat.context().object_names(r.compatible.object_subset);
  j["subcontext_attributes"] = lat.context().attribute_names(r.compatible.attribute_subset);
  j["factor_size"] = r.factor.size();
  j["class_map"] = r.class_map;
  j["trivial"] = r.factor.size() == 1;
  f->report = std::move(j);
  return f;
}

lf_factor* run_tolerance(const ConceptLattice& lat, Interval iv) {
  ToleranceResult r = finest_imploding_block_relation(lat, iv);
  auto* f = new lf_factor;
  f->method = "tolerance";
  f->size = r.factor.size();
  f->is_lattice = true;
  f->dot = lattice_to_dot(r.factor);
  f->context_cxt = to_cxt(r.block.as_context());
  nlohmann::json j;
  j["method"] = "tolerance";
  nlohmann::json delta = nlohmann::json::array();
  for (auto [g, m] : r.block.added)
    delta.push_back({lat.context().object_name(static_cast<std::size_t>(g)),
                     lat.context().attribute_name(static_cast<std::size_t>(m))});
  j["added"] = std::move(delta);
  j["factor_size"] = r.factor.size();
  j["lower_map"] = r.lower_map;
  j["upper_map"] = r.upper_map;
  j["trivial"] = r.factor.size() == 1;
  f->report = std::move(j);
  return f;
}

lf_factor* run_interval(const ConceptLattice& lat, const std::vector<Interval>& ivs) {
  IntervalRelation rel = IntervalRelation::make(lat.order(), ivs);
  FactorStructure fs = factorize(rel);
  auto* f = new lf_factor;
  f->method = "interval";
  f->size = fs.classes.size();
  f->is_lattice = fs.kind == FactorKind::lattice;
  if (fs.kind != FactorKind::preorder) f->dot = factor_to_dot(fs, lat.order());
  nlohmann::json j = nlohmann::json::parse(factor_to_json(fs, lat.order()));
  j["method"] = "interval";
  OrderPreservation op = is_order_preserving(rel);
  j["order_preserving"] = op.preserved;
  if (op.witness) j["penrose_witness"] = op.witness->interval_ids;
  if (ivs.size() == 1) {
    Classification cls = classify_interval(lat.order(), ivs[0]);
    j["interval_kind"] = cls.pure ? "pure" : "nested";
  }
  f->report = std::move(j);
  return f;
}

lf_factor* run_enrichment(const ConceptLattice& lat, Interval iv, bool use_generic) {
  EnrichmentFactorization r = factor_via_enrichment(lat.order(), iv, use_generic);
  auto* f = new lf_factor;
  f->method = "context";
  f->size = r.result.size();
  f->is_lattice = true;
  f->dot = lattice_to_dot(r.result);
  f->context_cxt = to_cxt(r.enrichment.enriched);
  nlohmann::json j;
  j["method"] = "context";
  j["verdict"] = r.verdict == EnrichmentVerdict::isomorphic_to_factor
                     ? "isomorphic-to-factor"
                     : "dm-completion-of-factor";
  j["interval_kind"] = r.pure ? "pure" : "nested";
  j["factor_size"] = r.result.size();
  j["base_objects"] = r.base_lattice.context().objects();
  j["base_attributes"] = r.base_lattice.context().attributes();
  f->report = std::move(j);
  return f;
}

}  // namespace

lf_status lf_factor_run(const lf_lattice* lat, const char* method, const int* bottoms,
                        const int* tops, size_t interval_count, int require_lattice,
                        lf_factor** out) {
  return guarded([&] {
    std::vector<Interval> ivs;
    for (size_t i = 0; i < interval_count; ++i)
      ivs.push_back(Interval{bottoms[i], tops[i]});
    std::string m(method);
    lf_factor* f = nullptr;
    if (m == "congruence") {
      if (ivs.size() != 1) throw InputError("congruence takes exactly one interval");
      f = run_congruence(lat->lat, ivs[0]);
    } else if (m == "tolerance") {
      if (ivs.size() != 1) throw InputError("tolerance takes exactly one interval");
      f = run_tolerance(lat->lat, ivs[0]);
    } else if (m == "interval") {
      if (ivs.empty()) throw InputError("interval factorization needs at least one interval");
      f = run_interval(lat->lat, ivs);
    } else if (m == "context" || m == "context-generic") {
      if (ivs.size() != 1) throw InputError("context factorization takes exactly one interval");
      f = run_enrichment(lat->lat, ivs[0], m == "context-generic");
    } else {
      throw InputError("unknown method '" + m + "'");
    }
    *out = f;
    if (require_lattice && !f->is_lattice)
      throw PreconditionError("factor is not a lattice");
  });
}

void lf_factor_free(lf_factor* f) { delete f; }

lf_status lf_factor_report_json(const lf_factor* f, char** out) {
  return guarded([&] { *out = dup_string(f->report.dump(2) + "\n"); });
}

lf_status lf_factor_to_dot(const lf_factor* f, char** out) {
  return guarded([&] {
    if (f->dot.empty()) throw PreconditionError("no DOT form for this factor");
    *out = dup_string(f->dot);
  });
}

size_t lf_factor_size(const lf_factor* f) { return f->size; }
int lf_factor_is_lattice(const lf_factor* f) { return f->is_lattice ? 1 : 0; }

lf_status lf_factor_context_cxt(const lf_factor* f, char** out) {
  return guarded([&] {
    if (f->context_cxt.empty())
      throw PreconditionError("method '" + f->method + "' has no context artifact");
    *out = dup_string(f->context_cxt);
  });
}

lf_status lf_classify_interval(const lf_lattice* lat, int bottom, int top, int* pure) {
  return guarded([&] {
    Classification c = classify_interval(lat->lat.order(), Interval{bottom, top});
    *pure = c.pure ? 1 : 0;
  });
}

lf_status lf_enrich(const lf_lattice* lat, const int* bottoms, const int* tops,
                    size_t interval_count, int iterative, lf_context** out, char** delta) {
  return guarded([&] {
    std::vector<Interval> ivs;
    for (size_t i = 0; i < interval_count; ++i)
      ivs.push_back(Interval{bottoms[i], tops[i]});
    EnrichedContext ec =
        iterative ? enrich_iterative(lat->lat, ivs) : enrich(lat->lat, ivs);
    nlohmann::json j = nlohmann::json::array();
    for (auto [g, m] : ec.added)
      j.push_back({lat->lat.context().object_name(static_cast<std::size_t>(g)),
                   lat->lat.context().attribute_name(static_cast<std::size_t>(m))});
    *out = new lf_context{std::move(ec.enriched)};
    if (delta) *delta = dup_string(j.dump(2) + "\n");
  });
}

lf_status lf_verify(const lf_context* ctx, int max_objects, int max_attributes,
                    int max_elements, char** report) {
  return guarded([&] {
    OracleBudget budget;
    if (max_objects > 0) budget.max_objects = max_objects;
    if (max_attributes > 0) budget.max_attributes = max_attributes;
    if (max_elements > 0) budget.max_elements = max_elements;
    if (ctx->ctx.object_count() > static_cast<std::size_t>(budget.max_objects) ||
        ctx->ctx.attribute_count() > static_cast<std::size_t>(budget.max_attributes))
      throw BudgetError("verify: context exceeds the oracle budget");

    nlohmann::json j;
    ConceptLattice lat = ConceptLattice::build(ctx->ctx);
    if (lat.size() > static_cast<std::size_t>(budget.max_elements))
      throw BudgetError("verify: concept count exceeds the oracle budget");

    // Concept enumeration against the power-set oracle.
    auto oc = oracle_concepts(ctx->ctx, budget);
    bool concepts_ok = oc.size() == lat.size();
    if (concepts_ok)
      for (const Concept& c : oc)
        if (!lat.find_by_extent(c.extent)) concepts_ok = false;
    j["concepts"] = concepts_ok;

    // Factor order against the chain oracle, over all single intervals.
    bool theta_ok = true;
    bool classify_ok = true;
    auto intervals = oracle_all_intervals(lat.order(), budget);
    for (const auto& iv : intervals) {
      IntervalRelation rel = IntervalRelation::make(lat.order(), {iv});
      FactorStructure f = leq_theta(rel);
      auto oracle = oracle_leq_theta(lat.order(), {iv}, budget);
      if (f.relation != oracle) theta_ok = false;
      classify_interval(lat.order(), iv);  // throws if the two methods disagree
    }
    j["factor_order"] = theta_ok;
    j["classification"] = classify_ok;

    // Block-relation law of the tolerance fixpoint, over all intervals.
    bool block_ok = true;
    for (const auto& iv : intervals) {
      ToleranceResult t = finest_imploding_block_relation(lat, iv);
      if (!is_block_relation(lat, t.block.rows)) block_ok = false;
    }
    j["block_relations"] = block_ok;

    bool all = concepts_ok && theta_ok && classify_ok && block_ok;
    j["pass"] = all;
    if (report) *report = dup_string(j.dump(2) + "\n");
    if (!all) throw StructuralError("verification failed");
  });
}

}  // extern "C"
