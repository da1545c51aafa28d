#include "context.hpp"

#include <algorithm>
#include <map>

namespace latfact {

FormalContext::FormalContext(std::vector<std::string> objects,
                             std::vector<std::string> attributes,
                             std::vector<Bitset> object_rows)
    : objects_(std::move(objects)), attributes_(std::move(attributes)), rows_(std::move(object_rows)) {
  if (rows_.size() != objects_.size())
    throw InputError("context: row count does not match object count");
  for (const auto& r : rows_)
    if (r.size() != attributes_.size())
      throw InputError("context: row width does not match attribute count");
  for (std::size_t g = 0; g < objects_.size(); ++g) {
    if (!object_index_.emplace(objects_[g], g).second)
      throw InputError("context: duplicate object identifier '" + objects_[g] + "'");
  }
  for (std::size_t m = 0; m < attributes_.size(); ++m) {
    if (!attribute_index_.emplace(attributes_[m], m).second)
      throw InputError("context: duplicate attribute identifier '" + attributes_[m] + "'");
  }
  cols_.assign(attributes_.size(), Bitset(objects_.size()));
  for (std::size_t g = 0; g < rows_.size(); ++g)
    rows_[g].for_each([&](std::size_t m) { cols_[m].set(g); });
}

FormalContext FormalContext::from_rows(std::vector<std::string> objects,
                                       std::vector<std::string> attributes,
                                       const std::vector<std::string>& rows) {
  std::vector<Bitset> bits;
  bits.reserve(rows.size());
  for (const auto& r : rows) {
    Bitset b(attributes.size());
    if (r.size() != attributes.size())
      throw InputError("context: row string width does not match attribute count");
    for (std::size_t m = 0; m < r.size(); ++m) {
      if (r[m] == 'X' || r[m] == 'x')
        b.set(m);
      else if (r[m] != '.')
        throw InputError(std::string("context: unexpected incidence character '") + r[m] + "'");
    }
    bits.push_back(std::move(b));
  }
  return FormalContext(std::move(objects), std::move(attributes), std::move(bits));
}

std::optional<std::size_t> FormalContext::object_index(std::string_view name) const {
  auto it = object_index_.find(std::string(name));
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FormalContext::attribute_index(std::string_view name) const {
  auto it = attribute_index_.find(std::string(name));
  if (it == attribute_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FormalContext::incidence_count() const {
  std::size_t c = 0;
  for (const auto& r : rows_) c += r.count();
  return c;
}

Bitset FormalContext::derive_objects(const Bitset& objects) const {
  Bitset out = Bitset::full(attribute_count());
  objects.for_each([&](std::size_t g) { out &= rows_[g]; });
  return out;
}

Bitset FormalContext::derive_attributes(const Bitset& attributes) const {
  Bitset out = Bitset::full(object_count());
  attributes.for_each([&](std::size_t m) { out &= cols_[m]; });
  return out;
}

Bitset FormalContext::closure_objects(const Bitset& objects) const {
  return derive_attributes(derive_objects(objects));
}

Bitset FormalContext::closure_attributes(const Bitset& attributes) const {
  return derive_objects(derive_attributes(attributes));
}

Bitset FormalContext::object_set(const std::vector<std::string>& names) const {
  Bitset out(object_count());
  for (const auto& n : names) {
    auto i = object_index(n);
    if (!i) throw InputError("unknown object identifier '" + n + "'");
    out.set(*i);
  }
  return out;
}

Bitset FormalContext::attribute_set(const std::vector<std::string>& names) const {
  Bitset out(attribute_count());
  for (const auto& n : names) {
    auto i = attribute_index(n);
    if (!i) throw InputError("unknown attribute identifier '" + n + "'");
    out.set(*i);
  }
  return out;
}

std::vector<std::string> FormalContext::object_names(const Bitset& set) const {
  std::vector<std::string> out;
  set.for_each([&](std::size_t g) { out.push_back(objects_[g]); });
  return out;
}

std::vector<std::string> FormalContext::attribute_names(const Bitset& set) const {
  std::vector<std::string> out;
  set.for_each([&](std::size_t m) { out.push_back(attributes_[m]); });
  return out;
}

FormalContext Subcontext::induced(const FormalContext& parent) const {
  std::vector<std::string> objs, atts;
  std::vector<std::size_t> attr_idx;
  object_subset.for_each([&](std::size_t g) { objs.push_back(parent.object_name(g)); });
  attribute_subset.for_each([&](std::size_t m) {
    atts.push_back(parent.attribute_name(m));
    attr_idx.push_back(m);
  });
  std::vector<Bitset> rows;
  object_subset.for_each([&](std::size_t g) {
    Bitset r(atts.size());
    for (std::size_t j = 0; j < attr_idx.size(); ++j)
      if (parent.incident(g, attr_idx[j])) r.set(j);
    rows.push_back(std::move(r));
  });
  return FormalContext(std::move(objs), std::move(atts), std::move(rows));
}

ClarifyResult clarify(const FormalContext& ctx) {
  std::map<Bitset, std::vector<std::size_t>> row_groups, col_groups;
  for (std::size_t g = 0; g < ctx.object_count(); ++g) row_groups[ctx.row(g)].push_back(g);
  for (std::size_t m = 0; m < ctx.attribute_count(); ++m) col_groups[ctx.column(m)].push_back(m);

  Bitset keep_obj(ctx.object_count()), keep_att(ctx.attribute_count());
  std::vector<std::vector<std::string>> ogroups, agroups;
  std::vector<std::size_t> obj_reps, att_reps;
  for (std::size_t g = 0; g < ctx.object_count(); ++g) {
    const auto& grp = row_groups[ctx.row(g)];
    if (grp.front() != g) continue;
    keep_obj.set(g);
    std::vector<std::string> names;
    for (auto i : grp) names.push_back(ctx.object_name(i));
    ogroups.push_back(std::move(names));
  }
  for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
    const auto& grp = col_groups[ctx.column(m)];
    if (grp.front() != m) continue;
    keep_att.set(m);
    std::vector<std::string> names;
    for (auto i : grp) names.push_back(ctx.attribute_name(i));
    agroups.push_back(std::move(names));
  }
  Subcontext sub{keep_obj, keep_att};
  return ClarifyResult{sub.induced(ctx), std::move(ogroups), std::move(agroups)};
}

namespace {

// g is reducible iff g' equals the intersection of all strictly larger rows
// (the empty intersection being the full attribute set). Assumes no
// duplicate rows among the live objects.
bool object_reducible(const FormalContext& ctx, const Bitset& live_obj,
                      const Bitset& live_att, std::size_t g) {
  Bitset inter = live_att;
  Bitset my = ctx.row(g) & live_att;
  live_obj.for_each([&](std::size_t h) {
    if (h == g) return;
    Bitset hr = ctx.row(h) & live_att;
    if (my.is_subset_of(hr) && hr != my) inter &= hr;
  });
  return inter == my;
}

bool attribute_reducible(const FormalContext& ctx, const Bitset& live_obj,
                         const Bitset& live_att, std::size_t m) {
  Bitset inter = live_obj;
  Bitset my = ctx.column(m) & live_obj;
  live_att.for_each([&](std::size_t n) {
    if (n == m) return;
    Bitset nc = ctx.column(n) & live_obj;
    if (my.is_subset_of(nc) && nc != my) inter &= nc;
  });
  return inter == my;
}

}  // namespace

ReduceResult reduce(const FormalContext& ctx) {
  ClarifyResult cl = clarify(ctx);
  const FormalContext& base = cl.context;
  Bitset live_obj = Bitset::full(base.object_count());
  Bitset live_att = Bitset::full(base.attribute_count());

  bool changed = true;
  while (changed) {
    changed = false;
    live_obj.for_each([&](std::size_t g) {
      if (object_reducible(base, live_obj, live_att, g)) {
        live_obj.reset(g);
        changed = true;
      }
    });
    live_att.for_each([&](std::size_t m) {
      if (attribute_reducible(base, live_obj, live_att, m)) {
        live_att.reset(m);
        changed = true;
      }
    });
  }

  std::vector<std::string> removed_obj, removed_att;
  for (std::size_t g = 0; g < ctx.object_count(); ++g) {
    auto idx = base.object_index(ctx.object_name(g));
    if (!idx || !live_obj.test(*idx)) removed_obj.push_back(ctx.object_name(g));
  }
  for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
    auto idx = base.attribute_index(ctx.attribute_name(m));
    if (!idx || !live_att.test(*idx)) removed_att.push_back(ctx.attribute_name(m));
  }
  Subcontext sub{live_obj, live_att};
  return ReduceResult{sub.induced(base), std::move(removed_obj), std::move(removed_att)};
}

bool is_reduced(const FormalContext& ctx) {
  ReduceResult r = reduce(ctx);
  return r.removed_objects.empty() && r.removed_attributes.empty() &&
         r.context.object_count() == ctx.object_count() &&
         r.context.attribute_count() == ctx.attribute_count();
}

bool up_arrow(const FormalContext& ctx, std::size_t g, std::size_t m) {
  if (ctx.incident(g, m)) return false;
  const Bitset& gr = ctx.row(g);
  for (std::size_t h = 0; h < ctx.object_count(); ++h) {
    const Bitset& hr = ctx.row(h);
    if (gr.is_subset_of(hr) && hr != gr && !hr.test(m)) return false;
  }
  return true;
}

bool down_arrow(const FormalContext& ctx, std::size_t g, std::size_t m) {
  if (ctx.incident(g, m)) return false;
  const Bitset& mc = ctx.column(m);
  for (std::size_t n = 0; n < ctx.attribute_count(); ++n) {
    const Bitset& nc = ctx.column(n);
    if (mc.is_subset_of(nc) && nc != mc && !nc.test(g)) return false;
  }
  return true;
}

}  // namespace latfact
