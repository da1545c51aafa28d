#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bitset.hpp"
#include "errors.hpp"

namespace latfact {

// A finite formal context: objects, attributes and an incidence relation.
// Incidence is kept both object-major and attribute-major so that both
// derivation directions are single-pass bitset intersections. Immutable
// after construction.
class FormalContext {
 public:
  FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                std::vector<Bitset> object_rows);

  static FormalContext from_rows(std::vector<std::string> objects,
                                 std::vector<std::string> attributes,
                                 const std::vector<std::string>& rows);

  std::size_t object_count() const { return objects_.size(); }
  std::size_t attribute_count() const { return attributes_.size(); }

  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<std::string>& attributes() const { return attributes_; }
  const std::string& object_name(std::size_t g) const { return objects_[g]; }
  const std::string& attribute_name(std::size_t m) const { return attributes_[m]; }

  std::optional<std::size_t> object_index(std::string_view name) const;
  std::optional<std::size_t> attribute_index(std::string_view name) const;

  const Bitset& row(std::size_t g) const { return rows_[g]; }
  const Bitset& column(std::size_t m) const { return cols_[m]; }
  const std::vector<Bitset>& rows() const { return rows_; }
  bool incident(std::size_t g, std::size_t m) const { return rows_[g].test(m); }
  std::size_t incidence_count() const;

  // A' — attributes common to all objects in A; A = ∅ yields all attributes.
  Bitset derive_objects(const Bitset& objects) const;
  // B' — objects having all attributes in B; B = ∅ yields all objects.
  Bitset derive_attributes(const Bitset& attributes) const;
  Bitset closure_objects(const Bitset& objects) const;
  Bitset closure_attributes(const Bitset& attributes) const;

  Bitset object_set(const std::vector<std::string>& names) const;
  Bitset attribute_set(const std::vector<std::string>& names) const;
  std::vector<std::string> object_names(const Bitset& set) const;
  std::vector<std::string> attribute_names(const Bitset& set) const;

  bool operator==(const FormalContext& o) const {
    return objects_ == o.objects_ && attributes_ == o.attributes_ && rows_ == o.rows_;
  }

 private:
  std::vector<std::string> objects_;
  std::vector<std::string> attributes_;
  std::vector<Bitset> rows_;  // per object, over attributes
  std::vector<Bitset> cols_;  // per attribute, over objects
  std::unordered_map<std::string, std::size_t> object_index_;
  std::unordered_map<std::string, std::size_t> attribute_index_;
};

// A subcontext [H,N] of a parent context; the induced incidence is I ∩ (H×N).
struct Subcontext {
  Bitset object_subset;     // over parent objects
  Bitset attribute_subset;  // over parent attributes

  FormalContext induced(const FormalContext& parent) const;
};

struct ClarifyResult {
  FormalContext context;
  // Groups of merged identifiers; first entry of each group is the kept one.
  std::vector<std::vector<std::string>> object_groups;
  std::vector<std::vector<std::string>> attribute_groups;
};

// Merges objects with identical rows and attributes with identical columns.
ClarifyResult clarify(const FormalContext& ctx);

struct ReduceResult {
  FormalContext context;
  std::vector<std::string> removed_objects;
  std::vector<std::string> removed_attributes;
};

// Removes reducible objects and attributes, iterated to a fixpoint. The
// concept lattice of the result is isomorphic to the input's.
ReduceResult reduce(const FormalContext& ctx);

bool is_reduced(const FormalContext& ctx);

// Arrow relations, used by the congruence machinery. Internal.
bool up_arrow(const FormalContext& ctx, std::size_t g, std::size_t m);
bool down_arrow(const FormalContext& ctx, std::size_t g, std::size_t m);

}  // namespace latfact
