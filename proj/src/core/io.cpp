#include "io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace latfact {

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) {
    if (cur.back() == '\r') cur.pop_back();
    lines.push_back(cur);
  }
  return lines;
}

[[noreturn]] void cxt_error(std::size_t line, const std::string& what) {
  throw InputError("cxt parse error at line " + std::to_string(line + 1) + ": " + what);
}

std::size_t parse_count(const std::vector<std::string>& lines, std::size_t at) {
  if (at >= lines.size()) cxt_error(at, "unexpected end of file, expected a count");
  const std::string& s = lines[at];
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    cxt_error(at, "expected a nonnegative count, got '" + s + "'");
  return static_cast<std::size_t>(std::stoul(s));
}

}  // namespace

FormalContext parse_cxt(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty() || lines[0] != "B") cxt_error(0, "expected 'B'");
  if (lines.size() < 2 || !lines[1].empty()) cxt_error(1, "expected a blank line");
  std::size_t gcount = parse_count(lines, 2);
  std::size_t mcount = parse_count(lines, 3);
  if (lines.size() < 5 || !lines[4].empty()) cxt_error(4, "expected a blank line");
  std::size_t at = 5;
  if (lines.size() < at + gcount + mcount + gcount)
    cxt_error(lines.size() - 1, "unexpected end of file");
  std::vector<std::string> objects(lines.begin() + at, lines.begin() + at + gcount);
  at += gcount;
  std::vector<std::string> attributes(lines.begin() + at, lines.begin() + at + mcount);
  at += mcount;
  std::vector<Bitset> rows;
  for (std::size_t g = 0; g < gcount; ++g, ++at) {
    const std::string& r = lines[at];
    if (r.size() != mcount) cxt_error(at, "row width does not match attribute count");
    Bitset bits(mcount);
    for (std::size_t m = 0; m < mcount; ++m) {
      if (r[m] == 'X')
        bits.set(m);
      else if (r[m] != '.')
        cxt_error(at, std::string("expected '.' or 'X', got '") + r[m] + "'");
    }
    rows.push_back(std::move(bits));
  }
  return FormalContext(std::move(objects), std::move(attributes), std::move(rows));
}

std::string to_cxt(const FormalContext& ctx) {
  std::ostringstream out;
  out << "B\n\n" << ctx.object_count() << "\n" << ctx.attribute_count() << "\n\n";
  for (const auto& o : ctx.objects()) out << o << "\n";
  for (const auto& a : ctx.attributes()) out << a << "\n";
  for (std::size_t g = 0; g < ctx.object_count(); ++g) {
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
      out << (ctx.incident(g, m) ? 'X' : '.');
    out << "\n";
  }
  return out.str();
}

std::string lattice_to_json(const ConceptLattice& lat) {
  nlohmann::json j;
  j["concepts"] = nlohmann::json::array();
  for (const Concept& c : lat.concepts()) {
    nlohmann::json jc;
    jc["extent"] = lat.context().object_names(c.extent);
    jc["intent"] = lat.context().attribute_names(c.intent);
    j["concepts"].push_back(std::move(jc));
  }
  j["covers"] = nlohmann::json::array();
  for (auto [lo, hi] : lat.order().cover_pairs()) j["covers"].push_back({lo, hi});
  return j.dump(2) + "\n";
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ",";
    out += names[i];
  }
  return out;
}

}  // namespace

std::string lattice_to_dot(const ConceptLattice& lat) {
  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n  node [shape=ellipse];\n";
  std::vector<int> height(lat.size());
  int max_h = 0;
  for (std::size_t c = 0; c < lat.size(); ++c) {
    height[c] = lat.order().height(static_cast<int>(c));
    max_h = std::max(max_h, height[c]);
  }
  for (std::size_t c = 0; c < lat.size(); ++c) {
    std::string objs = join_names(lat.object_labels(static_cast<int>(c)));
    std::string atts = join_names(lat.attribute_labels(static_cast<int>(c)));
    out << "  c" << c << " [label=\"" << dot_escape(atts) << (atts.empty() ? "" : "\\n")
        << dot_escape(objs) << "\"];\n";
  }
  for (int h = 0; h <= max_h; ++h) {
    out << "  { rank=same;";
    for (std::size_t c = 0; c < lat.size(); ++c)
      if (height[c] == h) out << " c" << c << ";";
    out << " }\n";
  }
  for (auto [lo, hi] : lat.order().cover_pairs())
    out << "  c" << lo << " -> c" << hi << ";\n";
  out << "}\n";
  return out.str();
}

std::string factor_to_json(const FactorStructure& f, const Poset& base) {
  nlohmann::json j;
  j["classes"] = nlohmann::json::array();
  for (const auto& cls : f.classes) {
    nlohmann::json members = nlohmann::json::array();
    cls.for_each([&](std::size_t x) { members.push_back(base.name(static_cast<int>(x))); });
    j["classes"].push_back(std::move(members));
  }
  switch (f.kind) {
    case FactorKind::preorder: j["kind"] = "preorder"; break;
    case FactorKind::partial_order: j["kind"] = "partial-order"; break;
    case FactorKind::lattice: j["kind"] = "lattice"; break;
  }
  j["relation"] = nlohmann::json::array();
  for (std::size_t a = 0; a < f.relation.size(); ++a)
    for (std::size_t b = 0; b < f.relation.size(); ++b)
      if (a != b && f.relation[a].test(b)) j["relation"].push_back({a, b});
  if (!f.cycle.empty()) j["cycle"] = f.cycle;
  if (f.kind == FactorKind::partial_order) {
    j["lattice_failure"] = {{"x", f.lattice_failure.x},
                            {"y", f.lattice_failure.y},
                            {"side", f.lattice_failure.join_side ? "join" : "meet"},
                            {"bounds", f.lattice_failure.candidates}};
  }
  return j.dump(2) + "\n";
}

std::string factor_to_dot(const FactorStructure& f, const Poset& base) {
  if (f.kind == FactorKind::preorder)
    throw StructuralError("factor is only a preorder; DOT export needs an order");
  Poset p = f.as_poset();
  std::ostringstream out;
  out << "digraph factor {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t c = 0; c < p.size(); ++c) {
    std::vector<std::string> names;
    f.classes[c].for_each([&](std::size_t x) { names.push_back(base.name(static_cast<int>(x))); });
    out << "  k" << c << " [label=\"" << dot_escape(join_names(names)) << "\"];\n";
  }
  for (auto [lo, hi] : p.cover_pairs()) out << "  k" << lo << " -> k" << hi << ";\n";
  out << "}\n";
  return out.str();
}

Poset parse_lattice_json(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, true);
  if (!j.contains("concepts") || !j.contains("covers"))
    throw InputError("lattice json: missing 'concepts' or 'covers'");
  std::size_t n = j["concepts"].size();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
  std::vector<std::pair<int, int>> covers;
  for (const auto& e : j["covers"]) {
    if (!e.is_array() || e.size() != 2) throw InputError("lattice json: malformed cover pair");
    covers.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Poset::from_covers(n, covers, std::move(names));
}

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

int resolve_endpoint(const ConceptLattice& lat, std::string_view ep) {
  const FormalContext& ctx = lat.context();
  std::string s(ep);
  if (s == "top") return lat.top();
  if (s == "bottom") return lat.bottom();
  if (s == "all") return lat.top();
  if (s.rfind("idx:", 0) == 0) {
    int k = std::stoi(s.substr(4));
    if (k < 0 || k >= static_cast<int>(lat.size()))
      throw InputError("interval spec: concept index out of range: " + s);
    return k;
  }
  bool is_att = s.rfind("att:", 0) == 0;
  bool is_obj = s.rfind("obj:", 0) == 0;
  std::string list = (is_att || is_obj) ? s.substr(4) : s;
  std::vector<std::string> names = split(list, ',');
  names.erase(std::remove(names.begin(), names.end(), std::string()), names.end());
  if (is_att) {
    Bitset b = ctx.attribute_set(names);
    return *lat.find_by_extent(ctx.derive_attributes(b));
  }
  Bitset a = ctx.object_set(names);
  return *lat.find_by_extent(ctx.closure_objects(a));
}

}  // namespace

Interval resolve_interval_spec(const ConceptLattice& lat, std::string_view spec) {
  std::string s(spec);
  auto sep = s.find(":top=");
  if (s.rfind("bottom=", 0) != 0 || sep == std::string::npos)
    throw InputError("interval spec: expected bottom=<ep>:top=<ep>, got '" + s + "'");
  std::string bottom_spec = s.substr(7, sep - 7);
  std::string top_spec = s.substr(sep + 5);
  if (bottom_spec.empty() || top_spec.empty())
    throw InputError("interval spec: both bottom= and top= are required");
  Interval iv{resolve_endpoint(lat, bottom_spec), resolve_endpoint(lat, top_spec)};
  if (!lat.leq(iv.bottom, iv.top))
    throw InputError("interval spec: bottom does not lie below top");
  return iv;
}

}  // namespace latfact
