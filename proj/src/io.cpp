#include "coarsehh/io.hpp"
#include "coarsehh/error.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace coarsehh {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InvalidInput("at " + path + ": " + what);
}

const json& require(const json& obj, const char* key, const std::string& path) {
  if (!obj.contains(key)) fail(path, std::string("missing field '") + key + "'");
  return obj.at(key);
}

std::uint32_t index_value(const json& v, std::size_t bound, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer index");
  const auto i = v.get<std::int64_t>();
  if (i < 0 || static_cast<std::uint64_t>(i) >= bound) fail(path, "index " + std::to_string(i) + " out of range");
  return static_cast<std::uint32_t>(i);
}

PointIndex point_ref(const json& v, const std::map<std::string, PointIndex>& by_label, std::size_t n,
                     const std::string& path) {
  if (v.is_string()) {
    auto it = by_label.find(v.get<std::string>());
    if (it == by_label.end()) fail(path, "unknown point '" + v.get<std::string>() + "'");
    return it->second;
  }
  return index_value(v, n, path);
}

std::vector<std::string> string_list(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected a list of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) fail(path + "[" + std::to_string(i) + "]", "expected a string");
    out.push_back(v[i].get<std::string>());
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> index_matrix(const json& v, std::size_t rows, std::size_t cols,
                                                     std::size_t bound, const std::string& path) {
  if (!v.is_array() || v.size() != rows) fail(path, "expected " + std::to_string(rows) + " rows");
  std::vector<std::vector<std::uint32_t>> out(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rp = path + "[" + std::to_string(r) + "]";
    if (!v[r].is_array() || v[r].size() != cols) fail(rp, "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c)
      out[r].push_back(index_value(v[r][c], bound, rp + "[" + std::to_string(c) + "]"));
  }
  return out;
}

// Rethrows construction errors with the field path they belong to.
template <class F>
auto at_path(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const InvalidInput& e) {
    fail(path, e.what());
  }
}

GroupPtr named_group(const std::string& name) {
  return std::make_shared<const FiniteGroup>(FiniteGroup::by_name(name));
}

std::size_t parse_count(const std::string& text, const std::string& name) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || text.size() > 6)
    throw InvalidInput("built-in " + name + " needs a small nonnegative integer, got '" + text + "'");
  return std::stoul(text);
}

}  // namespace

SpacePtr parse_space(const json& doc) {
  if (!doc.is_object()) fail("$", "expected an object");
  static const std::set<std::string> known{"points", "entourage_generators", "bornology_generators", "group",
                                           "action"};
  for (const auto& [key, value] : doc.items())
    if (!known.contains(key)) fail("$." + key, "unknown field");

  const auto points = string_list(require(doc, "points", "$"), "$.points");
  const std::size_t n = points.size();
  std::map<std::string, PointIndex> by_label;
  for (std::size_t i = 0; i < n; ++i)
    if (!by_label.emplace(points[i], static_cast<PointIndex>(i)).second)
      fail("$.points[" + std::to_string(i) + "]", "duplicate point '" + points[i] + "'");

  PairSet gens;
  if (doc.contains("entourage_generators")) {
    const json& e = doc.at("entourage_generators");
    if (!e.is_array()) fail("$.entourage_generators", "expected a list of pairs");
    for (std::size_t i = 0; i < e.size(); ++i) {
      const std::string p = "$.entourage_generators[" + std::to_string(i) + "]";
      if (!e[i].is_array() || e[i].size() != 2) fail(p, "expected a 2-element point list");
      gens.insert({point_ref(e[i][0], by_label, n, p + "[0]"), point_ref(e[i][1], by_label, n, p + "[1]")});
    }
  } else {
    fail("$", "missing field 'entourage_generators'");
  }

  std::vector<PointSet> born;
  if (doc.contains("bornology_generators")) {
    const json& b = doc.at("bornology_generators");
    if (!b.is_array()) fail("$.bornology_generators", "expected a list of point lists");
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::string p = "$.bornology_generators[" + std::to_string(i) + "]";
      if (!b[i].is_array()) fail(p, "expected a point list");
      PointSet s;
      for (std::size_t j = 0; j < b[i].size(); ++j)
        s.insert(point_ref(b[i][j], by_label, n, p + "[" + std::to_string(j) + "]"));
      born.push_back(std::move(s));
    }
  } else {
    for (PointIndex i = 0; i < n; ++i) born.push_back({i});
  }

  GroupPtr group;
  if (doc.contains("group")) {
    const json& g = doc.at("group");
    if (!g.is_object()) fail("$.group", "expected an object");
    for (const auto& [key, value] : g.items())
      if (key != "elements" && key != "table") fail("$.group." + key, "unknown field");
    auto labels = string_list(require(g, "elements", "$.group"), "$.group.elements");
    if (labels.empty()) fail("$.group.elements", "a group needs at least one element");
    const std::size_t order = labels.size();
    auto table = index_matrix(require(g, "table", "$.group"), order, order, order, "$.group.table");
    group = at_path("$.group", [&] { return std::make_shared<const FiniteGroup>(std::move(labels), std::move(table)); });
  } else {
    group = named_group("1");
  }

  std::vector<std::vector<PointIndex>> action;
  if (doc.contains("action")) {
    action = index_matrix(doc.at("action"), group->order(), n, std::max<std::size_t>(n, 1), "$.action");
  } else {
    if (group->order() != 1) fail("$", "missing field 'action' for a nontrivial group");
    action.emplace_back();
    for (PointIndex i = 0; i < n; ++i) action[0].push_back(i);
  }

  return at_path("$", [&] {
    return std::make_shared<const GBornCoarseSpace>(points, std::move(gens), std::move(born), group, std::move(action));
  });
}

SpacePtr parse_space(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line and column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < json_text.size(); ++i) {
      if (json_text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InvalidInput("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                       e.what());
  }
  return parse_space(doc);
}

SpacePtr load_space(const std::string& source) {
  if (!source.empty() && source[0] == '@') return builtin_space(source);
  std::ifstream in(source);
  if (!in) throw InvalidInput("cannot open '" + source + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_space(buf.str());
  } catch (const InvalidInput& e) {
    throw InvalidInput(source + ": " + e.what());
  }
}

SpacePtr builtin_space(const std::string& name) {
  const auto colon = name.find(':');
  const std::string head = name.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : name.substr(colon + 1);
  auto group_pair = [&]() {
    const auto slash = arg.find('/');
    if (slash == std::string::npos) throw InvalidInput(head + " expects <group>/<subgroup>");
    auto g = named_group(arg.substr(0, slash));
    const auto h = g->subgroup_by_name(arg.substr(slash + 1));
    return std::make_pair(g, h);
  };
  if (head == "@point" && arg.empty()) return point_space();
  if (head == "@empty" && arg.empty()) return component_space({});
  if (head == "@gcanmin") return g_can_min(named_group(arg));
  if (head == "@minmax") {
    auto [g, h] = group_pair();
    return min_max_space(g, coset_space(*g, h));
  }
  if (head == "@gmodh") {
    auto [g, h] = group_pair();
    return tensor(*min_max_space(g, coset_space(*g, h)), *g_can_min(g));
  }
  if (head == "@discrete") return component_space(std::vector<std::size_t>(parse_count(arg, head), 1));
  if (head == "@component") {
    const auto n = parse_count(arg, head);
    return component_space(n == 0 ? std::vector<std::size_t>{} : std::vector<std::size_t>{n});
  }
  if (head == "@components") {
    std::vector<std::size_t> sizes;
    std::stringstream ss(arg);
    std::string part;
    while (std::getline(ss, part, ',')) sizes.push_back(parse_count(part, head));
    return component_space(sizes);
  }
  throw InvalidInput("unknown built-in space '" + name + "'");
}

nlohmann::ordered_json space_to_json(const GBornCoarseSpace& x) {
  nlohmann::ordered_json j;
  j["points"] = x.points();
  auto gens = nlohmann::ordered_json::array();
  for (const auto& [a, b] : x.entourage_generators()) gens.push_back({x.points()[a], x.points()[b]});
  j["entourage_generators"] = gens;
  auto born = nlohmann::ordered_json::array();
  for (const auto& b : x.bornology_generators()) {
    auto list = nlohmann::ordered_json::array();
    for (auto p : b) list.push_back(x.points()[p]);
    born.push_back(list);
  }
  j["bornology_generators"] = born;
  j["group"] = {{"elements", x.group().labels()}, {"table", x.group().table()}};
  j["action"] = x.action();
  return j;
}

}  // namespace coarsehh
