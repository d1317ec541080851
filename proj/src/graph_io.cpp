#include "raag/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "raag/errors.hpp"

namespace raag {

namespace {

using nlohmann::json;

class Builder {
 public:
  // Returns false when the name was already present.
  bool declare(const std::string& name) {
    if (index_.count(name)) return false;
    index_.emplace(name, static_cast<Vertex>(names_.size()));
    names_.push_back(name);
    return true;
  }
  Vertex get(const std::string& name) {
    declare(name);
    return index_.at(name);
  }
  bool known(const std::string& name) const { return index_.count(name) != 0; }
  void edge(Vertex a, Vertex b) { edges_.emplace_back(a, b); }
  Graph build() const { return Graph(names_, edges_); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<Edge> edges_;
};

std::string vertex_name(const json& j, const std::string& where) {
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s.empty()) throw InputError(where + ": empty vertex name");
    return s;
  }
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw InputError(where + ": vertex must be a string or an integer");
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_tokens(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ' ' || ch == '\t' || ch == ',') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

}  // namespace

Graph parse_graph_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("graph JSON must be an object");
  for (const auto& [key, _] : doc.items())
    if (key != "vertices" && key != "edges")
      throw InputError("field '" + key + "': unexpected field");

  Builder b;
  const bool declared = doc.contains("vertices");
  if (declared) {
    const auto& vs = doc["vertices"];
    if (!vs.is_array()) throw InputError("field 'vertices': expected an array");
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const std::string where = "field 'vertices[" + std::to_string(i) + "]'";
      const auto name = vertex_name(vs[i], where);
      if (!b.declare(name))
        throw InputError(where + ": duplicate vertex '" + name + "'");
    }
  }
  if (doc.contains("edges")) {
    const auto& es = doc["edges"];
    if (!es.is_array()) throw InputError("field 'edges': expected an array");
    for (std::size_t i = 0; i < es.size(); ++i) {
      const std::string where = "field 'edges[" + std::to_string(i) + "]'";
      if (!es[i].is_array() || es[i].size() != 2)
        throw InputError(where + ": expected a pair [a, b]");
      const auto a = vertex_name(es[i][0], where);
      const auto c = vertex_name(es[i][1], where);
      for (const auto& n : {a, c})
        if (declared && !b.known(n))
          throw InputError(where + ": unknown vertex '" + n + "'");
      if (a == c) throw InputError(where + ": self-loop at '" + a + "'");
      const Vertex va = b.get(a);
      b.edge(va, b.get(c));
    }
  }
  return b.build();
}

Graph parse_graph_text(std::string_view text) {
  Builder b;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const std::string where = "line " + std::to_string(line_no);
    if (auto hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.rfind("vertices:", 0) == 0) {
      for (const auto& name : split_tokens(line.substr(9)))
        if (!b.declare(name))
          throw InputError(where + ": duplicate vertex '" + name + "'");
      continue;
    }
    const auto toks = split_tokens(line);
    if (toks.size() != 2)
      throw InputError(where + ": expected an edge 'a b', got '" + line + "'");
    if (toks[0] == toks[1])
      throw InputError(where + ": self-loop at '" + toks[0] + "'");
    const Vertex x = b.get(toks[0]);
    b.edge(x, b.get(toks[1]));
  }
  return b.build();
}

Graph parse_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{')
    return parse_graph_json(text);
  return parse_graph_text(text);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read graph file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_graph(ss.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string graph_to_json(const Graph& g) {
  json j;
  j["vertices"] = g.names();
  j["edges"] = json::array();
  for (auto [a, c] : g.edges()) j["edges"].push_back({g.name(a), g.name(c)});
  return j.dump();
}

}  // namespace raag
