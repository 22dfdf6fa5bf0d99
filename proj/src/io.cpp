#include "ccx/io.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ccx/errors.hpp"

namespace ccx::io {
namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw invalid_input_error(std::string("not valid JSON: ") + e.what());
  }
}

std::string field_string(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string())
    throw invalid_input_error(std::string("missing or non-string field \"") + key + "\"");
  return j[key].get<std::string>();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

// Edges as sorted pairs of names, each pair name-sorted.
std::vector<std::pair<std::string, std::string>> named_edges(const Graph& g) {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto [a, b] : g.edges()) {
    std::string na = g.name(a), nb = g.name(b);
    if (nb < na) std::swap(na, nb);
    out.push_back({std::move(na), std::move(nb)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string sniff_format(const std::string& text) {
  json j = parse_json(text);
  return field_string(j, "format");
}

Wallspace parse_wallspace(const std::string& text) {
  json j = parse_json(text);
  if (field_string(j, "format") != "ccx-wallspace-v1")
    throw invalid_input_error("expected format ccx-wallspace-v1");
  if (!j.contains("elements") || !j["elements"].is_array())
    throw invalid_input_error("missing \"elements\" array");
  std::vector<std::string> elements;
  std::map<std::string, int> at;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) throw invalid_input_error("element ids must be strings");
    at[e.get<std::string>()] = static_cast<int>(elements.size());
    elements.push_back(e.get<std::string>());
  }
  if (!j.contains("walls") || !j["walls"].is_array())
    throw invalid_input_error("missing \"walls\" array");
  std::vector<Wall> walls;
  for (const auto& w : j["walls"]) {
    if (!w.is_object() || !w.contains("plus") || !w["plus"].is_array())
      throw invalid_input_error("each wall needs a \"plus\" array");
    Wall wall;
    if (w.contains("name")) wall.name = field_string(w, "name");
    wall.plus = Bits(static_cast<int>(elements.size()));
    for (const auto& id : w["plus"]) {
      if (!id.is_string()) throw invalid_input_error("wall plus sides list element ids");
      auto it = at.find(id.get<std::string>());
      if (it == at.end())
        throw invalid_input_error("wall references unknown element \"" + id.get<std::string>() +
                                  "\"");
      wall.plus.set(it->second);
    }
    walls.push_back(std::move(wall));
  }
  return Wallspace::create(std::move(elements), std::move(walls));
}

std::string serialize_wallspace(const Wallspace& ws) {
  std::vector<int> elem_order(ws.n_elements());
  std::iota(elem_order.begin(), elem_order.end(), 0);
  std::sort(elem_order.begin(), elem_order.end(),
            [&](int a, int b) { return ws.elements()[a] < ws.elements()[b]; });
  std::vector<int> wall_order(ws.n_walls());
  std::iota(wall_order.begin(), wall_order.end(), 0);
  std::sort(wall_order.begin(), wall_order.end(),
            [&](int a, int b) { return ws.walls()[a].name < ws.walls()[b].name; });
  json j;
  j["format"] = "ccx-wallspace-v1";
  j["elements"] = json::array();
  for (int e : elem_order) j["elements"].push_back(ws.elements()[e]);
  j["walls"] = json::array();
  for (int w : wall_order) {
    json jw;
    jw["name"] = ws.walls()[w].name;
    std::vector<std::string> plus;
    for (int e = ws.plus(w).first_set(); e >= 0; e = ws.plus(w).next_set(e))
      plus.push_back(ws.elements()[e]);
    std::sort(plus.begin(), plus.end());
    jw["plus"] = plus;
    j["walls"].push_back(std::move(jw));
  }
  return dump(j);
}

CubeComplex parse_complex(const std::string& text) {
  json j = parse_json(text);
  if (field_string(j, "format") != "ccx-complex-v1")
    throw invalid_input_error("expected format ccx-complex-v1");
  if (!j.contains("num_walls") || !j["num_walls"].is_number_integer())
    throw invalid_input_error("missing integer \"num_walls\"");
  int nw = j["num_walls"].get<int>();
  if (nw < 0) throw invalid_input_error("num_walls must be non-negative");
  std::vector<std::string> names;
  if (j.contains("wall_names")) {
    if (!j["wall_names"].is_array()) throw invalid_input_error("\"wall_names\" must be an array");
    for (const auto& n : j["wall_names"]) {
      if (!n.is_string()) throw invalid_input_error("wall names must be strings");
      names.push_back(n.get<std::string>());
    }
    if (static_cast<int>(names.size()) != nw)
      throw invalid_input_error("wall_names length must equal num_walls");
  }
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw invalid_input_error("missing \"vertices\" array");
  std::vector<Bits> verts;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw invalid_input_error("vertices must be bitstrings");
    const std::string s = v.get<std::string>();
    if (static_cast<int>(s.size()) != nw)
      throw invalid_input_error("vertex bitstring \"" + s + "\" does not have num_walls bits");
    if (s.find_first_not_of("01") != std::string::npos)
      throw invalid_input_error("vertex bitstring \"" + s + "\" has characters other than 0/1");
    verts.push_back(Bits::from_string(s));
  }
  if (verts.empty()) throw invalid_input_error("complex needs at least one vertex");
  if (verts.front().any())
    throw invalid_input_error("the first vertex must be the all-zero base");
  return CubeComplex::from_vertices(std::move(names), std::move(verts));
}

std::string serialize_complex(const CubeComplex& x) {
  int nw = x.num_walls();
  std::vector<int> order(nw);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return x.wall_name(a) < x.wall_name(b); });
  std::vector<std::string> names;
  names.reserve(nw);
  for (int w : order) names.push_back(x.wall_name(w));
  std::vector<std::string> rows;
  rows.reserve(x.num_vertices());
  for (const Bits& v : x.vertices()) {
    std::string s(nw, '0');
    for (int k = 0; k < nw; ++k)
      if (v.get(order[k])) s[k] = '1';
    rows.push_back(std::move(s));
  }
  std::sort(rows.begin(), rows.end());  // all-zero base sorts first
  json j;
  j["format"] = "ccx-complex-v1";
  j["num_walls"] = nw;
  j["wall_names"] = names;
  j["vertices"] = rows;
  return dump(j);
}

Graph parse_graph(const std::string& text) {
  json j = parse_json(text);
  if (field_string(j, "format") != "ccx-graph-v1")
    throw invalid_input_error("expected format ccx-graph-v1");
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw invalid_input_error("missing \"vertices\" array");
  std::vector<std::string> names;
  std::map<std::string, int> at;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw invalid_input_error("graph vertices must be strings");
    std::string s = v.get<std::string>();
    if (at.count(s)) throw invalid_input_error("duplicate graph vertex \"" + s + "\"");
    at[s] = static_cast<int>(names.size());
    names.push_back(std::move(s));
  }
  Graph g(names);
  if (!j.contains("edges") || !j["edges"].is_array())
    throw invalid_input_error("missing \"edges\" array");
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw invalid_input_error("each edge must be a pair of vertex names");
    auto ia = at.find(e[0].get<std::string>());
    auto ib = at.find(e[1].get<std::string>());
    if (ia == at.end() || ib == at.end())
      throw invalid_input_error("edge references an unknown vertex");
    if (ia->second == ib->second) throw invalid_input_error("self-loops are not allowed");
    g.add_edge(ia->second, ib->second);
  }
  return g;
}

std::string serialize_graph(const Graph& g) {
  std::vector<std::string> names = g.names();
  std::sort(names.begin(), names.end());
  json j;
  j["format"] = "ccx-graph-v1";
  j["vertices"] = names;
  j["edges"] = json::array();
  for (const auto& [a, b] : named_edges(g)) j["edges"].push_back(json::array({a, b}));
  return dump(j);
}

std::string dot_graph(const Graph& g) {
  std::vector<std::string> names = g.names();
  std::sort(names.begin(), names.end());
  std::string out = "graph ccx {\n";
  for (const auto& n : names) out += "  " + dot_quote(n) + ";\n";
  for (const auto& [a, b] : named_edges(g))
    out += "  " + dot_quote(a) + " -- " + dot_quote(b) + ";\n";
  out += "}\n";
  return out;
}

std::string dot_overlay(const Graph& crossing, const Graph& contact) {
  if (crossing.n() != contact.n())
    throw invalid_input_error("overlay needs graphs on the same wall set");
  std::vector<std::string> names = contact.names();
  std::sort(names.begin(), names.end());
  std::string out = "graph ccx {\n";
  for (const auto& n : names) out += "  " + dot_quote(n) + ";\n";
  for (const auto& [a, b] : named_edges(crossing))
    out += "  " + dot_quote(a) + " -- " + dot_quote(b) + ";\n";
  std::vector<std::pair<std::string, std::string>> solid = named_edges(crossing);
  for (const auto& [a, b] : named_edges(contact)) {
    if (std::binary_search(solid.begin(), solid.end(), std::make_pair(a, b))) continue;
    out += "  " + dot_quote(a) + " -- " + dot_quote(b) + " [style=dashed];\n";
  }
  out += "}\n";
  return out;
}

std::string dot_root_tree(const RootTree& t, const Grading& gr, const HypGraph& g) {
  std::string out = "graph roots {\n  rankdir=TB;\n";
  int max_grade = 0;
  for (int gd : t.node_grade) max_grade = std::max(max_grade, gd);
  for (int gd = 0; gd <= max_grade; ++gd) {
    out += "  { rank=same;";
    for (int i = 0; i < t.tree.n(); ++i)
      if (t.node_grade[i] == gd) out += " " + dot_quote(t.tree.name(i)) + ";";
    out += " }\n";
  }
  for (int i = 0; i < t.tree.n(); ++i) {
    std::string label = t.tree.name(i) + ":";
    for (std::size_t k = 0; k < gr.root_members[i].size(); ++k)
      label += (k ? "," : " ") + g.g.name(gr.root_members[i][k]);
    out += "  " + dot_quote(t.tree.name(i)) + " [label=" + dot_quote(label) + "];\n";
  }
  for (const auto& [a, b] : named_edges(t.tree))
    out += "  " + dot_quote(a) + " -- " + dot_quote(b) + ";\n";
  out += "}\n";
  return out;
}

std::string grading_document(const HypGraph& g, const Grading& gr) {
  json j = parse_json(serialize_graph(g.g));
  j["base"] = g.g.name(gr.base);
  json grades = json::object();
  for (int w = 0; w < g.g.n(); ++w) grades[g.g.name(w)] = gr.grade[w];
  j["grades"] = std::move(grades);
  j["roots"] = json::array();
  for (std::size_t r = 0; r < gr.root_members.size(); ++r) {
    json jr;
    jr["grade"] = gr.root_grade[r];
    std::vector<std::string> members;
    for (int w : gr.root_members[r]) members.push_back(g.g.name(w));
    std::sort(members.begin(), members.end());
    jr["members"] = members;
    j["roots"].push_back(std::move(jr));
  }
  return dump(j);
}

std::string root_tree_document(const RootTree& t, const Grading& gr, const HypGraph& g) {
  json j = parse_json(serialize_graph(t.tree));
  json grades = json::object(), members = json::object();
  for (int i = 0; i < t.tree.n(); ++i) {
    grades[t.tree.name(i)] = t.node_grade[i];
    std::vector<std::string> m;
    for (int w : gr.root_members[i]) m.push_back(g.g.name(w));
    std::sort(m.begin(), m.end());
    members[t.tree.name(i)] = m;
  }
  j["node_grades"] = std::move(grades);
  j["members"] = std::move(members);
  return dump(j);
}

std::string analysis_document(const AnalysisReport& r, const CubeComplex& x) {
  json j;
  j["format"] = "ccx-report-v1";
  j["num_vertices"] = r.num_vertices;
  j["num_walls"] = r.num_walls;
  j["dimension"] = r.dimension;
  j["degree"] = r.degree;
  j["local_dimension"] = r.local_dimension;
  j["biclique_p"] = r.biclique.p();
  j["biclique_q"] = r.biclique.q();
  auto side_names = [&](const std::vector<int>& side) {
    std::vector<std::string> names;
    for (int w : side) names.push_back(x.wall_name(w));
    std::sort(names.begin(), names.end());
    return names;
  };
  j["biclique_side_h"] = side_names(r.biclique.side_h);
  j["biclique_side_v"] = side_names(r.biclique.side_v);
  j["biclique_skipped"] = r.biclique_skipped;
  j["four_point_delta_doubled"] = r.four_point.doubled;
  j["four_point_delta"] = r.four_point.value();
  j["four_point_witness"] = r.four_point.witness;
  j["four_point_skipped"] = r.four_point_skipped;
  j["largest_grid_r"] = r.largest_grid_r;
  j["grid_stopped_uncertified"] = r.grid_stopped_uncertified;
  j["grid_search_capped"] = r.grid_search_capped;
  j["max_root_diameter"] = r.max_root_diameter;
  j["min_bottleneck_delta_doubled"] = r.min_bottleneck_doubled;
  j["caveat"] = r.caveat;
  return dump(j);
}

}  // namespace ccx::io
