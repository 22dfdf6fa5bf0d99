#include "ccx/constructions.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ccx/errors.hpp"
#include "ccx/fixtures.hpp"
#include "ccx/hypgraphs.hpp"

namespace ccx {
namespace {

Bits concat_bits(const Bits& a, const Bits& b) {
  Bits c(a.size() + b.size());
  for (int i = a.first_set(); i >= 0; i = a.next_set(i)) c.set(i);
  for (int i = b.first_set(); i >= 0; i = b.next_set(i)) c.set(a.size() + i);
  return c;
}

std::vector<std::string> joint_wall_names(const CubeComplex& a, const CubeComplex& b,
                                          const char* what) {
  std::vector<std::string> names = a.wall_names();
  std::unordered_set<std::string> seen(names.begin(), names.end());
  for (const auto& n : b.wall_names()) {
    if (!seen.insert(n).second)
      throw invalid_input_error(std::string(what) + ": wall name \"" + n +
                                "\" appears in both factors");
    names.push_back(n);
  }
  return names;
}

// Non-negative integer with strict parsing.
int parse_int(const std::string& s, const char* what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw invalid_input_error(std::string(what) + ": expected a non-negative integer, got \"" + s +
                              "\"");
  if (s.size() > 7) throw invalid_input_error(std::string(what) + ": value \"" + s + "\" too large");
  return std::stoi(s);
}

std::vector<std::string> split_params(const std::string& params) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : params) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() == 1 && parts[0].empty()) parts.clear();
  return parts;
}

std::string padded(const std::string& prefix, int i, int total) {
  int width = 2;
  for (int t = total - 1; t >= 100; t /= 10) ++width;
  std::string d = std::to_string(i);
  while (static_cast<int>(d.size()) < width) d.insert(d.begin(), '0');
  return prefix + d;
}

// Complex of a tree given as an edge list on vertices 0..n-1 (edge k dual to
// wall k): each vertex's bit vector records the edges on its path to vertex 0.
CubeComplex tree_complex(int n, const std::vector<std::pair<int, int>>& edges,
                         const std::string& wall_prefix) {
  int m = static_cast<int>(edges.size());
  if (m != n - 1) throw invalid_input_error("tree edge count must be vertex count minus one");
  std::vector<std::vector<std::pair<int, int>>> inc(n);  // vertex -> (other, edge index)
  for (int k = 0; k < m; ++k) {
    auto [u, v] = edges[k];
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw invalid_input_error("bad tree edge");
    inc[u].push_back({v, k});
    inc[v].push_back({u, k});
  }
  std::vector<Bits> verts(n, Bits(m));
  std::vector<int> order{0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t h = 0; h < order.size(); ++h) {
    int v = order[h];
    for (auto [u, k] : inc[v]) {
      if (seen[u]) continue;
      seen[u] = true;
      verts[u] = verts[v];
      verts[u].flip(k);
      order.push_back(u);
    }
  }
  if (static_cast<int>(order.size()) != n) throw invalid_input_error("tree is not connected");
  std::vector<std::string> names;
  names.reserve(m);
  for (int k = 0; k < m; ++k) names.push_back(padded(wall_prefix, k, m));
  return CubeComplex::from_vertices(std::move(names), std::move(verts));
}

CubeComplex tree_from_degree_sequence(const std::vector<int>& deg) {
  int n = static_cast<int>(deg.size());
  long long sum = 0;
  for (int d : deg) {
    if (d < 1) throw invalid_input_error("tree degree sequence entries must be positive");
    sum += d;
  }
  if (sum != 2LL * (n - 1))
    throw invalid_input_error("tree degree sequence must sum to twice the edge count");
  // Attach vertices in order, breadth-first: vertex 0 gets deg[0] children,
  // each later vertex deg[i]-1 children.
  std::vector<std::pair<int, int>> edges;
  std::queue<std::pair<int, int>> open;  // (vertex, remaining child slots)
  open.push({0, deg[0]});
  int next = 1;
  while (!open.empty()) {
    auto [v, slots] = open.front();
    open.pop();
    for (int s = 0; s < slots; ++s) {
      if (next >= n) throw invalid_input_error("degree sequence does not describe a tree");
      edges.push_back({v, next});
      open.push({next, deg[next] - 1});
      ++next;
    }
  }
  if (next != n) throw invalid_input_error("degree sequence does not describe a tree");
  return tree_complex(n, edges, "t");
}

CubeComplex rename_walls_prefixed(const CubeComplex& x, const std::string& prefix) {
  std::vector<std::string> names;
  names.reserve(x.num_walls());
  for (const auto& n : x.wall_names()) names.push_back(prefix + n);
  return CubeComplex::from_vertices(std::move(names), x.vertices());
}

CubeComplex random_wallspace_dual(int n_elements, int n_walls, std::uint64_t seed,
                                  int max_vertices) {
  if (n_elements < 2) throw invalid_input_error("random-wallspace needs at least 2 elements");
  if (n_walls < 1) throw invalid_input_error("random-wallspace needs at least 1 wall");
  std::vector<std::string> elements;
  elements.reserve(n_elements);
  for (int e = 0; e < n_elements; ++e) elements.push_back(padded("s", e, n_elements));
  std::mt19937_64 rng(seed);
  std::vector<Wall> walls;
  std::unordered_set<Bits, BitsHash> partitions;
  for (int w = 0; w < n_walls; ++w) {
    Bits plus(n_elements);
    for (int e = 0; e < n_elements; ++e)
      if (rng() & 1) plus.set(e);
    if (plus.none() || plus.count() == n_elements) continue;  // one-sided: drop
    Bits key = plus.get(0) ? ~plus : plus;
    if (!partitions.insert(key).second) continue;  // duplicate partition: drop
    walls.push_back({padded("w", static_cast<int>(walls.size()), n_walls), std::move(plus)});
  }
  if (walls.empty())
    throw invalid_input_error("random-wallspace: every drawn wall was one-sided or duplicate; "
                              "try another seed");
  auto ws = Wallspace::create(std::move(elements), std::move(walls));
  return sageev_dual(ws, 0, max_vertices);
}

}  // namespace

CubeComplex product(const CubeComplex& a, const CubeComplex& b) {
  auto names = joint_wall_names(a, b, "product");
  std::vector<Bits> verts;
  verts.reserve(static_cast<std::size_t>(a.num_vertices()) * b.num_vertices());
  for (const Bits& va : a.vertices())
    for (const Bits& vb : b.vertices()) verts.push_back(concat_bits(va, vb));
  return CubeComplex::from_vertices(std::move(names), std::move(verts));
}

CubeComplex wedge(const CubeComplex& a, const CubeComplex& b) {
  auto names = joint_wall_names(a, b, "wedge");
  Bits zero_a(a.num_walls()), zero_b(b.num_walls());
  std::vector<Bits> verts;
  verts.reserve(a.num_vertices() + b.num_vertices() - 1);
  for (const Bits& va : a.vertices()) verts.push_back(concat_bits(va, zero_b));
  for (int i = 0; i < b.num_vertices(); ++i) {
    if (i == b.base_index()) continue;  // shared base point
    verts.push_back(concat_bits(zero_a, b.vertex(i)));
  }
  return CubeComplex::from_vertices(std::move(names), std::move(verts));
}

CubeComplex realize_crossing_graph(const Graph& d, int max_vertices) {
  if (d.n() == 0) return CubeComplex::from_vertices({}, {Bits(0)});
  {
    std::unordered_set<std::string> seen;
    for (const auto& n : d.names())
      if (n.empty() || !seen.insert(n).second)
        throw invalid_input_error("graph vertex names must be nonempty and unique");
  }
  std::vector<int> label = d.components();
  int n_comps = *std::max_element(label.begin(), label.end()) + 1;
  std::vector<std::vector<int>> comps(n_comps);
  for (int v = 0; v < d.n(); ++v) comps[label[v]].push_back(v);

  std::optional<CubeComplex> result;
  for (const auto& comp : comps) {
    CubeComplex piece = [&]() {
      if (comp.size() == 1) {
        Bits zero(1), one(1);
        one.set(0);
        return CubeComplex::from_vertices({d.name(comp[0])}, {zero, one});
      }
      // Interval model: per graph vertex v, two endpoint elements v.a / v.b
      // and one slot element per incident edge; the two slots of an edge are
      // partners. The wall of v keeps v.a, v's own slots, and the partner
      // slots on v's side "plus"; everything else sits on the minus side.
      std::vector<std::string> elements;
      for (int v : comp) {
        const std::string& nm = d.name(v);
        elements.push_back(nm + ".a");
        elements.push_back(nm + ".b");
        for (int k = 0; k < d.degree(v); ++k) elements.push_back(nm + ".e" + std::to_string(k));
      }
      std::sort(elements.begin(), elements.end());
      std::unordered_map<std::string, int> at;
      for (std::size_t i = 0; i < elements.size(); ++i) at[elements[i]] = static_cast<int>(i);

      auto slot_name = [&](int v, int other) {
        int rank = 0;
        for (int u = d.row(v).first_set(); u >= 0; u = d.row(v).next_set(u)) {
          if (u == other) break;
          ++rank;
        }
        return d.name(v) + ".e" + std::to_string(rank);
      };

      std::vector<Wall> walls;
      walls.reserve(comp.size());
      for (int v : comp) {
        Bits plus(static_cast<int>(elements.size()));
        plus.set(at.at(d.name(v) + ".a"));
        for (int u = d.row(v).first_set(); u >= 0; u = d.row(v).next_set(u)) {
          plus.set(at.at(slot_name(v, u)));
          plus.set(at.at(slot_name(u, v)));
        }
        walls.push_back({d.name(v), std::move(plus)});
      }
      auto ws = Wallspace::create(std::move(elements), std::move(walls));
      try {
        return sageev_dual(ws, 0, max_vertices);
      } catch (const resource_limit_error& e) {
        Graph sub = d.induced(comp);
        throw resource_limit_error(std::string(e.what()) + " (component max crossing clique: " +
                                   std::to_string(max_clique(sub).size()) + ")");
      }
    }();
    if (!result)
      result = std::move(piece);
    else
      result = wedge(*result, piece);
  }
  return std::move(*result);
}

CubeComplex recubulate(const CubeComplex& x, int max_vertices) {
  if (x.num_walls() == 0) return x;
  HypGraph gamma = contact_graph(x);
  HypGraph delta = crossing_graph(x);
  const int W = x.num_walls();
  std::set<std::string> elems;
  for (const Bits& v : x.vertices()) elems.insert(v.to_string());
  for (int a = 0; a < W; ++a) {
    for (int b = a + 1; b < W; ++b) {
      if (!gamma.g.has_edge(a, b) || delta.g.has_edge(a, b)) continue;
      // a and b osculate: complete every 0-cube where both carriers meet to
      // the missing square's far corner.
      for (int v = 0; v < x.num_vertices(); ++v) {
        if (x.neighbor(v, a) < 0 || x.neighbor(v, b) < 0) continue;
        Bits corner = x.vertex(v);
        corner.flip(a);
        corner.flip(b);
        elems.insert(corner.to_string());
      }
    }
  }
  std::vector<std::string> elements(elems.begin(), elems.end());
  int n = static_cast<int>(elements.size());
  std::vector<Wall> walls(W);
  for (int w = 0; w < W; ++w) {
    walls[w].name = x.wall_name(w);
    walls[w].plus = Bits(n);
    for (int i = 0; i < n; ++i)
      if (elements[i][w] == '1') walls[w].plus.set(i);
  }
  auto ws = Wallspace::create(std::move(elements), std::move(walls));
  // The all-zero string sorts first among equal-width binary strings.
  return sageev_dual(ws, 0, max_vertices);
}

CubeComplex generate(const std::string& kind, const std::string& params, std::uint64_t seed,
                     int max_vertices) {
  auto parts = split_params(params);
  if (kind == "grid") {
    if (parts.size() != 2) throw invalid_input_error("grid expects params \"A,B\"");
    return grid_complex(parse_int(parts[0], "grid"), parse_int(parts[1], "grid"));
  }
  if (kind == "tree") {
    if (parts.empty()) throw invalid_input_error("tree expects parameters");
    if (parts[0] == "random") {
      if (parts.size() != 2) throw invalid_input_error("random tree expects params \"random,M\"");
      int m = parse_int(parts[1], "tree");
      if (m < 1) throw invalid_input_error("random tree needs at least one edge");
      std::mt19937_64 rng(seed);
      std::vector<std::pair<int, int>> edges;
      edges.reserve(m);
      for (int i = 1; i <= m; ++i)
        edges.push_back({static_cast<int>(rng() % static_cast<std::uint64_t>(i)), i});
      return tree_complex(m + 1, edges, "t");
    }
    if (parts.size() == 1) {
      int k = parse_int(parts[0], "tree");
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i < k; ++i) edges.push_back({0, i + 1});
      return tree_complex(k + 1, edges, "t");
    }
    std::vector<int> deg;
    deg.reserve(parts.size());
    for (const auto& p : parts) deg.push_back(parse_int(p, "tree"));
    return tree_from_degree_sequence(deg);
  }
  if (kind == "wedge") {
    if (parts.size() != 2) throw invalid_input_error("wedge expects params \"NAME1,NAME2\"");
    return wedge(rename_walls_prefixed(fixture(parts[0]), "a."),
                 rename_walls_prefixed(fixture(parts[1]), "b."));
  }
  if (kind == "random-wallspace") {
    if (parts.size() != 2)
      throw invalid_input_error("random-wallspace expects params \"ELEMENTS,WALLS\"");
    return random_wallspace_dual(parse_int(parts[0], "random-wallspace"),
                                 parse_int(parts[1], "random-wallspace"), seed, max_vertices);
  }
  if (kind == "fixture") {
    if (parts.size() != 1) throw invalid_input_error("fixture expects a single name");
    return fixture(parts[0]);
  }
  throw invalid_input_error("unknown generator kind \"" + kind + "\"");
}

}  // namespace ccx
