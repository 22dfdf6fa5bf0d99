#include "ccx/complex.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <unordered_set>

#include "ccx/errors.hpp"
#include "ccx/kernels.hpp"

namespace ccx {

CubeComplex CubeComplex::from_vertices(std::vector<std::string> wall_names,
                                       std::vector<Bits> verts) {
  if (verts.empty()) throw invalid_input_error("complex needs at least one vertex");
  int w = verts[0].size();
  if (wall_names.empty())
    for (int i = 0; i < w; ++i) wall_names.push_back("W" + std::to_string(i));
  if (static_cast<int>(wall_names.size()) != w)
    throw invalid_input_error("wall name count does not match orientation width");
  {
    std::unordered_set<std::string> seen;
    for (const auto& s : wall_names)
      if (!seen.insert(s).second) throw invalid_input_error("duplicate wall name \"" + s + "\"");
  }
  for (const auto& v : verts)
    if (v.size() != w) throw invalid_input_error("vertex bitstrings have mixed widths");

  // Canonical order: base first, the rest lexicographic.
  Bits base(w);
  std::sort(verts.begin(), verts.end(), BitsLexLess{});
  if (verts[0] != base) throw invalid_input_error("the all-zero base vertex is missing");

  CubeComplex x;
  x.wall_names_ = std::move(wall_names);
  x.verts_ = std::move(verts);
  int n = x.num_vertices();
  for (int i = 0; i < n; ++i)
    if (!x.index_.emplace(x.verts_[i], i).second)
      throw invalid_input_error("duplicate vertex bitstring " + x.verts_[i].to_string());

  x.nbr_.assign(n, std::vector<int>(w, -1));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < w; ++k) {
      Bits f = x.verts_[i];
      f.flip(k);
      x.nbr_[i][k] = x.find_vertex(f);
    }

  // Connectivity under single-bit flips.
  {
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    seen[0] = 1;
    q.push(0);
    int found = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int k = 0; k < w; ++k) {
        int u = x.nbr_[v][k];
        if (u >= 0 && !seen[u]) {
          seen[u] = 1;
          ++found;
          q.push(u);
        }
      }
    }
    if (found != n) throw invalid_input_error("vertex set is not flip-connected");
  }

  x.side1_.assign(w, Bits(n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < w; ++k)
      if (x.verts_[i].get(k)) x.side1_[k].set(i);
  {
    std::unordered_set<Bits, BitsHash> parts;
    for (int k = 0; k < w; ++k) {
      int c = x.side1_[k].count();
      if (c == 0 || c == n)
        throw invalid_input_error("wall \"" + x.wall_names_[k] +
                                  "\" does not split the vertex set into two nonempty parts");
      // side1 never contains the base, so it is already the canonical key.
      if (!parts.insert(x.side1_[k]).second)
        throw invalid_input_error("walls \"" + x.wall_names_[k] +
                                  "\" and an earlier wall induce the same vertex partition");
    }
  }
  return x;
}

int CubeComplex::wall_index_by_name(const std::string& name) const {
  for (int w = 0; w < num_walls(); ++w)
    if (wall_names_[w] == name) return w;
  return -1;
}

int CubeComplex::median(int x, int y, int z) const {
  Bits maj = Bits::majority(verts_[x], verts_[y], verts_[z]);
  int m = find_vertex(maj);
  if (m < 0)
    throw internal_error("median closure violated at triple (" + std::to_string(x) + "," +
                         std::to_string(y) + "," + std::to_string(z) + ")");
  return m;
}

int gate(const CubeComplex& X, int x, const Bits& C) {
  if (C.none()) throw invalid_input_error("gate target set is empty");
  int g = -1, dg = -1;
  for (int c = C.first_set(); c != -1; c = C.next_set(c)) {
    int d = X.distance(x, c);
    if (g == -1 || d < dg) {
      g = c;
      dg = d;
    }
  }
  for (int c = C.first_set(); c != -1; c = C.next_set(c))
    if (X.distance(x, c) != dg + X.distance(g, c))
      throw check_violation("gate is not unique (target set is not gated)",
                            "x=" + std::to_string(x) + " nearest=" + std::to_string(g) +
                                " violating member=" + std::to_string(c));
  return g;
}

Bits carrier_mask(const CubeComplex& X, int w) {
  Bits m(X.num_vertices());
  for (int v = 0; v < X.num_vertices(); ++v)
    if (X.neighbor(v, w) >= 0) m.set(v);
  return m;
}

SeparationResult separates(const CubeComplex& X, int u, const SideSet& a, const SideSet& b) {
  auto resolve = [&](const SideSet& s) -> Bits {
    if (std::holds_alternative<int>(s)) return carrier_mask(X, std::get<int>(s));
    return std::get<Bits>(s);
  };
  Bits am = resolve(a), bm = resolve(b);
  if (am.none() || bm.none()) throw invalid_input_error("separation query with an empty side");
  const Bits& far = X.far_side(u);
  Bits near = ~far;
  bool a_far = am.is_subset_of(far), a_near = am.is_subset_of(near);
  bool b_far = bm.is_subset_of(far), b_near = bm.is_subset_of(near);
  SeparationResult r;
  r.a_straddles = !a_far && !a_near;
  r.b_straddles = !b_far && !b_near;
  r.separates = (a_far && b_near) || (a_near && b_far);
  return r;
}

CubeComplex sageev_dual(const Wallspace& ws, int base_element, int max_vertices) {
  if (base_element < 0 || base_element >= ws.n_elements())
    throw invalid_input_error("base element index out of range");
  int W = ws.n_walls();

  // side[w][0]: halfspace containing the base; side[w][1]: the other one.
  std::vector<std::array<Bits, 2>> side;
  side.reserve(W);
  for (int w = 0; w < W; ++w) {
    Bits p = ws.plus(w), m = ws.minus(w);
    if (p.get(base_element))
      side.push_back({p, m});
    else
      side.push_back({m, p});
  }
  // meets[(a*W+b)*4 + sa*2+sb]: do the chosen halfspaces intersect?
  std::vector<char> meets(static_cast<std::size_t>(W) * W * 4, 1);
  for (int a = 0; a < W; ++a)
    for (int b = 0; b < W; ++b)
      if (a != b)
        for (int sa = 0; sa < 2; ++sa)
          for (int sb = 0; sb < 2; ++sb)
            meets[(static_cast<std::size_t>(a) * W + b) * 4 + sa * 2 + sb] =
                side[a][sa].intersects(side[b][sb]) ? 1 : 0;

  std::unordered_map<Bits, int, BitsHash> seen;
  std::vector<Bits> found;
  Bits start(W);
  seen.emplace(start, 0);
  found.push_back(start);
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int i = q.front();
    q.pop();
    Bits f = found[i];
    for (int w = 0; w < W; ++w) {
      int fw = f.get(w) ? 1 : 0;
      bool can_flip = true;
      for (int v = 0; v < W && can_flip; ++v) {
        if (v == w) continue;
        int fv = f.get(v) ? 1 : 0;
        if (!meets[(static_cast<std::size_t>(w) * W + v) * 4 + (1 - fw) * 2 + fv])
          can_flip = false;
      }
      if (!can_flip) continue;
      Bits g = f;
      g.flip(w);
      if (seen.emplace(g, static_cast<int>(found.size())).second) {
        if (static_cast<int>(found.size()) >= max_vertices)
          throw resource_limit_error("vertex cap exceeded while enumerating the dual (cap " +
                                     std::to_string(max_vertices) + ")");
        found.push_back(g);
        q.push(static_cast<int>(found.size()) - 1);
      }
    }
  }

  // Re-validate every found orientation against the wallspace itself.
  for (const Bits& f : found) {
    auto r = is_consistent(ws, base_element, f);
    if (!r.ok)
      throw internal_error("enumerated orientation is inconsistent at walls " +
                           std::to_string(r.wall_a) + "," + std::to_string(r.wall_b));
  }

  std::vector<std::string> names;
  names.reserve(W);
  for (const auto& wall : ws.walls()) names.push_back(wall.name);
  return CubeComplex::from_vertices(std::move(names), std::move(found));
}

Wallspace to_wallspace(const CubeComplex& X) {
  std::vector<std::string> elements;
  elements.reserve(X.num_vertices());
  for (const auto& v : X.vertices()) elements.push_back(v.to_string());
  std::vector<Wall> walls;
  walls.reserve(X.num_walls());
  for (int w = 0; w < X.num_walls(); ++w) walls.push_back({X.wall_name(w), X.far_side(w)});
  return Wallspace::create(std::move(elements), std::move(walls));
}

Graph skeleton(const CubeComplex& X) {
  std::vector<std::string> names;
  names.reserve(X.num_vertices());
  for (const auto& v : X.vertices()) names.push_back(v.to_string());
  Graph g(std::move(names));
  for (int v = 0; v < X.num_vertices(); ++v)
    for (int w = 0; w < X.num_walls(); ++w) {
      int u = X.neighbor(v, w);
      if (u > v) g.add_edge(v, u);
    }
  return g;
}

ThetaResult theta_classes(const Graph& g) {
  if (g.n() == 0) throw invalid_input_error("theta_classes: empty graph");
  if (!g.connected()) throw invalid_input_error("theta_classes: graph is not connected");

  auto m = kernels::bfs_matrix(g);
  auto audit = kernels::graph_median_audit(m);
  if (!audit.ok) {
    ThetaResult r;
    r.rejection = ThetaRejection{"not median", audit.triple, audit.count, -1};
    return r;
  }

  int n = g.n();
  // Walls as edge-separation classes, keyed by the side away from vertex 0.
  std::map<Bits, int, BitsLexLess> wall_of_key;
  std::vector<Bits> keys;
  for (auto [u, v] : g.edges()) {
    Bits side_u(n);
    for (int x = 0; x < n; ++x) {
      if (m.at(x, u) == m.at(x, v))
        throw internal_error("equidistant vertex over an edge in a median graph");
      if (m.at(x, u) < m.at(x, v)) side_u.set(x);
    }
    Bits key = side_u.get(0) ? ~side_u : side_u;
    if (wall_of_key.emplace(key, 0).second) keys.push_back(key);
  }
  std::sort(keys.begin(), keys.end(), BitsLexLess{});
  int W = static_cast<int>(keys.size());

  // Both classes of every wall must be metrically convex.
  for (int w = 0; w < W; ++w) {
    for (int pass = 0; pass < 2; ++pass) {
      Bits s = pass ? ~keys[w] : keys[w];
      for (int u = s.first_set(); u != -1; u = s.next_set(u))
        for (int v = s.next_set(u); v != -1; v = s.next_set(v))
          for (int x = 0; x < n; ++x)
            if (!s.get(x) && m.at(u, x) + m.at(x, v) == m.at(u, v)) {
              ThetaResult r;
              r.rejection = ThetaRejection{"wall class not convex", {u, v, x}, -1, w};
              return r;
            }
    }
  }

  std::vector<Bits> verts(n, Bits(W));
  for (int x = 0; x < n; ++x)
    for (int w = 0; w < W; ++w)
      if (keys[w].get(x)) verts[x].set(w);

  ThetaResult r;
  CubeComplex X = CubeComplex::from_vertices({}, verts);
  r.vertex_map.assign(n, -1);
  for (int x = 0; x < n; ++x) r.vertex_map[x] = X.find_vertex(verts[x]);

  // The recovered orientations must reproduce g's adjacency exactly.
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      bool adj = verts[x].hamming(verts[y]) == 1;
      if (adj != g.has_edge(x, y))
        throw internal_error("edge mismatch after wall recovery at (" + std::to_string(x) + "," +
                             std::to_string(y) + ")");
    }
  r.complex = std::move(X);
  return r;
}

}  // namespace ccx
