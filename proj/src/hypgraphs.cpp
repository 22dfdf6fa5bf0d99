#include "ccx/hypgraphs.hpp"

#include <algorithm>

#include "ccx/errors.hpp"

namespace ccx {

namespace {

std::vector<Bits> all_carriers(const CubeComplex& x) {
  std::vector<Bits> c;
  c.reserve(x.num_walls());
  for (int w = 0; w < x.num_walls(); ++w) c.push_back(carrier_mask(x, w));
  return c;
}

bool square_witness(const CubeComplex& x, int a, int b) {
  for (int v = 0; v < x.num_vertices(); ++v) {
    int va = x.neighbor(v, a);
    if (va < 0 || x.neighbor(v, b) < 0) continue;
    if (x.neighbor(va, b) >= 0) return true;
  }
  return false;
}

bool quarterspaces_realized(const CubeComplex& x, int a, int b) {
  const Bits& fa = x.far_side(a);
  const Bits& fb = x.far_side(b);
  Bits na = ~fa, nb = ~fb;
  return fa.intersects(fb) && fa.intersects(nb) && na.intersects(fb) && na.intersects(nb);
}

Graph wall_graph_shell(const CubeComplex& x) {
  std::vector<std::string> names;
  names.reserve(x.num_walls());
  for (int w = 0; w < x.num_walls(); ++w) names.push_back(x.wall_name(w));
  return Graph(std::move(names));
}

}  // namespace

HypGraph contact_graph(const CubeComplex& x) {
  auto carriers = all_carriers(x);
  Graph g = wall_graph_shell(x);
  int w = x.num_walls();
  for (int a = 0; a < w; ++a)
    for (int b = a + 1; b < w; ++b) {
      bool by_carrier = carriers[a].intersects(carriers[b]);
      bool by_separation = true;
      for (int t = 0; t < w && by_separation; ++t) {
        if (t == a || t == b) continue;
        const Bits& far = x.far_side(t);
        Bits near = ~far;
        bool a_far = carriers[a].is_subset_of(far), a_near = carriers[a].is_subset_of(near);
        bool b_far = carriers[b].is_subset_of(far), b_near = carriers[b].is_subset_of(near);
        if ((a_far && b_near) || (a_near && b_far)) by_separation = false;
      }
      if (by_carrier != by_separation)
        throw internal_error("contact criteria disagree on walls " + x.wall_name(a) + "," +
                             x.wall_name(b));
      if (by_carrier) g.add_edge(a, b);
    }
  return {HypKind::contact, std::move(g)};
}

HypGraph crossing_graph(const CubeComplex& x) {
  Graph g = wall_graph_shell(x);
  int w = x.num_walls();
  for (int a = 0; a < w; ++a)
    for (int b = a + 1; b < w; ++b) {
      bool by_square = square_witness(x, a, b);
      bool by_quarters = quarterspaces_realized(x, a, b);
      if (by_square != by_quarters)
        throw internal_error("crossing criteria disagree on walls " + x.wall_name(a) + "," +
                             x.wall_name(b));
      if (by_square) g.add_edge(a, b);
    }
  return {HypKind::crossing, std::move(g)};
}

int dimension(const CubeComplex& x) {
  return static_cast<int>(max_clique(crossing_graph(x).g).size());
}

int degree(const CubeComplex& x) {
  return static_cast<int>(max_clique(contact_graph(x).g).size());
}

int local_dimension(const CubeComplex& x) {
  int best = 0;
  for (int v = 0; v < x.num_vertices(); ++v) {
    std::vector<int> inc;
    for (int w = 0; w < x.num_walls(); ++w)
      if (x.neighbor(v, w) >= 0) inc.push_back(w);
    int k = static_cast<int>(inc.size());
    if (k <= best) continue;
    // Graph of walls spanning a square at v; its max clique is the top cube
    // dimension at v (pairwise squares at a vertex always close up to a cube
    // in a median graph, which the square-closure walk below relies on).
    Graph g(k);
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        int vi = x.neighbor(v, inc[i]);
        if (x.neighbor(vi, inc[j]) >= 0) g.add_edge(i, j);
      }
    best = std::max(best, static_cast<int>(max_clique(g).size()));
  }
  return best;
}

ConvexityResult is_convex(const CubeComplex& x, const Bits& s) {
  if (s.none()) throw invalid_input_error("is_convex: empty vertex set");
  int n = x.num_vertices();

  // Connectivity of the induced 1-skeleton.
  {
    std::vector<int> stack{s.first_set()};
    Bits seen(n);
    seen.set(stack[0]);
    int found = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < x.num_walls(); ++w) {
        int u = x.neighbor(v, w);
        if (u >= 0 && s.get(u) && !seen.get(u)) {
          seen.set(u);
          ++found;
          stack.push_back(u);
        }
      }
    }
    if (found != s.count()) throw invalid_input_error("is_convex: vertex set is not connected");
  }

  // Route 1: every wall pair crossing the set and crossing in the complex
  // must have a square witness with all four corners in the set.
  ConvexityResult by_walls;
  by_walls.convex = true;
  std::vector<int> crossing_s;
  for (int w = 0; w < x.num_walls(); ++w) {
    const Bits& far = x.far_side(w);
    if (s.intersects(far) && !s.is_subset_of(far)) crossing_s.push_back(w);
  }
  for (std::size_t i = 0; i < crossing_s.size() && by_walls.convex; ++i)
    for (std::size_t j = i + 1; j < crossing_s.size() && by_walls.convex; ++j) {
      int a = crossing_s[i], b = crossing_s[j];
      if (!quarterspaces_realized(x, a, b)) continue;
      bool witness = false;
      for (int v = s.first_set(); v != -1 && !witness; v = s.next_set(v)) {
        int va = x.neighbor(v, a);
        if (va < 0 || !s.get(va)) continue;
        int vb = x.neighbor(v, b);
        if (vb < 0 || !s.get(vb)) continue;
        int vab = x.neighbor(va, b);
        if (vab >= 0 && s.get(vab)) witness = true;
      }
      if (!witness) {
        by_walls.convex = false;
        by_walls.wall_a = a;
        by_walls.wall_b = b;
      }
    }

  // Route 2: no vertex outside the set lies between two members.
  bool by_metric = true;
  for (int u = s.first_set(); u != -1 && by_metric; u = s.next_set(u))
    for (int v = s.next_set(u); v != -1 && by_metric; v = s.next_set(v)) {
      int duv = x.distance(u, v);
      for (int m = 0; m < n; ++m)
        if (!s.get(m) && x.distance(u, m) + x.distance(m, v) == duv) {
          by_metric = false;
          break;
        }
    }

  if (by_walls.convex != by_metric)
    throw internal_error("convexity criteria disagree (walls say " +
                         std::string(by_walls.convex ? "convex" : "not convex") + ")");
  return by_walls;
}

HellyResult helly_check(const CubeComplex& x, const std::vector<Bits>& family) {
  if (family.empty()) throw invalid_input_error("helly_check: empty family");
  for (std::size_t i = 0; i < family.size(); ++i) {
    auto c = is_convex(x, family[i]);
    if (!c.convex)
      throw invalid_input_error("helly_check: member " + std::to_string(i) + " is not convex");
  }
  HellyResult r;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (!family[i].intersects(family[j])) {
        r.disjoint_a = static_cast<int>(i);
        r.disjoint_b = static_cast<int>(j);
        return r;
      }
  Bits total = family[0];
  for (std::size_t i = 1; i < family.size(); ++i) total &= family[i];
  if (total.none())
    throw internal_error("pairwise-intersecting convex sets with empty total intersection");
  r.vertex = total.first_set();
  return r;
}

InseparabilityResult is_inseparable(const CubeComplex& x, const std::vector<int>& family) {
  if (family.empty()) throw invalid_input_error("is_inseparable: empty family");
  Bits in_family(x.num_walls());
  for (int w : family) {
    if (w < 0 || w >= x.num_walls()) throw invalid_input_error("is_inseparable: bad wall index");
    in_family.set(w);
  }
  InseparabilityResult r;
  for (int t = 0; t < x.num_walls(); ++t) {
    if (in_family.get(t)) continue;
    for (std::size_t i = 0; i < family.size(); ++i)
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        auto sep = separates(x, t, SideSet{family[i]}, SideSet{family[j]});
        if (sep.separates) {
          r.inseparable = false;
          r.member_a = family[i];
          r.member_b = family[j];
          r.separator = t;
          return r;
        }
      }
  }
  return r;
}

std::vector<std::array<int, 3>> facing_triples(const CubeComplex& x) {
  int w = x.num_walls();
  auto carriers = all_carriers(x);
  std::vector<Bits> nears;
  nears.reserve(w);
  for (int t = 0; t < w; ++t) nears.push_back(~x.far_side(t));
  // Two walls lie in a single halfspace of a third when the union of their
  // carriers sits inside one side of it.
  auto one_side = [&](int p, int q, int t) {
    Bits both = carriers[p] | carriers[q];
    return both.is_subset_of(x.far_side(t)) || both.is_subset_of(nears[t]);
  };
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < w; ++a)
    for (int b = a + 1; b < w; ++b)
      for (int c = b + 1; c < w; ++c)
        if (one_side(b, c, a) && one_side(a, c, b) && one_side(a, b, c))
          out.push_back({a, b, c});
  return out;
}

}  // namespace ccx
