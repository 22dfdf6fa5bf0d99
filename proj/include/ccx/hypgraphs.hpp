#pragma once

#include <array>
#include <string>
#include <vector>

#include "ccx/bits.hpp"
#include "ccx/complex.hpp"
#include "ccx/graph.hpp"

namespace ccx {

// Graphs on the hyperplanes of a complex: contact (carriers intersect) and
// crossing (a square witness exists). Crossing edges are a subset of contact
// edges; contact minus crossing is osculation.
enum class HypKind { contact, crossing };

struct HypGraph {
  HypKind kind;
  Graph g;  // one vertex per wall, named by wall name
};

// Each relation is computed by two independent criteria that must agree:
// contact by carrier intersection vs. absence of a separating third wall,
// crossing by square witness vs. all four quarterspaces realized.
HypGraph contact_graph(const CubeComplex& x);
HypGraph crossing_graph(const CubeComplex& x);

// Maximum clique sizes: dimension in the crossing graph, degree in the
// contact graph. Always degree >= dimension.
int dimension(const CubeComplex& x);
int degree(const CubeComplex& x);

// Largest set of walls spanning a cube at a single vertex: the local
// counterpart of dimension(). The two agree on every valid complex.
int local_dimension(const CubeComplex& x);

struct ConvexityResult {
  bool convex = false;
  // On failure: a wall pair that crosses the set and crosses in the complex
  // but has no square witness inside the set.
  int wall_a = -1, wall_b = -1;
};

// S must be nonempty and connected in the induced 1-skeleton. Convexity is
// decided by the wall-pair criterion and cross-checked against the direct
// metric definition (no geodesic between members leaves S).
ConvexityResult is_convex(const CubeComplex& x, const Bits& s);

struct HellyResult {
  int vertex = -1;                       // a vertex in the total intersection
  int disjoint_a = -1, disjoint_b = -1;  // first disjoint pair, if any
  bool found() const { return vertex >= 0; }
};

// Every member must be convex (validated). If all pairs intersect, the total
// intersection is nonempty and its lowest-index vertex is returned.
HellyResult helly_check(const CubeComplex& x, const std::vector<Bits>& family);

struct InseparabilityResult {
  bool inseparable = true;
  int member_a = -1, member_b = -1;  // members separated by...
  int separator = -1;                // ...this outside wall
};

InseparabilityResult is_inseparable(const CubeComplex& x, const std::vector<int>& family);

// All unordered wall triples in which any two members lie in a single
// halfspace of the third.
std::vector<std::array<int, 3>> facing_triples(const CubeComplex& x);

}  // namespace ccx
