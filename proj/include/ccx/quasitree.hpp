#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ccx/bits.hpp"
#include "ccx/complex.hpp"
#include "ccx/graph.hpp"
#include "ccx/hypgraphs.hpp"

namespace ccx {

inline constexpr long long kDefaultGeodesicCap = 1'000'000;

// BFS grading of walls from a base wall, with roots: maximal sets of
// same-grade walls connected outside the closed ball of the previous radius.
struct Grading {
  int base = -1;
  std::vector<int> grade;        // per wall
  std::vector<int> root_id;      // per wall; root 0 is {base}
  int max_grade = 0;
  std::vector<std::vector<int>> root_members;  // per root id, ascending
  std::vector<int> root_grade;                 // per root id
};

Grading grade_hyperplanes(const HypGraph& g, int base);

// Tree of roots across consecutive grades. Node i of `tree` is root i of the
// grading; phi maps each wall to its root's node.
struct RootTree {
  Graph tree;
  std::vector<int> node_grade;
  std::vector<int> phi;
};

RootTree graded_root_tree(const Grading& grading, const HypGraph& g);

// Maximum over roots of the distance (in g, not the induced subgraph)
// between two members.
int verify_root_diameter(const Grading& grading, const HypGraph& g);

// Manning's bottleneck test on the edge subdivision of g, where distances
// double and delta scales to the integer radius delta_doubled. A pair passes
// when some exact midpoint vertex m (the canonical geodesic's midpoint is
// tried first) has the property that removing the closed ball of radius
// delta_doubled around m disconnects the pair, or the pair lies in the ball.
struct BottleneckResult {
  bool ok = true;
  int u = -1, v = -1;            // failing pair (original vertex indices)
  int midpoint = -1;             // canonical midpoint in the subdivided graph
  std::vector<int> avoiding_path;  // subdivided-graph path dodging its ball
};

BottleneckResult bottleneck_check(const Graph& g, int delta_doubled);

// Smallest delta_doubled in [1, max_delta_doubled] that passes, or -1.
int minimal_bottleneck_delta(const Graph& g, int max_delta_doubled);

struct QiAudit {
  bool phi_surjective = false;
  bool tree_distance_below = false;   // d_T <= d_G for all pairs
  bool graph_distance_bounded = false;  // d_G <= 5 d_T + 4 for all pairs
  int max_graph_minus_tree = 0;
  int pairs = 0;
};

QiAudit quasi_isometry_audit(const HypGraph& g, const RootTree& t);

// For every edge of g inside a sphere of grade >= 2: the endpoints have a
// common precursor (a single previous-grade wall on every length-n geodesic
// from the base to each endpoint, established by enumerating the geodesics)
// or the edge has an edge-precursor (an adjacent previous-grade pair, one
// member contacting each endpoint).
struct PrecursorResult {
  bool ok = true;
  int u1 = -1, u2 = -1;  // counterexample edge
  int grade = -1;
  long long geodesics_enumerated = 0;
};

PrecursorResult precursor_check(const HypGraph& g, const Grading& grading,
                                long long geodesic_cap = kDefaultGeodesicCap);

// Ancestor of wall u: union of carriers of its previous-grade contacts.
// Footprint: carrier(u) intersected with the ancestor. Both connected.
struct FootprintResult {
  int wall = -1;
  Bits ancestor;
  Bits footprint;
  std::vector<std::pair<int, Bits>> per_precursor;  // (wall, carrier overlap)
  bool ancestor_connected = false;
  bool footprint_connected = false;
};

FootprintResult footprint(const CubeComplex& x, int u, const HypGraph& g, const Grading& grading);

// For same-grade pairs with a common precursor w: contact holds exactly when
// their footprints in w intersect.
struct FootprintAdjacencyResult {
  bool ok = true;
  int u1 = -1, u2 = -1, w = -1;
  bool contact = false;  // what the contact graph said for the failing pair
  long long pairs_checked = 0;
};

FootprintAdjacencyResult footprint_adjacency_check(const CubeComplex& x, const HypGraph& g,
                                                   const Grading& grading,
                                                   long long geodesic_cap = kDefaultGeodesicCap);

}  // namespace ccx
