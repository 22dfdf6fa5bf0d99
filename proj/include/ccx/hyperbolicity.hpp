#pragma once

#include <array>
#include <string>
#include <vector>

#include "ccx/complex.hpp"
#include "ccx/hypgraphs.hpp"

namespace ccx {

// Exact biclique enumeration is exponential in the wall count.
inline constexpr int kBicliqueWallLimit = 22;
// Quadruple scans are quartic in the vertex count.
inline constexpr int kFourPointVertexLimit = 800;
// analyze() silently skips the quadruple scan above this size instead.
inline constexpr int kAnalyzeFourPointLimit = 450;

// A complete bipartite subgraph of the crossing graph: every wall on one
// side crosses every wall on the other. Sides are disjoint and sorted;
// side_h is the smaller one.
struct BicliqueWitness {
  std::vector<int> side_h;
  std::vector<int> side_v;
  int p() const { return static_cast<int>(side_h.size()); }
  int q() const { return static_cast<int>(side_v.size()); }
};

// Exact maximizer of min(p,q), ties broken by larger p+q, then by
// lexicographically least sides.
BicliqueWitness max_biclique(const HypGraph& d);

// Worst four-point condition defect over all vertex quadruples of the
// 1-skeleton, kept doubled so it stays an integer (value() halves it).
struct FourPoint {
  int doubled = 0;
  std::array<int, 4> witness{-1, -1, -1, -1};
  double value() const { return doubled / 2.0; }
};

FourPoint four_point_delta(const CubeComplex& x);

// An isometric copy of the (r+1) x (r+1) square-grid graph: cell (i,j) holds
// a vertex and every pairwise distance equals |i-k| + |j-l|.
struct GridWitness {
  bool found = false;
  int r = 0;
  std::vector<int> cells;  // row-major, (r+1)^2 entries when found
  // Absence proven (no K_{r,r} of crossing walls, or exhaustive search for
  // r <= 3 came up empty) rather than merely not found by the heuristic.
  bool certified_absent = false;
  int at(int i, int j) const { return cells[static_cast<std::size_t>(i) * (r + 1) + j]; }
};

// Chain-of-nested-halfspaces construction seeded by the maximum biclique,
// gate-built candidates, full isometry verification; exhaustive fallback for
// r <= 3 (node-budgeted).
GridWitness flat_grid_witness(const CubeComplex& x, int r);

// Lower bound 2 log_{D-2}[(D-3)(R+1)+1] - 2 relating vertex-degree D and
// nesting depth R to the guaranteed flat grid side. Requires D > 3.
double grid_size_bound(int d_degree, int big_r);

struct AnalysisReport {
  int num_vertices = 0;
  int num_walls = 0;
  int dimension = 0;         // max crossing clique
  int degree = 0;            // max contact clique
  int local_dimension = 0;   // per-vertex route; equals dimension
  BicliqueWitness biclique;
  bool biclique_skipped = false;  // too many walls for exact enumeration
  FourPoint four_point;
  bool four_point_skipped = false;  // too many vertices for the scan
  int largest_grid_r = 0;
  bool grid_stopped_uncertified = false;  // first absent r was not certified
  bool grid_search_capped = false;        // exhaustive fallback hit its budget
  int max_root_diameter = 0;        // over all base walls
  int min_bottleneck_doubled = 0;   // smallest passing doubled delta, or -1
  std::string caveat;
};

// Bundles the finite-scale indicators. The caveat reminds readers that
// hyperbolicity and quasi-tree behavior are asymptotic notions.
AnalysisReport analyze(const CubeComplex& x);

}  // namespace ccx
