#pragma once

#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "ccx/bits.hpp"
#include "ccx/graph.hpp"
#include "ccx/wallspace.hpp"

namespace ccx {

// Default hard cap on dual-complex vertices; duals can blow up exponentially.
inline constexpr int kDefaultVertexCap = 100000;

// The 0-skeleton of a finite CAT(0) cube complex, stored as one orientation
// bit vector per vertex, relative to a base vertex whose vector is all-zero.
// Edges are the Hamming-distance-1 pairs; higher cubes are never
// materialized. Construction canonicalizes vertex order: base first, the
// rest sorted lexicographically.
class CubeComplex {
 public:
  // Validates: uniform width, unique vertices, all-zero vertex present,
  // connectivity under single-bit flips, both sides of every wall nonempty,
  // pairwise-distinct wall partitions.
  static CubeComplex from_vertices(std::vector<std::string> wall_names, std::vector<Bits> verts);

  int num_walls() const { return static_cast<int>(wall_names_.size()); }
  int num_vertices() const { return static_cast<int>(verts_.size()); }
  int base_index() const { return 0; }

  const Bits& vertex(int i) const { return verts_[i]; }
  const std::vector<Bits>& vertices() const { return verts_; }
  const std::string& wall_name(int w) const { return wall_names_[w]; }
  const std::vector<std::string>& wall_names() const { return wall_names_; }

  int find_vertex(const Bits& b) const {
    auto it = index_.find(b);
    return it == index_.end() ? -1 : it->second;
  }
  int wall_index_by_name(const std::string& name) const;

  // Vertex across wall w from v, or -1 when v has no dual edge there.
  int neighbor(int v, int w) const { return nbr_[v][w]; }

  // Vertices on the far side of wall w (orientation bit = 1), as a mask
  // over vertex indices. The near side is the complement.
  const Bits& far_side(int w) const { return side1_[w]; }
  Bits side_mask(int w, bool far) const { return far ? side1_[w] : ~side1_[w]; }

  int distance(int u, int v) const { return verts_[u].hamming(verts_[v]); }

  // Per-wall majority vote; always a vertex of a valid complex.
  int median(int x, int y, int z) const;

 private:
  CubeComplex() = default;
  std::vector<std::string> wall_names_;
  std::vector<Bits> verts_;
  std::unordered_map<Bits, int, BitsHash> index_;
  std::vector<Bits> side1_;            // per wall, over vertex indices
  std::vector<std::vector<int>> nbr_;  // [vertex][wall] -> vertex or -1
};

// --- median_core operations ---------------------------------------------

// Vertices of C (mask over vertex indices) must form a gated set; returns
// the unique g in C with d(x,c) = d(x,g) + d(g,c) for all c in C.
int gate(const CubeComplex& X, int x, const Bits& C);

// Mask of all vertices incident to an edge dual to wall w.
Bits carrier_mask(const CubeComplex& X, int w);

// A separation query argument: an explicit vertex mask or a hyperplane
// (resolved to its carrier).
using SideSet = std::variant<Bits, int>;

struct SeparationResult {
  bool separates = false;
  bool a_straddles = false;  // A meets both halfspaces of U
  bool b_straddles = false;
};

// True iff A lies entirely in one open halfspace of wall u and B entirely
// in the other.
SeparationResult separates(const CubeComplex& X, int u, const SideSet& a, const SideSet& b);

// Breadth-first flipping from the principal ultrafilter of the base
// element: wall W may flip at f iff for every other wall V the flipped
// halfspace still meets f(V). Enumerates exactly the component of the
// principal ultrafilters. Throws resource_limit_error past max_vertices.
CubeComplex sageev_dual(const Wallspace& ws, int base_element, int max_vertices = kDefaultVertexCap);

// The wallspace whose elements are X's vertices (named by bitstring) and
// whose walls are X's hyperplane bipartitions.
Wallspace to_wallspace(const CubeComplex& X);

// 1-skeleton as a named graph; vertex i keeps X's vertex order and is
// named by its bitstring.
Graph skeleton(const CubeComplex& X);

// Median-graph recognition: verifies every vertex triple has exactly one
// median, recovers walls as edge-separation classes, and reads orientations
// off relative to graph vertex 0.
struct ThetaRejection {
  std::string reason;               // "not median" | "wall class not convex"
  std::array<int, 3> triple{-1, -1, -1};  // for "not median"
  int median_count = -1;
  int wall = -1;                    // for the convexity reason
};

struct ThetaResult {
  std::optional<CubeComplex> complex;
  std::optional<ThetaRejection> rejection;
  std::vector<int> vertex_map;  // graph vertex -> complex vertex index
};

ThetaResult theta_classes(const Graph& g);

}  // namespace ccx
