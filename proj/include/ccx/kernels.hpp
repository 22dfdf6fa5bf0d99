#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ccx/graph.hpp"

namespace ccx {
class CubeComplex;
}

// Data-parallel audit kernels. Each has a serial reference implementation
// and an OpenMP variant; the unsuffixed entry point dispatches to OpenMP
// when the library was built with it. Tests assert the two variants agree;
// the ccx-bench tool compares their timings.
namespace ccx::kernels {

// Guard for the quadratic/quartic scans below.
inline constexpr int kAuditVertexLimit = 5000;

// Flat symmetric distance matrix.
struct DistMatrix {
  int n = 0;
  std::vector<std::uint16_t> d;
  std::uint16_t at(int i, int j) const { return d[static_cast<std::size_t>(i) * n + j]; }
  const std::uint16_t* row(int i) const { return d.data() + static_cast<std::size_t>(i) * n; }
};

DistMatrix bfs_matrix(const Graph& g);
DistMatrix bfs_matrix(const CubeComplex& x);      // BFS over the implicit 1-skeleton
DistMatrix hamming_matrix(const CubeComplex& x);  // bit-count route

// All-pairs agreement of bit-count distance with BFS distance.
struct DistanceAudit {
  bool ok = true;
  int u = -1, v = -1;
  int bit_count = -1, bfs = -1;
};
DistanceAudit distance_audit_serial(const CubeComplex& x);
DistanceAudit distance_audit_omp(const CubeComplex& x);
DistanceAudit distance_audit(const CubeComplex& x);

// All-triples agreement of the majority-vote median with the exhaustive
// search over all vertices (run against BFS distances): exactly one vertex
// satisfies the three betweenness equations and it is the majority vote.
struct MedianAudit {
  bool ok = true;
  std::array<int, 3> triple{-1, -1, -1};
  int count = -1;                  // vertices satisfying all three equations
  bool majority_is_vertex = true;  // majority vote landed on a vertex
  bool majority_satisfies = true;  // ... and satisfies the equations
  long long triples_checked = 0;
};
MedianAudit median_audit_serial(const CubeComplex& x);
MedianAudit median_audit_omp(const CubeComplex& x);
MedianAudit median_audit(const CubeComplex& x);

// All-triples unique-median check on a bare distance matrix (no majority
// route available for a plain graph).
struct TripleAudit {
  bool ok = true;
  std::array<int, 3> triple{-1, -1, -1};
  int count = -1;
};
TripleAudit graph_median_audit_serial(const DistMatrix& m);
TripleAudit graph_median_audit_omp(const DistMatrix& m);
TripleAudit graph_median_audit(const DistMatrix& m);

// Four-point hyperbolicity scan: over all vertex quadruples, half the gap
// between the two largest of the three pairwise-sum quantities. The gap is
// returned doubled so it stays integral; the witness is the first quadruple
// (in ascending scan order) attaining it.
struct FourPointScan {
  int doubled_delta = 0;
  std::array<int, 4> witness{-1, -1, -1, -1};
  long long quadruples_checked = 0;
};
FourPointScan four_point_scan_serial(const DistMatrix& m);
FourPointScan four_point_scan_omp(const DistMatrix& m);
FourPointScan four_point_scan(const DistMatrix& m);

bool built_with_openmp();

}  // namespace ccx::kernels
