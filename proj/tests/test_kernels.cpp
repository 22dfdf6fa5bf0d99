#include <doctest.h>

#include <algorithm>
#include <vector>

#include "ccx/complex.hpp"
#include "ccx/fixtures.hpp"
#include "ccx/graph.hpp"
#include "ccx/kernels.hpp"

using namespace ccx;

TEST_SUITE("kernels") {
  TEST_CASE("bfs_matrix on a graph matches all_pairs_dist") {
    Graph g = cycle_graph(8);
    kernels::DistMatrix m = kernels::bfs_matrix(g);
    auto d = g.all_pairs_dist();
    REQUIRE(m.n == 8);
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) CHECK(m.at(i, j) == d[i][j]);
      CHECK(m.row(i)[i] == 0);
    }
  }

  TEST_CASE("hamming_matrix equals bfs_matrix on complexes") {
    for (const char* name : {"grid-3x3", "10gon-5squares", "rand-3", "tripod-x-segment"}) {
      CubeComplex x = fixture(name);
      kernels::DistMatrix a = kernels::hamming_matrix(x);
      kernels::DistMatrix b = kernels::bfs_matrix(x);
      REQUIRE(a.n == b.n);
      for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) CHECK(a.at(i, j) == b.at(i, j));
    }
  }

  TEST_CASE("distance audit passes on fixtures, serial and OpenMP agree") {
    for (const char* name : {"grid-2x4", "wedge-square-tripod", "rand-1"}) {
      CubeComplex x = fixture(name);
      auto s = kernels::distance_audit_serial(x);
      auto p = kernels::distance_audit_omp(x);
      auto d = kernels::distance_audit(x);
      CHECK(s.ok);
      CHECK(p.ok);
      CHECK(d.ok);
    }
  }

  TEST_CASE("median audit passes on fixtures with the full triple count") {
    for (const char* name : {"grid-2x3", "10gon-5squares", "rand-2"}) {
      CubeComplex x = fixture(name);
      auto s = kernels::median_audit_serial(x);
      auto p = kernels::median_audit_omp(x);
      CHECK(s.ok);
      CHECK(p.ok);
      CHECK(s.majority_is_vertex);
      CHECK(s.majority_satisfies);
      long long n = x.num_vertices();
      CHECK(s.triples_checked == n * (n - 1) * (n - 2) / 6);
      CHECK(s.triples_checked == p.triples_checked);
    }
  }

  TEST_CASE("graph median audit accepts median graphs and rejects C6 with a witness") {
    kernels::DistMatrix grid = kernels::bfs_matrix(skeleton(grid_complex(2, 2)));
    auto ok = kernels::graph_median_audit(grid);
    CHECK(ok.ok);

    Graph c6 = cycle_graph(6);
    kernels::DistMatrix m = kernels::bfs_matrix(c6);
    auto s = kernels::graph_median_audit_serial(m);
    auto p = kernels::graph_median_audit_omp(m);
    REQUIRE_FALSE(s.ok);
    REQUIRE_FALSE(p.ok);
    CHECK(s.count != 1);
    // verify the witness triple really has s.count medians
    auto [a, b, c] = s.triple;
    int count = 0;
    for (int v = 0; v < 6; ++v)
      if (m.at(a, v) + m.at(v, b) == m.at(a, b) && m.at(a, v) + m.at(v, c) == m.at(a, c) &&
          m.at(b, v) + m.at(v, c) == m.at(b, c))
        ++count;
    CHECK(count == s.count);
  }

  TEST_CASE("four point scan: trees are 0, squares and grids are known") {
    auto doubled = [](const CubeComplex& x) {
      return kernels::four_point_scan(kernels::hamming_matrix(x)).doubled_delta;
    };
    CHECK(doubled(fixture("tripod")) == 0);
    CHECK(doubled(path_complex(7)) == 0);
    CHECK(doubled(fixture("square")) == 2);
    CHECK(doubled(grid_complex(2, 2)) == 4);
    CHECK(doubled(grid_complex(3, 3)) == 6);
  }

  TEST_CASE("four point scan witness attains the reported gap") {
    CubeComplex x = fixture("grid-2x4");
    kernels::DistMatrix m = kernels::hamming_matrix(x);
    auto s = kernels::four_point_scan_serial(m);
    auto p = kernels::four_point_scan_omp(m);
    CHECK(s.doubled_delta == p.doubled_delta);
    CHECK(s.quadruples_checked == p.quadruples_checked);
    long long n = x.num_vertices();
    CHECK(s.quadruples_checked == n * (n - 1) * (n - 2) * (n - 3) / 24);
    if (s.doubled_delta > 0) {
      auto [a, b, c, d] = s.witness;
      int s1 = m.at(a, b) + m.at(c, d);
      int s2 = m.at(a, c) + m.at(b, d);
      int s3 = m.at(a, d) + m.at(b, c);
      int hi = std::max({s1, s2, s3});
      int lo = std::min({s1, s2, s3});
      int mid = s1 + s2 + s3 - hi - lo;
      CHECK(hi - mid == s.doubled_delta);
    }
    // exhaustive oracle on a small fixture
    CubeComplex g = grid_complex(1, 2);
    kernels::DistMatrix gm = kernels::hamming_matrix(g);
    int best = 0;
    for (int a = 0; a < gm.n; ++a)
      for (int b = a + 1; b < gm.n; ++b)
        for (int c = b + 1; c < gm.n; ++c)
          for (int d = c + 1; d < gm.n; ++d) {
            int s1 = gm.at(a, b) + gm.at(c, d);
            int s2 = gm.at(a, c) + gm.at(b, d);
            int s3 = gm.at(a, d) + gm.at(b, c);
            int hi = std::max({s1, s2, s3});
            int lo = std::min({s1, s2, s3});
            best = std::max(best, hi - (s1 + s2 + s3 - hi - lo));
          }
    CHECK(kernels::four_point_scan(gm).doubled_delta == best);
  }

  TEST_CASE("serial and OpenMP audits agree on every small fixture") {
    for (const char* name : {"tripod", "square", "grid-1x3", "wedge-squares", "rand-5"}) {
      CubeComplex x = fixture(name);
      CHECK(kernels::distance_audit_serial(x).ok == kernels::distance_audit_omp(x).ok);
      auto ms = kernels::median_audit_serial(x);
      auto mp = kernels::median_audit_omp(x);
      CHECK(ms.ok == mp.ok);
      kernels::DistMatrix m = kernels::hamming_matrix(x);
      CHECK(kernels::four_point_scan_serial(m).doubled_delta ==
            kernels::four_point_scan_omp(m).doubled_delta);
      auto gs = kernels::graph_median_audit_serial(m);
      auto gp = kernels::graph_median_audit_omp(m);
      CHECK(gs.ok == gp.ok);
    }
    CHECK(kernels::built_with_openmp() == kernels::built_with_openmp());  // callable
  }
}
