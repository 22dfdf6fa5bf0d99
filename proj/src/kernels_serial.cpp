#include <queue>

#include "ccx/complex.hpp"
#include "ccx/errors.hpp"
#include "ccx/kernels.hpp"

namespace ccx::kernels {

namespace {

void check_audit_size(int n) {
  if (n > kAuditVertexLimit)
    throw resource_limit_error("audit kernels support at most " +
                               std::to_string(kAuditVertexLimit) + " vertices, got " +
                               std::to_string(n));
}

}  // namespace

DistMatrix bfs_matrix(const Graph& g) {
  check_audit_size(g.n());
  DistMatrix m;
  m.n = g.n();
  m.d.assign(static_cast<std::size_t>(m.n) * m.n, 0);
  for (int s = 0; s < m.n; ++s) {
    auto d = g.bfs_dist(s);
    for (int v = 0; v < m.n; ++v) {
      if (d[v] < 0) throw invalid_input_error("distance matrix requires a connected graph");
      m.d[static_cast<std::size_t>(s) * m.n + v] = static_cast<std::uint16_t>(d[v]);
    }
  }
  return m;
}

DistMatrix bfs_matrix(const CubeComplex& x) {
  check_audit_size(x.num_vertices());
  int n = x.num_vertices();
  int w = x.num_walls();
  DistMatrix m;
  m.n = n;
  m.d.assign(static_cast<std::size_t>(n) * n, 0xffff);
  std::vector<int> dist(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int k = 0; k < w; ++k) {
        int u = x.neighbor(v, k);
        if (u >= 0 && dist[u] == -1) {
          dist[u] = dist[v] + 1;
          q.push(u);
        }
      }
    }
    for (int v = 0; v < n; ++v) {
      if (dist[v] < 0) throw internal_error("complex 1-skeleton is not connected");
      m.d[static_cast<std::size_t>(s) * n + v] = static_cast<std::uint16_t>(dist[v]);
    }
  }
  return m;
}

DistMatrix hamming_matrix(const CubeComplex& x) {
  check_audit_size(x.num_vertices());
  int n = x.num_vertices();
  DistMatrix m;
  m.n = n;
  m.d.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      auto d = static_cast<std::uint16_t>(x.vertex(a).hamming(x.vertex(b)));
      m.d[static_cast<std::size_t>(a) * n + b] = d;
      m.d[static_cast<std::size_t>(b) * n + a] = d;
    }
  return m;
}

DistanceAudit distance_audit_serial(const CubeComplex& x) {
  DistMatrix m = bfs_matrix(x);
  int n = x.num_vertices();
  for (int u = 0; u < n; ++u) {
    const std::uint16_t* row = m.row(u);
    for (int v = u + 1; v < n; ++v) {
      int h = x.distance(u, v);
      if (h != row[v]) return {false, u, v, h, row[v]};
    }
  }
  return {};
}

namespace {

// Number of vertices m with d(x,m)+d(m,y)=d(x,y), d(y,m)+d(m,z)=d(y,z),
// d(x,m)+d(m,z)=d(x,z). Hot loop of the quartic audits.
inline int count_medians(const DistMatrix& m, int x, int y, int z) {
  const std::uint16_t* px = m.row(x);
  const std::uint16_t* py = m.row(y);
  const std::uint16_t* pz = m.row(z);
  const int dxy = px[y], dyz = py[z], dxz = px[z];
  int c = 0;
  for (int v = 0; v < m.n; ++v)
    c += (px[v] + py[v] == dxy) & (py[v] + pz[v] == dyz) & (px[v] + pz[v] == dxz);
  return c;
}

}  // namespace

MedianAudit median_audit_serial(const CubeComplex& x) {
  DistMatrix m = bfs_matrix(x);
  int n = x.num_vertices();
  MedianAudit r;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        ++r.triples_checked;
        int cnt = count_medians(m, a, b, c);
        Bits maj = Bits::majority(x.vertex(a), x.vertex(b), x.vertex(c));
        int mi = x.find_vertex(maj);
        bool sat = mi >= 0 && m.at(a, mi) + m.at(mi, b) == m.at(a, b) &&
                   m.at(b, mi) + m.at(mi, c) == m.at(b, c) &&
                   m.at(a, mi) + m.at(mi, c) == m.at(a, c);
        if (cnt != 1 || mi < 0 || !sat) {
          r.ok = false;
          r.triple = {a, b, c};
          r.count = cnt;
          r.majority_is_vertex = mi >= 0;
          r.majority_satisfies = sat;
          return r;
        }
      }
  return r;
}

TripleAudit graph_median_audit_serial(const DistMatrix& m) {
  for (int a = 0; a < m.n; ++a)
    for (int b = a + 1; b < m.n; ++b)
      for (int c = b + 1; c < m.n; ++c) {
        int cnt = count_medians(m, a, b, c);
        if (cnt != 1) return {false, {a, b, c}, cnt};
      }
  return {};
}

namespace {

// Gap between the two largest of the three pairing sums.
inline int four_point_gap(const DistMatrix& m, int i, int j, int k, int l) {
  int s1 = m.at(i, j) + m.at(k, l);
  int s2 = m.at(i, k) + m.at(j, l);
  int s3 = m.at(i, l) + m.at(j, k);
  int hi = s1, mid = s2;
  if (mid > hi) std::swap(hi, mid);
  if (s3 > hi) {
    mid = hi;
    hi = s3;
  } else if (s3 > mid) {
    mid = s3;
  }
  return hi - mid;
}

}  // namespace

FourPointScan four_point_scan_serial(const DistMatrix& m) {
  FourPointScan r;
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j)
      for (int k = j + 1; k < m.n; ++k)
        for (int l = k + 1; l < m.n; ++l) {
          ++r.quadruples_checked;
          int gap = four_point_gap(m, i, j, k, l);
          if (gap > r.doubled_delta) {
            r.doubled_delta = gap;
            r.witness = {i, j, k, l};
          }
        }
  return r;
}

}  // namespace ccx::kernels
