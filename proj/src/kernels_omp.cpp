#include "ccx/complex.hpp"
#include "ccx/kernels.hpp"

#if defined(CCX_HAVE_OPENMP)
#include <omp.h>
#endif

namespace ccx::kernels {

bool built_with_openmp() {
#if defined(CCX_HAVE_OPENMP)
  return true;
#else
  return false;
#endif
}

#if !defined(CCX_HAVE_OPENMP)

DistanceAudit distance_audit_omp(const CubeComplex& x) { return distance_audit_serial(x); }
MedianAudit median_audit_omp(const CubeComplex& x) { return median_audit_serial(x); }
TripleAudit graph_median_audit_omp(const DistMatrix& m) { return graph_median_audit_serial(m); }
FourPointScan four_point_scan_omp(const DistMatrix& m) { return four_point_scan_serial(m); }

#else

namespace {

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

template <typename T>
bool witness_less(const T& a, const T& b) {
  return a < b;
}

}  // namespace

DistanceAudit distance_audit_omp(const CubeComplex& x) {
  DistMatrix m = bfs_matrix(x);
  int n = x.num_vertices();
  DistanceAudit best;
#pragma omp parallel
  {
    DistanceAudit local;
#pragma omp for schedule(dynamic, 8) nowait
    for (int u = 0; u < n; ++u) {
      if (!local.ok) continue;
      const std::uint16_t* row = m.row(u);
      for (int v = u + 1; v < n; ++v) {
        int h = x.distance(u, v);
        if (h != row[v]) {
          local = {false, u, v, h, row[v]};
          break;
        }
      }
    }
#pragma omp critical
    {
      if (!local.ok && (best.ok || witness_less(std::pair{local.u, local.v},
                                                std::pair{best.u, best.v})))
        best = local;
    }
  }
  return best;
}

MedianAudit median_audit_omp(const CubeComplex& x) {
  DistMatrix m = bfs_matrix(x);
  int n = x.num_vertices();
  MedianAudit best;
  long long total = 0;
#pragma omp parallel reduction(+ : total)
  {
    MedianAudit local;
#pragma omp for schedule(dynamic, 1) nowait
    for (int a = 0; a < n; ++a) {
      if (!local.ok) continue;
      for (int b = a + 1; b < n && local.ok; ++b)
        for (int c = b + 1; c < n; ++c) {
          ++total;
          int cnt = count_medians(m, a, b, c);
          Bits maj = Bits::majority(x.vertex(a), x.vertex(b), x.vertex(c));
          int mi = x.find_vertex(maj);
          bool sat = mi >= 0 && m.at(a, mi) + m.at(mi, b) == m.at(a, b) &&
                     m.at(b, mi) + m.at(mi, c) == m.at(b, c) &&
                     m.at(a, mi) + m.at(mi, c) == m.at(a, c);
          if (cnt != 1 || mi < 0 || !sat) {
            local.ok = false;
            local.triple = {a, b, c};
            local.count = cnt;
            local.majority_is_vertex = mi >= 0;
            local.majority_satisfies = sat;
            break;
          }
        }
    }
#pragma omp critical
    {
      if (!local.ok && (best.ok || witness_less(local.triple, best.triple))) best = local;
    }
  }
  best.triples_checked = total;
  return best;
}

TripleAudit graph_median_audit_omp(const DistMatrix& m) {
  int n = m.n;
  TripleAudit best;
#pragma omp parallel
  {
    TripleAudit local;
#pragma omp for schedule(dynamic, 1) nowait
    for (int a = 0; a < n; ++a) {
      if (!local.ok) continue;
      for (int b = a + 1; b < n && local.ok; ++b)
        for (int c = b + 1; c < n; ++c) {
          int cnt = count_medians(m, a, b, c);
          if (cnt != 1) {
            local = {false, {a, b, c}, cnt};
            break;
          }
        }
    }
#pragma omp critical
    {
      if (!local.ok && (best.ok || witness_less(local.triple, best.triple))) best = local;
    }
  }
  return best;
}

FourPointScan four_point_scan_omp(const DistMatrix& m) {
  int n = m.n;
  FourPointScan best;
  long long total = 0;
#pragma omp parallel reduction(+ : total)
  {
    FourPointScan local;
#pragma omp for schedule(dynamic, 1) nowait
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
          for (int l = k + 1; l < n; ++l) {
            ++total;
            int gap = four_point_gap(m, i, j, k, l);
            if (gap > local.doubled_delta) {
              local.doubled_delta = gap;
              local.witness = {i, j, k, l};
            }
          }
#pragma omp critical
    {
      if (local.doubled_delta > best.doubled_delta ||
          (local.doubled_delta == best.doubled_delta && best.witness[0] != -1 &&
           local.witness[0] != -1 && witness_less(local.witness, best.witness)) ||
          (local.doubled_delta == best.doubled_delta && best.witness[0] == -1))
        best = {local.doubled_delta, local.witness, 0};
    }
  }
  best.quadruples_checked = total;
  return best;
}

#endif  // CCX_HAVE_OPENMP

DistanceAudit distance_audit(const CubeComplex& x) { return distance_audit_omp(x); }
MedianAudit median_audit(const CubeComplex& x) { return median_audit_omp(x); }
TripleAudit graph_median_audit(const DistMatrix& m) { return graph_median_audit_omp(m); }
FourPointScan four_point_scan(const DistMatrix& m) { return four_point_scan_omp(m); }

}  // namespace ccx::kernels
