#include "ccx/hyperbolicity.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "ccx/errors.hpp"
#include "ccx/kernels.hpp"
#include "ccx/quasitree.hpp"

namespace ccx {
namespace {

bool sides_less(const BicliqueWitness& a, const BicliqueWitness& b) {
  if (a.side_h != b.side_h) return a.side_h < b.side_h;
  return a.side_v < b.side_v;
}

BicliqueWitness normalized(std::vector<int> a, std::vector<int> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a.size() > b.size() || (a.size() == b.size() && b < a)) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

// Longest chain of walls whose far halfspaces are strictly nested, widest
// first. Nested ordering means each interior wall separates its neighbors.
std::vector<int> nested_chain(const CubeComplex& x, std::vector<int> walls) {
  std::sort(walls.begin(), walls.end(), [&](int a, int b) {
    int ca = x.far_side(a).count(), cb = x.far_side(b).count();
    return ca != cb ? ca > cb : a < b;
  });
  int k = static_cast<int>(walls.size());
  std::vector<int> len(k, 1), parent(k, -1);
  int best = 0;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < i; ++j) {
      // Distinct walls have distinct partitions, so subset here is proper.
      if (x.far_side(walls[i]).is_subset_of(x.far_side(walls[j])) && len[j] + 1 > len[i]) {
        len[i] = len[j] + 1;
        parent[i] = j;
      }
    }
    if (len[i] > len[best]) best = i;
  }
  std::vector<int> chain;
  for (int i = best; i >= 0; i = parent[i]) chain.push_back(walls[i]);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

// Band i of a nested chain c_0 .. c_{r-1}: the vertices after wall c_{i-1}
// and before wall c_i. Proper nesting makes every band nonempty.
Bits chain_band(const CubeComplex& x, const std::vector<int>& chain, int i) {
  int r = static_cast<int>(chain.size());
  Bits all = Bits::ones(x.num_vertices());
  Bits band = (i > 0) ? x.far_side(chain[i - 1]) : all;
  if (i < r) band = band & ~x.far_side(chain[i]);
  return band;
}

bool verify_grid(const CubeComplex& x, int r, const std::vector<int>& cells) {
  int side = r + 1, m = side * side;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      int want = std::abs(a / side - b / side) + std::abs(a % side - b % side);
      if (x.distance(cells[a], cells[b]) != want) return false;
    }
  return true;
}

bool gate_grid(const CubeComplex& x, const std::vector<int>& ch, const std::vector<int>& cv,
               int r, std::vector<int>* cells) {
  int side = r + 1;
  cells->assign(static_cast<std::size_t>(side) * side, -1);
  for (int i = 0; i < side; ++i) {
    Bits bh = chain_band(x, ch, i);
    for (int j = 0; j < side; ++j) {
      Bits region = bh & chain_band(x, cv, j);
      if (region.none()) return false;
      try {
        (*cells)[static_cast<std::size_t>(i) * side + j] = gate(x, x.base_index(), region);
      } catch (const check_violation&) {
        return false;  // region not gated from here; candidate construction fails
      }
    }
  }
  return verify_grid(x, r, *cells);
}

GridWitness exhaustive_grid(const CubeComplex& x, int r) {
  GridWitness out;
  out.r = r;
  const int side = r + 1, m = side * side, n = x.num_vertices();
  std::vector<int> cells(m, -1), next(m, 0);
  long long nodes = 0;
  const long long kBudget = 20'000'000;
  int pos = 0;
  while (true) {
    if (pos == m) {
      out.found = true;
      out.cells = cells;
      return out;
    }
    int v = next[pos];
    bool placed = false;
    for (; v < n; ++v) {
      if (++nodes > kBudget)
        throw resource_limit_error("flat-grid exhaustive search exceeded its node budget");
      bool ok = true;
      for (int q = 0; q < pos && ok; ++q) {
        int want = std::abs(q / side - pos / side) + std::abs(q % side - pos % side);
        ok = x.distance(cells[q], v) == want;
      }
      if (ok) {
        cells[pos] = v;
        next[pos] = v + 1;
        ++pos;
        if (pos < m) next[pos] = 0;
        placed = true;
        break;
      }
    }
    if (placed) continue;
    if (pos == 0) {
      out.certified_absent = true;
      return out;
    }
    --pos;  // backtrack
  }
}

}  // namespace

BicliqueWitness max_biclique(const HypGraph& d) {
  const Graph& g = d.g;
  int w = g.n();
  if (w > kBicliqueWallLimit)
    throw resource_limit_error("crossing graph too large for exact biclique enumeration (" +
                               std::to_string(w) + " walls, limit " +
                               std::to_string(kBicliqueWallLimit) + ")");
  std::vector<std::uint32_t> adj(w, 0);
  for (int v = 0; v < w; ++v)
    for (int u = g.row(v).first_set(); u >= 0; u = g.row(v).next_set(u))
      adj[v] |= std::uint32_t{1} << u;
  const std::uint32_t full = w == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << w) - 1;
  auto unpack = [&](std::uint32_t mask) {
    std::vector<int> out;
    for (int v = 0; v < w; ++v)
      if (mask >> v & 1) out.push_back(v);
    return out;
  };
  BicliqueWitness best = normalized({}, unpack(full));  // empty side, everything opposite
  for (std::uint32_t a = 1; a <= full; ++a) {
    std::uint32_t b = full;
    for (std::uint32_t rest = a; rest; rest &= rest - 1)
      b &= adj[std::countr_zero(rest)];
    // b is automatically disjoint from a: nothing is adjacent to itself.
    int pa = std::popcount(a), pb = std::popcount(b);
    int lo = std::min(pa, pb), hi_sum = pa + pb;
    int cur_lo = best.p(), cur_sum = best.p() + best.q();
    if (lo < cur_lo || (lo == cur_lo && hi_sum < cur_sum)) continue;
    BicliqueWitness cand = normalized(unpack(a), unpack(b));
    if (lo > cur_lo || hi_sum > cur_sum || sides_less(cand, best)) best = std::move(cand);
  }
  return best;
}

FourPoint four_point_delta(const CubeComplex& x) {
  if (x.num_vertices() > kFourPointVertexLimit)
    throw resource_limit_error("four-point scan needs at most " +
                               std::to_string(kFourPointVertexLimit) + " vertices");
  auto m = kernels::hamming_matrix(x);
  auto scan = kernels::four_point_scan(m);
  return {scan.doubled_delta, scan.witness};
}

GridWitness flat_grid_witness(const CubeComplex& x, int r) {
  if (r < 1) throw invalid_input_error("grid side must be at least 1");
  GridWitness out;
  out.r = r;
  HypGraph delta = crossing_graph(x);
  BicliqueWitness bc = max_biclique(delta);
  if (bc.p() < r) {
    // An isometric (r+1)^2 grid forces r row walls and r column walls that
    // pairwise cross; no K_{r,r} in the crossing graph rules it out.
    out.certified_absent = true;
    return out;
  }
  if (r >= 2) {
    std::vector<int> ch = nested_chain(x, bc.side_h);
    std::vector<int> cv = nested_chain(x, bc.side_v);
    int lh = static_cast<int>(ch.size()), lv = static_cast<int>(cv.size());
    std::vector<int> cells;
    for (int sh = 0; sh + r <= lh; ++sh) {
      for (int sv = 0; sv + r <= lv; ++sv) {
        std::vector<int> wh(ch.begin() + sh, ch.begin() + sh + r);
        std::vector<int> wv(cv.begin() + sv, cv.begin() + sv + r);
        if (gate_grid(x, wh, wv, r, &cells)) {
          out.found = true;
          out.cells = std::move(cells);
          return out;
        }
      }
    }
  }
  if (r <= 3) return exhaustive_grid(x, r);
  return out;  // not found; absence not certified at this size
}

double grid_size_bound(int d_degree, int big_r) {
  if (d_degree <= 3)
    throw invalid_input_error("grid size bound requires degree > 3");
  if (big_r < 0) throw invalid_input_error("R must be non-negative");
  double arg = static_cast<double>(d_degree - 3) * (static_cast<double>(big_r) + 1.0) + 1.0;
  return 2.0 * std::log(arg) / std::log(static_cast<double>(d_degree) - 2.0) - 2.0;
}

AnalysisReport analyze(const CubeComplex& x) {
  AnalysisReport rep;
  rep.num_vertices = x.num_vertices();
  rep.num_walls = x.num_walls();
  HypGraph gamma = contact_graph(x);
  HypGraph delta = crossing_graph(x);
  rep.dimension = static_cast<int>(max_clique(delta.g).size());
  rep.degree = static_cast<int>(max_clique(gamma.g).size());
  rep.local_dimension = local_dimension(x);
  try {
    rep.biclique = max_biclique(delta);
  } catch (const resource_limit_error&) {
    rep.biclique_skipped = true;
  }
  if (x.num_vertices() <= kAnalyzeFourPointLimit)
    rep.four_point = four_point_delta(x);
  else
    rep.four_point_skipped = true;
  if (!rep.biclique_skipped) {
    for (int r = 1; r <= rep.biclique.p(); ++r) {
      GridWitness w;
      try {
        w = flat_grid_witness(x, r);
      } catch (const resource_limit_error&) {
        rep.grid_search_capped = true;
        break;
      }
      if (!w.found) {
        rep.grid_stopped_uncertified = !w.certified_absent;
        break;
      }
      rep.largest_grid_r = r;
    }
  }
  if (x.num_walls() > 0) {
    for (int b = 0; b < x.num_walls(); ++b) {
      Grading gr = grade_hyperplanes(gamma, b);
      rep.max_root_diameter = std::max(rep.max_root_diameter, verify_root_diameter(gr, gamma));
    }
    rep.min_bottleneck_doubled = minimal_bottleneck_delta(gamma.g, 16);
  }
  rep.caveat =
      "finite-scale indicator: hyperbolicity and quasi-tree behavior are asymptotic "
      "properties; these numbers certify only the scales present in this finite complex";
  return rep;
}

}  // namespace ccx
