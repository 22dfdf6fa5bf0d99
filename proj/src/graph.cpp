#include "ccx/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "ccx/errors.hpp"

namespace ccx {

Graph::Graph(int n, std::string name_prefix) {
  names_.reserve(n);
  for (int i = 0; i < n; ++i) names_.push_back(name_prefix + std::to_string(i));
  adj_.assign(n, Bits(n));
}

Graph::Graph(std::vector<std::string> names) : names_(std::move(names)) {
  adj_.assign(names_.size(), Bits(static_cast<int>(names_.size())));
}

int Graph::edge_count() const {
  int c = 0;
  for (const auto& r : adj_) c += r.count();
  return c / 2;
}

void Graph::add_edge(int a, int b) {
  if (a == b) throw invalid_input_error("self-loop on vertex " + names_[a]);
  adj_[a].set(b);
  adj_[b].set(a);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < n(); ++a)
    for (int b = adj_[a].next_set(a); b != -1; b = adj_[a].next_set(b)) e.emplace_back(a, b);
  return e;
}

std::vector<int> Graph::bfs_dist(int src) const {
  std::vector<int> d(n(), -1);
  std::queue<int> q;
  d[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u = adj_[v].first_set(); u != -1; u = adj_[v].next_set(u)) {
      if (d[u] == -1) {
        d[u] = d[v] + 1;
        q.push(u);
      }
    }
  }
  return d;
}

std::vector<std::vector<int>> Graph::all_pairs_dist() const {
  std::vector<std::vector<int>> d(n());
  for (int v = 0; v < n(); ++v) d[v] = bfs_dist(v);
  return d;
}

bool Graph::connected() const {
  if (n() == 0) return true;
  auto d = bfs_dist(0);
  return std::find(d.begin(), d.end(), -1) == d.end();
}

std::vector<int> Graph::components() const {
  std::vector<int> comp(n(), -1);
  int next = 0;
  for (int s = 0; s < n(); ++s) {
    if (comp[s] != -1) continue;
    comp[s] = next;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u = adj_[v].first_set(); u != -1; u = adj_[v].next_set(u)) {
        if (comp[u] == -1) {
          comp[u] = next;
          q.push(u);
        }
      }
    }
    ++next;
  }
  return comp;
}

Graph Graph::induced(const std::vector<int>& vertices, std::vector<int>* back) const {
  std::vector<std::string> nm;
  nm.reserve(vertices.size());
  for (int v : vertices) nm.push_back(names_[v]);
  Graph g(std::move(nm));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (has_edge(vertices[i], vertices[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
  if (back) *back = vertices;
  return g;
}

Graph Graph::subdivide() const {
  auto es = edges();
  std::vector<std::string> nm = names_;
  for (auto [a, b] : es) nm.push_back("(" + names_[a] + "|" + names_[b] + ")");
  Graph g(std::move(nm));
  for (std::size_t k = 0; k < es.size(); ++k) {
    int m = n() + static_cast<int>(k);
    g.add_edge(es[k].first, m);
    g.add_edge(m, es[k].second);
  }
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph complete_bipartite(int p, int q) {
  Graph g(p + q);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) g.add_edge(i, p + j);
  return g;
}

Graph graph_join(const Graph& a, const Graph& b) {
  std::vector<std::string> nm = a.names();
  for (const auto& s : b.names()) nm.push_back(s);
  Graph g(std::move(nm));
  for (auto [x, y] : a.edges()) g.add_edge(x, y);
  for (auto [x, y] : b.edges()) g.add_edge(a.n() + x, a.n() + y);
  for (int x = 0; x < a.n(); ++x)
    for (int y = 0; y < b.n(); ++y) g.add_edge(x, a.n() + y);
  return g;
}

namespace {

// Greedy degeneracy order: repeatedly removes a minimum-degree vertex.
std::vector<int> degeneracy_order(const Graph& g) {
  int n = g.n();
  std::vector<int> deg(n), order;
  std::vector<bool> removed(n, false);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!removed[v] && (best == -1 || deg[v] < deg[best])) best = v;
    removed[best] = true;
    order.push_back(best);
    for (int u = g.row(best).first_set(); u != -1; u = g.row(best).next_set(u))
      if (!removed[u]) --deg[u];
  }
  return order;
}

void expand_clique(const Graph& g, Bits& cand, std::vector<int>& cur, std::vector<int>& best) {
  if (cur.size() + static_cast<std::size_t>(cand.count()) <= best.size()) return;
  if (cand.none()) {
    if (cur.size() > best.size()) best = cur;
    return;
  }
  Bits local = cand;
  for (int v = local.first_set(); v != -1; v = local.next_set(v)) {
    if (cur.size() + static_cast<std::size_t>(local.count()) <= best.size()) return;
    local.set(v, false);
    Bits next = local & g.row(v);
    cur.push_back(v);
    expand_clique(g, next, cur, best);
    cur.pop_back();
  }
}

// Lexicographically least clique of the given size, ascending vertex indices.
bool lex_clique(const Graph& g, int from, int need, const Bits& cand, std::vector<int>& out) {
  if (need == 0) return true;
  for (int v = cand.next_set(from - 1); v != -1; v = cand.next_set(v)) {
    Bits next = cand & g.row(v);
    if (next.count() < need - 1) continue;
    out.push_back(v);
    if (lex_clique(g, v + 1, need - 1, next, out)) return true;
    out.pop_back();
  }
  return false;
}

}  // namespace

std::vector<int> max_clique(const Graph& g) {
  if (g.n() == 0) return {};
  auto order = degeneracy_order(g);
  std::vector<int> best, cur;
  // Each maximum clique has a first vertex (in degeneracy order); rooting the
  // search there keeps candidate sets small.
  std::vector<int> pos(g.n());
  for (int i = 0; i < g.n(); ++i) pos[order[i]] = i;
  for (int i = g.n() - 1; i >= 0; --i) {
    int v = order[i];
    Bits cand = g.row(v);
    for (int u = cand.first_set(); u != -1; u = cand.next_set(u))
      if (pos[u] < i) cand.set(u, false);
    cur.assign(1, v);
    expand_clique(g, cand, cur, best);
  }
  if (best.empty() && g.n() > 0) best = {0};
  // Re-derive the lexicographically least witness of maximum size.
  std::vector<int> lex;
  Bits all = Bits::ones(g.n());
  if (!lex_clique(g, 0, static_cast<int>(best.size()), all, lex))
    throw internal_error("clique witness re-derivation failed");
  return lex;
}

namespace {

// One round of color refinement across all layers at once.
// Returns false once colors are stable.
bool refine_round(const std::vector<const Graph*>& layers, int n, std::vector<int>& color) {
  std::vector<std::pair<std::vector<int>, int>> sig(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> s;
    s.push_back(color[v]);
    for (std::size_t L = 0; L < layers.size(); ++L) {
      std::vector<int> nb;
      const Bits& r = layers[L]->row(v);
      for (int u = r.first_set(); u != -1; u = r.next_set(u)) nb.push_back(color[u]);
      std::sort(nb.begin(), nb.end());
      s.push_back(-1 - static_cast<int>(L));
      s.insert(s.end(), nb.begin(), nb.end());
    }
    sig[v] = {std::move(s), v};
  }
  std::map<std::vector<int>, int> dense;
  std::vector<int> next(n);
  for (int v = 0; v < n; ++v) {
    auto it = dense.find(sig[v].first);
    if (it == dense.end()) it = dense.emplace(sig[v].first, static_cast<int>(dense.size())).first;
    next[v] = it->second;
  }
  bool changed = next != color;
  color = std::move(next);
  return changed;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const std::vector<const Graph*>& a,
                                                 const std::vector<const Graph*>& b) {
  int n = a[0]->n();
  if (b[0]->n() != n) return std::nullopt;
  for (std::size_t L = 0; L < a.size(); ++L)
    if (a[L]->edge_count() != b[L]->edge_count()) return std::nullopt;

  // Refine colors on the disjoint union so color ids are comparable.
  std::vector<const Graph*> united;
  united.reserve(a.size());
  std::vector<Graph> storage;
  storage.reserve(a.size());
  for (std::size_t L = 0; L < a.size(); ++L) {
    Graph u(2 * n);
    for (auto [x, y] : a[L]->edges()) u.add_edge(x, y);
    for (auto [x, y] : b[L]->edges()) u.add_edge(n + x, n + y);
    storage.push_back(std::move(u));
  }
  for (auto& g : storage) united.push_back(&g);
  std::vector<int> color(2 * n, 0);
  while (refine_round(united, 2 * n, color)) {
  }
  {
    std::vector<int> ca(color.begin(), color.begin() + n);
    std::vector<int> cb(color.begin() + n, color.end());
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return std::nullopt;
  }

  std::vector<int> map(n, -1), used(n, 0);
  // Assignment order: most-constrained first, preferring vertices adjacent to
  // already-assigned ones in layer 0.
  std::vector<int> order;
  {
    std::vector<bool> placed(n, false);
    for (int step = 0; step < n; ++step) {
      int pick = -1, pick_score = -1;
      for (int v = 0; v < n; ++v) {
        if (placed[v]) continue;
        int score = 0;
        for (int u = a[0]->row(v).first_set(); u != -1; u = a[0]->row(v).next_set(u))
          if (placed[u]) ++score;
        score = score * 1000 + a[0]->degree(v);
        if (score > pick_score) {
          pick_score = score;
          pick = v;
        }
      }
      placed[pick] = true;
      order.push_back(pick);
    }
  }

  std::vector<int> seq;  // assigned vertices, in order
  auto consistent = [&](int v, int w) {
    if (color[v] != color[n + w]) return false;
    for (std::size_t L = 0; L < a.size(); ++L)
      for (int u : seq)
        if (a[L]->has_edge(v, u) != b[L]->has_edge(w, map[u])) return false;
    return true;
  };
  // Depth-first over the fixed order.
  std::vector<int> choice(n, -1);
  int depth = 0;
  while (true) {
    if (depth == n) return map;
    int v = order[depth];
    int w = choice[depth] + 1;
    bool advanced = false;
    for (; w < n; ++w) {
      if (used[w]) continue;
      if (consistent(v, w)) {
        choice[depth] = w;
        map[v] = w;
        used[w] = 1;
        seq.push_back(v);
        ++depth;
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      choice[depth] = -1;
      if (depth == 0) return std::nullopt;
      --depth;
      int pv = order[depth];
      used[map[pv]] = 0;
      map[pv] = -1;
      seq.pop_back();
    }
  }
}

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
  return find_isomorphism(std::vector<const Graph*>{&a}, std::vector<const Graph*>{&b});
}

std::uint64_t canonical_code(const Graph& g) {
  int n = g.n();
  if (n > 11) throw invalid_input_error("canonical_code supports at most 11 vertices");
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++bit)
        if (g.has_edge(perm[i], perm[j])) code |= std::uint64_t{1} << bit;
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace ccx
