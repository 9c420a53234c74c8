#include "alphadg/digraph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "alphadg/errors.hpp"

namespace alphadg {

namespace {

void check_arc(int n, Arc a) {
  if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n) {
    throw InvalidInput("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                       ") has an endpoint outside 0.." + std::to_string(n - 1));
  }
  if (a.tail == a.head) {
    throw InvalidInput("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                       ") is a loop");
  }
}

}  // namespace

Digraph::Digraph(int n) : n_(n) {
  if (n < 1) throw InvalidInput("digraph needs at least one vertex, got n=" + std::to_string(n));
  adj_.assign(static_cast<std::size_t>(n) * n, 0);
  out_deg_.assign(n, 0);
  in_deg_.assign(n, 0);
}

Digraph Digraph::from_arcs(int n, std::span<const Arc> arcs) {
  Digraph g(n);
  for (const Arc& a : arcs) {
    check_arc(n, a);
    g.set_arc(a.tail, a.head);
  }
  return g;
}

void Digraph::set_arc(Vertex u, Vertex v) {
  auto& cell = adj_[static_cast<std::size_t>(u) * n_ + v];
  if (cell) return;
  cell = 1;
  ++arc_count_;
  ++out_deg_[u];
  ++in_deg_[v];
}

void Digraph::clear_arc(Vertex u, Vertex v) {
  auto& cell = adj_[static_cast<std::size_t>(u) * n_ + v];
  if (!cell) return;
  cell = 0;
  --arc_count_;
  --out_deg_[u];
  --in_deg_[v];
}

std::vector<Vertex> Digraph::out_neighbors(Vertex u) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n_; ++v)
    if (has_arc(u, v)) out.push_back(v);
  return out;
}

std::vector<Vertex> Digraph::in_neighbors(Vertex u) const {
  std::vector<Vertex> in;
  for (Vertex v = 0; v < n_; ++v)
    if (has_arc(v, u)) in.push_back(v);
  return in;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(arc_count_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = 0; v < n_; ++v)
      if (has_arc(u, v)) out.push_back({u, v});
  return out;
}

Digraph Digraph::with_arc(Arc a) const {
  check_arc(n_, a);
  Digraph g = *this;
  g.set_arc(a.tail, a.head);
  return g;
}

Digraph Digraph::without_arc(Arc a) const {
  check_arc(n_, a);
  Digraph g = *this;
  g.clear_arc(a.tail, a.head);
  return g;
}

DegreeProfile degree_profile(const Digraph& g) {
  DegreeProfile p;
  const int n = g.n();
  p.out_degrees.resize(n);
  p.in_degrees.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    p.out_degrees[v] = g.out_degree(v);
    p.in_degrees[v] = g.in_degree(v);
  }
  p.min_out = *std::min_element(p.out_degrees.begin(), p.out_degrees.end());
  p.max_out = *std::max_element(p.out_degrees.begin(), p.out_degrees.end());
  p.min_in = *std::min_element(p.in_degrees.begin(), p.in_degrees.end());
  p.max_in = *std::max_element(p.in_degrees.begin(), p.in_degrees.end());
  p.min_over_both = std::min(p.min_out, p.min_in);
  return p;
}

std::vector<std::vector<Vertex>> strongly_connected_components(const Digraph& g) {
  const int n = g.n();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> stack;
  std::vector<std::vector<Vertex>> sccs;
  int counter = 0;

  // Explicit DFS frames: (vertex, next successor to try).
  std::vector<std::pair<Vertex, Vertex>> frames;
  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!frames.empty()) {
      auto& [v, next] = frames.back();
      bool descended = false;
      while (next < n) {
        Vertex w = next++;
        if (!g.has_arc(v, w)) continue;
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) low[v] = std::min(low[v], index[w]);
      }
      if (descended) continue;

      const Vertex done = v;
      if (low[done] == index[done]) {
        std::vector<Vertex> scc;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          scc.push_back(w);
        } while (w != done);
        std::sort(scc.begin(), scc.end());
        sccs.push_back(std::move(scc));
      }
      frames.pop_back();
      if (!frames.empty()) {
        Vertex parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }
  return sccs;
}

bool is_strongly_connected(const Digraph& g) {
  return strongly_connected_components(g).size() == 1;
}

std::optional<int> girth(const Digraph& g) {
  const int n = g.n();
  int best = n + 1;
  std::vector<int> dist(n);
  std::queue<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop();
      if (dist[u] + 1 >= best) continue;
      for (Vertex v = 0; v < n; ++v) {
        if (!g.has_arc(u, v)) continue;
        if (v == s) {
          best = std::min(best, dist[u] + 1);
        } else if (dist[v] == -1) {
          dist[v] = dist[u] + 1;
          queue.push(v);
        }
      }
    }
    while (!queue.empty()) queue.pop();
  }
  if (best > n) return std::nullopt;
  return best;
}

namespace {

// Bron–Kerbosch with Tomita pivoting on the digon graph; tracks the maximum only.
struct CliqueSearch {
  const Digraph& g;
  int best = 0;

  bool digon(Vertex u, Vertex v) const { return g.has_arc(u, v) && g.has_arc(v, u); }

  void expand(int size, std::vector<Vertex>& candidates, std::vector<Vertex>& excluded) {
    if (candidates.empty()) {
      best = std::max(best, size);
      return;
    }
    if (size + static_cast<int>(candidates.size()) <= best) return;

    Vertex pivot = -1;
    int pivot_hits = -1;
    auto consider = [&](Vertex u) {
      int hits = 0;
      for (Vertex c : candidates)
        if (digon(u, c)) ++hits;
      if (hits > pivot_hits) {
        pivot_hits = hits;
        pivot = u;
      }
    };
    for (Vertex u : candidates) consider(u);
    for (Vertex u : excluded) consider(u);

    std::vector<Vertex> branch;
    for (Vertex c : candidates)
      if (!digon(pivot, c)) branch.push_back(c);

    for (Vertex v : branch) {
      std::vector<Vertex> next_candidates, next_excluded;
      for (Vertex c : candidates)
        if (digon(v, c)) next_candidates.push_back(c);
      for (Vertex x : excluded)
        if (digon(v, x)) next_excluded.push_back(x);
      expand(size + 1, next_candidates, next_excluded);
      candidates.erase(std::find(candidates.begin(), candidates.end(), v));
      excluded.push_back(v);
    }
  }
};

}  // namespace

int clique_number(const Digraph& g) {
  CliqueSearch search{g};
  std::vector<Vertex> candidates(g.n()), excluded;
  for (Vertex v = 0; v < g.n(); ++v) candidates[v] = v;
  search.expand(0, candidates, excluded);
  return search.best;
}

Digraph disjoint_union(const Digraph& g1, const Digraph& g2) {
  const int shift = g1.n();
  std::vector<Arc> arcs = g1.arcs();
  for (Arc a : g2.arcs()) arcs.push_back({a.tail + shift, a.head + shift});
  return Digraph::from_arcs(g1.n() + g2.n(), arcs);
}

Digraph join(const Digraph& g1, const Digraph& g2) {
  const int shift = g1.n();
  std::vector<Arc> arcs = disjoint_union(g1, g2).arcs();
  for (Vertex u = 0; u < g1.n(); ++u) {
    for (Vertex v = 0; v < g2.n(); ++v) {
      arcs.push_back({u, v + shift});
      arcs.push_back({v + shift, u});
    }
  }
  return Digraph::from_arcs(g1.n() + g2.n(), arcs);
}

Digraph induced(const Digraph& g, std::span<const Vertex> vertices) {
  if (vertices.empty()) throw InvalidInput("induced subdigraph needs a nonempty vertex set");
  std::vector<Vertex> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (Vertex v : sorted) {
    if (v < 0 || v >= g.n())
      throw InvalidInput("induced subdigraph: vertex " + std::to_string(v) + " out of range");
  }
  std::vector<Arc> arcs;
  const int k = static_cast<int>(sorted.size());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && g.has_arc(sorted[i], sorted[j])) arcs.push_back({i, j});
  return Digraph::from_arcs(k, arcs);
}

Digraph relabel(const Digraph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.n()) throw InvalidInput("relabel: permutation size mismatch");
  std::vector<bool> seen(g.n(), false);
  for (Vertex p : perm) {
    if (p < 0 || p >= g.n() || seen[p]) throw InvalidInput("relabel: not a permutation");
    seen[p] = true;
  }
  std::vector<Arc> arcs;
  for (Arc a : g.arcs()) arcs.push_back({perm[a.tail], perm[a.head]});
  return Digraph::from_arcs(g.n(), arcs);
}

}  // namespace alphadg
