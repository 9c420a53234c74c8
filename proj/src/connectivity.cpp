#include <algorithm>
#include <limits>
#include <vector>

#include "alphadg/digraph.hpp"
#include "alphadg/errors.hpp"

namespace alphadg {

namespace {

// Unit-capacity max-flow on a dense residual matrix; BFS augmenting paths.
// Stops early once the flow reaches `limit`.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes)
      : nodes_(nodes), cap_(static_cast<std::size_t>(nodes) * nodes, 0), parent_(nodes) {}

  void add(int u, int v, int c) { cap_[idx(u, v)] += c; }

  int max_flow(int s, int t, int limit) {
    int flow = 0;
    std::vector<int> queue(nodes_);
    while (flow < limit) {
      std::fill(parent_.begin(), parent_.end(), -1);
      parent_[s] = s;
      int head = 0, tail = 0;
      queue[tail++] = s;
      while (head < tail && parent_[t] == -1) {
        int u = queue[head++];
        for (int v = 0; v < nodes_; ++v) {
          if (parent_[v] == -1 && cap_[idx(u, v)] > 0) {
            parent_[v] = u;
            queue[tail++] = v;
          }
        }
      }
      if (parent_[t] == -1) break;
      for (int v = t; v != s; v = parent_[v]) {
        --cap_[idx(parent_[v], v)];
        ++cap_[idx(v, parent_[v])];
      }
      ++flow;
    }
    return flow;
  }

 private:
  std::size_t idx(int u, int v) const { return static_cast<std::size_t>(u) * nodes_ + v; }

  int nodes_;
  std::vector<int> cap_;
  std::vector<int> parent_;
};

void require_connectivity_domain(const Digraph& g) {
  if (g.n() < 2 || !is_strongly_connected(g))
    throw PreconditionError("connectivity undefined: digraph is not strongly connected with n >= 2");
}

// Maximum number of internally vertex-disjoint s->t paths, s and t non-adjacent.
// Vertex v becomes v_in = v, v_out = v + n joined by a unit arc.
int vertex_disjoint_paths(const Digraph& g, Vertex s, Vertex t, int limit) {
  const int n = g.n();
  FlowNetwork net(2 * n);
  const int big = n;
  for (Vertex v = 0; v < n; ++v) net.add(v, v + n, (v == s || v == t) ? big : 1);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (g.has_arc(u, v)) net.add(u + n, v, big);
  return net.max_flow(s + n, t, limit);
}

int arc_disjoint_paths(const Digraph& g, Vertex s, Vertex t, int limit) {
  const int n = g.n();
  FlowNetwork net(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (g.has_arc(u, v)) net.add(u, v, 1);
  return net.max_flow(s, t, limit);
}

}  // namespace

int vertex_connectivity(const Digraph& g) {
  require_connectivity_domain(g);
  const int n = g.n();
  int best = n - 1;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v || g.has_arc(u, v)) continue;
      best = std::min(best, vertex_disjoint_paths(g, u, v, best));
    }
  }
  return best;
}

int arc_connectivity(const Digraph& g) {
  require_connectivity_domain(g);
  const int n = g.n();
  int best = std::numeric_limits<int>::max();
  for (Vertex v = 1; v < n; ++v) {
    best = std::min(best, arc_disjoint_paths(g, 0, v, best));
    best = std::min(best, arc_disjoint_paths(g, v, 0, best));
  }
  return best;
}

}  // namespace alphadg
