#include <algorithm>
#include <vector>

#include "alphadg/digraph.hpp"

namespace alphadg {

namespace {

struct Matcher {
  const Digraph& g;
  const Digraph& h;
  std::vector<Vertex> map;       // g vertex -> h vertex
  std::vector<bool> used;        // h vertex taken
  std::vector<Vertex> order;     // g vertices in assignment order

  bool compatible(Vertex gv, Vertex hv) const {
    return g.out_degree(gv) == h.out_degree(hv) && g.in_degree(gv) == h.in_degree(hv);
  }

  bool consistent(std::size_t depth, Vertex hv) const {
    const Vertex gv = order[depth];
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex gu = order[i];
      const Vertex hu = map[gu];
      if (g.has_arc(gu, gv) != h.has_arc(hu, hv)) return false;
      if (g.has_arc(gv, gu) != h.has_arc(hv, hu)) return false;
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (depth == order.size()) return true;
    const Vertex gv = order[depth];
    for (Vertex hv = 0; hv < h.n(); ++hv) {
      if (used[hv] || !compatible(gv, hv) || !consistent(depth, hv)) continue;
      used[hv] = true;
      map[gv] = hv;
      if (search(depth + 1)) return true;
      used[hv] = false;
    }
    return false;
  }
};

std::vector<std::pair<int, int>> degree_pairs(const Digraph& g) {
  std::vector<std::pair<int, int>> d(g.n());
  for (Vertex v = 0; v < g.n(); ++v) d[v] = {g.out_degree(v), g.in_degree(v)};
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

bool is_isomorphic(const Digraph& g, const Digraph& h) {
  if (g.n() != h.n() || g.arc_count() != h.arc_count()) return false;
  if (degree_pairs(g) != degree_pairs(h)) return false;

  Matcher m{g, h, std::vector<Vertex>(g.n(), -1), std::vector<bool>(h.n(), false), {}};
  // Assign high-degree vertices first; they constrain the rest the most.
  m.order.resize(g.n());
  for (Vertex v = 0; v < g.n(); ++v) m.order[v] = v;
  std::stable_sort(m.order.begin(), m.order.end(), [&](Vertex a, Vertex b) {
    return g.out_degree(a) + g.in_degree(a) > g.out_degree(b) + g.in_degree(b);
  });
  return m.search(0);
}

}  // namespace alphadg
