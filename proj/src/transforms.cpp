#include "alphadg/transforms.hpp"

#include <algorithm>
#include <string>

#include "alphadg/errors.hpp"

namespace alphadg {

bool is_directed_cycle(const Digraph& g) {
  if (g.n() < 2 || g.arc_count() != g.n()) return false;
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.out_degree(v) != 1 || g.in_degree(v) != 1) return false;
  return is_strongly_connected(g);
}

TransformRecord redirect_in_arcs(const Digraph& g, Vertex p, Vertex q, std::span<const Vertex> tails) {
  const int n = g.n();
  auto vertex_ok = [n](Vertex v) { return v >= 0 && v < n; };
  if (!vertex_ok(p) || !vertex_ok(q)) throw InvalidInput("redirect_in_arcs: p or q out of range");
  if (p == q) throw InvalidInput("redirect_in_arcs: p and q must differ");
  if (tails.empty()) throw InvalidInput("redirect_in_arcs: tail set is empty");

  std::vector<Vertex> sorted(tails.begin(), tails.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidInput("redirect_in_arcs: tail set lists a vertex twice");

  std::vector<Arc> arcs = g.arcs();
  std::vector<Arc> removed;
  for (Vertex t : sorted) {
    const std::string name = "redirect_in_arcs: vertex " + std::to_string(t);
    if (!vertex_ok(t)) throw InvalidInput(name + " out of range");
    if (!g.has_arc(t, p)) throw InvalidInput(name + " is not an in-neighbour of p");
    if (t == q) throw InvalidInput(name + " is q; the move would create a loop");
    if (g.has_arc(t, q)) throw InvalidInput(name + " already points to q; the move would duplicate an arc");
    removed.push_back({t, p});
  }
  std::erase_if(arcs, [&](Arc a) { return std::binary_search(removed.begin(), removed.end(), a); });
  for (Vertex t : sorted) arcs.push_back({t, q});

  return {g, Digraph::from_arcs(n, arcs), TransformKind::redirect_in_arcs, removed};
}

TransformRecord subdivide_arc(const Digraph& g, Arc arc) {
  if (arc.tail < 0 || arc.tail >= g.n() || arc.head < 0 || arc.head >= g.n() || !g.has_arc(arc.tail, arc.head))
    throw InvalidInput("subdivide_arc: (" + std::to_string(arc.tail) + "," + std::to_string(arc.head) +
                       ") is not an arc");
  if (!is_strongly_connected(g)) throw PreconditionError("subdivide_arc: digraph must be strongly connected");
  if (is_directed_cycle(g))
    throw PreconditionError("subdivide_arc: the radius bound needs a digraph other than a directed cycle");

  const Vertex w = g.n();
  std::vector<Arc> arcs = g.arcs();
  std::erase(arcs, arc);
  arcs.push_back({arc.tail, w});
  arcs.push_back({w, arc.head});
  return {g, Digraph::from_arcs(g.n() + 1, arcs), TransformKind::subdivide_arc, {arc}};
}

}  // namespace alphadg
