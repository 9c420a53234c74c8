#pragma once

#include <span>
#include <vector>

#include "alphadg/digraph.hpp"

namespace alphadg {

enum class TransformKind { redirect_in_arcs, subdivide_arc };

struct TransformRecord {
  Digraph before;
  Digraph after;
  TransformKind kind;
  // redirect_in_arcs: the removed arcs (t,p); subdivide_arc: the replaced arc.
  std::vector<Arc> details;
};

// Moves the arcs (t,p), t in `tails`, to (t,q). Needs p != q and
// tails a nonempty subset of N^-(p) \ (N^-(q) u {q}). Out-degrees are unchanged.
// The result need not be strongly connected.
TransformRecord redirect_in_arcs(const Digraph& g, Vertex p, Vertex q, std::span<const Vertex> tails);

// Replaces (i,j) by (i,w),(w,j) with a new vertex w = n. g must be strongly
// connected and not a directed cycle.
TransformRecord subdivide_arc(const Digraph& g, Arc arc);

// True iff g is a directed cycle through all of its vertices.
bool is_directed_cycle(const Digraph& g);

}  // namespace alphadg
