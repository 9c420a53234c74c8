#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace alphadg {

using Vertex = int;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Simple digraph on vertices 0..n-1: no loops, no parallel arcs. Digons
// (u,v),(v,u) are two distinct arcs. Stored as a dense adjacency matrix, which
// is the right trade-off at the orders this library works with.
class Digraph {
 public:
  Digraph() = default;

  // Empty digraph on n vertices.
  explicit Digraph(int n);

  // Validates every pair (range, no loops) and deduplicates.
  static Digraph from_arcs(int n, std::span<const Arc> arcs);
  static Digraph from_arcs(int n, std::initializer_list<Arc> arcs) {
    return from_arcs(n, std::span<const Arc>(arcs.begin(), arcs.size()));
  }

  int n() const noexcept { return n_; }
  int arc_count() const noexcept { return arc_count_; }

  bool has_arc(Vertex u, Vertex v) const noexcept {
    return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }

  int out_degree(Vertex u) const noexcept { return out_deg_[u]; }
  int in_degree(Vertex u) const noexcept { return in_deg_[u]; }

  std::vector<Vertex> out_neighbors(Vertex u) const;
  std::vector<Vertex> in_neighbors(Vertex u) const;

  // Lexicographically sorted.
  std::vector<Arc> arcs() const;

  // Returns a copy with the arc added / removed. Same validation as from_arcs.
  Digraph with_arc(Arc a) const;
  Digraph without_arc(Arc a) const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void set_arc(Vertex u, Vertex v);
  void clear_arc(Vertex u, Vertex v);

  int n_ = 0;
  int arc_count_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<int> out_deg_;
  std::vector<int> in_deg_;
};

struct DegreeProfile {
  std::vector<int> out_degrees;
  std::vector<int> in_degrees;
  int min_out = 0;  // delta^+
  int max_out = 0;  // Delta^+
  int min_in = 0;   // delta^-
  int max_in = 0;
  int min_over_both = 0;  // delta^0 = min(delta^+, delta^-)

  bool out_regular() const noexcept { return min_out == max_out; }
  // Every out- and in-degree equals r.
  bool regular(int r) const noexcept {
    return min_out == r && max_out == r && min_in == r && max_in == r;
  }
};

DegreeProfile degree_profile(const Digraph& g);

// Tarjan pass; strongly connected components in reverse topological order.
std::vector<std::vector<Vertex>> strongly_connected_components(const Digraph& g);

// n = 1 counts as strongly connected.
bool is_strongly_connected(const Digraph& g);

// Length of the shortest directed cycle (a digon has length 2); nullopt if acyclic.
std::optional<int> girth(const Digraph& g);

// Size of the largest vertex set inducing a complete digraph.
int clique_number(const Digraph& g);

// kappa(G). The complete digraph on n vertices reports n-1.
// Throws PreconditionError if g is not strongly connected or n < 2.
int vertex_connectivity(const Digraph& g);

// kappa'(G). Throws PreconditionError if g is not strongly connected or n < 2.
int arc_connectivity(const Digraph& g);

// g2's vertices are shifted by g1.n().
Digraph join(const Digraph& g1, const Digraph& g2);
Digraph disjoint_union(const Digraph& g1, const Digraph& g2);

// Induced subdigraph on `vertices`, relabelled 0..|S|-1 in ascending order.
Digraph induced(const Digraph& g, std::span<const Vertex> vertices);

// Relabels vertex v as perm[v].
Digraph relabel(const Digraph& g, std::span<const Vertex> perm);

// Backtracking permutation search with degree pruning; meant for n <= 8.
bool is_isomorphic(const Digraph& g, const Digraph& h);

}  // namespace alphadg
