#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>

#include "alphadg/digraph.hpp"

namespace alphadg {

// Generators for the named extremal families. Vertex numbering is fixed so
// tests can address structure by position; see each generator.

enum class BasicKind { path, cycle, complete };

// path: arcs (i,i+1); cycle: path + (n-1,0); complete: every ordered pair.
Digraph basic_family(BasicKind kind, int n);

// Directed g-cycle 0 -> 1 -> ... -> g-1 -> 0 plus the path
// g-1 -> g -> ... -> n-1 -> 0. The primed variant ends the path at g-1
// instead of 0. Requires 2 <= g <= n-1.
Digraph c_ng(int n, int g, bool primed = false);

// Complete digraph on {n-d, ..., n-1} plus the path
// n-d -> 0 -> 1 -> ... -> n-d-1 -> n-d+1 through the n-d outside vertices.
// The primed variant returns the last path arc to n-d instead.
// Requires 2 <= d <= n-1.
Digraph b_nd(int n, int d, bool primed = false);

// Blocks V1 = {0..m-1}, S = {m..m+k-1}, V2 = {m+k..n-1}, each complete;
// digons between S and V1 u V2; one-way arcs V1 -> V2.
// Requires 1 <= k <= n-2, 1 <= m <= n-k-1.
Digraph k_nkm(int n, int k, int m);

enum class TournamentKind { transitive, rotational, brualdi_li, extremal_bruteforce };

// transitive: i -> j for i < j. rotational (odd n >= 3): i -> i+s mod n for
// s = 1..(n-1)/2. brualdi_li (even n >= 2): halves {0..h-1}, {h..2h-1} each
// transitive; first-half i beats second-half j iff i > j (local indices),
// otherwise second-half j beats i. extremal_bruteforce (n <= 7): a tournament
// maximising lambda_alpha, ties broken by smallest code.
Digraph tournament(TournamentKind kind, int n, double alpha = 0.0);

// Tournament code: bit e (LSB first) is set iff the e-th pair (i,j), i < j,
// in lexicographic order is oriented i -> j.
Digraph tournament_from_code(int n, std::uint64_t code);

// Exhaustive search over all 2^(n(n-1)/2) tournaments. Scans fixed-size code
// ranges (in parallel when workers > 1) and reduces deterministically: larger
// lambda_alpha wins unless within 1e-9, then the smaller code wins.
// Only strongly connected tournaments compete when any exist (n >= 3).
// Refuses n > 7; n == 7 also needs allow_n7.
struct ExtremalTournament {
  Digraph tournament;
  std::uint64_t code = 0;
  double radius = 0.0;
};
ExtremalTournament extremal_tournament(int n, double alpha, int workers = 1, bool allow_n7 = false);

// l = floor(n/d), r = n - l*d; r parts of size l+1 first, then d-r parts of
// size l; digons between parts; an extremal tournament inside each part
// (rotational / Brualdi–Li at alpha = 0, brute force otherwise, up to size 7).
Digraph g0(int n, int d, double alpha, int workers = 1, bool allow_n7 = false);

// Complete blocks X = {0..a-1} and Y = {a..n-1}; U = {0..k-1} -> W = {a..a+k-1}
// (all k*k arcs), and every arc from Y to X. Requires k+2 <= a <= n-k-2.
Digraph h4(int n, int k, int a);

// Arcs (i, i+s mod n) for each step s; steps must include 1 and lie in 1..n-1.
Digraph circulant(int n, const std::set<int>& steps);

// Parses a family spec as used by the CLI: kind plus integer parameters.
struct FamilySpec {
  std::string kind;
  std::map<std::string, int> params;  // n, g, d, k, m, a
  std::set<int> steps;                // circulant
  bool primed = false;
  double alpha = 0.0;                 // extremal tournament / g0
};

// Kinds: path, cycle, complete, c_ng, b_nd, knkm (alias k_nkm), transitive,
// rotational, brualdi_li, extremal_tournament, g0, h4, circulant. Tournament
// kinds also take a tournament_ prefix (tournament_extremal_bruteforce for the
// search). Primed c_ng / b_nd come from `primed` or the c_ng_primed /
// b_nd_primed kinds.
Digraph build_family(const FamilySpec& spec, int workers = 1, bool long_runs = false);

}  // namespace alphadg
