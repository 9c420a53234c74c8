#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "alphadg/digraph.hpp"
#include "alphadg/spectral.hpp"

namespace alphadg {

// ---------------------------------------------------------------------------
// Labelled enumeration.
//
// A digraph on n vertices is coded by its adjacency pattern over the n(n-1)
// off-diagonal cells in row-major order: bit b (LSB first) is the b-th cell
// (0,1), (0,2), ..., (0,n-1), (1,0), (1,2), ...
// ---------------------------------------------------------------------------

inline constexpr int kMaxEnumerationOrder = 6;

std::uint64_t code_space(int n);  // 2^(n(n-1))
Digraph decode_digraph(int n, std::uint64_t code);
std::uint64_t encode_digraph(const Digraph& g);  // n <= 8

// Bitmask forward/backward reachability from vertex 0; the enumeration filter.
bool code_is_strong(int n, std::uint64_t code);

// Calls visit(code, digraph) for every strongly connected digraph on n
// vertices in ascending code order. 2 <= n <= 6; n = 6 requires long_runs.
void enumerate_strong(int n, const std::function<void(std::uint64_t, const Digraph&)>& visit,
                      bool long_runs = false);

// Codes of all strongly connected digraphs on n vertices, ascending; the scan
// is split into contiguous ranges across `workers` threads.
std::vector<std::uint64_t> strong_codes(int n, int workers = 1, bool long_runs = false);

// ---------------------------------------------------------------------------
// Extremal scans.
// ---------------------------------------------------------------------------

enum class Parameter { girth, clique, vertex_conn, arc_conn, none };
enum class Mode { min, max };

const char* to_string(Parameter p);
const char* to_string(Mode m);
Parameter parse_parameter(const std::string& s);  // throws InvalidInput
Mode parse_mode(const std::string& s);

// Combinatorial data of one enumerated digraph.
struct DigraphFacts {
  std::uint64_t code = 0;
  std::int8_t girth = 0;  // 0 = acyclic (never for strong n >= 2)
  std::int8_t clique = 0;
  std::int8_t kappa = 0;
  std::int8_t kappa_arc = 0;
  std::int8_t min_out = 0;
  std::int8_t max_out = 0;
  std::int8_t min_in = 0;
  std::int8_t max_in = 0;

  int min_over_both() const { return min_out < min_in ? min_out : min_in; }
  bool regular(int r) const { return min_out == r && max_out == r && min_in == r && max_in == r; }
  int key(Parameter p) const;
};

DigraphFacts compute_facts(std::uint64_t code, const Digraph& g);

struct ScanConfig {
  SpectralOptions spectral;
  int workers = 1;
  bool long_runs = false;
};

// Radii within this distance of a group's extremum attain it.
inline constexpr double kAttainTol = 1e-8;

struct IsoClass {
  Digraph representative;       // smallest code in the class
  std::uint64_t code = 0;
  std::size_t labelled_count = 0;  // attaining labelled digraphs in this class
};

// One cluster of radii within kAttainTol of its most extreme member.
struct Band {
  double value = 0.0;  // most extreme radius in the band
  std::vector<IsoClass> classes;
  std::size_t labelled_count = 0;
};

struct ExtremalGroup {
  int key = 0;                      // parameter value
  std::size_t group_size = 0;       // labelled digraphs with this key
  std::vector<Band> bands;          // bands[0] is the extremum
  std::optional<double> runner_up;  // first value beyond the reported bands
  std::optional<double> gap() const {
    if (!runner_up) return std::nullopt;
    double d = bands.back().value - *runner_up;
    return d < 0 ? -d : d;
  }
};

struct ExtremalReport {
  int n = 0;
  double alpha = 0.0;
  Parameter parameter = Parameter::none;
  Mode mode = Mode::min;
  std::vector<ExtremalGroup> groups;  // ascending key

  const ExtremalGroup* group(int key) const;
};

using FactsFilter = std::function<bool(const DigraphFacts&)>;

// Per-n cache of facts and per-alpha radii for n <= 5; n = 6 is streamed.
class Census {
 public:
  static Census build(int n, int workers = 1);

  int n() const { return n_; }
  const std::vector<DigraphFacts>& facts() const { return facts_; }

  // Radii aligned with facts(), computed once per alpha.
  const std::vector<double>& radii(double alpha, const SpectralOptions& opts, int workers = 1);

 private:
  int n_ = 0;
  std::vector<DigraphFacts> facts_;
  std::map<std::pair<double, double>, std::vector<double>> radii_;  // (alpha, tol)
};

// Context that keeps censuses alive between scans; not thread-safe itself
// (its scans are internally parallel).
class Oracle {
 public:
  explicit Oracle(ScanConfig cfg = {});

  const ScanConfig& config() const { return cfg_; }
  Census& census(int n);

  // bands > 1 also reports the next-most-extreme clusters (used for the
  // second maximum over all digraphs).
  ExtremalReport extremal_scan(int n, double alpha, Parameter parameter, Mode mode, int bands = 1,
                               const FactsFilter& filter = {});

 private:
  ScanConfig cfg_;
  std::map<int, std::unique_ptr<Census>> censuses_;
};

// One-shot scan with a private context.
ExtremalReport extremal_scan(int n, double alpha, Parameter parameter, Mode mode, const ScanConfig& cfg = {});

// ---------------------------------------------------------------------------
// Theorem verification.
// ---------------------------------------------------------------------------

enum class TheoremId { T3_1, T4_1, T5_3, T6_3, T6_4, T6_5, R5_1, L3_1, L4_1 };
enum class VerdictStatus { confirmed, violated, vacuous };

const char* to_string(TheoremId id);
const char* to_string(VerdictStatus s);
std::optional<TheoremId> parse_theorem_id(const std::string& s);
std::vector<TheoremId> all_theorem_ids();

struct VerificationVerdict {
  TheoremId id;
  int n = 0;
  std::vector<double> alphas;
  VerdictStatus status = VerdictStatus::vacuous;
  std::vector<std::string> details;  // one line per checked case
  std::optional<Digraph> witness;    // present iff violated
};

// Enumeration-backed ids need 2 <= n <= 6 (6 behind long_runs); the primed
// family ids (L3.1, L4.1) accept 3 <= n <= 12.
VerificationVerdict verify_theorem(Oracle& oracle, TheoremId id, int n, std::span<const double> alphas);

// ---------------------------------------------------------------------------
// Open-problem exploration: is G0 extremal over digraphs with clique number d?
// ---------------------------------------------------------------------------

struct Problem41Row {
  int n = 0;
  int d = 0;
  double alpha = 0.0;
  double g0_radius = 0.0;
  bool g0_in_class = false;  // strongly connected with clique number d
  std::optional<double> scan_max;
  std::optional<double> gap;  // scan_max - g0_radius
  bool agree = false;         // gap <= kAttainTol
};

struct Problem41Report {
  std::string label = "exploratory - open problem";
  std::vector<Problem41Row> rows;
};

// 3 <= n <= 5, 1 <= d <= n-1.
Problem41Report explore_problem_4_1(Oracle& oracle, int n, int d, std::span<const double> alphas);

}  // namespace alphadg
