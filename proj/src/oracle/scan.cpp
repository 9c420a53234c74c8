#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "alphadg/errors.hpp"
#include "alphadg/oracle.hpp"
#include "alphadg/parallel.hpp"

namespace alphadg {

namespace {

struct Entry {
  double radius;
  std::uint64_t code;
};

using Groups = std::map<int, std::vector<Entry>>;

// Orders entries from most to least extreme; equal radii by code.
void sort_extreme_first(std::vector<Entry>& v, Mode mode) {
  std::sort(v.begin(), v.end(), [mode](const Entry& a, const Entry& b) {
    if (a.radius != b.radius) return mode == Mode::min ? a.radius < b.radius : a.radius > b.radius;
    return a.code < b.code;
  });
}

// Greedy clusters of width kAttainTol, the first anchored at v[start]. Returns
// the index one past the last entry of the `clusters`-th cluster.
std::size_t cluster_end(const std::vector<Entry>& v, std::size_t start, std::size_t clusters) {
  std::size_t i = start;
  for (std::size_t c = 0; c < clusters && i < v.size(); ++c) {
    const double anchor = v[i].radius;
    while (i < v.size() && std::abs(v[i].radius - anchor) <= kAttainTol) ++i;
  }
  return i;
}

// Keeps enough of each group that the merged groups still determine the first
// `bands` clusters and the runner-up. A cluster of width kAttainTol meets at
// most two clusters of another partition, hence the factor two.
void trim(Groups& groups, Mode mode, int bands) {
  for (auto& [key, v] : groups) {
    sort_extreme_first(v, mode);
    v.resize(cluster_end(v, 0, 2 * (static_cast<std::size_t>(bands) + 1)));
  }
}

std::vector<IsoClass> iso_classes(int n, std::vector<Entry> members) {
  std::sort(members.begin(), members.end(), [](const Entry& a, const Entry& b) { return a.code < b.code; });
  struct Bucket {
    std::vector<std::pair<int, int>> degrees;
    std::vector<std::size_t> classes;
  };
  std::vector<IsoClass> out;
  std::vector<Bucket> buckets;
  for (const Entry& e : members) {
    Digraph g = decode_digraph(n, e.code);
    std::vector<std::pair<int, int>> degrees;
    for (Vertex v = 0; v < n; ++v) degrees.emplace_back(g.out_degree(v), g.in_degree(v));
    std::sort(degrees.begin(), degrees.end());
    auto bucket = std::find_if(buckets.begin(), buckets.end(), [&](const Bucket& b) { return b.degrees == degrees; });
    if (bucket == buckets.end()) {
      buckets.push_back({degrees, {}});
      bucket = std::prev(buckets.end());
    }
    bool placed = false;
    for (std::size_t idx : bucket->classes) {
      if (is_isomorphic(out[idx].representative, g)) {
        ++out[idx].labelled_count;
        placed = true;
        break;
      }
    }
    if (!placed) {
      bucket->classes.push_back(out.size());
      out.push_back({std::move(g), e.code, 1});
    }
  }
  return out;
}

ExtremalGroup finish_group(int n, int key, std::size_t size, std::vector<Entry> v, Mode mode, int bands) {
  sort_extreme_first(v, mode);
  ExtremalGroup g;
  g.key = key;
  g.group_size = size;
  std::size_t i = 0;
  for (int b = 0; b < bands && i < v.size(); ++b) {
    const std::size_t end = cluster_end(v, i, 1);
    Band band;
    band.value = v[i].radius;
    band.labelled_count = end - i;
    band.classes = iso_classes(n, std::vector<Entry>(v.begin() + static_cast<std::ptrdiff_t>(i),
                                                     v.begin() + static_cast<std::ptrdiff_t>(end)));
    g.bands.push_back(std::move(band));
    i = end;
  }
  if (i < v.size()) g.runner_up = v[i].radius;
  return g;
}

void check_scan_args(double alpha, int bands) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw InvalidInput("alpha must lie in [0,1), got " + std::to_string(alpha));
  if (bands < 1) throw InvalidInput("bands must be at least 1");
}

}  // namespace

const char* to_string(Parameter p) {
  switch (p) {
    case Parameter::girth: return "girth";
    case Parameter::clique: return "clique";
    case Parameter::vertex_conn: return "vertex_conn";
    case Parameter::arc_conn: return "arc_conn";
    case Parameter::none: return "none";
  }
  return "?";
}

const char* to_string(Mode m) { return m == Mode::min ? "min" : "max"; }

Parameter parse_parameter(const std::string& s) {
  for (Parameter p : {Parameter::girth, Parameter::clique, Parameter::vertex_conn, Parameter::arc_conn, Parameter::none})
    if (s == to_string(p)) return p;
  if (s == "kappa") return Parameter::vertex_conn;
  if (s == "kappa_arc") return Parameter::arc_conn;
  throw InvalidInput("unknown parameter '" + s + "' (girth, clique, vertex_conn, arc_conn, none)");
}

Mode parse_mode(const std::string& s) {
  if (s == "min") return Mode::min;
  if (s == "max") return Mode::max;
  throw InvalidInput("unknown mode '" + s + "' (min, max)");
}

const ExtremalGroup* ExtremalReport::group(int key) const {
  for (const auto& g : groups)
    if (g.key == key) return &g;
  return nullptr;
}

Oracle::Oracle(ScanConfig cfg) : cfg_(cfg) {
  if (cfg_.workers < 1) throw InvalidInput("workers must be at least 1");
  if (!(cfg_.spectral.tol > 0)) throw InvalidInput("tol must be positive");
}

Census& Oracle::census(int n) {
  auto& slot = censuses_[n];
  if (!slot) slot = std::make_unique<Census>(Census::build(n, cfg_.workers));
  return *slot;
}

ExtremalReport Oracle::extremal_scan(int n, double alpha, Parameter parameter, Mode mode, int bands,
                                     const FactsFilter& filter) {
  check_scan_args(alpha, bands);
  if (n < 2 || n > kMaxEnumerationOrder)
    throw InvalidInput("enumeration supports 2 <= n <= 6, got n=" + std::to_string(n));

  Groups groups;
  std::map<int, std::size_t> sizes;

  if (n <= 5) {
    Census& c = census(n);
    const auto& radii = c.radii(alpha, cfg_.spectral, cfg_.workers);
    const auto& facts = c.facts();
    for (std::size_t i = 0; i < facts.size(); ++i) {
      if (filter && !filter(facts[i])) continue;
      const int key = facts[i].key(parameter);
      ++sizes[key];
      groups[key].push_back({radii[i], facts[i].code});
    }
  } else {
    if (!cfg_.long_runs) throw PreconditionError("enumeration at n=6 scans 2^30 codes; enable long runs to proceed");
    struct Partial {
      Groups groups;
      std::map<int, std::size_t> sizes;
    };
    const SpectralOptions opts = cfg_.spectral;
    auto parts = map_ranges<Partial>(code_space(n), 1 << 16, cfg_.workers, [&](std::uint64_t begin, std::uint64_t end) {
      Partial p;
      for (std::uint64_t code = begin; code < end; ++code) {
        if (!code_is_strong(n, code)) continue;
        const Digraph g = decode_digraph(n, code);
        const DigraphFacts f = compute_facts(code, g);
        if (filter && !filter(f)) continue;
        const int key = f.key(parameter);
        ++p.sizes[key];
        p.groups[key].push_back({spectral_radius(g, alpha, opts).radius, code});
      }
      trim(p.groups, mode, bands);
      return p;
    });
    for (auto& p : parts) {
      for (auto& [key, count] : p.sizes) sizes[key] += count;
      for (auto& [key, v] : p.groups) {
        auto& dst = groups[key];
        dst.insert(dst.end(), v.begin(), v.end());
      }
      p = {};
      trim(groups, mode, bands);
    }
  }

  ExtremalReport report;
  report.n = n;
  report.alpha = alpha;
  report.parameter = parameter;
  report.mode = mode;
  for (auto& [key, v] : groups) report.groups.push_back(finish_group(n, key, sizes[key], std::move(v), mode, bands));
  return report;
}

ExtremalReport extremal_scan(int n, double alpha, Parameter parameter, Mode mode, const ScanConfig& cfg) {
  Oracle oracle(cfg);
  return oracle.extremal_scan(n, alpha, parameter, mode);
}

}  // namespace alphadg
