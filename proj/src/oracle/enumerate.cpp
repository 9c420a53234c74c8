#include <array>
#include <string>

#include "alphadg/errors.hpp"
#include "alphadg/oracle.hpp"
#include "alphadg/parallel.hpp"

namespace alphadg {

namespace {

constexpr std::uint64_t kRangeSize = 1 << 14;

void check_order(int n, bool long_runs) {
  if (n < 2 || n > kMaxEnumerationOrder)
    throw InvalidInput("enumeration supports 2 <= n <= 6, got n=" + std::to_string(n));
  if (n == kMaxEnumerationOrder && !long_runs)
    throw PreconditionError("enumeration at n=6 scans 2^30 codes; enable long runs to proceed");
}

// out[i] = bitmask of out-neighbours of i.
void code_to_masks(int n, std::uint64_t code, std::array<std::uint32_t, 8>& out, std::array<std::uint32_t, 8>& in) {
  out.fill(0);
  in.fill(0);
  int b = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if ((code >> b) & 1U) {
        out[i] |= 1U << j;
        in[j] |= 1U << i;
      }
      ++b;
    }
  }
}

std::uint32_t reach(const std::array<std::uint32_t, 8>& adj, std::uint32_t from) {
  std::uint32_t seen = from, frontier = from;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[__builtin_ctz(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

}  // namespace

std::uint64_t code_space(int n) {
  if (n < 1 || n > 8) throw InvalidInput("code space defined for 1 <= n <= 8");
  const int bits = n * (n - 1);
  if (bits >= 64) throw InvalidInput("code space too large");
  return std::uint64_t{1} << bits;
}

Digraph decode_digraph(int n, std::uint64_t code) {
  std::vector<Arc> arcs;
  int b = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if ((code >> b) & 1U) arcs.push_back({i, j});
      ++b;
    }
  return Digraph::from_arcs(n, arcs);
}

std::uint64_t encode_digraph(const Digraph& g) {
  if (g.n() > 8) throw InvalidInput("encode_digraph supports n <= 8");
  std::uint64_t code = 0;
  int b = 0;
  for (int i = 0; i < g.n(); ++i)
    for (int j = 0; j < g.n(); ++j) {
      if (i == j) continue;
      if (g.has_arc(i, j)) code |= std::uint64_t{1} << b;
      ++b;
    }
  return code;
}

bool code_is_strong(int n, std::uint64_t code) {
  std::array<std::uint32_t, 8> out{}, in{};
  code_to_masks(n, code, out, in);
  const std::uint32_t all = (1U << n) - 1;
  return reach(out, 1U) == all && reach(in, 1U) == all;
}

void enumerate_strong(int n, const std::function<void(std::uint64_t, const Digraph&)>& visit, bool long_runs) {
  check_order(n, long_runs);
  const std::uint64_t total = code_space(n);
  for (std::uint64_t code = 0; code < total; ++code)
    if (code_is_strong(n, code)) visit(code, decode_digraph(n, code));
}

std::vector<std::uint64_t> strong_codes(int n, int workers, bool long_runs) {
  check_order(n, long_runs);
  auto parts = map_ranges<std::vector<std::uint64_t>>(code_space(n), kRangeSize, workers,
                                                      [n](std::uint64_t begin, std::uint64_t end) {
                                                        std::vector<std::uint64_t> codes;
                                                        for (std::uint64_t c = begin; c < end; ++c)
                                                          if (code_is_strong(n, c)) codes.push_back(c);
                                                        return codes;
                                                      });
  std::vector<std::uint64_t> all;
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  return all;
}

int DigraphFacts::key(Parameter p) const {
  switch (p) {
    case Parameter::girth: return girth;
    case Parameter::clique: return clique;
    case Parameter::vertex_conn: return kappa;
    case Parameter::arc_conn: return kappa_arc;
    case Parameter::none: return 0;
  }
  return 0;
}

DigraphFacts compute_facts(std::uint64_t code, const Digraph& g) {
  DigraphFacts f;
  f.code = code;
  f.girth = static_cast<std::int8_t>(girth(g).value_or(0));
  f.clique = static_cast<std::int8_t>(clique_number(g));
  f.kappa = static_cast<std::int8_t>(vertex_connectivity(g));
  f.kappa_arc = static_cast<std::int8_t>(arc_connectivity(g));
  const DegreeProfile p = degree_profile(g);
  f.min_out = static_cast<std::int8_t>(p.min_out);
  f.max_out = static_cast<std::int8_t>(p.max_out);
  f.min_in = static_cast<std::int8_t>(p.min_in);
  f.max_in = static_cast<std::int8_t>(p.max_in);
  return f;
}

Census Census::build(int n, int workers) {
  if (n < 2 || n > 5) throw InvalidInput("census supports 2 <= n <= 5; larger orders are streamed");
  Census c;
  c.n_ = n;
  auto parts = map_ranges<std::vector<DigraphFacts>>(code_space(n), kRangeSize, workers,
                                                     [n](std::uint64_t begin, std::uint64_t end) {
                                                       std::vector<DigraphFacts> out;
                                                       for (std::uint64_t code = begin; code < end; ++code) {
                                                         if (!code_is_strong(n, code)) continue;
                                                         out.push_back(compute_facts(code, decode_digraph(n, code)));
                                                       }
                                                       return out;
                                                     });
  for (auto& p : parts) c.facts_.insert(c.facts_.end(), p.begin(), p.end());
  return c;
}

const std::vector<double>& Census::radii(double alpha, const SpectralOptions& opts, int workers) {
  const auto key = std::make_pair(alpha, opts.tol);
  if (auto it = radii_.find(key); it != radii_.end()) return it->second;
  const std::uint64_t total = facts_.size();
  auto parts = map_ranges<std::vector<double>>(total, 4096, workers, [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<double> out;
    out.reserve(end - begin);
    for (std::uint64_t i = begin; i < end; ++i)
      out.push_back(spectral_radius(decode_digraph(n_, facts_[i].code), alpha, opts).radius);
    return out;
  });
  std::vector<double> all;
  all.reserve(total);
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  return radii_.emplace(key, std::move(all)).first->second;
}

}  // namespace alphadg
