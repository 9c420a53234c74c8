#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "alphadg/digraph.hpp"

namespace alphadg {

// Digraph text format:
//
//   # comment
//   n 4
//   0 1
//   1 2
//
// One `u v` line per arc, 0-indexed, order irrelevant. `#` starts a comment
// anywhere on a line. Parsing errors throw InvalidInput with the line number.
Digraph read_digraph(std::istream& in);
Digraph parse_digraph(std::string_view text);
Digraph load_digraph(const std::string& path);

// Writes arcs sorted lexicographically.
void write_digraph(std::ostream& out, const Digraph& g);
std::string to_text(const Digraph& g);
void save_digraph(const std::string& path, const Digraph& g);

}  // namespace alphadg
