#include "alphadg/io.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <vector>

#include "alphadg/errors.hpp"

namespace alphadg {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw InvalidInput("digraph text, line " + std::to_string(line) + ": " + msg);
}

}  // namespace

Digraph read_digraph(std::istream& in) {
  std::optional<int> n;
  std::vector<Arc> arcs;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream line(raw);
    std::string first;
    if (!(line >> first)) continue;

    if (first == "n") {
      if (n) fail(line_no, "duplicate vertex count");
      int value = 0;
      if (!(line >> value)) fail(line_no, "expected `n <count>`");
      if (value < 1) fail(line_no, "vertex count must be positive");
      n = value;
    } else {
      if (!n) fail(line_no, "arc before `n <count>` header");
      Arc a;
      std::istringstream head(first);
      if (!(head >> a.tail) || !head.eof() || !(line >> a.head)) fail(line_no, "expected `u v`");
      if (a.tail < 0 || a.tail >= *n || a.head < 0 || a.head >= *n) fail(line_no, "vertex out of range");
      if (a.tail == a.head) fail(line_no, "loops are not allowed");
      arcs.push_back(a);
    }
    std::string rest;
    if (line >> rest) fail(line_no, "trailing token `" + rest + "`");
  }
  if (!n) throw InvalidInput("digraph text: missing `n <count>` header");
  try {
    return Digraph::from_arcs(*n, arcs);
  } catch (const InvalidInput& e) {
    throw InvalidInput(std::string("digraph text: ") + e.what());
  }
}

Digraph parse_digraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_digraph(in);
}

Digraph load_digraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open digraph file `" + path + "`");
  return read_digraph(in);
}

void write_digraph(std::ostream& out, const Digraph& g) {
  out << "n " << g.n() << '\n';
  for (Arc a : g.arcs()) out << a.tail << ' ' << a.head << '\n';
}

std::string to_text(const Digraph& g) {
  std::ostringstream out;
  write_digraph(out, g);
  return out.str();
}

void save_digraph(const std::string& path, const Digraph& g) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write digraph file `" + path + "`");
  write_digraph(out, g);
}

}  // namespace alphadg
