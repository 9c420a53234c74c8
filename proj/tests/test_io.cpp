#include <doctest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "alphadg/errors.hpp"
#include "alphadg/families.hpp"
#include "alphadg/io.hpp"
#include "support/oracles.hpp"

using namespace alphadg;

TEST_CASE("text format round trip") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Digraph g = ref::random_strong(2 + trial % 7, 0.4, rng);
    REQUIRE(parse_digraph(to_text(g)) == g);
  }
}

TEST_CASE("writer sorts arcs") {
  const Digraph g = Digraph::from_arcs(3, {{2, 0}, {0, 1}, {1, 2}});
  CHECK(to_text(g) == "n 3\n0 1\n1 2\n2 0\n");
}

TEST_CASE("reader accepts comments and any arc order") {
  const Digraph g = parse_digraph("# a 3-cycle\nn 3   # order\n2 0\n\n1 2\n0 1 # last\n");
  CHECK(g == basic_family(BasicKind::cycle, 3));
}

TEST_CASE("reader errors name the line") {
  auto message = [](const char* text) {
    try {
      parse_digraph(text);
    } catch (const InvalidInput& e) {
      return std::string(e.what());
    }
    return std::string("accepted");
  };
  CHECK(message("n 3\n0 1\n1 1\n").find("line 3") != std::string::npos);
  CHECK(message("n 3\n0 7\n").find("line 2") != std::string::npos);
  CHECK(message("0 1\n") != "accepted");
  CHECK(message("n 3\n0 x\n") != "accepted");
  CHECK(message("n 2\nn 3\n") != "accepted");
  CHECK(message("") != "accepted");
}

TEST_CASE("files") {
  const auto path = std::filesystem::temp_directory_path() / "alphadg_io_test.dg";
  const Digraph g = k_nkm(6, 2, 3);
  save_digraph(path.string(), g);
  CHECK(load_digraph(path.string()) == g);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_digraph("/nonexistent/dir/x.dg"), InvalidInput);
}
