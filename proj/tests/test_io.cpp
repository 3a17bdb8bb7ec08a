#include <sstream>

#include "doctest.h"
#include "eg/io.hpp"

using eg::MultiGraph;

namespace {

MultiGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return eg::read_graph(in);
}

}  // namespace

TEST_CASE("graph writer emits the canonical layout") {
  CHECK(eg::graph_to_string(eg::cycle(3)) == "3 3\n0 1\n1 2\n2 0\n");
}

TEST_CASE("graph round trip is bit-exact") {
  for (const MultiGraph& g : {eg::cycle(3), eg::cycle_power(5, 2),
                              eg::cartesian_product(eg::cycle(3), eg::cycle(3))}) {
    const std::string text = eg::graph_to_string(g);
    const MultiGraph back = parse_graph(text);
    CHECK(back.p == g.p);
    CHECK(back.edges == g.edges);
    CHECK(eg::graph_to_string(back) == text);
  }
}

TEST_CASE("reader skips comments, blank lines and carriage returns") {
  const MultiGraph g = parse_graph("# a triangle\n\n3 3\r\n0 1\n  # inner note\n1 2\n\n2 0\n");
  CHECK(g.p == 3);
  CHECK(g.q() == 3);
}

TEST_CASE("graph reader rejects malformed input") {
  CHECK_THROWS_AS(parse_graph(""), eg::ParseError);
  CHECK_THROWS_AS(parse_graph("3\n"), eg::ParseError);                   // short header
  CHECK_THROWS_AS(parse_graph("3 3\n0 1\n1 2\n"), eg::ParseError);       // missing edge line
  CHECK_THROWS_AS(parse_graph("3 1\n0 1\n1 2\n"), eg::ParseError);       // extra edge line
  CHECK_THROWS_AS(parse_graph("3 1\n0 x\n"), eg::ParseError);            // non-integer
  CHECK_THROWS_AS(parse_graph("3 1\n0 1 2\n"), eg::ParseError);          // too many fields
  CHECK_THROWS_AS(parse_graph("0 0\n"), eg::ParseError);                 // no vertices
  CHECK_THROWS_AS(parse_graph("3 1\n1 1\n"), eg::ParseError);            // loop
  CHECK_THROWS_AS(parse_graph("3 1\n0 3\n"), eg::ParseError);            // endpoint range
  CHECK_THROWS_AS(parse_graph("3 1\n0 99999999999999999999\n"), eg::ParseError);
}

TEST_CASE("labeling round trip, any line order") {
  const MultiGraph c3 = eg::cycle(3);
  std::istringstream with_header("3 3\n1 1\n2 2\n3 3\n");
  CHECK_THROWS_AS(eg::read_labeling(with_header, c3), eg::ParseError);  // graph header counts

  std::istringstream shuffled("2 2\n3 1\n1 3\n");
  const eg::EdgeLabeling l = eg::read_labeling(shuffled, c3);
  CHECK(l.labels == std::vector<int>{3, 2, 1});
  CHECK(l.modulus == 3);
  CHECK(eg::labeling_to_string(l) == "1 3\n2 2\n3 1\n");
}

TEST_CASE("labeling reader rejects bad indices") {
  const MultiGraph c3 = eg::cycle(3);
  auto read = [&](const std::string& text) {
    std::istringstream in(text);
    return eg::read_labeling(in, c3);
  };
  CHECK_THROWS_AS(read("1 1\n2 2\n"), eg::ParseError);            // missing line
  CHECK_THROWS_AS(read("1 1\n2 2\n2 3\n"), eg::ParseError);       // duplicate index
  CHECK_THROWS_AS(read("0 1\n1 2\n2 3\n"), eg::ParseError);       // index below 1
  CHECK_THROWS_AS(read("1 1\n2 2\n4 3\n"), eg::ParseError);       // index above q
  CHECK_THROWS_AS(read("1 1\n2 2\n3 3\n4 4\n"), eg::ParseError);  // extra line
}

TEST_CASE("striation round trip") {
  const MultiGraph k5 = eg::cycle_power(5, 2);
  const eg::Striation s{{{{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}}},
                        {{1, 2, 3, 4, 5, 6, 8, 7, 9, 10}, 5}};
  const std::string text = eg::striation_to_string(s);
  CHECK(text ==
        "1 1\n2 2\n3 3\n4 4\n5 5\n6 6\n7 8\n8 7\n9 9\n10 10\n"
        "---\n"
        "1 1\n2 1\n3 1\n4 1\n5 1\n6 2\n7 2\n8 2\n9 2\n10 2\n");
  std::istringstream in(text);
  const eg::Striation back = eg::read_striation(in, k5);
  CHECK(back.labeling.labels == s.labeling.labels);
  CHECK(back.factorization.factors == s.factorization.factors);
  CHECK(eg::striation_to_string(back) == text);
}

TEST_CASE("striation reader accepts comments and sparse stria numbering shapes") {
  const MultiGraph c3 = eg::cycle(3);
  std::istringstream in("# witness\n1 1\n2 2\n3 3\n---\n1 1\n2 1\n3 1\n");
  const eg::Striation s = eg::read_striation(in, c3);
  CHECK(s.factorization.factors == std::vector<std::vector<int>>{{0, 1, 2}});
}

TEST_CASE("striation reader rejects malformed input") {
  const MultiGraph c3 = eg::cycle(3);
  auto read = [&](const std::string& text) {
    std::istringstream in(text);
    return eg::read_striation(in, c3);
  };
  CHECK_THROWS_AS(read("1 1\n2 2\n3 3\n"), eg::ParseError);  // no separator, no assignments
  CHECK_THROWS_AS(read("1 1\n2 2\n3 3\n1 1\n2 1\n3 1\n---\n"), eg::ParseError);
  CHECK_THROWS_AS(read("1 1\n2 2\n3 3\n---\n1 0\n2 1\n3 1\n"), eg::ParseError);  // stria < 1
  CHECK_THROWS_AS(read("1 1\n2 2\n3 3\n---\n1 1\n2 1\n3 9\n"), eg::ParseError);  // stria > q
}

TEST_CASE("missing files raise parse errors") {
  CHECK_THROWS_AS(eg::read_graph_file("/nonexistent/g.txt"), eg::ParseError);
  CHECK_THROWS_AS(eg::read_labeling_file("/nonexistent/l.txt", eg::cycle(3)), eg::ParseError);
  CHECK_THROWS_AS(eg::read_striation_file("/nonexistent/s.txt", eg::cycle(3)), eg::ParseError);
}
