#include <catch2/catch_amalgamated.hpp>

#include "fintopo/dot_export.hpp"
#include "fintopo/khalimsky.hpp"
#include "test_support.hpp"

using namespace fintopo;
using testsupport::make_space;

TEST_CASE("two-point chain", "[dot]") {
  REQUIRE(export_dot(testsupport::sierpinski()) ==
          "digraph space {\n"
          "  \"0\" [shape=doublecircle];\n"
          "  \"1\" [shape=circle];\n"
          "  \"0\" -> \"1\";\n"
          "}\n");
}

TEST_CASE("discrete points are isolated and closed", "[dot]") {
  REQUIRE(export_dot(testsupport::discrete2()) ==
          "digraph space {\n"
          "  \"a\" [shape=doublecircle];\n"
          "  \"b\" [shape=doublecircle];\n"
          "}\n");
}

TEST_CASE("line window fans out from the even point", "[dot]") {
  const std::string dot = export_dot(khalimsky_line(-1, 1));
  REQUIRE(dot.find("\"0\" -> \"-1\";") != std::string::npos);
  REQUIRE(dot.find("\"0\" -> \"1\";") != std::string::npos);
  REQUIRE(dot.find("\"0\" [shape=doublecircle];") != std::string::npos);
  REQUIRE(dot.find("\"1\" [shape=circle];") != std::string::npos);
  REQUIRE(dot.find("\"-1\" -> ") == std::string::npos);
}

TEST_CASE("mutually specializing points become bidirectional edges",
          "[dot]") {
  REQUIRE(export_dot(testsupport::indiscrete2()) ==
          "digraph space {\n"
          "  \"a\" [shape=circle];\n"
          "  \"b\" [shape=circle];\n"
          "  \"a\" -> \"b\" [dir=both];\n"
          "}\n");
}

TEST_CASE("transitive edges are reduced", "[dot]") {
  const FinSpace chain = make_space(
      {{"a", {"a", "b", "c"}}, {"b", {"b", "c"}}, {"c", {"c"}}});
  const std::string dot = export_dot(chain);
  REQUIRE(dot.find("\"a\" -> \"b\";") != std::string::npos);
  REQUIRE(dot.find("\"b\" -> \"c\";") != std::string::npos);
  REQUIRE(dot.find("\"a\" -> \"c\";") == std::string::npos);
}

TEST_CASE("cycles attach to the rest through representatives", "[dot]") {
  // {a, b} specialize to each other and both see the closed point z.
  const FinSpace s = make_space({{"a", {"a", "b", "z"}},
                                 {"b", {"a", "b", "z"}},
                                 {"z", {"z"}}});
  const std::string dot = export_dot(s);
  REQUIRE(dot.find("\"a\" -> \"b\" [dir=both];") != std::string::npos);
  REQUIRE(dot.find("\"a\" -> \"z\";") != std::string::npos);
  REQUIRE(dot.find("\"b\" -> \"z\"") == std::string::npos);
  REQUIRE(dot.find("\"z\" [shape=doublecircle];") != std::string::npos);
}

TEST_CASE("labels are quoted and escaped", "[dot]") {
  const FinSpace s = make_space({{"say \"hi\"", {"say \"hi\""}}});
  REQUIRE(export_dot(s).find("\"say \\\"hi\\\"\"") != std::string::npos);
}

TEST_CASE("the empty space renders an empty graph", "[dot]") {
  REQUIRE(export_dot(FinSpace()) == "digraph space {\n}\n");
}
