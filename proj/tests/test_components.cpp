#include <catch2/catch_amalgamated.hpp>

#include "fintopo/khalimsky.hpp"
#include "fintopo/partition.hpp"
#include "fintopo/random_gen.hpp"
#include "test_support.hpp"

using namespace fintopo;
using testsupport::discrete2;
using testsupport::indiscrete2;
using testsupport::sierpinski;

TEST_CASE("components of the basic fixtures", "[components]") {
  const Partition p = components(sierpinski());
  REQUIRE(p.count() == 1);
  REQUIRE(p.class_at(0) == PointSet::of(2, {0, 1}));

  const Partition q = components(discrete2());
  REQUIRE(q.count() == 2);
  REQUIRE(q.class_at(0) == PointSet::of(2, {0}));
  REQUIRE(q.class_at(1) == PointSet::of(2, {1}));

  REQUIRE(components(FinSpace()).count() == 0);
}

TEST_CASE("a Khalimsky window is one component", "[components]") {
  const FinSpace k = khalimsky_line(-3, 3);
  const Partition p = components(k);
  REQUIRE(p.count() == 1);
  REQUIRE(p.class_at(0).count() == 7);
}

TEST_CASE("oracle agrees on the fixtures", "[components]") {
  REQUIRE(components_oracle(sierpinski()).count() == 1);
  REQUIRE(components_oracle(discrete2()).count() == 2);
  REQUIRE(components_oracle(indiscrete2()).count() == 1);
  REQUIRE(components_oracle(sierpinski()) == components(sierpinski()));
  REQUIRE(components_oracle(discrete2()) == components(discrete2()));
  REQUIRE(components_oracle(FinSpace()).count() == 0);
}

TEST_CASE("oracle refuses oversized spaces", "[components]") {
  const FinSpace big = random_space({1, 13, 0.3});
  REQUIRE_THROWS_AS(components_oracle(big), OracleTooLargeError);
  REQUIRE_NOTHROW(components_oracle(big, 13));
}

TEST_CASE("classes are reported by smallest member", "[components]") {
  // Arbitrary ids normalize to classes ordered by their minimum point.
  const Partition p = Partition::from_class_ids(5, {9, 2, 9, 7, 2});
  REQUIRE(p.count() == 3);
  REQUIRE(p.class_at(0) == PointSet::of(5, {0, 2}));
  REQUIRE(p.class_at(1) == PointSet::of(5, {1, 4}));
  REQUIRE(p.class_at(2) == PointSet::of(5, {3}));
  REQUIRE(p.class_of(4) == 1);
}

TEST_CASE("every component is open", "[components]") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const FinSpace s = random_space({seed, 1 + seed % 10, 0.25});
    for (const PointSet& cls : components(s).classes())
      REQUIRE(s.is_open(cls));
  }
}

TEST_CASE("brute-force connectedness of subsets", "[components]") {
  const FinSpace s = sierpinski();
  REQUIRE(is_connected_subset_bruteforce(s, s.universe()));
  REQUIRE(is_connected_subset_bruteforce(s, s.to_point_set({"0"})));
  REQUIRE(!is_connected_subset_bruteforce(discrete2(),
                                          discrete2().universe()));
  REQUIRE(is_connected_subset_bruteforce(indiscrete2(),
                                         indiscrete2().universe()));
}
