#include <catch2/catch_amalgamated.hpp>

#include "fintopo/closed_graph.hpp"
#include "fintopo/khalimsky.hpp"
#include "fintopo/space_map.hpp"
#include "test_support.hpp"

using namespace fintopo;
using testsupport::discrete2;
using testsupport::sierpinski;

TEST_CASE("continuity by neighborhood images", "[maps]") {
  const FinSpace s = sierpinski();
  REQUIRE(is_continuous(SpaceMap::identity(s)));

  const SpaceMap swap(s, s, {1, 0});
  REQUIRE(!is_continuous(swap));

  const FinSpace k2 = khalimsky_space(2, -3, 3);
  REQUIRE(is_continuous(SpaceMap::constant(k2, k2, "(1,1)")));
}

TEST_CASE("graph of a map", "[maps]") {
  const FinSpace s = sierpinski();
  const GraphSet g = graph_of(SpaceMap::constant(s, s, "0"));
  REQUIRE(g.pair_count() == 2);
  REQUIRE(g.contains(0, 0));
  REQUIRE(g.contains(1, 0));
  REQUIRE(!g.contains(1, 1));

  const GraphSet id = graph_of(SpaceMap::identity(discrete2()));
  REQUIRE(id.pair_count() == 2);
  REQUIRE(id.contains(0, 0));
  REQUIRE(id.contains(1, 1));

  const GraphSet c1 = graph_of(SpaceMap(s, s, {1, 1}));
  REQUIRE(c1.contains(0, 1));
  REQUIRE(c1.contains(1, 1));
}

TEST_CASE("definitional closed-graph check", "[maps]") {
  const FinSpace s = sierpinski();
  REQUIRE(has_closed_graph_oracle(SpaceMap::constant(s, s, "0")));
  REQUIRE(!has_closed_graph_oracle(SpaceMap::identity(s)));
  REQUIRE(!has_closed_graph_oracle(SpaceMap::constant(s, s, "1")));

  const SpaceMap id = SpaceMap::identity(s);
  REQUIRE_THROWS_AS(has_closed_graph_oracle(id, 3), OracleTooLargeError);
}

TEST_CASE("componentwise closed-graph check", "[maps]") {
  const FinSpace s = sierpinski();
  REQUIRE(has_closed_graph(SpaceMap::constant(s, s, "0")));
  REQUIRE(!has_closed_graph(SpaceMap::identity(s)));

  const FinSpace k2 = khalimsky_space(2, -3, 3);
  REQUIRE(has_closed_graph(SpaceMap::constant(k2, k2, "(2,2)")));
  REQUIRE(!has_closed_graph(SpaceMap::constant(k2, k2, "(1,1)")));
}

TEST_CASE("witnesses", "[maps]") {
  const FinSpace s = sierpinski();

  const auto not_constant = closed_graph_witness(SpaceMap::identity(s));
  REQUIRE(not_constant.has_value());
  const auto& nc = std::get<NotConstantOnComponent>(*not_constant);
  REQUIRE(nc.component == PointSet::of(2, {0, 1}));
  REQUIRE(nc.x == 0);
  REQUIRE(nc.y == 1);

  const auto not_closed = closed_graph_witness(SpaceMap::constant(s, s, "1"));
  REQUIRE(not_closed.has_value());
  const auto& vc = std::get<ValueNotClosed>(*not_closed);
  REQUIRE(vc.component == PointSet::of(2, {0, 1}));
  REQUIRE(vc.value == 1);
  REQUIRE(vc.in_closure == 0);

  REQUIRE(!closed_graph_witness(SpaceMap::constant(s, s, "0")).has_value());
}

TEST_CASE("witness is consistent with the decision", "[maps]") {
  const FinSpace k = khalimsky_line(-3, 3);
  for (const SpaceMap& f : testsupport::all_maps(sierpinski(), sierpinski()))
    REQUIRE(closed_graph_witness(f).has_value() == !has_closed_graph(f));
  REQUIRE(!closed_graph_witness(SpaceMap::constant(k, k, "0")).has_value());
}

TEST_CASE("restriction", "[maps]") {
  const FinSpace s = sierpinski();
  const SpaceMap id = SpaceMap::identity(s);

  const SpaceMap one = restrict_to(id, s.to_point_set({"1"}));
  REQUIRE(one.domain().size() == 1);
  REQUIRE(one.domain().label(0) == "1");
  REQUIRE(one.value(0) == s.index_of("1"));

  REQUIRE(restrict_to(id, s.universe()) == id);

  const SpaceMap c0 = restrict_to(SpaceMap::constant(s, s, "0"),
                                  s.to_point_set({"0"}));
  REQUIRE(c0.domain().min_nbhd(0) == PointSet::of(1, {0}));
  REQUIRE(c0.value(0) == s.index_of("0"));
}

TEST_CASE("map construction errors", "[maps]") {
  const FinSpace s = sierpinski();
  REQUIRE_THROWS_AS(SpaceMap(s, s, {0}), MapSpaceMismatchError);
  REQUIRE_THROWS_AS(SpaceMap(s, s, {0, 5}), MapSpaceMismatchError);
  REQUIRE_THROWS_AS(SpaceMap::from_labels(s, s, {{"0", "0"}}),
                    MapSpaceMismatchError);
  REQUIRE_THROWS_AS(SpaceMap::from_labels(s, s, {{"0", "0"}, {"1", "x"}}),
                    UnknownPointError);
  REQUIRE_THROWS_AS(SpaceMap::constant(s, s, "x"), UnknownPointError);
}
