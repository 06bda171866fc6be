#include <doctest.h>

#include "raag/scans.hpp"
#include "test_helpers.hpp"

using namespace raag;

TEST_CASE("birman scan: pinned small counts") {
  SUBCASE("single generators are distinct") {
    const auto report = birman_scan(test::graph_p(), 1);
    CHECK(report.words == 10);
    CHECK(report.distinct_elements == 10);
    CHECK(report.collisions == 0);
  }
  SUBCASE("one-vertex graph") {
    const auto g = DefiningGraph::parse("vertices: a\nedges:");
    const auto report = birman_scan(g, 1);
    CHECK(report.distinct_elements == 4);
    CHECK(report.collisions == 0);
  }
  SUBCASE("length zero") {
    const auto report = birman_scan(test::graph_p(), 0);
    CHECK(report.words == 1);
    CHECK(report.distinct_elements == 1);
    CHECK(report.collisions == 0);
  }
  SUBCASE("length two stays collision-free") {
    const auto report = birman_scan(test::graph_p(), 2);
    CHECK(report.words == 91);
    CHECK(report.collisions == 0);
  }
}

TEST_CASE("birman scan honors the element cap") {
  CHECK_THROWS_AS(birman_scan(test::graph_p(), 2, 3), std::runtime_error);
}

TEST_CASE("orbit check passes at small bounds on assorted graphs") {
  for (std::uint64_t mask : {0ULL, 1ULL, 7ULL}) {
    const auto g = DefiningGraph::from_edge_mask(3, mask);
    const auto report = orbit_check(g, 3, 1);
    CHECK(report.ok());
    REQUIRE(report.kinds.size() == 4);
    CHECK(report.kinds[0].kind == "N");
    CHECK(report.kinds[3].kind == "ZxZ");
    for (const auto& kind : report.kinds) {
      CHECK(kind.expressions > 0);
      CHECK(kind.orbits > 0);
      CHECK(kind.orbits <= kind.expressions);
    }
  }
}

TEST_CASE("orbit check per kind: deeper sweep over the group kind") {
  const auto report =
      orbit_check_kind<IntWeight>(test::graph_p(), 4, 2);
  CHECK(report.ok());
  // sum over lengths 0..4 of (3 vertices * 4 exponents)^length
  CHECK(report.expressions == 1 + 12 + 144 + 1728 + 20736);
}

TEST_CASE("power shuffle scan finds no violations and some hypotheses") {
  const auto report = power_shuffle_scan(3, 3, 2);
  CHECK(report.violations == 0);
  CHECK(report.hypotheses_held > 0);
  CHECK(report.instances > report.hypotheses_held);
}
