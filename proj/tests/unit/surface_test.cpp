#include "doctest.h"
#include "helpers.hpp"
#include "qpsurf/constructions.hpp"
#include "qpsurf/error.hpp"
#include "qpsurf/generators.hpp"
#include "qpsurf/graph.hpp"

using namespace qpsurf;
using namespace qpsurf::test;

TEST_CASE("Euler characteristic is disks minus bands") {
  CHECK(euler_characteristic(BraidedSurface(BandRepresentation(1))) == 1);
  CHECK(euler_characteristic(BraidedSurface(q_rep(3))) == -3);
  CHECK(euler_characteristic(BraidedSurface(nabla(3))) == -3);
}

TEST_CASE("surface summaries") {
  CHECK(summary(BraidedSurface(BandRepresentation(2))) == components({{1, 1}, {1, 1}}));
  CHECK(summary(BraidedSurface(BandRepresentation(2, {{1, 2, P}, {1, 2, P}}))) == components({{0, 2}}));
  CHECK(summary(BraidedSurface(nabla(3))) == components({{-3, 3}}));
}

TEST_CASE("summary validates component types") {
  CHECK_THROWS_AS(SurfaceSummary({{2, 1}}), Error);
  CHECK_THROWS_AS(SurfaceSummary({{0, 1}}), Error);
  CHECK_THROWS_AS(SurfaceSummary({{1, 0}}), Error);
}

TEST_CASE("total chi matches the handle count") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const BraidedSurface s(random_band_rep(rng, {1, 6, 8, false, false}));
    CHECK(summary(s).total_chi() == euler_characteristic(s));
  }
}

TEST_CASE("handle spines") {
  const BraidedSurface n2(nabla(2));
  const auto full = handle_spine(n2, {1, 2});
  CHECK(full.arcs.size() == 2);
  CHECK(neighborhood_summary(full) == summary(n2));
  for (const auto& pieces : full.disks) {
    REQUIRE(pieces.size() == 1);
    CHECK(std::get<Comb>(pieces[0]).teeth.size() == 2);
  }

  const BraidedSurface n3(nabla(3));
  CHECK(neighborhood_summary(handle_spine(n3, {})) == components({{1, 1}, {1, 1}, {1, 1}}));
  CHECK(neighborhood_summary(handle_spine(n3, {1, 4, 5})) == summary(BraidedSurface(as_band_representation(word(3, {1, 2, 1})))));
  CHECK_THROWS_AS(handle_spine(n3, {7}), Error);
}

TEST_CASE("spines calibrate the neighborhood summary") {
  Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const BraidedSurface s(random_band_rep(rng, {1, 5, 6, false, false}));
    std::set<int> all;
    for (int t = 1; t <= s.bands(); ++t) all.insert(t);
    CHECK(neighborhood_summary(handle_spine(s, all)) == summary(s));
  }
}
