#include "doctest.h"
#include "helpers.hpp"
#include "qpsurf/constructions.hpp"
#include "qpsurf/error.hpp"
#include "qpsurf/graph.hpp"
#include "qpsurf/invariants.hpp"

using namespace qpsurf;
using namespace qpsurf::test;

TEST_CASE("nabla") {
  CHECK(nabla(2) == BandRepresentation(2, {{1, 2, P}, {1, 2, P}}));
  CHECK(nabla(3) == BandRepresentation(3, {{1, 2, P}, {2, 3, P}, {1, 2, P}, {2, 3, P}, {1, 2, P}, {2, 3, P}}));
  for (int n = 2; n <= 6; ++n) CHECK(euler_characteristic(BraidedSurface(nabla(n))) == n - n * (n - 1));
  CHECK_THROWS_AS(nabla(1), Error);
}

TEST_CASE("q") {
  CHECK(q_rep(2) == BandRepresentation(2, {{1, 2, P}, {1, 2, P}}));
  CHECK(q_rep(3) == BandRepresentation(5, {{1, 5, P}, {1, 4, P}, {1, 3, P}, {1, 2, P},
                                           {1, 5, P}, {1, 3, P}, {1, 4, P}, {1, 2, P}}));
  for (int n = 2; n <= 6; ++n) {
    CHECK(q_strands(n) == (n - 1) * (n - 1) + 1);
    CHECK(euler_characteristic(BraidedSurface(q_rep(n))) == 1 - (n - 1) * (n - 1));
  }
  CHECK_THROWS_AS(q_rep(0), Error);
}

TEST_CASE("coarse handles partition S(q_n)") {
  for (int n = 2; n <= 6; ++n) {
    const auto c = coarse_decomposition(n);
    CHECK(c.is_partition());
    CHECK(c.handles.size() == static_cast<std::size_t>(c.nu - 1));
  }
  const auto c3 = coarse_decomposition(3);
  CHECK(c3.handles[0].fine_zero_handle == 5);
  CHECK(c3.coarse_of_band(1) == 1);
}

TEST_CASE("padding into nabla") {
  const auto one = pad_into_nabla(word(2, {1}));
  CHECK(one.n == 2);
  CHECK(one.marked == std::vector<int>{1});

  const auto three = pad_into_nabla(word(3, {1, 2, 1}));
  CHECK(three.n == 3);
  CHECK(three.marked == std::vector<int>{1, 4, 5});
  CHECK(is_full(three.graph));
  CHECK(neighborhood_summary(three.graph) == summary(BraidedSurface(as_band_representation(word(3, {1, 2, 1})))));

  const auto empty = pad_into_nabla(BraidWord(2));
  CHECK(empty.n == 2);
  CHECK(empty.marked.empty());
  CHECK(neighborhood_summary(empty.graph) == components({{1, 1}, {1, 1}}));

  CHECK_THROWS_AS(pad_into_nabla(word(2, {1, -1})), Error);
}

TEST_CASE("band expansion") {
  const auto a = expand_bands(BandRepresentation(3, {{1, 3, P}}));
  CHECK(a.word == word(3, {1, 2}));
  CHECK(neighborhood_summary(a.graph) == components({{1, 1}, {1, 1}}));

  const auto b = expand_bands(BandRepresentation(2, {{1, 2, P}}));
  CHECK(b.word == word(2, {1}));
  CHECK(b.graph == handle_spine(BraidedSurface(as_band_representation(b.word)), {1}));

  const BandRepresentation rep(3, {{1, 3, P}, {1, 3, P}});
  const auto c = expand_bands(rep);
  CHECK(c.word == word(3, {1, 2, 1, 2}));
  CHECK(is_full(c.graph));
  CHECK(neighborhood_summary(c.graph) == summary(BraidedSurface(rep)));

  CHECK_THROWS_AS(expand_bands(BandRepresentation(2, {{1, 2, N}})), Error);
}

TEST_CASE("fiber verification") {
  for (int n = 2; n <= 4; ++n) {
    const auto r = verify_fiber(n);
    CHECK(r.ok());
    CHECK(r.chi_q == 1 - (n - 1) * (n - 1));
    CHECK(r.components_q == n);
    CHECK(eq_up_to_units(r.alexander_q, r.alexander_nabla));
  }
}
