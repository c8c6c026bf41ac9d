#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "qpsurf/constructions.hpp"
#include "qpsurf/error.hpp"
#include "qpsurf/generators.hpp"
#include "qpsurf/graph.hpp"

using namespace qpsurf;
using namespace qpsurf::test;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidGraph;
}

Comb comb(std::initializer_list<std::pair<int, int>> ends) {
  Comb c;
  for (auto [t, slot] : ends) c.teeth.push_back(ArcEnd{t, slot});
  return c;
}

// Three arcs on S(q_2): two parallel arcs through handle 1 share the comb
// in disk 1 and sit on different combs in disk 2.
CombedGraph doubled_q2() {
  CombedGraph g{BraidedSurface(q_rep(2)), {}, {}};
  g.disks = {{comb({{1, 1}, {1, 2}, {2, 1}})}, {comb({{1, 1}}), comb({{1, 2}, {2, 1}})}};
  g.arcs = {{1, 1, 2}, {1, 2, 1}, {2, 1, 1}};
  return g;
}

}  // namespace

TEST_CASE("validate") {
  CHECK(validate(handle_spine(BraidedSurface(nabla(2)), {1, 2})).empty());
  CHECK(validate(doubled_q2()).empty());

  auto dangling = handle_spine(BraidedSurface(nabla(2)), {1, 2});
  std::get<Comb>(dangling.disks[0][0]).teeth[0] = ArcEnd{1, 3};
  CHECK_FALSE(validate(dangling).empty());
  CHECK(kind_of([&] { require_valid(dangling); }) == ErrorKind::InvalidGraph);

  auto twisted = doubled_q2();
  twisted.arcs[0].slot_j = 1;  // both handle-1 arcs now land in slot 1 at the j end
  CHECK_FALSE(validate(twisted).empty());
}

TEST_CASE("neighborhood summaries") {
  CombedGraph point{BraidedSurface(BandRepresentation(1)), {{IsolatedPoint{}}}, {}};
  CHECK(neighborhood_summary(point) == components({{1, 1}}));
  const BraidedSurface hopf(BandRepresentation(2, {{1, 2, P}, {1, 2, P}}));
  CHECK(neighborhood_summary(handle_spine(hopf, {1, 2})) == components({{0, 2}}));
  const BraidedSurface n3(nabla(3));
  CHECK(neighborhood_summary(handle_spine(n3, {1, 2, 3, 4, 5, 6})) == components({{-3, 3}}));
}

TEST_CASE("free reduction") {
  CHECK(reduce_word({1, 2, -2, -1}).empty());
  CHECK(reduce_word({3, 1, 2, -3}) == FreeWord{1, 2});
  CHECK(reduce_word({1, -2}) == FreeWord{1, -2});
}

TEST_CASE("cycle words and fullness") {
  const BraidedSurface n2(nabla(2));
  CHECK(cycle_words(handle_spine(n2, {1})).empty());
  CHECK(is_full(handle_spine(n2, {})));

  const auto bigon = bigon_graph(n2, 1);
  const auto words = cycle_words(bigon);
  REQUIRE(words.size() == 1);
  CHECK(words[0].empty());
  CHECK_FALSE(is_full(bigon));

  const auto spine_words = cycle_words(handle_spine(n2, {1, 2}));
  REQUIRE(spine_words.size() == 1);
  CHECK_FALSE(spine_words[0].empty());

  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const BraidedSurface s(random_band_rep(rng, {2, 5, 7, false, false}));
    CHECK(is_full(handle_spine(s, random_subset(rng, s.bands()))));
  }
}

TEST_CASE("whitehead step on S(q_2)") {
  const auto g = doubled_q2();
  REQUIRE(is_full(g));
  const auto sites = eligible_sites(g);
  REQUIRE(sites.size() == 1);
  CHECK(sites[0] == WhiteheadSite{1, 0, 0});

  const auto h = whitehead_step(g, sites[0]);
  CHECK(h.arcs.size() == 2);
  CHECK(validate(h).empty());
  CHECK(is_full(h));
  CHECK(neighborhood_summary(h) == components({{0, 2}}));
  CHECK(neighborhood_summary(h) == neighborhood_summary(g));

  CHECK(kind_of([&] { whitehead_step(g, {1, 0, 1}); }) == ErrorKind::SiteNotEligible);
  CHECK(kind_of([&] { whitehead_step(g, {2, 0, 0}); }) == ErrorKind::SiteNotEligible);
  CHECK(kind_of([&] { whitehead_step(g, {3, 0, 0}); }) == ErrorKind::SiteNotEligible);
  CHECK(kind_of([&] { whitehead_step(bigon_graph(BraidedSurface(q_rep(2)), 1), {1, 0, 0}); }) ==
        ErrorKind::NotFull);
}

TEST_CASE("reduce") {
  const auto spine = handle_spine(BraidedSurface(nabla(3)), {1, 2, 3, 4, 5, 6});
  const auto fixed = reduce(spine);
  CHECK(fixed.graph == spine);
  CHECK(fixed.trace.empty());

  const auto one = reduce(doubled_q2());
  CHECK(one.graph.arcs.size() == 2);
  CHECK(one.trace.size() == 1);

  const auto twice = split_arc(split_arc(spine, 0, false, true), 3, true, false);
  REQUIRE(is_full(twice));
  REQUIRE(twice.arcs.size() == spine.arcs.size() + 2);
  const auto r = reduce(twice);
  CHECK(r.graph.arcs.size() == spine.arcs.size());
  CHECK_FALSE(has_doubled_attachment(r.graph));
  CHECK(neighborhood_summary(r.graph) == neighborhood_summary(twice));

  CHECK(kind_of([&] { reduce(bigon_graph(BraidedSurface(nabla(2)), 2)); }) == ErrorKind::NotFull);
}

TEST_CASE("whitehead steps preserve summaries on random full graphs") {
  Rng rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    const BraidedSurface s(random_band_rep(rng, {2, 5, 6, false, false}));
    const auto g = random_full_graph(rng, s, 10, 4);
    const auto before = neighborhood_summary(g);
    for (const auto& site : eligible_sites(g)) {
      const auto h = whitehead_step(g, site);
      CHECK(h.arcs.size() + 1 == g.arcs.size());
      CHECK(is_full(h));
      CHECK(neighborhood_summary(h) == before);
    }
    CHECK(neighborhood_summary(reduce(g).graph) == before);
  }
}
