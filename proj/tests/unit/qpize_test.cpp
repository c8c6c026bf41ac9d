#include "doctest.h"
#include "helpers.hpp"
#include "qpsurf/constructions.hpp"
#include "qpsurf/error.hpp"
#include "qpsurf/generators.hpp"
#include "qpsurf/invariants.hpp"
#include "qpsurf/qpize.hpp"

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

}  // namespace

TEST_CASE("spine of S(q_2)") {
  const BraidedSurface host(q_rep(2));
  const auto r = quasipositize(2, handle_spine(host, {1, 2}));
  CHECK(is_quasipositive(r.output));
  CHECK(r.output_summary == components({{0, 2}}));
  CHECK(eq_up_to_units(alexander_from_braid(beta(r.output)), Laurent::t() - 1));
}

TEST_CASE("a point is a disk") {
  for (int n = 2; n <= 4; ++n) {
    CombedGraph g{BraidedSurface(q_rep(n)), std::vector<std::vector<DiskPiece>>(q_strands(n)), {}};
    g.disks[0].push_back(IsolatedPoint{});
    const auto r = quasipositize(n, g);
    CHECK(r.output == BandRepresentation(1));
    CHECK(r.output_summary == components({{1, 1}}));
  }
}

TEST_CASE("quasipositize rejects bad input") {
  const BraidedSurface q2(q_rep(2));
  CHECK(kind_of([&] { quasipositize(2, bigon_graph(q2, 1)); }) == ErrorKind::NotFull);
  CHECK(kind_of([&] { quasipositize(3, handle_spine(q2, {1})); }) == ErrorKind::NotOnQ);
  auto loose = handle_spine(q2, {1});
  std::get<Comb>(loose.disks[0][0]).teeth.push_back(FreeEnd{});
  CHECK(kind_of([&] { quasipositize(2, loose); }) == ErrorKind::HasFreeEnds);
}

TEST_CASE("handle subsurfaces of S(q_3)") {
  const auto all = quasipositize_handle_subsurface(3, {1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(all.output_summary == components({{-3, 3}}));
  CHECK(is_quasipositive(all.output));
  CHECK(eq_up_to_units(alexander_from_braid(beta(all.output)), verify_fiber(3).alexander_q));

  const auto none = quasipositize_handle_subsurface(3, {});
  CHECK(none.output_summary == components({{1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}}));
  CHECK(none.output.size() == 0);

  const auto one = quasipositize_handle_subsurface(3, {1});
  CHECK(one.output_summary == components({{1, 1}, {1, 1}, {1, 1}, {1, 1}}));
  CHECK(one.output.size() == 1);
}

TEST_CASE("random subsurfaces keep their summary") {
  Rng rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 3;
    const BraidedSurface host(q_rep(n));
    const auto g = random_full_graph(rng, host, 2 * host.bands(), 3);
    const auto r = quasipositize(n, g);
    CHECK(is_quasipositive(r.output));
    CHECK(r.output_summary == neighborhood_summary(g));
    CHECK(summary(BraidedSurface(r.output)) == r.output_summary);
  }
}
