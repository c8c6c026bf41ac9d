#include "doctest.h"
#include "helpers.hpp"
#include "qpsurf/constructions.hpp"
#include "qpsurf/error.hpp"
#include "qpsurf/generators.hpp"
#include "qpsurf/json_io.hpp"

using namespace qpsurf;
using namespace qpsurf::test;

TEST_CASE("schemas") {
  CHECK(to_json(word(3, {1, -2})) == Json::parse(R"({"strands":3,"letters":[[1,1],[2,-1]]})"));
  CHECK(to_json(BandRepresentation(3, {{1, 3, N}})) == Json::parse(R"({"strands":3,"bands":[[1,3,-1]]})"));
  CHECK(to_json(components({{1, 1}, {0, 2}})) == Json::parse(R"({"chi":1,"components":[[0,2],[1,1]]})"));
  CHECK(alexander_json(Laurent::from_coefficients(-1, {BigInt(-1), BigInt(1)})) == Json::parse("[1,-1]"));
}

TEST_CASE("round trips") {
  Rng rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const auto rep = random_band_rep(rng, {2, 6, 6, false, false});
    CHECK(rep_from_json(Json::parse(to_json(rep).dump())) == rep);
    const auto w = beta(rep);
    CHECK(word_from_json(Json::parse(to_json(w).dump())) == w);
    const auto g = random_full_graph(rng, BraidedSurface(rep), 8, 2);
    CHECK(graph_from_json(Json::parse(to_json(g).dump())) == g);
  }
  auto loose = handle_spine(BraidedSurface(nabla(2)), {});
  loose.disks[0].push_back(Comb{{FreeEnd{}}});
  CHECK(graph_from_json(to_json(loose)) == loose);
}

TEST_CASE("malformed documents") {
  auto kind = [](const char* text, auto parse) {
    try {
      parse(Json::parse(text));
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::NotFull;
  };
  CHECK(kind(R"({"strands":3})", word_from_json) == ErrorKind::MalformedDocument);
  CHECK(exit_code(kind(R"({"strands":3,"letters":[[1,2]]})", word_from_json)) == 1);
  CHECK(kind(R"({"strands":2,"bands":[[1,3,1]]})", rep_from_json) == ErrorKind::InvalidBand);
  CHECK(kind(R"({"strands":"x","bands":[]})", rep_from_json) == ErrorKind::MalformedDocument);
  CHECK(kind(R"({"host":{"strands":2,"bands":[]},"disks":[[{"comb":[{"arc_end":[1,1]}]}],[]],"arcs":[]})",
             graph_from_json) == ErrorKind::InvalidGraph);
}
