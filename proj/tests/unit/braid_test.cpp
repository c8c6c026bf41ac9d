#include "doctest.h"
#include "helpers.hpp"
#include "qpsurf/constructions.hpp"
#include "qpsurf/error.hpp"
#include "qpsurf/generators.hpp"

using namespace qpsurf;
using namespace qpsurf::test;

TEST_CASE("expand_band conjugates the last generator") {
  CHECK(expand_band({1, 2, P}, 2) == word(2, {1}));
  CHECK(expand_band({1, 3, P}, 3) == word(3, {1, 2, -1}));
  CHECK(expand_band({2, 5, N}, 5) == word(5, {2, 3, -4, -3, -2}));
}

TEST_CASE("expand_band rejects bad indices") {
  CHECK_THROWS_AS(expand_band({2, 2, P}, 3), Error);
  CHECK_THROWS_AS(expand_band({0, 2, P}, 3), Error);
  CHECK_THROWS_AS(expand_band({1, 4, P}, 3), Error);
  try {
    expand_band({3, 1, P}, 3);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidBand);
  }
}

TEST_CASE("beta concatenates expanded bands") {
  CHECK(beta(BandRepresentation(3)).empty());
  CHECK(beta(BandRepresentation(3, {{1, 2, P}, {2, 3, N}, {1, 3, P}})) == word(3, {1, -2, 1, 2, -1}));
  CHECK(beta(BandRepresentation(2, {{1, 2, P}, {1, 2, P}})) == word(2, {1, 1}));
}

TEST_CASE("quasipositivity is a sign check") {
  CHECK(is_quasipositive(BandRepresentation(4, {{1, 3, P}, {2, 4, P}})));
  CHECK_FALSE(is_quasipositive(BandRepresentation(3, {{1, 2, P}, {2, 3, N}})));
  CHECK(is_quasipositive(BandRepresentation(3)));
}

TEST_CASE("permutation composes left to right") {
  CHECK(permutation(BraidWord(3)) == std::vector<int>{0, 1, 2});
  CHECK(permutation(word(3, {1, 2})) == std::vector<int>{1, 2, 0});
  CHECK(permutation(beta(nabla(3))) == std::vector<int>{0, 1, 2});
}

TEST_CASE("exponent sum") {
  CHECK(exponent_sum(BraidWord(3)) == 0);
  CHECK(exponent_sum(beta(nabla(3))) == 6);
  CHECK(exponent_sum(beta(q_rep(3))) == 8);
}

TEST_CASE("band expansion preserves exponent sum") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rep = random_band_rep(rng, {2, 6, 8, false, false});
    int signs = 0;
    for (const auto& b : rep.bands()) signs += value(b.sign);
    CHECK(exponent_sum(beta(rep)) == signs);
  }
}

TEST_CASE("retag moves words into larger braid groups") {
  const auto w = retag(word(2, {1, 1}), 4);
  CHECK(w.strands() == 4);
  CHECK(w == word(4, {1, 1}));
  CHECK(permutation(w) == std::vector<int>{0, 1, 2, 3});
}
