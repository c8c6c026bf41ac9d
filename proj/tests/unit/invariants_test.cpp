#include "doctest.h"
#include "helpers.hpp"
#include "qpsurf/constructions.hpp"
#include "qpsurf/error.hpp"
#include "qpsurf/generators.hpp"
#include "qpsurf/invariants.hpp"

using namespace qpsurf;
using namespace qpsurf::test;

namespace {

Laurent poly(int low, std::vector<int> c) {
  std::vector<BigInt> coeffs(c.begin(), c.end());
  return Laurent::from_coefficients(low, std::move(coeffs));
}

BraidWord random_word(Rng& rng, int n, int len) {
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::bernoulli_distribution pos(0.6);
  std::vector<Letter> letters;
  for (int k = 0; k < len; ++k) letters.push_back({gen(rng), pos(rng) ? P : N});
  return BraidWord(n, std::move(letters));
}

}  // namespace

TEST_CASE("Laurent arithmetic") {
  const auto t = Laurent::t();
  CHECK((t - 1) * (t + 1) == poly(0, {-1, 0, 1}));
  CHECK(divide_exact(poly(0, {-1, 0, 1}), t + 1) == std::optional<Laurent>(t - 1));
  CHECK_FALSE(divide_exact(poly(0, {1, 0, 1}), t + 1).has_value());
  CHECK(poly(-2, {3, 0, 1}).canonical() == poly(0, {3, 0, 1}));
  CHECK(poly(0, {-1, 1}).canonical() == poly(0, {1, -1}));
}

TEST_CASE("equality up to units") {
  const auto t = Laurent::t();
  CHECK(eq_up_to_units(t - 1, 1 - t));
  CHECK(eq_up_to_units(poly(0, {1, -1, 1}), poly(1, {1, -1, 1})));
  CHECK(eq_up_to_units(poly(0, {1, -1, 1}), poly(-5, {-1, 1, -1})));
  CHECK_FALSE(eq_up_to_units(t - 1, t + 1));
}

TEST_CASE("reduced Burau representation") {
  CHECK(reduced_burau(BraidWord(2)) == LaurentMatrix<BigInt>::Identity(1, 1));
  CHECK(reduced_burau(word(2, {1, -1})) == LaurentMatrix<BigInt>::Identity(1, 1));
  CHECK(reduced_burau(word(4, {1, 2, 1})) == reduced_burau(word(4, {2, 1, 2})));
  CHECK(reduced_burau(word(4, {1, 3})) == reduced_burau(word(4, {3, 1})));

  Rng rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_word(rng, 4, 6);
    const auto b = random_word(rng, 4, 6);
    CHECK(reduced_burau(a * b) == reduced_burau(a) * reduced_burau(b));
    CHECK(reduced_burau(a * a.inverse()) == LaurentMatrix<BigInt>::Identity(3, 3));
    // At t = 1 the representation factors through the symmetric group.
    const auto d = determinant<BigInt>(reduced_burau(a)).evaluate_at_one();
    CHECK((d == 1 || d == -1));
  }
}

TEST_CASE("Alexander polynomial from braids") {
  const auto t = Laurent::t();
  CHECK(alexander_from_braid(word(2, {1})) == Laurent(1));
  CHECK(alexander_from_braid(word(2, {1, 1, 1})) == poly(0, {1, -1, 1}));
  CHECK(eq_up_to_units(alexander_from_braid(word(2, {1, 1})), t - 1));
  CHECK(eq_up_to_units(alexander_from_braid(word(3, {1, -2, 1, -2})), poly(0, {1, -3, 1})));
}

TEST_CASE("Alexander polynomial is a conjugation and stabilization invariant") {
  Rng rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const auto w = random_word(rng, 3, 7);
    const auto c = random_word(rng, 3, 3);
    const auto a = alexander_from_braid(w);
    CHECK(alexander_from_braid(c * w * c.inverse()) == a);
    const auto big = retag(w, 4);
    CHECK(alexander_from_braid(big * word(4, {3})) == a);
    CHECK(alexander_from_braid(big * word(4, {-3})) == a);
  }
}

TEST_CASE("Seifert matrices") {
  CHECK(seifert_matrix(BandRepresentation(3)).size() == 0);
  IntMatrix hopf(1, 1);
  hopf << -1;
  CHECK(seifert_matrix(BandRepresentation(2, {{1, 2, P}, {1, 2, P}})) == hopf);
  const auto trefoil = seifert_matrix(BandRepresentation(2, {{1, 2, P}, {1, 2, P}, {1, 2, P}}));
  CHECK(trefoil.rows() == 2);
  CHECK(alexander_from_seifert(trefoil) == poly(0, {1, -1, 1}));
}

TEST_CASE("Alexander polynomial from Seifert matrices") {
  IntMatrix one(1, 1);
  one << -1;
  CHECK(eq_up_to_units(alexander_from_seifert(one), Laurent::t() - 1));
  IntMatrix two(2, 2);
  two << -1, 1, 0, -1;
  CHECK(alexander_from_seifert(two) == poly(0, {1, -1, 1}));
  CHECK(alexander_from_seifert(IntMatrix(0, 0)) == Laurent(1));
}

TEST_CASE("Seifert and Burau routes agree") {
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto rep = random_band_rep(rng, {2, 5, 6, false, true});
    CHECK(eq_up_to_units(alexander_from_seifert(seifert_matrix(rep)), alexander_from_braid(beta(rep))));
  }
}
