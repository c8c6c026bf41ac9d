#pragma once

#include "qpsurf/braid.hpp"
#include "qpsurf/surface.hpp"

namespace qpsurf::test {

constexpr Sign P = Sign::Positive;
constexpr Sign N = Sign::Negative;

inline BraidWord word(int n, std::initializer_list<int> signed_letters) {
  std::vector<Letter> letters;
  for (int v : signed_letters) letters.push_back({v > 0 ? v : -v, v > 0 ? P : N});
  return BraidWord(n, std::move(letters));
}

inline SurfaceSummary components(std::vector<ComponentType> c) { return SurfaceSummary(std::move(c)); }

}  // namespace qpsurf::test
