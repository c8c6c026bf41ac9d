#include "qpsurf/braid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "qpsurf/error.hpp"

namespace qpsurf {

Sign sign_from_int(int v) {
  if (v == 1) return Sign::Positive;
  if (v == -1) return Sign::Negative;
  throw Error(ErrorKind::InvalidParameter, "sign must be 1 or -1, got " + std::to_string(v));
}

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw Error(ErrorKind::InvalidParameter, "braid word needs at least one strand");
  for (const auto& l : letters_) {
    if (l.index < 1 || l.index > strands_ - 1) {
      throw Error(ErrorKind::InvalidBand, "generator index " + std::to_string(l.index) +
                                              " out of range for B_" + std::to_string(strands_));
    }
  }
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
  if (rhs.strands_ != strands_) {
    throw Error(ErrorKind::InvalidParameter, "cannot concatenate words from different braid groups");
  }
  auto letters = letters_;
  letters.insert(letters.end(), rhs.letters_.begin(), rhs.letters_.end());
  return BraidWord(strands_, std::move(letters));
}

BraidWord BraidWord::inverse() const {
  std::vector<Letter> letters;
  letters.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) letters.push_back({it->index, -it->sign});
  return BraidWord(strands_, std::move(letters));
}

void check_band(const EmbeddedBand& band, int strands) {
  if (band.i < 1 || band.i >= band.j || band.j > strands) {
    throw Error(ErrorKind::InvalidBand, "band (" + std::to_string(band.i) + "," + std::to_string(band.j) +
                                            ") invalid in B_" + std::to_string(strands));
  }
}

BandRepresentation::BandRepresentation(int strands, std::vector<EmbeddedBand> bands)
    : strands_(strands), bands_(std::move(bands)) {
  if (strands_ < 1) throw Error(ErrorKind::InvalidParameter, "band representation needs at least one strand");
  for (const auto& b : bands_) check_band(b, strands_);
}

BraidWord expand_band(const EmbeddedBand& band, int strands) {
  check_band(band, strands);
  std::vector<Letter> letters;
  letters.reserve(2 * (band.j - band.i) - 1);
  for (int k = band.i; k <= band.j - 2; ++k) letters.push_back({k, Sign::Positive});
  letters.push_back({band.j - 1, band.sign});
  for (int k = band.j - 2; k >= band.i; --k) letters.push_back({k, Sign::Negative});
  return BraidWord(strands, std::move(letters));
}

BraidWord beta(const BandRepresentation& rep) {
  std::vector<Letter> letters;
  for (const auto& band : rep.bands()) {
    auto w = expand_band(band, rep.strands());
    letters.insert(letters.end(), w.letters().begin(), w.letters().end());
  }
  return BraidWord(rep.strands(), std::move(letters));
}

bool is_quasipositive(const BandRepresentation& rep) {
  return std::ranges::all_of(rep.bands(), [](const EmbeddedBand& b) { return b.sign == Sign::Positive; });
}

bool is_positive(const BraidWord& word) {
  return std::ranges::all_of(word.letters(), [](const Letter& l) { return l.sign == Sign::Positive; });
}

int exponent_sum(const BraidWord& word) {
  int sum = 0;
  for (const auto& l : word.letters()) sum += value(l.sign);
  return sum;
}

BandRepresentation as_band_representation(const BraidWord& word) {
  std::vector<EmbeddedBand> bands;
  bands.reserve(word.size());
  for (const auto& l : word.letters()) bands.push_back({l.index, l.index + 1, l.sign});
  return BandRepresentation(word.strands(), std::move(bands));
}

BraidWord retag(const BraidWord& word, int strands) {
  if (strands < word.strands()) throw Error(ErrorKind::InvalidParameter, "retag cannot shrink the strand count");
  return BraidWord(strands, {word.letters().begin(), word.letters().end()});
}

BandRepresentation retag(const BandRepresentation& rep, int strands) {
  if (strands < rep.strands()) throw Error(ErrorKind::InvalidParameter, "retag cannot shrink the strand count");
  return BandRepresentation(strands, {rep.bands().begin(), rep.bands().end()});
}

std::vector<int> permutation(const BraidWord& word) {
  std::vector<int> perm(word.strands());
  std::iota(perm.begin(), perm.end(), 0);
  // perm = tau_1 o ... o tau_k: post-composing with tau swaps the values.
  // Building right to left keeps each step a swap of two entries.
  auto letters = word.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const int a = it->index - 1;
    const int b = it->index;
    for (auto& v : perm) {
      if (v == a) v = b;
      else if (v == b) v = a;
    }
  }
  return perm;
}

std::vector<std::vector<int>> cycles(std::span<const int> perm) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int x = static_cast<int>(start); !seen[x]; x = perm[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

}  // namespace qpsurf
