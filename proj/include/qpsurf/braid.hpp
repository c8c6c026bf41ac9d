#pragma once

// Braid words, embedded bands and band representations. Strand and letter
// indices are 1-based throughout, matching the usual sigma_i notation.

#include <compare>
#include <span>
#include <vector>

namespace qpsurf {

enum class Sign : int { Negative = -1, Positive = 1 };

constexpr int value(Sign s) { return static_cast<int>(s); }
constexpr Sign operator-(Sign s) { return s == Sign::Positive ? Sign::Negative : Sign::Positive; }
Sign sign_from_int(int v);

/// sigma_index^sign
struct Letter {
  int index = 1;
  Sign sign = Sign::Positive;
  friend bool operator==(const Letter&, const Letter&) = default;
};

class BraidWord {
 public:
  explicit BraidWord(int strands, std::vector<Letter> letters = {});

  int strands() const { return strands_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Concatenation; both words must live in the same braid group.
  BraidWord operator*(const BraidWord& rhs) const;
  BraidWord inverse() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<Letter> letters_;
};

/// sigma_{i,j}^sign = (s_i ... s_{j-2}) s_{j-1}^sign (s_i ... s_{j-2})^{-1}
struct EmbeddedBand {
  int i = 1;
  int j = 2;
  Sign sign = Sign::Positive;
  friend bool operator==(const EmbeddedBand&, const EmbeddedBand&) = default;
  friend auto operator<=>(const EmbeddedBand&, const EmbeddedBand&) = default;
};

class BandRepresentation {
 public:
  explicit BandRepresentation(int strands, std::vector<EmbeddedBand> bands = {});

  int strands() const { return strands_; }
  std::span<const EmbeddedBand> bands() const { return bands_; }
  std::size_t size() const { return bands_.size(); }
  const EmbeddedBand& operator[](std::size_t t) const { return bands_[t]; }

  friend bool operator==(const BandRepresentation&, const BandRepresentation&) = default;

 private:
  int strands_;
  std::vector<EmbeddedBand> bands_;
};

/// Throws InvalidBand unless 1 <= i < j <= strands.
void check_band(const EmbeddedBand& band, int strands);

BraidWord expand_band(const EmbeddedBand& band, int strands);
BraidWord beta(const BandRepresentation& rep);
bool is_quasipositive(const BandRepresentation& rep);
bool is_positive(const BraidWord& word);
int exponent_sum(const BraidWord& word);

/// A braid word viewed as a band representation whose bands are all
/// generators sigma_{i,i+1}^sign.
BandRepresentation as_band_representation(const BraidWord& word);

/// Explicit inclusion B_m -> B_n (n >= m); letters and bands are unchanged.
BraidWord retag(const BraidWord& word, int strands);
BandRepresentation retag(const BandRepresentation& rep, int strands);

/// 0-based permutation image: perm[x] = tau_{l_1}(tau_{l_2}(... tau_{l_k}(x))),
/// where tau_i swaps positions i-1 and i. With this convention
/// permutation(w1 * w2) = permutation(w1) o permutation(w2), which is the
/// order the reduced Burau matrices multiply in.
std::vector<int> permutation(const BraidWord& word);

/// Cycles of a 0-based permutation, each listed from its least element;
/// cycles are ordered by that element.
std::vector<std::vector<int>> cycles(std::span<const int> perm);

}  // namespace qpsurf
