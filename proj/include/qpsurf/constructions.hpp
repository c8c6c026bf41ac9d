#pragma once

// Fiber surfaces of the torus links O{n,n} as braided surfaces, and the
// embeddings of positive and quasipositive braided surfaces into them.

#include <vector>

#include "qpsurf/graph.hpp"
#include "qpsurf/laurent.hpp"

namespace qpsurf {

/// Positive braidword (s_1 ... s_{n-1})^n as bands (d, d+1, +).
BandRepresentation nabla(int n);

/// The quasipositive representation of length 2(nu-1) in B_nu, nu = (n-1)^2+1,
/// whose braided surface is isotopic to the fiber of O{n,n}.
BandRepresentation q_rep(int n);

inline int q_strands(int n) { return (n - 1) * (n - 1) + 1; }

struct CoarseHandle {
  int index;                  // s in 1..nu-1
  int fine_zero_handle;       // nu - s + 1
  std::vector<int> fine_one_handles;  // {s, nu + s'}
};

/// Coarse handle structure of S(q_n): a single 0-handle (fine 0-handle 1)
/// and nu-1 coarse 1-handles, each a fine 0-handle with its two bands.
struct CoarseDecomposition {
  int n;
  int nu;
  int zero_handle = 1;
  std::vector<CoarseHandle> handles;

  /// Every fine handle of S(q_n) lies in exactly one coarse handle.
  bool is_partition() const;
  /// Coarse 1-handle containing fine 1-handle t.
  int coarse_of_band(int t) const;
};

CoarseDecomposition coarse_decomposition(int n);

struct Padding {
  int n;                  // fiber index: S(nabla_n) hosts the graph
  std::vector<int> marked;  // fine 1-handles of S(nabla_n) carrying p's letters
  CombedGraph graph;
};

/// Embeds S(p), p positive in B_m, as a full subsurface of S(nabla_n) with
/// n = max(2, m, length(p)); letter t is placed in block t-1.
Padding pad_into_nabla(const BraidWord& p);

struct BandExpansion {
  BraidWord word;      // positive braidword containing S(rep)
  CombedGraph graph;   // graph on S(word) whose neighborhood is S(rep)
};

/// Replaces each positive band (i, j) by the generators s_i ... s_{j-1};
/// S(rep) sits in S(word) as one path per band through its block.
BandExpansion expand_bands(const BandRepresentation& rep);

struct FiberReport {
  int n;
  int chi_q;
  int chi_nabla;
  int components_q;
  int components_nabla;
  Laurent alexander_q;
  Laurent alexander_nabla;
  bool ok() const;
};

/// Invariant-level check that S(q_n) and S(nabla_n) have the same Euler
/// characteristic, boundary component count (= n) and Alexander polynomial.
/// Throws FiberVerificationFailed on any disagreement.
FiberReport verify_fiber(int n);

}  // namespace qpsurf
