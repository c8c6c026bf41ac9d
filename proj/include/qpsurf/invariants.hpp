#pragma once

// Link invariants used as independent oracles: the reduced Burau
// representation, the Alexander polynomial of a closed braid, and Seifert
// matrices of braided surfaces.

#include <Eigen/Core>
#include <cstdint>

#include "qpsurf/braid.hpp"
#include "qpsurf/laurent.hpp"

namespace qpsurf {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Reduced Burau image, (n-1)x(n-1). For 2 <= i <= n-2, sigma_i acts on
/// rows/columns i-1, i, i+1 (1-based) by
///     [1  t  0]
///     [0 -t  0]
///     [0  1  1]
/// truncated at the borders; sigma_i^{-1} uses the inverse block
///     [1  1      0]
///     [0 -t^-1   0]
///     [0  t^-1   1].
/// Words multiply left to right: burau(w1 w2) = burau(w1) * burau(w2).
LaurentMatrix<BigInt> reduced_burau(const BraidWord& word);

/// Canonical Alexander polynomial of the closure of `word`:
/// det(burau - I) / (1 + t + ... + t^{n-1}).
Laurent alexander_from_braid(const BraidWord& word);

/// Seifert matrix of S(rep) on the basis of fundamental cycles of the handle
/// graph (one per co-tree 1-handle, spanning forest chosen greedily in handle
/// order): V(a, b) = lk(a^+, b).
IntMatrix seifert_matrix(const BandRepresentation& rep);

/// Canonical det(V - t V^T); the empty matrix gives 1.
Laurent alexander_from_seifert(const IntMatrix& v);

}  // namespace qpsurf
