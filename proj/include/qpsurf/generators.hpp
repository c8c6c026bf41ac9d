#pragma once

// Random and exhaustive inputs for the property and acceptance suites.

#include <random>
#include <set>
#include <vector>

#include "qpsurf/graph.hpp"

namespace qpsurf {

using Rng = std::mt19937_64;

struct RepShape {
  int min_strands = 1;
  int max_strands = 4;
  int max_bands = 5;
  bool quasipositive = false;
  bool connected = false;  // resample until S(rep) is connected
};

BandRepresentation random_band_rep(Rng& rng, const RepShape& shape);

/// Every positive braidword in B_m with 2 <= m <= max_strands and length <= max_length.
std::vector<BraidWord> all_positive_words(int max_strands, int max_length);

std::set<int> random_subset(Rng& rng, int k, double keep = 0.5);

/// Inverse Whitehead move: doubles arc `arc` by a parallel copy on the side
/// `upper` of it at the `near_j` end, splitting the far comb so the result
/// stays full and combed. whitehead_step at the new near pair undoes it.
CombedGraph split_arc(const CombedGraph& g, int arc, bool near_j, bool upper);

/// Full combed graph: a random handle spine of `host`, then random splits
/// while the arc count stays <= max_arcs.
CombedGraph random_full_graph(Rng& rng, const BraidedSurface& host, int max_arcs, int splits);

/// Adds an arc parallel to `arc` whose far end joins the same comb, creating
/// a bigon; the result is never full.
CombedGraph add_bigon(const CombedGraph& g, int arc);

/// Two parallel arcs through handle t with one comb on each side.
CombedGraph bigon_graph(const BraidedSurface& host, int t);

}  // namespace qpsurf
