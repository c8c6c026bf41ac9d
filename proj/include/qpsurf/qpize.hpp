#pragma once

// Reads off a quasipositive band representation from a full combed graph on
// the fiber surface S(q_n).

#include <set>
#include <vector>

#include "qpsurf/graph.hpp"

namespace qpsurf {

struct QuasipositizationResult {
  BandRepresentation output;
  SurfaceSummary input_summary;
  SurfaceSummary output_summary;
  std::vector<WhiteheadSite> trace;
  std::vector<int> arcs_after_step;  // arc count after each traced step
  bool coarse_well_placed = false;   // input graph meets each coarse 1-handle in core-parallel strips
};

/// True iff every piece of g outside the coarse 0-handle is a strip running
/// through the two fine bands of its coarse 1-handle.
bool is_coarse_well_placed(const CombedGraph& g, int n);

/// Reduces g by Whitehead moves, then turns every comb and isolated point
/// into a 0-handle (fine 0-handle order, then bottom to top) and every arc
/// into a positive band between the 0-handles at its ends, ordered by
/// height. Throws NotOnQ, InvalidGraph, HasFreeEnds, NotFull, NotReducible or
/// SummaryMismatch.
QuasipositizationResult quasipositize(int n, const CombedGraph& g);

QuasipositizationResult quasipositize_handle_subsurface(int n, const std::set<int>& selected);

}  // namespace qpsurf
