#include "qpsurf/qpize.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "qpsurf/constructions.hpp"
#include "qpsurf/error.hpp"

namespace qpsurf {

bool is_coarse_well_placed(const CombedGraph& g, int n) {
  const auto cd = coarse_decomposition(n);
  for (const auto& h : cd.handles) {
    for (const auto& piece : g.disks[h.fine_zero_handle - 1]) {
      const auto* comb = std::get_if<Comb>(&piece);
      if (!comb || comb->teeth.size() != 2) return false;
      const auto* lo = std::get_if<ArcEnd>(&comb->teeth[0]);
      const auto* hi = std::get_if<ArcEnd>(&comb->teeth[1]);
      if (!lo || !hi) return false;
      std::vector<int> seen{lo->handle, hi->handle};
      std::ranges::sort(seen);
      if (seen != h.fine_one_handles) return false;
    }
  }
  return true;
}

QuasipositizationResult quasipositize(int n, const CombedGraph& g) {
  if (n < 2 || !(g.host == BraidedSurface(q_rep(n)))) {
    throw Error(ErrorKind::NotOnQ, "graph host is not S(q_" + std::to_string(n) + ")");
  }
  require_valid(g);
  for (const auto& disk : g.disks) {
    for (const auto& piece : disk) {
      if (const auto* comb = std::get_if<Comb>(&piece)) {
        for (const auto& tooth : comb->teeth) {
          if (std::holds_alternative<FreeEnd>(tooth)) {
            throw Error(ErrorKind::HasFreeEnds, "graph meets the boundary of S(q)");
          }
        }
      }
    }
  }
  const auto input_summary = neighborhood_summary(g);
  const bool coarse = is_coarse_well_placed(g, n);
  auto red = reduce(g);  // throws NotFull
  if (has_doubled_attachment(red.graph)) {
    throw Error(ErrorKind::NotReducible, "a comb keeps two teeth in one attaching arc after reduction");
  }
  const auto& h = red.graph;

  // 0-handles of the output, one per disk piece.
  std::map<std::tuple<int, int, int>, int> node_of_end;  // (handle, j_side, slot) -> 0-handle
  int nodes = 0;
  for (int s = 1; s <= static_cast<int>(h.disks.size()); ++s) {
    for (const auto& piece : h.disks[s - 1]) {
      ++nodes;
      if (const auto* comb = std::get_if<Comb>(&piece)) {
        for (const auto& tooth : comb->teeth) {
          const auto& e = std::get<ArcEnd>(tooth);
          node_of_end[{e.handle, s == h.host.band(e.handle).j, e.slot}] = nodes;
        }
      }
    }
  }
  auto arcs = h.arcs;
  std::ranges::sort(arcs, [](const Arc& a, const Arc& b) {
    return std::tie(a.handle, a.slot_i) < std::tie(b.handle, b.slot_i);
  });
  std::vector<EmbeddedBand> bands;
  for (const auto& a : arcs) {
    const int u = node_of_end.at({a.handle, false, a.slot_i});
    const int v = node_of_end.at({a.handle, true, a.slot_j});
    bands.push_back({std::min(u, v), std::max(u, v), Sign::Positive});
  }

  QuasipositizationResult r{BandRepresentation(nodes, std::move(bands)), input_summary, {}, red.trace,
                            red.arcs_after, coarse};
  r.output_summary = summary(BraidedSurface(r.output));
  if (!(r.output_summary == r.input_summary)) {
    throw Error(ErrorKind::SummaryMismatch,
                "output " + r.output_summary.to_string() + " vs input " + r.input_summary.to_string());
  }
  return r;
}

QuasipositizationResult quasipositize_handle_subsurface(int n, const std::set<int>& selected) {
  return quasipositize(n, handle_spine(BraidedSurface(q_rep(n)), selected));
}

}  // namespace qpsurf
