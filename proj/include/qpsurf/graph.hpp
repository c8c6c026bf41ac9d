#pragma once

// Combed graphs on braided surfaces. A graph is stored in the canonical
// combed form: inside each 0-handle its pieces are combs or isolated
// points, and inside each 1-handle it is a family of parallel arcs.
//
// Conventions:
//  * Slots number the arc ends in one attaching arc from bottom to top
//    (increasing height). Handle t occupies heights [t-1, t].
//  * The half twist reverses transverse order, so with m arcs in handle t
//    an arc in slot p at the i(t) end sits in slot m+1-p at the j(t) end.
//  * Comb teeth are listed bottom to top.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "qpsurf/surface.hpp"

namespace qpsurf {

struct ArcEnd {
  int handle = 1;  // 1-based 1-handle index t
  int slot = 1;    // 1-based position in the attaching arc at this disk
  friend bool operator==(const ArcEnd&, const ArcEnd&) = default;
};
struct FreeEnd {
  friend bool operator==(const FreeEnd&, const FreeEnd&) = default;
};
using Tooth = std::variant<ArcEnd, FreeEnd>;

struct Comb {
  std::vector<Tooth> teeth;
  friend bool operator==(const Comb&, const Comb&) = default;
};
struct IsolatedPoint {
  friend bool operator==(const IsolatedPoint&, const IsolatedPoint&) = default;
};
using DiskPiece = std::variant<IsolatedPoint, Comb>;

struct Arc {
  int handle = 1;
  int slot_i = 1;  // slot at the i(t) end
  int slot_j = 1;  // slot at the j(t) end
  friend bool operator==(const Arc&, const Arc&) = default;
};

struct CombedGraph {
  BraidedSurface host;
  std::vector<std::vector<DiskPiece>> disks;  // disks[s-1]: pieces of 0-handle s, bottom to top
  std::vector<Arc> arcs;

  friend bool operator==(const CombedGraph&, const CombedGraph&) = default;
};

/// A Whitehead site: two adjacent teeth (positions tooth, tooth+1) of the
/// comb at position `piece` in 0-handle `disk`.
struct WhiteheadSite {
  int disk = 1;   // 1-based
  int piece = 0;  // 0-based position in disks[disk-1]
  int tooth = 0;  // 0-based position of the lower tooth
  friend bool operator==(const WhiteheadSite&, const WhiteheadSite&) = default;
};

/// Free-group word: letter +t / -t is handle t traversed from its i end to its
/// j end / the reverse.
using FreeWord = std::vector<int>;

inline constexpr std::int64_t kDefaultCycleBudget = 100000;

std::vector<std::string> validate(const CombedGraph& g);
/// Throws InvalidGraph listing every violation.
void require_valid(const CombedGraph& g);

/// Spine of the subsurface made of all 0-handles and the selected 1-handles.
CombedGraph handle_spine(const BraidedSurface& host, const std::set<int>& selected);

SurfaceSummary neighborhood_summary(const CombedGraph& g);

/// Free + cyclic reduction.
FreeWord reduce_word(FreeWord w);

/// 1-handles of the host outside its spanning forest (chosen greedily in
/// handle order); these freely generate the fundamental group of each
/// host component.
std::vector<bool> cotree_handles(const BraidedSurface& host);

std::vector<FreeWord> cycle_words(const CombedGraph& g, std::int64_t budget = kDefaultCycleBudget);
bool is_full(const CombedGraph& g, std::int64_t budget = kDefaultCycleBudget);

std::vector<WhiteheadSite> eligible_sites(const CombedGraph& g);
/// True iff some comb has two teeth in one attaching arc.
bool has_doubled_attachment(const CombedGraph& g);

CombedGraph whitehead_step(const CombedGraph& g, const WhiteheadSite& site);

struct Reduction {
  CombedGraph graph;
  std::vector<WhiteheadSite> trace;
  std::vector<int> arcs_after;  // 1-skeleton components after each step
};
Reduction reduce(const CombedGraph& g);

/// Number of components of the graph's intersection with the 1-handles.
inline int one_skeleton_components(const CombedGraph& g) { return static_cast<int>(g.arcs.size()); }

}  // namespace qpsurf
