#include "qpsurf/generators.hpp"

#include <algorithm>
#include <map>

#include "qpsurf/error.hpp"
#include "qpsurf/surface.hpp"

namespace qpsurf {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

struct PieceRef {
  int disk;
  int piece;
  int tooth;
};

PieceRef locate(const CombedGraph& g, int s, const ArcEnd& e) {
  for (int p = 0; p < static_cast<int>(g.disks[s - 1].size()); ++p) {
    if (const auto* comb = std::get_if<Comb>(&g.disks[s - 1][p])) {
      for (int x = 0; x < static_cast<int>(comb->teeth.size()); ++x) {
        if (const auto* y = std::get_if<ArcEnd>(&comb->teeth[x]); y && *y == e) return {s, p, x};
      }
    }
  }
  throw Error(ErrorKind::InvalidGraph, "arc end missing");
}

// Inserts a parallel copy of `arc`; returns the graph with the new arc's
// teeth placed but the far comb not yet split, plus where the far teeth are.
struct Doubled {
  CombedGraph graph;
  PieceRef near_pair;  // lower tooth of the adjacent pair at the near end
  PieceRef far_kept;   // far tooth of the original arc
  PieceRef far_new;    // far tooth of the copy
};

Doubled double_arc(const CombedGraph& g, int arc, bool near_j, bool upper) {
  const Arc orig = g.arcs.at(arc);
  const int t = orig.handle;
  const auto& band = g.host.band(t);
  const int near_disk = near_j ? band.j : band.i;
  const int far_disk = near_j ? band.i : band.j;

  // Order the handle's arcs by near slot and insert the copy.
  std::vector<int> ids;
  for (int a = 0; a < static_cast<int>(g.arcs.size()); ++a) {
    if (g.arcs[a].handle == t) ids.push_back(a);
  }
  auto near_slot = [&](const Arc& a) { return near_j ? a.slot_j : a.slot_i; };
  std::ranges::sort(ids, [&](int a, int b) { return near_slot(g.arcs[a]) < near_slot(g.arcs[b]); });
  const int copy_id = static_cast<int>(g.arcs.size());
  auto pos = std::ranges::find(ids, arc);
  ids.insert(upper ? pos + 1 : pos, copy_id);
  const int m = static_cast<int>(ids.size());

  Doubled d{g, {}, {}, {}};
  d.graph.arcs.push_back(Arc{t, 0, 0});
  std::map<int, std::pair<int, int>> old_slots;  // arc -> (near, far) before
  for (int a : ids) {
    if (a != copy_id) old_slots[a] = {near_slot(g.arcs[a]), near_j ? g.arcs[a].slot_i : g.arcs[a].slot_j};
  }
  std::map<std::pair<bool, int>, int> remap;  // (is_far, old slot) -> new slot
  for (int x = 0; x < m; ++x) {
    auto& a = d.graph.arcs[ids[x]];
    const int ns = x + 1;
    const int fs = m + 1 - ns;
    if (near_j) {
      a.slot_j = ns;
      a.slot_i = fs;
    } else {
      a.slot_i = ns;
      a.slot_j = fs;
    }
    if (ids[x] != copy_id) {
      remap[{false, old_slots[ids[x]].first}] = ns;
      remap[{true, old_slots[ids[x]].second}] = fs;
    }
  }
  auto rewrite = [&](int disk, bool is_far) {
    for (auto& piece : d.graph.disks[disk - 1]) {
      if (auto* comb = std::get_if<Comb>(&piece)) {
        for (auto& tooth : comb->teeth) {
          if (auto* e = std::get_if<ArcEnd>(&tooth); e && e->handle == t) e->slot = remap.at({is_far, e->slot});
        }
      }
    }
  };
  rewrite(near_disk, false);
  rewrite(far_disk, true);

  const auto& na = d.graph.arcs[arc];
  const auto& nc = d.graph.arcs[copy_id];
  const ArcEnd near_orig{t, near_slot(na)};
  const ArcEnd near_copy{t, near_slot(nc)};
  const ArcEnd far_orig{t, near_j ? na.slot_i : na.slot_j};
  const ArcEnd far_copy{t, near_j ? nc.slot_i : nc.slot_j};

  auto nr = locate(d.graph, near_disk, near_orig);
  auto& ncomb = std::get<Comb>(d.graph.disks[near_disk - 1][nr.piece]);
  ncomb.teeth.insert(ncomb.teeth.begin() + nr.tooth + (upper ? 1 : 0), near_copy);
  d.near_pair = {near_disk, nr.piece, nr.tooth};

  auto fr = locate(d.graph, far_disk, far_orig);
  auto& fcomb = std::get<Comb>(d.graph.disks[far_disk - 1][fr.piece]);
  // Far slots are reversed: an upper copy at the near end is lower at the far end.
  const int at = fr.tooth + (upper ? 0 : 1);
  fcomb.teeth.insert(fcomb.teeth.begin() + at, far_copy);
  d.far_kept = {far_disk, fr.piece, upper ? fr.tooth + 1 : fr.tooth};
  d.far_new = {far_disk, fr.piece, at};
  return d;
}

}  // namespace

BandRepresentation random_band_rep(Rng& rng, const RepShape& shape) {
  for (;;) {
    const int n = uniform(rng, std::max(shape.min_strands, 1), shape.max_strands);
    const int k = n == 1 ? 0 : uniform(rng, 0, shape.max_bands);
    std::vector<EmbeddedBand> bands;
    for (int x = 0; x < k; ++x) {
      const int i = uniform(rng, 1, n - 1);
      const int j = uniform(rng, i + 1, n);
      const Sign s = shape.quasipositive || uniform(rng, 0, 1) ? Sign::Positive : Sign::Negative;
      bands.push_back({i, j, s});
    }
    BandRepresentation rep(n, std::move(bands));
    if (shape.connected && summary(BraidedSurface(rep)).components().size() != 1) continue;
    return rep;
  }
}

std::vector<BraidWord> all_positive_words(int max_strands, int max_length) {
  std::vector<BraidWord> out;
  for (int m = 2; m <= max_strands; ++m) {
    std::vector<std::vector<Letter>> layer{{}};
    for (int len = 0; len <= max_length; ++len) {
      std::vector<std::vector<Letter>> next;
      for (auto& w : layer) {
        out.emplace_back(m, w);
        if (len == max_length) continue;
        for (int i = 1; i <= m - 1; ++i) {
          auto v = w;
          v.push_back({i, Sign::Positive});
          next.push_back(std::move(v));
        }
      }
      layer = std::move(next);
    }
  }
  return out;
}

std::set<int> random_subset(Rng& rng, int k, double keep) {
  std::bernoulli_distribution coin(keep);
  std::set<int> s;
  for (int t = 1; t <= k; ++t) {
    if (coin(rng)) s.insert(t);
  }
  return s;
}

CombedGraph split_arc(const CombedGraph& g, int arc, bool near_j, bool upper) {
  auto d = double_arc(g, arc, near_j, upper);
  auto& disk = d.graph.disks[d.far_new.disk - 1];
  auto& comb = std::get<Comb>(disk[d.far_new.piece]);
  // The copy takes every tooth beyond the original on its side.
  const int cut = d.far_new.tooth;
  std::vector<Tooth> kept;
  std::vector<Tooth> moved;
  if (d.far_new.tooth > d.far_kept.tooth) {
    kept.assign(comb.teeth.begin(), comb.teeth.begin() + cut);
    moved.assign(comb.teeth.begin() + cut, comb.teeth.end());
  } else {
    moved.assign(comb.teeth.begin(), comb.teeth.begin() + cut + 1);
    kept.assign(comb.teeth.begin() + cut + 1, comb.teeth.end());
  }
  comb.teeth = std::move(kept);
  const int insert_at = d.far_new.tooth > d.far_kept.tooth ? d.far_new.piece + 1 : d.far_new.piece;
  disk.insert(disk.begin() + insert_at, Comb{std::move(moved)});
  return d.graph;
}

CombedGraph add_bigon(const CombedGraph& g, int arc) {
  return double_arc(g, arc, false, true).graph;
}

CombedGraph random_full_graph(Rng& rng, const BraidedSurface& host, int max_arcs, int splits) {
  auto chosen = random_subset(rng, host.bands());
  while (static_cast<int>(chosen.size()) > max_arcs) chosen.erase(std::prev(chosen.end()));
  auto g = handle_spine(host, chosen);
  for (int x = 0; x < splits && !g.arcs.empty() && static_cast<int>(g.arcs.size()) < max_arcs; ++x) {
    const int arc = uniform(rng, 0, static_cast<int>(g.arcs.size()) - 1);
    g = split_arc(g, arc, uniform(rng, 0, 1) == 1, uniform(rng, 0, 1) == 1);
  }
  return g;
}

CombedGraph bigon_graph(const BraidedSurface& host, int t) {
  CombedGraph g = handle_spine(host, {t});
  return add_bigon(g, 0);
}

}  // namespace qpsurf
