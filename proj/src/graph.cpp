#include "qpsurf/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "qpsurf/error.hpp"

namespace qpsurf {

namespace {

int handles(const CombedGraph& g) { return g.host.bands(); }

int disk_of_end(const CombedGraph& g, int t, bool j_side) {
  const auto& b = g.host.band(t);
  return j_side ? b.j : b.i;
}

// Which end of handle t lies in disk s; nullopt if t does not touch s.
std::optional<bool> side_at(const CombedGraph& g, int t, int s) {
  const auto& b = g.host.band(t);
  if (s == b.i) return false;
  if (s == b.j) return true;
  return std::nullopt;
}

using EndKey = std::tuple<int, bool, int>;  // (handle, j_side, slot)

std::map<EndKey, int> arc_end_index(const CombedGraph& g) {
  std::map<EndKey, int> idx;
  for (int a = 0; a < static_cast<int>(g.arcs.size()); ++a) {
    idx[{g.arcs[a].handle, false, g.arcs[a].slot_i}] = a;
    idx[{g.arcs[a].handle, true, g.arcs[a].slot_j}] = a;
  }
  return idx;
}

std::vector<int> arcs_per_handle(const CombedGraph& g) {
  std::vector<int> m(handles(g) + 1, 0);
  for (const auto& a : g.arcs) {
    if (a.handle >= 1 && a.handle <= handles(g)) ++m[a.handle];
  }
  return m;
}

const ArcEnd* as_arc_end(const Tooth& tooth) { return std::get_if<ArcEnd>(&tooth); }

bool below(const ArcEnd& a, const ArcEnd& b) { return std::tie(a.handle, a.slot) < std::tie(b.handle, b.slot); }

std::vector<ArcEnd> arc_teeth(const Comb& comb) {
  std::vector<ArcEnd> out;
  for (const auto& tooth : comb.teeth) {
    if (const auto* e = as_arc_end(tooth)) out.push_back(*e);
  }
  return out;
}

// Gap index of `e` among the sorted teeth of `keys`.
std::size_t gap_of(const std::vector<ArcEnd>& keys, const ArcEnd& e) {
  return std::lower_bound(keys.begin(), keys.end(), e, below) - keys.begin();
}

bool within_one_gap(const std::vector<ArcEnd>& outer, const std::vector<ArcEnd>& inner) {
  if (inner.empty()) return true;
  const auto g0 = gap_of(outer, inner.front());
  return std::ranges::all_of(inner, [&](const ArcEnd& e) { return gap_of(outer, e) == g0; });
}

// Abstract graph: vertices are disk pieces, edges are arcs.
struct Abstract {
  struct Vertex {
    int disk;
    int piece;
    std::vector<int> half_edges;  // bottom to top; half edge 2a is arc a's i end, 2a+1 its j end
  };
  std::vector<Vertex> vertices;
  std::vector<int> vertex_of_half;  // per half edge
};

Abstract build_abstract(const CombedGraph& g) {
  const auto idx = arc_end_index(g);
  Abstract ab;
  ab.vertex_of_half.assign(2 * g.arcs.size(), -1);
  for (int s = 1; s <= static_cast<int>(g.disks.size()); ++s) {
    for (int p = 0; p < static_cast<int>(g.disks[s - 1].size()); ++p) {
      Abstract::Vertex v{s, p, {}};
      if (const auto* comb = std::get_if<Comb>(&g.disks[s - 1][p])) {
        for (const auto& e : arc_teeth(*comb)) {
          const bool j_side = *side_at(g, e.handle, s);
          const int a = idx.at({e.handle, j_side, e.slot});
          const int h = 2 * a + (j_side ? 1 : 0);
          v.half_edges.push_back(h);
          ab.vertex_of_half[h] = static_cast<int>(ab.vertices.size());
        }
      }
      ab.vertices.push_back(std::move(v));
    }
  }
  return ab;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

std::vector<std::string> validate(const CombedGraph& g) {
  std::vector<std::string> bad;
  const int n = g.host.disks();
  const int k = handles(g);
  if (static_cast<int>(g.disks.size()) != n) {
    bad.push_back("graph lists " + std::to_string(g.disks.size()) + " 0-handles, host has " + std::to_string(n));
    return bad;
  }

  // Arcs: handle in range, slots form an order-reversing bijection.
  std::vector<std::vector<const Arc*>> by_handle(k + 1);
  for (const auto& a : g.arcs) {
    if (a.handle < 1 || a.handle > k) {
      bad.push_back("arc references missing 1-handle " + std::to_string(a.handle));
      continue;
    }
    by_handle[a.handle].push_back(&a);
  }
  for (int t = 1; t <= k; ++t) {
    const int m = static_cast<int>(by_handle[t].size());
    std::vector<int> seen(m + 1, 0);
    for (const auto* a : by_handle[t]) {
      if (a->slot_i < 1 || a->slot_i > m) {
        bad.push_back("handle " + std::to_string(t) + ": slot " + std::to_string(a->slot_i) + " out of range 1.." +
                      std::to_string(m));
        continue;
      }
      if (++seen[a->slot_i] > 1) bad.push_back("handle " + std::to_string(t) + ": slot pairing is not bijective");
      if (a->slot_j != m + 1 - a->slot_i) {
        bad.push_back("handle " + std::to_string(t) + ": arcs are not parallel (slot " + std::to_string(a->slot_i) +
                      " must pair with " + std::to_string(m + 1 - a->slot_i) + ")");
      }
    }
  }
  const auto m = arcs_per_handle(g);

  // Teeth: every arc end referenced exactly once, from the right disk.
  std::map<EndKey, int> referenced;
  for (int s = 1; s <= n; ++s) {
    std::vector<std::vector<ArcEnd>> combs;
    for (const auto& piece : g.disks[s - 1]) {
      const auto* comb = std::get_if<Comb>(&piece);
      if (!comb) continue;
      if (comb->teeth.empty()) bad.push_back("disk " + std::to_string(s) + ": comb without teeth");
      auto keys = arc_teeth(*comb);
      for (const auto& e : keys) {
        if (e.handle < 1 || e.handle > k) {
          bad.push_back("disk " + std::to_string(s) + ": tooth into missing 1-handle " + std::to_string(e.handle));
          continue;
        }
        auto side = side_at(g, e.handle, s);
        if (!side) {
          bad.push_back("disk " + std::to_string(s) + ": 1-handle " + std::to_string(e.handle) +
                        " does not attach here");
          continue;
        }
        if (e.slot < 1 || e.slot > m[e.handle]) {
          bad.push_back("disk " + std::to_string(s) + ": dangling slot " + std::to_string(e.slot) + " of handle " +
                        std::to_string(e.handle) + " (" + std::to_string(m[e.handle]) + " arcs)");
          continue;
        }
        ++referenced[{e.handle, *side, e.slot}];
      }
      if (!std::ranges::is_sorted(keys, below) ||
          std::adjacent_find(keys.begin(), keys.end(), [](auto& a, auto& b) { return !below(a, b); }) != keys.end()) {
        bad.push_back("disk " + std::to_string(s) + ": comb teeth not in vertical order");
      }
      combs.push_back(std::move(keys));
    }
    for (std::size_t a = 0; a < combs.size(); ++a) {
      for (std::size_t b = a + 1; b < combs.size(); ++b) {
        if (!within_one_gap(combs[a], combs[b]) && !within_one_gap(combs[b], combs[a])) {
          bad.push_back("disk " + std::to_string(s) + ": combs cross");
        }
      }
    }
  }
  for (int t = 1; t <= k; ++t) {
    for (int side = 0; side < 2; ++side) {
      for (int slot = 1; slot <= m[t]; ++slot) {
        auto it = referenced.find({t, side == 1, slot});
        const int count = it == referenced.end() ? 0 : it->second;
        if (count != 1) {
          bad.push_back("handle " + std::to_string(t) + (side ? " j" : " i") + "-end slot " + std::to_string(slot) +
                        " referenced " + std::to_string(count) + " times");
        }
      }
    }
  }
  return bad;
}

void require_valid(const CombedGraph& g) {
  auto bad = validate(g);
  if (bad.empty()) return;
  std::string msg;
  for (const auto& b : bad) msg += (msg.empty() ? "" : "; ") + b;
  throw Error(ErrorKind::InvalidGraph, msg);
}

CombedGraph handle_spine(const BraidedSurface& host, const std::set<int>& selected) {
  for (int t : selected) {
    if (t < 1 || t > host.bands()) {
      throw Error(ErrorKind::InvalidParameter, "1-handle " + std::to_string(t) + " not in host");
    }
  }
  CombedGraph g{host, std::vector<std::vector<DiskPiece>>(host.disks()), {}};
  std::vector<Comb> combs(host.disks());
  for (int t : selected) {  // std::set iterates by height
    const auto& b = host.band(t);
    combs[b.i - 1].teeth.push_back(ArcEnd{t, 1});
    combs[b.j - 1].teeth.push_back(ArcEnd{t, 1});
    g.arcs.push_back(Arc{t, 1, 1});
  }
  for (int s = 0; s < host.disks(); ++s) {
    if (combs[s].teeth.empty()) g.disks[s].push_back(IsolatedPoint{});
    else g.disks[s].push_back(std::move(combs[s]));
  }
  return g;
}

SurfaceSummary neighborhood_summary(const CombedGraph& g) {
  require_valid(g);
  const auto ab = build_abstract(g);
  const int V = static_cast<int>(ab.vertices.size());
  const int H = static_cast<int>(ab.vertex_of_half.size());

  // Rotation: each comb is oriented like its 0-handle, whose positive
  // frame makes the counterclockwise order of teeth run top to bottom.
  std::vector<int> rot(H);
  for (const auto& v : ab.vertices) {
    const int d = static_cast<int>(v.half_edges.size());
    for (int x = 0; x < d; ++x) rot[v.half_edges[x]] = v.half_edges[(x + d - 1) % d];
  }

  UnionFind uf(V);
  for (int a = 0; a < H / 2; ++a) uf.unite(ab.vertex_of_half[2 * a], ab.vertex_of_half[2 * a + 1]);

  std::map<int, ComponentType> comps;
  for (int v = 0; v < V; ++v) {
    auto& c = comps.try_emplace(uf.find(v), ComponentType{0, 0}).first->second;
    c.chi += 1;
    if (ab.vertices[v].half_edges.empty()) c.boundary_circles += 1;
  }
  for (int a = 0; a < H / 2; ++a) comps[uf.find(ab.vertex_of_half[2 * a])].chi -= 1;

  // Faces are the orbits of rot o (swap ends of an arc).
  std::vector<bool> seen(H, false);
  for (int h = 0; h < H; ++h) {
    if (seen[h]) continue;
    for (int x = h; !seen[x]; x = rot[x ^ 1]) seen[x] = true;
    comps[uf.find(ab.vertex_of_half[h])].boundary_circles += 1;
  }

  std::vector<ComponentType> out;
  for (auto& [root, c] : comps) out.push_back(c);
  return SurfaceSummary(std::move(out));
}

FreeWord reduce_word(FreeWord w) {
  FreeWord stack;
  for (int x : w) {
    if (!stack.empty() && stack.back() == -x) stack.pop_back();
    else stack.push_back(x);
  }
  std::size_t lo = 0;
  std::size_t hi = stack.size();
  while (hi - lo >= 2 && stack[lo] == -stack[hi - 1]) {
    ++lo;
    --hi;
  }
  return FreeWord(stack.begin() + lo, stack.begin() + hi);
}

std::vector<bool> cotree_handles(const BraidedSurface& host) {
  UnionFind uf(host.disks());
  std::vector<bool> cotree(host.bands() + 1, false);
  for (int t = 1; t <= host.bands(); ++t) {
    const auto& b = host.band(t);
    cotree[t] = !uf.unite(b.i - 1, b.j - 1);
  }
  return cotree;
}

std::vector<FreeWord> cycle_words(const CombedGraph& g, std::int64_t budget) {
  require_valid(g);
  const auto ab = build_abstract(g);
  const int V = static_cast<int>(ab.vertices.size());
  const int E = static_cast<int>(g.arcs.size());
  const auto cotree = cotree_handles(g.host);

  // Incidence: (edge, other endpoint, direction sign when leaving through this end).
  struct Step {
    int edge;
    int to;
    int letter;
  };
  std::vector<std::vector<Step>> adj(V);
  for (int a = 0; a < E; ++a) {
    const int vi = ab.vertex_of_half[2 * a];
    const int vj = ab.vertex_of_half[2 * a + 1];
    const int t = g.arcs[a].handle;
    adj[vi].push_back({a, vj, +t});
    adj[vj].push_back({a, vi, -t});
  }

  std::vector<FreeWord> words;
  std::int64_t found = 0;
  std::vector<bool> on_path(V, false);
  std::vector<int> path_edges;
  std::vector<int> path_letters;

  // Simple cycles through `root` using only vertices > root; each cycle is
  // found in both directions, keep the one whose first edge is smaller.
  auto dfs = [&](auto&& self, int root, int v) -> void {
    for (const auto& st : adj[v]) {
      if (!path_edges.empty() && st.edge == path_edges.back()) continue;
      if (st.to == root) {
        if (path_edges.empty() || path_edges.front() >= st.edge) continue;
        if (++found > budget) {
          throw Error(ErrorKind::CycleEnumerationBudgetExceeded,
                      "more than " + std::to_string(budget) + " simple cycles");
        }
        FreeWord w;
        for (int x : path_letters) {
          if (cotree[std::abs(x)]) w.push_back(x);
        }
        if (cotree[std::abs(st.letter)]) w.push_back(st.letter);
        words.push_back(reduce_word(std::move(w)));
        continue;
      }
      if (st.to < root || on_path[st.to]) continue;
      on_path[st.to] = true;
      path_edges.push_back(st.edge);
      path_letters.push_back(st.letter);
      self(self, root, st.to);
      path_letters.pop_back();
      path_edges.pop_back();
      on_path[st.to] = false;
    }
  };
  for (int root = 0; root < V; ++root) {
    on_path[root] = true;
    dfs(dfs, root, root);
    on_path[root] = false;
  }
  return words;
}

bool is_full(const CombedGraph& g, std::int64_t budget) {
  for (const auto& w : cycle_words(g, budget)) {
    if (w.empty()) return false;
  }
  return true;
}

std::vector<WhiteheadSite> eligible_sites(const CombedGraph& g) {
  std::vector<WhiteheadSite> sites;
  for (int s = 1; s <= static_cast<int>(g.disks.size()); ++s) {
    for (int p = 0; p < static_cast<int>(g.disks[s - 1].size()); ++p) {
      const auto* comb = std::get_if<Comb>(&g.disks[s - 1][p]);
      if (!comb) continue;
      for (int x = 0; x + 1 < static_cast<int>(comb->teeth.size()); ++x) {
        const auto* lo = as_arc_end(comb->teeth[x]);
        const auto* hi = as_arc_end(comb->teeth[x + 1]);
        if (lo && hi && lo->handle == hi->handle && hi->slot == lo->slot + 1) sites.push_back({s, p, x});
      }
    }
  }
  return sites;
}

bool has_doubled_attachment(const CombedGraph& g) {
  for (const auto& disk : g.disks) {
    for (const auto& piece : disk) {
      const auto* comb = std::get_if<Comb>(&piece);
      if (!comb) continue;
      std::set<int> seen;
      for (const auto& e : arc_teeth(*comb)) {
        if (!seen.insert(e.handle).second) return true;
      }
    }
  }
  return false;
}

namespace {

// Merge the teeth of two non-crossing combs in vertical order. Free ends
// travel with the arc end below them (or lead the comb if none is).
std::vector<Tooth> merge_teeth(const std::vector<Tooth>& a, const std::vector<Tooth>& b) {
  using Group = std::pair<std::optional<ArcEnd>, std::vector<Tooth>>;
  auto groups = [](const std::vector<Tooth>& teeth) {
    std::vector<Group> out{{std::nullopt, {}}};
    for (const auto& tooth : teeth) {
      if (const auto* e = as_arc_end(tooth)) out.push_back({*e, {tooth}});
      else out.back().second.push_back(tooth);
    }
    return out;
  };
  auto ga = groups(a);
  auto gb = groups(b);
  std::vector<Tooth> merged(ga.front().second);
  merged.insert(merged.end(), gb.front().second.begin(), gb.front().second.end());
  std::vector<Group> rest(ga.begin() + 1, ga.end());
  rest.insert(rest.end(), gb.begin() + 1, gb.end());
  std::ranges::stable_sort(rest, [](const Group& x, const Group& y) { return below(*x.first, *y.first); });
  for (const auto& grp : rest) merged.insert(merged.end(), grp.second.begin(), grp.second.end());
  return merged;
}

int find_piece_with(const CombedGraph& g, int s, const ArcEnd& e) {
  const auto& disk = g.disks[s - 1];
  for (int p = 0; p < static_cast<int>(disk.size()); ++p) {
    if (const auto* comb = std::get_if<Comb>(&disk[p])) {
      for (const auto& tooth : comb->teeth) {
        if (const auto* x = as_arc_end(tooth); x && *x == e) return p;
      }
    }
  }
  throw Error(ErrorKind::InvalidGraph, "arc end not found in disk " + std::to_string(s));
}

void erase_tooth(Comb& comb, const ArcEnd& e) {
  std::erase_if(comb.teeth, [&](const Tooth& tooth) {
    const auto* x = as_arc_end(tooth);
    return x && *x == e;
  });
}

CombedGraph step_unchecked(const CombedGraph& g, const WhiteheadSite& site) {
  if (site.disk < 1 || site.disk > static_cast<int>(g.disks.size()) || site.piece < 0 ||
      site.piece >= static_cast<int>(g.disks[site.disk - 1].size())) {
    throw Error(ErrorKind::SiteNotEligible, "site does not name a disk piece");
  }
  const auto* near = std::get_if<Comb>(&g.disks[site.disk - 1][site.piece]);
  if (!near || site.tooth < 0 || site.tooth + 1 >= static_cast<int>(near->teeth.size())) {
    throw Error(ErrorKind::SiteNotEligible, "site does not name two teeth of a comb");
  }
  const auto* lo = as_arc_end(near->teeth[site.tooth]);
  const auto* hi = as_arc_end(near->teeth[site.tooth + 1]);
  if (!lo || !hi || lo->handle != hi->handle || hi->slot != lo->slot + 1) {
    throw Error(ErrorKind::SiteNotEligible, "teeth are not adjacent ends in one attaching arc");
  }
  const int t = lo->handle;
  const int s = site.disk;
  const bool near_j = *side_at(g, t, s);
  const int far = disk_of_end(g, t, !near_j);
  const int m = arcs_per_handle(g)[t];

  const int kept_near = lo->slot;
  const int gone_near = hi->slot;
  const ArcEnd kept_far{t, m + 1 - kept_near};
  const ArcEnd gone_far{t, m + 1 - gone_near};

  const int piece_a = find_piece_with(g, far, kept_far);
  const int piece_b = find_piece_with(g, far, gone_far);
  if (piece_a == piece_b) {
    // Both arcs land on one comb: the two arcs bound a disk, so the graph is
    // not full and the move would not stay combed.
    throw Error(ErrorKind::SiteNotEligible, "both arcs return to the same comb");
  }

  CombedGraph out = g;
  erase_tooth(std::get<Comb>(out.disks[s - 1][site.piece]), ArcEnd{t, gone_near});
  auto& comb_a = std::get<Comb>(out.disks[far - 1][piece_a]);
  auto comb_b = std::get<Comb>(out.disks[far - 1][piece_b]);
  erase_tooth(comb_b, gone_far);
  comb_a.teeth = merge_teeth(comb_a.teeth, comb_b.teeth);
  out.disks[far - 1].erase(out.disks[far - 1].begin() + piece_b);

  // Drop the arc and close the slot gaps on both ends.
  const int gone_i = near_j ? gone_far.slot : gone_near;
  std::erase_if(out.arcs, [&](const Arc& a) { return a.handle == t && a.slot_i == gone_i; });
  const int gone_j = m + 1 - gone_i;
  for (auto& a : out.arcs) {
    if (a.handle != t) continue;
    if (a.slot_i > gone_i) --a.slot_i;
    if (a.slot_j > gone_j) --a.slot_j;
  }
  auto renumber = [&](int disk, bool j_side) {
    const int gone = j_side ? gone_j : gone_i;
    for (auto& piece : out.disks[disk - 1]) {
      if (auto* comb = std::get_if<Comb>(&piece)) {
        for (auto& tooth : comb->teeth) {
          if (auto* e = std::get_if<ArcEnd>(&tooth); e && e->handle == t && e->slot > gone) --e->slot;
        }
      }
    }
  };
  renumber(g.host.band(t).i, false);
  renumber(g.host.band(t).j, true);
  return out;
}

}  // namespace

CombedGraph whitehead_step(const CombedGraph& g, const WhiteheadSite& site) {
  require_valid(g);
  if (!is_full(g)) throw Error(ErrorKind::NotFull, "Whitehead move needs a full graph");
  return step_unchecked(g, site);
}

Reduction reduce(const CombedGraph& g) {
  require_valid(g);
  if (!is_full(g)) throw Error(ErrorKind::NotFull, "reduction needs a full graph");
  Reduction r{g, {}, {}};
  // Each step removes one arc, so this loop runs at most arcs.size() times.
  for (auto sites = eligible_sites(r.graph); !sites.empty(); sites = eligible_sites(r.graph)) {
    r.graph = step_unchecked(r.graph, sites.front());
    r.trace.push_back(sites.front());
    r.arcs_after.push_back(one_skeleton_components(r.graph));
  }
  return r;
}

}  // namespace qpsurf
