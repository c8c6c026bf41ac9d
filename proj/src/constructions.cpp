#include "qpsurf/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qpsurf/error.hpp"
#include "qpsurf/invariants.hpp"

namespace qpsurf {

namespace {

void require_n(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidParameter, "fiber index n must be >= 2, got " + std::to_string(n));
}

}  // namespace

BandRepresentation nabla(int n) {
  require_n(n);
  std::vector<EmbeddedBand> bands;
  bands.reserve(n * (n - 1));
  for (int c = 0; c < n; ++c) {
    for (int d = 1; d <= n - 1; ++d) bands.push_back({d, d + 1, Sign::Positive});
  }
  return BandRepresentation(n, std::move(bands));
}

BandRepresentation q_rep(int n) {
  require_n(n);
  const int nu = q_strands(n);
  std::vector<EmbeddedBand> bands(2 * (nu - 1));
  for (int s = 1; s <= nu - 1; ++s) bands[s - 1] = {1, nu - s + 1, Sign::Positive};
  for (int c = 0; c <= n - 2; ++c) {
    for (int d = 0; d <= n - 2; ++d) {
      const int s = nu + (n - 1) * c + d;
      bands[s - 1] = {1, nu - c - (n - 1) * d, Sign::Positive};
    }
  }
  return BandRepresentation(nu, std::move(bands));
}

CoarseDecomposition coarse_decomposition(int n) {
  require_n(n);
  CoarseDecomposition cd{n, q_strands(n), 1, {}};
  for (int s = 1; s <= cd.nu - 1; ++s) {
    const int c = (s - 1) % (n - 1);
    const int d = (s - 1) / (n - 1);
    const int s_prime = d + (n - 1) * c;
    cd.handles.push_back({s, cd.nu - s + 1, {s, cd.nu + s_prime}});
  }
  return cd;
}

bool CoarseDecomposition::is_partition() const {
  const int k = 2 * (nu - 1);
  std::vector<int> zero(nu + 1, 0);
  std::vector<int> one(k + 1, 0);
  if (zero_handle < 1 || zero_handle > nu) return false;
  ++zero[zero_handle];
  for (const auto& h : handles) {
    if (h.fine_zero_handle < 1 || h.fine_zero_handle > nu) return false;
    ++zero[h.fine_zero_handle];
    for (int t : h.fine_one_handles) {
      if (t < 1 || t > k) return false;
      ++one[t];
    }
  }
  if (static_cast<int>(handles.size()) != nu - 1) return false;
  return std::all_of(zero.begin() + 1, zero.end(), [](int c) { return c == 1; }) &&
         std::all_of(one.begin() + 1, one.end(), [](int c) { return c == 1; });
}

int CoarseDecomposition::coarse_of_band(int t) const {
  for (const auto& h : handles) {
    if (std::ranges::find(h.fine_one_handles, t) != h.fine_one_handles.end()) return h.index;
  }
  throw Error(ErrorKind::InvalidParameter, "1-handle " + std::to_string(t) + " not in S(q_" + std::to_string(n) + ")");
}

Padding pad_into_nabla(const BraidWord& p) {
  if (!is_positive(p)) throw Error(ErrorKind::NotPositive, "padding needs a positive braidword");
  const int n = std::max({2, p.strands(), static_cast<int>(p.size())});
  Padding out{n, {}, CombedGraph{BraidedSurface(nabla(n)), {}, {}}};
  std::set<int> marked;
  int t = 0;
  for (const auto& l : p.letters()) {
    const int position = (n - 1) * t + l.index;
    marked.insert(position);
    out.marked.push_back(position);
    ++t;
  }
  out.graph = handle_spine(BraidedSurface(nabla(n)), marked);
  return out;
}

BandExpansion expand_bands(const BandRepresentation& rep) {
  if (!is_quasipositive(rep)) throw Error(ErrorKind::NotQuasipositive, "band expansion needs positive bands");
  const int n = rep.strands();
  std::vector<Letter> letters;
  std::vector<Comb> main(n);
  std::vector<std::vector<Comb>> passes(n);
  std::vector<Arc> arcs;
  for (const auto& b : rep.bands()) {
    const int first = static_cast<int>(letters.size()) + 1;
    for (int k = b.i; k < b.j; ++k) {
      letters.push_back({k, Sign::Positive});
      arcs.push_back({static_cast<int>(letters.size()), 1, 1});
    }
    const int last = static_cast<int>(letters.size());
    main[b.i - 1].teeth.push_back(ArcEnd{first, 1});
    main[b.j - 1].teeth.push_back(ArcEnd{last, 1});
    // The path crosses disk s between generators s-1 (arriving) and s (leaving).
    for (int s = b.i + 1; s < b.j; ++s) {
      const int arriving = first + (s - 1 - b.i);
      passes[s - 1].push_back(Comb{{ArcEnd{arriving, 1}, ArcEnd{arriving + 1, 1}}});
    }
  }
  BraidWord word(n, std::move(letters));
  CombedGraph g{BraidedSurface(as_band_representation(word)), std::vector<std::vector<DiskPiece>>(n), std::move(arcs)};
  for (int s = 0; s < n; ++s) {
    // Pieces bottom to top by lowest tooth; a main node without teeth is a
    // point at the bottom of the disk.
    std::vector<std::pair<int, DiskPiece>> pieces;
    if (main[s].teeth.empty()) pieces.emplace_back(0, IsolatedPoint{});
    else pieces.emplace_back(std::get<ArcEnd>(main[s].teeth.front()).handle, main[s]);
    for (auto& c : passes[s]) pieces.emplace_back(std::get<ArcEnd>(c.teeth.front()).handle, std::move(c));
    std::ranges::stable_sort(pieces, {}, &std::pair<int, DiskPiece>::first);
    for (auto& [key, piece] : pieces) g.disks[s].push_back(std::move(piece));
  }
  return {std::move(word), std::move(g)};
}

bool FiberReport::ok() const {
  return chi_q == chi_nabla && components_q == n && components_nabla == n &&
         eq_up_to_units(alexander_q, alexander_nabla);
}

FiberReport verify_fiber(int n) {
  require_n(n);
  const auto q = q_rep(n);
  const auto nab = nabla(n);
  const auto bq = beta(q);
  const auto bn = beta(nab);
  FiberReport r{n,
                euler_characteristic(BraidedSurface(q)),
                euler_characteristic(BraidedSurface(nab)),
                static_cast<int>(cycles(permutation(bq)).size()),
                static_cast<int>(cycles(permutation(bn)).size()),
                alexander_from_braid(bq),
                alexander_from_braid(bn)};
  if (!r.ok()) {
    throw Error(ErrorKind::FiberVerificationFailed,
                "n=" + std::to_string(n) + ": chi " + std::to_string(r.chi_q) + "/" + std::to_string(r.chi_nabla) +
                    ", components " + std::to_string(r.components_q) + "/" + std::to_string(r.components_nabla) +
                    ", alexander " + r.alexander_q.to_string() + " / " + r.alexander_nabla.to_string());
  }
  return r;
}

}  // namespace qpsurf
