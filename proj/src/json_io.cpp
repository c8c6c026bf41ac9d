#include "qpsurf/json_io.hpp"

#include <cstdint>
#include <limits>

#include "qpsurf/error.hpp"

namespace qpsurf {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::MalformedDocument, std::string(what) + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorKind::MalformedDocument, std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

}  // namespace

Json to_json(const BraidWord& w) {
  Json letters = Json::array();
  for (const auto& l : w.letters()) letters.push_back({l.index, value(l.sign)});
  return {{"strands", w.strands()}, {"letters", letters}};
}

Json to_json(const BandRepresentation& rep) {
  Json bands = Json::array();
  for (const auto& b : rep.bands()) bands.push_back({b.i, b.j, value(b.sign)});
  return {{"strands", rep.strands()}, {"bands", bands}};
}

Json to_json(const SurfaceSummary& s) {
  Json comps = Json::array();
  for (const auto& c : s.components()) comps.push_back({c.chi, c.boundary_circles});
  return {{"chi", s.total_chi()}, {"components", comps}};
}

Json to_json(const CombedGraph& g) {
  Json disks = Json::array();
  for (const auto& disk : g.disks) {
    Json pieces = Json::array();
    for (const auto& piece : disk) {
      if (std::holds_alternative<IsolatedPoint>(piece)) {
        pieces.push_back({{"point", true}});
        continue;
      }
      Json teeth = Json::array();
      for (const auto& tooth : std::get<Comb>(piece).teeth) {
        if (const auto* e = std::get_if<ArcEnd>(&tooth)) teeth.push_back({{"arc_end", {e->handle, e->slot}}});
        else teeth.push_back({{"free_end", true}});
      }
      pieces.push_back({{"comb", teeth}});
    }
    disks.push_back(pieces);
  }
  Json arcs = Json::array();
  for (const auto& a : g.arcs) arcs.push_back({a.handle, a.slot_i, a.slot_j});
  return {{"host", to_json(g.host.representation())}, {"disks", disks}, {"arcs", arcs}};
}

Json to_json(const WhiteheadSite& site) { return {site.disk, site.piece, site.tooth}; }

Json to_json(const QuasipositizationResult& r) {
  Json trace = Json::array();
  for (const auto& s : r.trace) trace.push_back(to_json(s));
  return {{"output", to_json(r.output)},
          {"summary", to_json(r.output_summary)},
          {"input_summary", to_json(r.input_summary)},
          {"trace", trace},
          {"coarse_well_placed", r.coarse_well_placed}};
}

Json alexander_json(const Laurent& p) {
  const Laurent canon = p.canonical();
  Json coeffs = Json::array();
  for (const auto& c : canon.coefficients()) {
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
      coeffs.push_back(static_cast<std::int64_t>(c));
    } else {
      coeffs.push_back(c.str());
    }
  }
  return coeffs;
}

Json to_json(const FiberReport& r) {
  return {{"n", r.n},
          {"chi", {r.chi_q, r.chi_nabla}},
          {"components", {r.components_q, r.components_nabla}},
          {"alexander_q", alexander_json(r.alexander_q)},
          {"alexander_nabla", alexander_json(r.alexander_nabla)},
          {"ok", r.ok()}};
}

BraidWord word_from_json(const Json& j) {
  return guarded("braid word", [&] {
    std::vector<Letter> letters;
    for (const auto& l : field(j, "letters")) {
      if (!l.is_array() || l.size() != 2) throw Error(ErrorKind::MalformedDocument, "letter must be [i, sign]");
      letters.push_back({l[0].get<int>(), sign_from_int(l[1].get<int>())});
    }
    return BraidWord(field(j, "strands").get<int>(), std::move(letters));
  });
}

BandRepresentation rep_from_json(const Json& j) {
  return guarded("band representation", [&] {
    std::vector<EmbeddedBand> bands;
    for (const auto& b : field(j, "bands")) {
      if (!b.is_array() || b.size() != 3) throw Error(ErrorKind::MalformedDocument, "band must be [i, j, sign]");
      bands.push_back({b[0].get<int>(), b[1].get<int>(), sign_from_int(b[2].get<int>())});
    }
    return BandRepresentation(field(j, "strands").get<int>(), std::move(bands));
  });
}

CombedGraph graph_from_json(const Json& j) {
  return guarded("combed graph", [&] {
    CombedGraph g{BraidedSurface(rep_from_json(field(j, "host"))), {}, {}};
    for (const auto& disk : field(j, "disks")) {
      std::vector<DiskPiece> pieces;
      for (const auto& piece : disk) {
        if (piece.contains("point")) {
          pieces.push_back(IsolatedPoint{});
          continue;
        }
        Comb comb;
        for (const auto& tooth : field(piece, "comb")) {
          if (tooth.contains("free_end")) {
            comb.teeth.push_back(FreeEnd{});
          } else {
            const auto& e = field(tooth, "arc_end");
            comb.teeth.push_back(ArcEnd{e.at(0).get<int>(), e.at(1).get<int>()});
          }
        }
        pieces.push_back(std::move(comb));
      }
      g.disks.push_back(std::move(pieces));
    }
    for (const auto& a : field(j, "arcs")) {
      if (!a.is_array() || a.size() != 3) throw Error(ErrorKind::MalformedDocument, "arc must be [t, slot_i, slot_j]");
      g.arcs.push_back({a[0].get<int>(), a[1].get<int>(), a[2].get<int>()});
    }
    require_valid(g);
    return g;
  });
}

}  // namespace qpsurf
