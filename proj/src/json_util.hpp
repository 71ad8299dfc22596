#pragma once

#include <json.hpp>

#include "dtile/congruence.hpp"
#include "dtile/digraph.hpp"
#include "dtile/search.hpp"
#include "dtile/tiling.hpp"

namespace dtile::detail {

using nlohmann::json;

inline json to_json(const VertexSet& s) { return s.to_vector(); }

inline json edges_json(const OrientedGraph& g) {
  json out = json::array();
  for (const auto& e : g.edges()) out.push_back({e.from, e.to});
  return out;
}

inline json graph_json(const OrientedGraph& g) { return {{"n", g.order()}, {"edges", edges_json(g)}}; }

inline json parts_json(const Tripartition& p) { return {to_json(p.part(0)), to_json(p.part(1)), to_json(p.part(2))}; }

inline json tiling_json(const Tiling& t) {
  json tiles = json::array();
  for (const auto& tile : t.tiles) {
    json j = {{"vertices", to_json(tile.vertices)}, {"map", tile.map}};
    if (tile.type) j["type"] = to_string(*tile.type);
    tiles.push_back(std::move(j));
  }
  return {{"tiles", std::move(tiles)}, {"covered", t.covered.count()}};
}

inline json triple_json(const Triple& t) { return {t[0], t[1], t[2]}; }

inline json obstruction_json(const ObstructionReport& r) {
  json j = {{"cross", {r.x, r.y, r.z}},
            {"type", r.t},
            {"mixed", r.mixed},
            {"part_sizes", r.part_sizes},
            {"residues", r.residues},
            {"covered", r.covered},
            {"covered_by_counts", r.covered_by_counts},
            {"consistent", r.consistent},
            {"verdict", verdict_name(r.verdict)},
            {"note", r.note}};
  j["congruence_solution"] = r.congruence_solution ? triple_json(*r.congruence_solution) : json(nullptr);
  return j;
}

}  // namespace dtile::detail
