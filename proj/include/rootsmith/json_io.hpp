#pragma once

#include <json.hpp>

#include "rootsmith/quasicox.hpp"
#include "rootsmith/root_system.hpp"
#include "rootsmith/simple_systems.hpp"
#include "rootsmith/weyl.hpp"

namespace rootsmith::json_io {

/// Insertion-ordered JSON keeps output byte-stable.
using Json = nlohmann::ordered_json;

inline Json coords_json(const RootCoords& v) { return Json(v); }

inline Json coords_list_json(const RootSystem& rs,
                             const std::vector<RootIndex>& roots) {
  Json list = Json::array();
  for (const RootIndex i : roots) list.push_back(rs.root(i));
  return list;
}

inline Json root_system_json(const RootSystem& rs) {
  Json j;
  j["type"] = rs.type().label();
  j["rank"] = rs.rank();
  j["cartan"] = rs.cartan();
  j["d"] = rs.symmetrizers();
  j["gram"] = rs.gram();
  j["roots"] = rs.roots();
  Json coroots = Json::array();
  for (std::size_t i = 0; i < rs.root_count(); ++i)
    coroots.push_back(rs.coroot(static_cast<RootIndex>(i)));
  j["coroots"] = std::move(coroots);
  return j;
}

inline Json verdict_json(const quasicox::GenerationVerdict& v) {
  Json j;
  j["generates"] = v.generates;
  j["root_span_index"] =
      v.root_span_index ? Json(*v.root_span_index) : Json("rank-deficient");
  j["coroot_span_index"] =
      v.coroot_span_index ? Json(*v.coroot_span_index) : Json("rank-deficient");
  return j;
}

inline Json factorization_json(const RootSystem& rs,
                               const quasicox::Factorization& f) {
  return coords_list_json(rs, f.refs);
}

inline Json trace_json(const simple_systems::ObtusifyTrace& t) {
  Json j;
  j["gamma"] = t.gamma_coords;
  j["word"] = t.word;
  j["steps"] = t.steps;
  return j;
}

inline Json orbit_report_json(const RootSystem& rs,
                              const simple_systems::OrbitReport& r) {
  Json j;
  j["completions"] = coords_list_json(rs, r.completions);
  j["orbit_count"] = r.orbit_count();
  Json orbits = Json::array();
  for (const auto& orbit : r.orbits)
    orbits.push_back(coords_list_json(rs, orbit));
  j["orbits"] = std::move(orbits);
  return j;
}

inline Json group_element_json(const RootSystem& rs,
                               const weyl::GroupElement& w) {
  return Json(weyl::simple_images(rs, w));
}

}  // namespace rootsmith::json_io
