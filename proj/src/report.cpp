#include "nilcover/report.hpp"

#include "nilcover/constructions.hpp"

namespace nilcover {

using nlohmann::ordered_json;

ordered_json to_json(const WitnessCertificate& cert) {
  ordered_json j;
  j["group"] = cert.group;
  j["kind"] = std::string(to_string(cert.kind));
  j["elements"] = cert.elements;
  j["size"] = cert.size();
  j["verified"] = cert.verified;
  return j;
}

ordered_json cover_to_json(const FiniteGroup& g, std::span<const Subgroup> parts, ClassKind kind) {
  ordered_json j;
  j["group"] = g.label();
  j["kind"] = std::string(to_string(kind));
  ordered_json list = ordered_json::array();
  for (const auto& part : parts) {
    ordered_json members = ordered_json::array();
    for (Index m : part.members()) members.push_back(format_cycles(g.element(m)));
    list.push_back(std::move(members));
  }
  j["parts"] = std::move(list);
  j["coversGroup"] = verify_cover(g, parts, kind);
  return j;
}

ordered_json to_json(const Subgroup& h) {
  ordered_json j;
  j["order"] = h.order();
  ordered_json gens = ordered_json::array();
  for (Index x : h.generators()) gens.push_back(format_cycles(h.parent().element(x)));
  j["generators"] = std::move(gens);
  return j;
}

namespace {

ordered_json series_json(const std::vector<Subgroup>& series) {
  ordered_json out = ordered_json::array();
  for (const auto& h : series) out.push_back(to_json(h));
  return out;
}

}  // namespace

ordered_json to_json(const SylowReport& report) {
  ordered_json j;
  j["prime"] = report.prime;
  j["sylowOrder"] = report.sylow_order;
  j["count"] = report.count;
  j["normalizerOrder"] = report.normalizer_order;
  j["pairwiseTrivialIntersection"] = report.pairwise_trivial_intersection;
  j["subgroups"] = series_json(report.subgroups);
  return j;
}

ordered_json to_json(const StructureReport& report) {
  ordered_json j;
  j["center"] = to_json(report.center);
  j["hypercentre"] = to_json(report.hypercentre);
  j["upperCentralSeries"] = series_json(report.upper_central_series);
  j["derivedSeries"] = series_json(report.derived_series);
  if (report.derived_length) {
    j["derivedLength"] = *report.derived_length;
  } else {
    j["derivedLength"] = "insoluble";
  }
  j["lowerCentralSeries"] = series_json(report.lower_central_series);
  j["isNilpotent"] = report.is_nilpotent;
  j["isSoluble"] = report.is_soluble;
  j["isSupersoluble"] = report.is_supersoluble;
  j["solubleRadical"] = to_json(report.soluble_radical);
  j["fitting"] = to_json(report.fitting);
  j["crRadical"] = to_json(report.cr_radical);
  ordered_json sy = ordered_json::array();
  for (const auto& s : report.sylow) sy.push_back(to_json(s));
  j["sylow"] = std::move(sy);
  return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace nilcover
