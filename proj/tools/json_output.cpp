#include "json_output.hpp"

namespace poisson_ore::cli {

namespace {

Json to_json(const Certificate& c) {
  Json details = Json::object();
  for (const auto& [k, v] : c.details) details[k] = v;
  return Json{{"check", c.check}, {"details", details}};
}

}  // namespace

Json to_json(const SpectrumDescription& s) {
  Json entries = Json::array();
  for (const auto& e : s.entries) {
    Json certs = Json::array();
    for (const auto& c : e.certificates) certs.push_back(to_json(c));
    Json entry;
    entry["kind"] = to_string(e.kind);
    entry["generators"] = e.generator_strings();
    entry["parameters"] = e.parameters ? Json(*e.parameters) : Json(nullptr);
    entry["certificates"] = certs;
    entries.push_back(entry);
  }
  Json out;
  out["side"] = to_string(s.side);
  out["completeness"] = s.completeness;
  out["entries"] = entries;
  return out;
}

Json to_json(const DarbouxSearch& s) {
  Json certs = Json::array();
  for (const auto& c : s.certificates) {
    Json dirs = Json::array();
    for (const auto& d : c.directions) dirs.push_back(d.to_string());
    Json j;
    j["q"] = c.q.to_string();
    j["cofactor"] = c.cofactor.to_string();
    j["degree_bound_searched"] = c.degree_bound_searched;
    j["directions"] = dirs;
    certs.push_back(j);
  }
  Json out;
  out["certificates"] = certs;
  out["complete"] = s.complete();
  out["unresolved"] = s.unresolved;
  out["irrational_omitted"] = s.irrational_omitted;
  return out;
}

}  // namespace poisson_ore::cli
