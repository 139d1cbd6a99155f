#include "typlab/report.hpp"

#include "typlab/parser.hpp"

namespace typlab {

Json make_report(const std::string& command, Json inputs, Json budgets, Json results,
                 Json violations, Json certificates, double elapsed_ms) {
  Json rep;
  rep["version"] = kToolVersion;
  rep["command"] = command;
  rep["inputs"] = std::move(inputs);
  rep["budgets"] = std::move(budgets);
  rep["results"] = std::move(results);
  rep["violations"] = violations.is_null() ? Json::array() : std::move(violations);
  rep["certificates"] = certificates.is_null() ? Json::array() : std::move(certificates);
  rep["timing"] = Json{{"elapsed_ms", elapsed_ms}};
  return rep;
}

Json to_json(const PropertyClassification& c) {
  Json j;
  j["extension"] = c.extension;
  j["complement_size"] = c.complement_size;
  j["verdict"] = to_string(c.verdict);
  j["mode"] = to_string(c.mode);
  return j;
}

Json to_json(const TypicalityVerdict& v) {
  Json j;
  j["element"] = v.element;
  j["params"] = v.params;
  j["verdict"] = to_string(v.verdict);
  j["certificate_orbit"] = v.certificate_orbit;
  if (v.witness) j["witness"] = render_formula(**v.witness);
  return j;
}

Json to_json(const AxiomViolation& v) {
  Json j;
  if (v.element) j["element"] = *v.element;
  if (v.aux_element) j["aux_element"] = *v.aux_element;
  j["params"] = v.params;
  if (!v.aux_params.empty()) j["aux_params"] = v.aux_params;
  if (v.formula) j["formula"] = *v.formula;
  if (!v.filter_sets.empty()) j["filter_sets"] = v.filter_sets;
  return j;
}

Json to_json(const AxiomReport& r) {
  Json j;
  j["axiom"] = to_string(r.axiom);
  j["structure"] = r.structure_id;
  j["bounds"] = Json{{"arity", r.bounds.arity}, {"budget", r.bounds.budget}};
  j["verdict"] = to_string(r.verdict);
  Json viols = Json::array();
  for (const AxiomViolation& v : r.violations) viols.push_back(to_json(v));
  j["violations"] = std::move(viols);
  j["checked_count"] = r.checked_count;
  j["caveats"] = r.caveats;
  return j;
}

Json to_json(const SearchOutcome& o) {
  Json j;
  j["axiom"] = to_string(o.axiom);
  j["family"] = Json{{"kind", to_string(o.family.kind)},
                     {"min_n", o.family.min_n},
                     {"max_n", o.family.max_n}};
  j["bounds"] = Json{{"arity", o.bounds.arity}, {"budget", o.bounds.budget}};
  Json counts = Json::array();
  for (const FamilyCount& c : o.counts) {
    counts.push_back(Json{{"n", c.n},
                          {"labeled", c.labeled},
                          {"labeled_closed_form", c.labeled_closed_form},
                          {"canonical", c.canonical}});
  }
  j["counts"] = std::move(counts);
  if (o.violation) {
    j["verdict"] = "witness-found";
    j["witness"] = Json{{"n", *o.witness_n},
                        {"code", *o.witness_code},
                        {"structure", *o.witness_structure},
                        {"violation", to_json(*o.violation)}};
  } else {
    j["verdict"] = "none-up-to-bound";
  }
  return j;
}

Json to_json(const SemiLinearSet& s, const ParamConfig& cfg) {
  Json items = Json::array();
  for (const SemiLinearSet::Item& it : s.items()) {
    if (it.is_point)
      items.push_back(Json{{"type", "point"}, {"at", cfg.names.at(it.point)}});
    else
      items.push_back(
          Json{{"type", "interval"},
               {"left", it.left < 0 ? std::string("-inf") : cfg.names.at(it.left)},
               {"right", it.right >= s.k ? std::string("+inf") : cfg.names.at(it.right)}});
  }
  Json j;
  j["items"] = std::move(items);
  j["display"] = s.to_text(cfg);
  return j;
}

Json to_json(const DloClassification& c, const ParamConfig& cfg) {
  Json j;
  j["verdict"] = to_string(c.verdict);
  j["majority_verdict"] = to_string(c.majority_verdict);
  j["frechet_verdict"] = to_string(c.frechet_verdict);
  j["quantifier_free"] = c.qf.to_text(cfg);
  j["extension"] = to_json(c.extension, cfg);
  return j;
}

std::string comparable_dump(Json report) {
  report.erase("timing");
  return report.dump(2) + "\n";
}

}  // namespace typlab
