#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "typlab/enumeration.hpp"
#include "typlab/error.hpp"
#include "typlab/eval.hpp"
#include "typlab/parser.hpp"
#include "typlab/report.hpp"

namespace {

using namespace typlab;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(std::stoi(cur));
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::stoi(cur));
  return out;
}

std::vector<std::string> parse_name_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

Valuation parse_assignment(const std::string& text) {
  Valuation v;
  for (const std::string& field : parse_name_list(text)) {
    std::size_t eq = field.find('=');
    if (eq == std::string::npos) throw Error("assignment must be name=element");
    v[field.substr(0, eq)] = std::stoi(field.substr(eq + 1));
  }
  return v;
}

// Placeholder names p0..p{k-1} for element parameters, matching the witness
// and enumeration machinery.
Valuation placeholder_valuation(const std::vector<int>& params) {
  Valuation v;
  for (std::size_t i = 0; i < params.size(); ++i) v["p" + std::to_string(i)] = params[i];
  return v;
}

void emit(const std::string& command, const Json& inputs, const Json& budgets,
          const Json& results, const Json& violations, const Json& certificates,
          const Timer& timer) {
  Json rep =
      make_report(command, inputs, budgets, results, violations, certificates, timer.ms());
  std::cout << rep.dump(2) << "\n";
}

std::vector<SchemeFormula> load_scheme_file(const std::string& path, const Signature& sig) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open formula file '" + path + "'");
  std::vector<SchemeFormula> out;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);
    SchemeFormula sf;
    std::size_t sep = line.find("::");
    std::string body = line;
    if (sep != std::string::npos) {
      sf.params = parse_name_list(line.substr(0, sep));
      body = line.substr(sep + 2);
    }
    sf.formula = parse_formula(body, sig, sf.params);
    out.push_back(std::move(sf));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"typicality laboratory for finite structures, (Q,<), and Cantor space"};
  app.require_subcommand(1);

  std::string structure_path, formula_text, assign_text, param_names_text, element_params_text;
  std::string var_name = "x";
  std::string axiom_text, family_text = "graphs:1..5", formulas_path, dlo_params_text;
  std::string exec_text = "parallel";
  std::string code_text, stream_text;
  int budget = 9, arity = 3, element = 0, level = 0, depth = 20, bound = 2;
  std::uint64_t proj_index = 0;
  bool definable = false, typical_elements = false, do_eliminate = false;
  bool want_measure = false, want_words = false;
  std::vector<std::string> positional;
  int exit_code = 0;

  auto exec_mode = [&]() {
    if (exec_text == "serial") return ExecMode::Serial;
    if (exec_text == "parallel") return ExecMode::Parallel;
    throw Error("--exec must be serial or parallel");
  };
  auto load = [&]() { return load_structure_file(structure_path); };
  auto parse_with_params = [&](const FiniteStructure& s) {
    return parse_formula(formula_text, s.signature(), parse_name_list(param_names_text));
  };
  auto structure_inputs = [&](const FiniteStructure& s) {
    return Json{{"structure", s.name()}, {"universe", s.size()}};
  };

  {
    auto* cmd = app.add_subcommand("eval", "evaluate a formula under an assignment");
    cmd->add_option("--structure", structure_path)->required();
    cmd->add_option("--formula", formula_text)->required();
    cmd->add_option("--assign", assign_text);
    cmd->add_option("--param-names", param_names_text);
    cmd->callback([&] {
      Timer t;
      FiniteStructure s = load();
      FormulaRef f = parse_with_params(s);
      Valuation v = parse_assignment(assign_text);
      bool value = evaluate(s, f, v);
      Json inputs = structure_inputs(s);
      inputs["formula"] = render_formula(f);
      inputs["assign"] = assign_text;
      emit("eval", inputs, Json::object(), Json{{"value", value}}, {}, {}, t);
    });
  }

  {
    auto* cmd = app.add_subcommand("extension", "extension of a formula along a variable");
    cmd->add_option("--structure", structure_path)->required();
    cmd->add_option("--formula", formula_text)->required();
    cmd->add_option("--var", var_name);
    cmd->add_option("--assign", assign_text);
    cmd->add_option("--param-names", param_names_text);
    cmd->callback([&] {
      Timer t;
      FiniteStructure s = load();
      FormulaRef f = parse_with_params(s);
      Valuation v = parse_assignment(assign_text);
      std::vector<int> ext = extension(s, f, var_name, v);
      Json inputs = structure_inputs(s);
      inputs["formula"] = render_formula(f);
      inputs["var"] = var_name;
      inputs["assign"] = assign_text;
      emit("extension", inputs, Json::object(), Json{{"extension", ext}}, {}, {}, t);
    });
  }

  {
    auto* cmd = app.add_subcommand("orbits", "stabilizer orbits and definable closure");
    cmd->add_option("--structure", structure_path)->required();
    cmd->add_option("--fixed", element_params_text);
    cmd->callback([&] {
      Timer t;
      FiniteStructure s = load();
      std::vector<int> fixed = parse_int_list(element_params_text);
      AutomorphismGroup g = stabilizer_group(s, fixed);
      OrbitPartition part = orbit_partition(g);
      Json inputs = structure_inputs(s);
      inputs["fixed"] = fixed;
      Json results;
      results["group_order"] = g.order();
      results["orbits"] = part.blocks;
      results["definable_closure"] = definable_closure(s, fixed);
      emit("orbits", inputs, Json::object(), results, {}, {}, t);
    });
  }

  {
    auto* cmd = app.add_subcommand("typical", "typical elements with orbit certificates");
    cmd->add_option("--structure", structure_path)->required();
    cmd->add_option("--params", element_params_text);
    cmd->callback([&] {
      Timer t;
      FiniteStructure s = load();
      std::vector<int> params = parse_int_list(element_params_text);
      Json verdicts = Json::array();
      Json certs = Json::array();
      for (int a = 0; a < s.size(); ++a) {
        TypicalityVerdict v = classify_element(s, a, params);
        verdicts.push_back(to_json(v));
        certs.push_back(Json{{"element", a}, {"orbit", v.certificate_orbit}});
      }
      Json inputs = structure_inputs(s);
      inputs["params"] = params;
      Json results;
      results["typical_set"] = typical_set(s, params);
      results["verdicts"] = std::move(verdicts);
      emit("typical", inputs, Json::object(), results, {}, certs, t);
    });
  }

  {
    auto* cmd = app.add_subcommand("witness", "strict-minority witness formula for an element");
    cmd->add_option("--structure", structure_path)->required();
    cmd->add_option("--element", element)->required();
    cmd->add_option("--params", element_params_text);
    cmd->add_option("--budget", budget);
    cmd->add_option("--exec", exec_text);
    cmd->callback([&] {
      Timer t;
      FiniteStructure s = load();
      std::vector<int> params = parse_int_list(element_params_text);
      EnumOptions opts;
      opts.budget = budget;
      opts.exec = exec_mode();
      std::optional<FormulaRef> w = find_witness(s, element, params, opts);
      Json inputs = structure_inputs(s);
      inputs["element"] = element;
      inputs["params"] = params;
      Json results;
      results["found"] = w.has_value();
      if (w) {
        results["witness"] = render_formula(**w);
        results["extension"] = extension(s, **w, "x", placeholder_valuation(params));
      }
      emit("witness", inputs, Json{{"budget", budget}}, results, {}, {}, t);
    });
  }

  {
    auto* cmd = app.add_subcommand("axioms", "check one axiom on a structure");
    cmd->add_option("--structure", structure_path)->required();
    cmd->add_option("--axiom", axiom_text)->required();
    cmd->add_option("--arity", arity);
    cmd->add_option("--budget", budget);
    cmd->add_option("--formulas", formulas_path);
    cmd->callback([&] {
      Timer t;
      FiniteStructure s = load();
      AxiomId axiom = axiom_from_string(axiom_text);
      AxiomBounds bounds{arity, budget};
      std::vector<SchemeFormula> scheme;
      if (!formulas_path.empty()) scheme = load_scheme_file(formulas_path, s.signature());
      AxiomReport rep = check_axiom(axiom, s, bounds, scheme);
      Json j = to_json(rep);
      Json inputs = structure_inputs(s);
      inputs["axiom"] = to_string(axiom);
      emit("axioms", inputs, j["bounds"], Json{{"verdict", j["verdict"]}, {"report", j}},
           j["violations"], {}, t);
      if (!rep.holds()) exit_code = 1;
    });
  }

  {
    auto* cmd = app.add_subcommand("search", "counterexample search over a structure family");
    cmd->add_option("--axiom", axiom_text)->required();
    cmd->add_option("--family", family_text);
    cmd->add_option("--arity", arity);
    cmd->add_option("--budget", budget);
    cmd->add_option("--exec", exec_text);
    cmd->callback([&] {
      Timer t;
      AxiomId axiom = axiom_from_string(axiom_text);
      StructureFamilySpec family = parse_family_spec(family_text);
      AxiomBounds bounds{arity, budget};
      SearchOutcome out = search_counterexample(axiom, family, bounds, {}, exec_mode());
      Json j = to_json(out);
      Json certificates = Json::array();
      certificates.push_back(Json{{"counts", j["counts"]}, {"verdict", j["verdict"]}});
      Json violations = Json::array();
      if (out.violation) violations.push_back(j["witness"]);
      emit("search", Json{{"axiom", to_string(axiom)}, {"family", j["family"]}}, j["bounds"],
           Json{{"verdict", j["verdict"]}, {"outcome", j}}, violations, certificates, t);
      if (out.violation) exit_code = 1;
    });
  }

  {
    auto* cmd =
        app.add_subcommand("filter-closure", "closure of majority sets under intersection");
    cmd->add_option("--structure", structure_path)->required();
    cmd->add_flag("--definable", definable, "restrict to definable (orbit-union) sets");
    cmd->callback([&] {
      Timer t;
      FiniteStructure s = load();
      AxiomReport rep = check_majority_filter_closure(s, definable);
      Json j = to_json(rep);
      Json inputs = structure_inputs(s);
      inputs["mode"] = definable ? "definable" : "raw";
      emit("filter-closure", inputs, Json::object(),
           Json{{"verdict", j["verdict"]}, {"report", j}}, j["violations"], {}, t);
    });
  }

  {
    auto* cmd = app.add_subcommand("dlo", "dense linear order analysis over (Q,<)");
    cmd->add_option("--params", dlo_params_text, "parameter order, e.g. a1<a2<a3");
    auto* classify_opt = cmd->add_option("--classify", formula_text, "classify a property");
    auto* dich_opt = cmd->add_option("--dichotomy", formula_text)->excludes(classify_opt);
    cmd->add_flag("--typical-elements", typical_elements);
    cmd->add_flag("--eliminate", do_eliminate, "report the quantifier-free form only");
    cmd->callback([&, dich_opt] {
      Timer t;
      ParamConfig cfg = parse_param_config(dlo_params_text);
      Json inputs{{"params", cfg.names}};
      Json results;
      if (typical_elements) {
        results["typical_elements"] = to_json(typical_elements_dlo(cfg), cfg);
      } else if (!formula_text.empty()) {
        FormulaRef f = parse_formula(formula_text, order_signature(), cfg.names);
        inputs["formula"] = render_formula(f);
        if (dich_opt->count() > 0) {
          DichotomyResult d = dichotomy(f);
          results["typical_side"] = d.phi_typical ? "formula" : "negation";
          results["formula_extension"] = to_json(d.phi_extension, cfg);
          results["negation_extension"] = to_json(d.neg_extension, cfg);
        } else if (do_eliminate) {
          results["quantifier_free"] = eliminate_quantifiers(f, cfg).to_text(cfg);
        } else {
          results["classification"] = to_json(classify_property_dlo(f, cfg), cfg);
        }
      } else {
        throw Error("dlo: choose --classify, --dichotomy, or --typical-elements");
      }
      emit("dlo", inputs, Json::object(), results, {}, {}, t);
    });
  }

  {
    auto* cmd = app.add_subcommand("cantor", "exact Cantor-space operations");
    cmd->require_subcommand(1);
    {
      auto* sub = cmd->add_subcommand("join", "interleave two streams");
      sub->add_option("streams", positional)->expected(2);
      sub->callback([&] {
        Timer t;
        EPStream a = EPStream::parse(positional.at(0)), b = EPStream::parse(positional.at(1));
        emit("cantor-join", Json{{"streams", positional}}, Json::object(),
             Json{{"stream", join(a, b).to_text()}}, {}, {}, t);
      });
    }
    {
      auto* sub = cmd->add_subcommand("split", "split into even and odd parts");
      sub->add_option("streams", positional)->expected(1);
      sub->callback([&] {
        Timer t;
        auto [l, r] = split(EPStream::parse(positional.at(0)));
        emit("cantor-split", Json{{"streams", positional}}, Json::object(),
             Json{{"even", l.to_text()}, {"odd", r.to_text()}}, {}, {}, t);
      });
    }
    {
      auto* sub = cmd->add_subcommand("approx-eq", "finite symmetric difference?");
      sub->add_option("streams", positional)->expected(2);
      sub->callback([&] {
        Timer t;
        EPStream a = EPStream::parse(positional.at(0)), b = EPStream::parse(positional.at(1));
        emit("cantor-approx-eq", Json{{"streams", positional}}, Json::object(),
             Json{{"approx_eq", approx_eq(a, b)},
                  {"symmetric_difference", symmetric_difference(a, b).to_text()}},
             {}, {}, t);
      });
    }
    {
      auto* sub = cmd->add_subcommand("closure", "finite-perturbation closure");
      sub->add_option("streams", positional)->expected(-1);
      sub->add_option("--bound", bound);
      sub->callback([&] {
        Timer t;
        std::vector<EPStream> xs;
        for (const std::string& p : positional) xs.push_back(EPStream::parse(p));
        Json streams = Json::array();
        for (const EPStream& s : tailset_closure(xs, bound)) streams.push_back(s.to_text());
        emit("cantor-closure", Json{{"streams", positional}}, Json{{"bound", bound}},
             Json{{"closure", streams}}, {}, {}, t);
      });
    }
    {
      auto* sub = cmd->add_subcommand("code", "code a family of finite sets");
      sub->add_option("sets", positional)->expected(-1);
      sub->callback([&] {
        Timer t;
        std::vector<std::vector<std::uint64_t>> sets;
        for (const std::string& p : positional)
          sets.push_back(EPStream::parse(p).as_finite_set());
        emit("cantor-code", Json{{"sets", positional}}, Json::object(),
             Json{{"code", code_family(sets)}}, {}, {}, t);
      });
    }
    {
      auto* sub = cmd->add_subcommand("project", "project a coded family");
      sub->add_option("code", code_text)->required();
      sub->add_option("--index", proj_index);
      sub->callback([&] {
        Timer t;
        std::vector<std::uint64_t> code = EPStream::parse(code_text).as_finite_set();
        emit("cantor-project", Json{{"code", code_text}, {"index", proj_index}}, Json::object(),
             Json{{"projection", project(code, proj_index)}}, {}, {}, t);
      });
    }
    {
      auto* sub = cmd->add_subcommand("member", "membership in a schnorr test level");
      sub->add_option("stream", stream_text)->required();
      sub->add_option("--level", level);
      sub->callback([&] {
        Timer t;
        EPStream x = EPStream::parse(stream_text);
        emit("cantor-member", Json{{"stream", stream_text}, {"level", level}}, Json::object(),
             Json{{"member", member(x, schnorr_test_level(level))}}, {}, {}, t);
      });
    }
    {
      auto* sub = cmd->add_subcommand("capture", "join with the empty set stays in every level");
      sub->add_option("stream", stream_text)->required();
      sub->add_option("--depth", depth);
      sub->callback([&] {
        Timer t;
        EPStream a = EPStream::parse(stream_text);
        emit("cantor-capture", Json{{"stream", stream_text}, {"depth", depth}}, Json::object(),
             Json{{"captured", capture_check(a, depth)}}, {}, {}, t);
      });
    }
  }

  {
    auto* cmd = app.add_subcommand("schnorr", "the explicit test levels V_n");
    cmd->add_option("--level", level)->required();
    cmd->add_flag("--measure", want_measure);
    cmd->add_flag("--words", want_words);
    cmd->callback([&] {
      Timer t;
      CylinderFamily f = schnorr_test_level(level);
      Json results;
      results["count"] = f.words().size();
      results["word_length"] = 2 * level + 2;
      if (want_measure || !want_words) results["measure"] = measure_of(f).to_text();
      if (want_words) results["words"] = f.words();
      emit("schnorr", Json{{"level", level}}, Json::object(), results, {}, {}, t);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const typlab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
