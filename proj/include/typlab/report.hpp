#pragma once

#include <string>

#include <json.hpp>

#include "typlab/axioms.hpp"
#include "typlab/cantor.hpp"
#include "typlab/dlo.hpp"
#include "typlab/family.hpp"
#include "typlab/typicality.hpp"

namespace typlab {

using Json = nlohmann::ordered_json;

inline const char* kToolVersion = "0.1.0";

// Report envelope shared by every subcommand. The comparable section is the
// whole object minus "timing"; identical inputs and budgets produce
// byte-identical comparable sections.
Json make_report(const std::string& command, Json inputs, Json budgets, Json results,
                 Json violations, Json certificates, double elapsed_ms);

Json to_json(const PropertyClassification& c);
Json to_json(const TypicalityVerdict& v);
Json to_json(const AxiomViolation& v);
Json to_json(const AxiomReport& r);
Json to_json(const SearchOutcome& o);
Json to_json(const SemiLinearSet& s, const ParamConfig& cfg);
Json to_json(const DloClassification& c, const ParamConfig& cfg);

// The comparable section: the report with "timing" removed, dumped with
// 2-space indentation and a trailing newline.
std::string comparable_dump(Json report);

}  // namespace typlab
