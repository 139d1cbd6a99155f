#pragma once

#include <string>
#include <vector>

#include "typlab/formula.hpp"
#include "typlab/signature.hpp"

namespace typlab {

// Parses the ASCII formula grammar:
//
//   formula := iff
//   iff     := imp ("<->" imp)*
//   imp     := or ("->" or)*
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := "!" unary | quant | atom | "(" formula ")"
//   quant   := ("forall"|"exists"|"Qmost"|"Qinf") ident formula
//   atom    := ident "(" term ("," term)* ")" | term ("="|"!=") term
//   term    := ident | ident "(" term ("," term)* ")"
//
// Chained binary connectives fold left. "t1 != t2" desugars to "!(t1 = t2)".
// Identifiers listed in `params` become parameter placeholders; other free
// identifiers are variables. Throws ParseError on unknown symbols, arity
// mismatches, quantification over a parameter name, and malformed syntax.
FormulaRef parse_formula(const std::string& text, const Signature& sig,
                         const std::vector<std::string>& params = {});

// Canonical printer. Output re-parses (with the same signature and parameter
// list) to an AST equal to the input.
std::string render_formula(const Formula& f);
inline std::string render_formula(const FormulaRef& f) { return render_formula(*f); }
std::string render_term(const Term& t);

}  // namespace typlab
