#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace typlab {

// First-order terms. Parameter placeholders are a distinct kind: they name
// externally supplied elements and are never bound by quantifiers.
struct Term {
  enum class Kind { Variable, Constant, Parameter, Apply };

  Kind kind = Kind::Variable;
  std::string name;
  std::vector<Term> args;  // Apply only

  static Term variable(std::string n) { return {Kind::Variable, std::move(n), {}}; }
  static Term constant(std::string n) { return {Kind::Constant, std::move(n), {}}; }
  static Term parameter(std::string n) { return {Kind::Parameter, std::move(n), {}}; }
  static Term apply(std::string n, std::vector<Term> a) {
    return {Kind::Apply, std::move(n), std::move(a)};
  }
};

bool operator==(const Term& a, const Term& b);
inline bool operator!=(const Term& a, const Term& b) { return !(a == b); }

class Formula;
using FormulaRef = std::shared_ptr<const Formula>;

// Immutable formula AST. "!=" is surface syntax only and desugars to Not(Equal).
class Formula {
 public:
  enum class Kind {
    Relation,  // symbol + terms
    Equal,     // terms[0] = terms[1]
    Not,
    And,
    Or,
    Implies,
    Iff,
    Forall,  // symbol = bound variable, left = body
    Exists,
    Qmost,
    Qinf,
  };

  Kind kind;
  std::string symbol;       // relation name or bound variable
  std::vector<Term> terms;  // Relation / Equal
  FormulaRef left, right;

  static FormulaRef relation(std::string name, std::vector<Term> ts);
  static FormulaRef equal(Term a, Term b);
  static FormulaRef negation(FormulaRef f);
  static FormulaRef conjunction(FormulaRef l, FormulaRef r);
  static FormulaRef disjunction(FormulaRef l, FormulaRef r);
  static FormulaRef implication(FormulaRef l, FormulaRef r);
  static FormulaRef biconditional(FormulaRef l, FormulaRef r);
  static FormulaRef quantifier(Kind k, std::string var, FormulaRef body);

  bool is_quantifier() const {
    return kind == Kind::Forall || kind == Kind::Exists || kind == Kind::Qmost ||
           kind == Kind::Qinf;
  }
  bool is_binary() const {
    return kind == Kind::And || kind == Kind::Or || kind == Kind::Implies || kind == Kind::Iff;
  }

 private:
  Formula() = default;
  friend FormulaRef make_formula(Formula f);
};

bool operator==(const Formula& a, const Formula& b);
inline bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
inline bool equal_formulas(const FormulaRef& a, const FormulaRef& b) {
  return a == b || (a && b && *a == *b);
}

// Number of formula nodes; terms do not contribute.
int ast_size(const Formula& f);
inline int ast_size(const FormulaRef& f) { return ast_size(*f); }

struct FreeVars {
  std::set<std::string> variables;
  std::set<std::string> parameters;
};

// Free variables and parameter placeholders with a free occurrence.
FreeVars free_variables(const Formula& f);
inline FreeVars free_variables(const FormulaRef& f) { return free_variables(*f); }

// phi_params(x) := (x != a1) & ... & (x != an), left-folded.
// Throws Error if params is empty, contains duplicates, or contains the
// free-variable name itself.
FormulaRef distinctness_formula(const std::vector<std::string>& params,
                                const std::string& free_var = "x");

}  // namespace typlab
