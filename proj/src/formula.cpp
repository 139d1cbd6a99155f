#include "typlab/formula.hpp"

#include <algorithm>

#include "typlab/error.hpp"

namespace typlab {

bool operator==(const Term& a, const Term& b) {
  return a.kind == b.kind && a.name == b.name && a.args == b.args;
}

FormulaRef make_formula(Formula f) { return std::make_shared<const Formula>(std::move(f)); }

FormulaRef Formula::relation(std::string name, std::vector<Term> ts) {
  Formula f;
  f.kind = Kind::Relation;
  f.symbol = std::move(name);
  f.terms = std::move(ts);
  return make_formula(std::move(f));
}

FormulaRef Formula::equal(Term a, Term b) {
  Formula f;
  f.kind = Kind::Equal;
  f.terms = {std::move(a), std::move(b)};
  return make_formula(std::move(f));
}

FormulaRef Formula::negation(FormulaRef child) {
  Formula f;
  f.kind = Kind::Not;
  f.left = std::move(child);
  return make_formula(std::move(f));
}

static FormulaRef binary(Formula::Kind k, FormulaRef l, FormulaRef r) {
  Formula f;
  f.kind = k;
  f.left = std::move(l);
  f.right = std::move(r);
  return make_formula(std::move(f));
}

FormulaRef Formula::conjunction(FormulaRef l, FormulaRef r) {
  return binary(Kind::And, std::move(l), std::move(r));
}
FormulaRef Formula::disjunction(FormulaRef l, FormulaRef r) {
  return binary(Kind::Or, std::move(l), std::move(r));
}
FormulaRef Formula::implication(FormulaRef l, FormulaRef r) {
  return binary(Kind::Implies, std::move(l), std::move(r));
}
FormulaRef Formula::biconditional(FormulaRef l, FormulaRef r) {
  return binary(Kind::Iff, std::move(l), std::move(r));
}

FormulaRef Formula::quantifier(Kind k, std::string var, FormulaRef body) {
  Formula f;
  f.kind = k;
  f.symbol = std::move(var);
  f.left = std::move(body);
  return make_formula(std::move(f));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.kind != b.kind || a.symbol != b.symbol || a.terms != b.terms) return false;
  if (!equal_formulas(a.left, b.left)) return false;
  return equal_formulas(a.right, b.right);
}

int ast_size(const Formula& f) {
  int s = 1;
  if (f.left) s += ast_size(*f.left);
  if (f.right) s += ast_size(*f.right);
  return s;
}

static void collect_term_vars(const Term& t, std::set<std::string>& vars,
                              std::set<std::string>& params,
                              const std::set<std::string>& bound) {
  switch (t.kind) {
    case Term::Kind::Variable:
      if (!bound.count(t.name)) vars.insert(t.name);
      break;
    case Term::Kind::Parameter:
      params.insert(t.name);
      break;
    case Term::Kind::Constant:
      break;
    case Term::Kind::Apply:
      for (const Term& a : t.args) collect_term_vars(a, vars, params, bound);
      break;
  }
}

static void collect_free(const Formula& f, std::set<std::string>& vars,
                         std::set<std::string>& params, std::set<std::string>& bound) {
  for (const Term& t : f.terms) collect_term_vars(t, vars, params, bound);
  if (f.is_quantifier()) {
    bool fresh = bound.insert(f.symbol).second;
    collect_free(*f.left, vars, params, bound);
    if (fresh) bound.erase(f.symbol);
    return;
  }
  if (f.left) collect_free(*f.left, vars, params, bound);
  if (f.right) collect_free(*f.right, vars, params, bound);
}

FreeVars free_variables(const Formula& f) {
  FreeVars out;
  std::set<std::string> bound;
  collect_free(f, out.variables, out.parameters, bound);
  return out;
}

FormulaRef distinctness_formula(const std::vector<std::string>& params,
                                const std::string& free_var) {
  if (params.empty()) throw Error("distinctness_formula: empty parameter list");
  std::vector<std::string> seen;
  for (const std::string& p : params) {
    if (p == free_var)
      throw Error("distinctness_formula: parameter collides with free variable '" + p + "'");
    if (std::find(seen.begin(), seen.end(), p) != seen.end())
      throw Error("distinctness_formula: duplicate parameter '" + p + "'");
    seen.push_back(p);
  }
  FormulaRef acc;
  for (const std::string& p : params) {
    FormulaRef lit =
        Formula::negation(Formula::equal(Term::variable(free_var), Term::parameter(p)));
    acc = acc ? Formula::conjunction(acc, lit) : lit;
  }
  return acc;
}

}  // namespace typlab
