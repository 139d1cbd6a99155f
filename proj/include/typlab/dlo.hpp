#pragma once

#include <string>
#include <vector>

#include "typlab/formula.hpp"
#include "typlab/signature.hpp"
#include "typlab/typicality.hpp"

namespace typlab {

// Symbolic parameter points a1 < a2 < ... < ak in the dense linear order
// (Q, <). Only the order type of the parameter set matters.
struct ParamConfig {
  std::vector<std::string> names;  // distinct, in declared ascending order

  int k() const { return static_cast<int>(names.size()); }
  int index_of(const std::string& name) const;  // -1 if absent
};

// "a1<a2<a3" (or a single name, or empty).
ParamConfig parse_param_config(const std::string& text);

// The language of (Q, <): one binary relation `lt`.
Signature order_signature();

// Quantifier-free boolean combination over atoms comparing x with parameter
// points, in positive disjunctive normal form. An empty disjunction is
// false; an empty conjunct is true.
struct QFOrderFormula {
  enum class AtomKind { LessXP, LessPX, EqXP };  // x < a_i, a_i < x, x = a_i
  struct Atom {
    AtomKind kind;
    int param;
    auto operator<=>(const Atom&) const = default;
  };
  using Conjunct = std::vector<Atom>;

  std::vector<Conjunct> disjuncts;
  bool tautology = false;  // set when the DNF collapsed to true

  bool is_true() const { return tautology; }
  bool is_false() const { return !tautology && disjuncts.empty(); }

  // Truth with x placed in region r of the parameter order: region 2i is the
  // open gap below a_{i+1} (gap k is above a_k), region 2i+1 is the point a_{i+1}.
  bool eval_region(int region) const;

  FormulaRef to_formula(const ParamConfig& cfg) const;  // over order_signature()
  std::string to_text(const ParamConfig& cfg) const;
};

// Finite union of parameter points and open intervals with endpoints among
// {-inf, a1..ak, +inf}, kept canonical: intervals disjoint and maximal,
// points not interior to any interval, items sorted left to right.
struct SemiLinearSet {
  int k = 0;
  std::vector<bool> regions;  // 2k+1 presence flags

  struct Item {
    bool is_point;
    int point;       // param index
    int left, right; // interval boundaries: -1 = -inf side, k = +inf side, else param index
  };
  std::vector<Item> items() const;
  std::string to_text(const ParamConfig& cfg) const;

  bool is_all() const;
  bool is_cofinite() const;  // complement contains no interval
  bool operator==(const SemiLinearSet&) const = default;
};

// Literal elimination for dense linear orders without endpoints: innermost
// quantifiers are removed by case analysis on the position of the bound
// variable among the remaining points; Qinf and Qmost (equivalent over a
// countable order) reduce to a guarded universal. The input must be over
// order_signature() with exactly one free variable and parameters from cfg.
QFOrderFormula eliminate_quantifiers(const Formula& f, const ParamConfig& cfg);
inline QFOrderFormula eliminate_quantifiers(const FormulaRef& f, const ParamConfig& cfg) {
  return eliminate_quantifiers(*f, cfg);
}

SemiLinearSet extension_dlo(const QFOrderFormula& qf, const ParamConfig& cfg);

struct DloClassification {
  Verdict verdict = Verdict::NonTypical;  // majority and Frechet agree here
  Verdict majority_verdict = Verdict::NonTypical;
  Verdict frechet_verdict = Verdict::NonTypical;
  QFOrderFormula qf;
  SemiLinearSet extension;
};

// Typical iff the extension is cofinite, i.e. all of Q minus finitely many
// parameter points.
DloClassification classify_property_dlo(const Formula& f, const ParamConfig& cfg);
inline DloClassification classify_property_dlo(const FormulaRef& f, const ParamConfig& cfg) {
  return classify_property_dlo(*f, cfg);
}

// Q minus the parameter points.
SemiLinearSet typical_elements_dlo(const ParamConfig& cfg);

struct DichotomyResult {
  bool phi_typical = false;  // otherwise the negation is typical
  SemiLinearSet phi_extension;
  SemiLinearSet neg_extension;
};

// Over (Q, <) without parameters every property or its negation is typical.
DichotomyResult dichotomy(const Formula& f);
inline DichotomyResult dichotomy(const FormulaRef& f) { return dichotomy(*f); }

}  // namespace typlab
