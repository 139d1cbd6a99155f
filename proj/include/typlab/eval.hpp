#pragma once

#include <map>
#include <string>
#include <vector>

#include "typlab/formula.hpp"
#include "typlab/structure.hpp"

namespace typlab {

// Assignment of elements to variable and parameter names. Must cover all
// free names of any formula it is used with.
using Valuation = std::map<std::string, int>;

// Tarskian truth. Qmost v. phi holds iff the extension of phi along v is a
// strict majority; Qinf v. phi holds iff the complement of that extension is
// finite, which on a finite structure is every formula.
bool evaluate(const FiniteStructure& s, const Formula& f, const Valuation& v);
inline bool evaluate(const FiniteStructure& s, const FormulaRef& f, const Valuation& v) {
  return evaluate(s, *f, v);
}

// { a in M : evaluate(s, f, v[x:=a]) }, ascending.
std::vector<int> extension(const FiniteStructure& s, const Formula& f, const std::string& x,
                           const Valuation& v);
inline std::vector<int> extension(const FiniteStructure& s, const FormulaRef& f,
                                  const std::string& x, const Valuation& v) {
  return extension(s, *f, x, v);
}

int evaluate_term(const FiniteStructure& s, const Term& t, const Valuation& v);

}  // namespace typlab
