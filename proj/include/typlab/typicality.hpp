#pragma once

#include <optional>
#include <string>
#include <vector>

#include "typlab/eval.hpp"
#include "typlab/formula.hpp"
#include "typlab/structure.hpp"
#include "typlab/symmetry.hpp"

namespace typlab {

enum class FilterMode { Majority, Frechet };

enum class Verdict { Typical, NonTypical };

inline const char* to_string(Verdict v) {
  return v == Verdict::Typical ? "typical" : "non-typical";
}
inline const char* to_string(FilterMode m) {
  return m == FilterMode::Majority ? "majority" : "frechet";
}

struct PropertyClassification {
  std::vector<int> extension;  // ascending
  int complement_size = 0;
  Verdict verdict = Verdict::NonTypical;
  FilterMode mode = FilterMode::Majority;
};

// Verdict for one element with its orbit certificate: the stabilizer orbit
// of the element, typical iff 2*|orbit| >= n.
struct TypicalityVerdict {
  int element = 0;
  std::vector<int> params;
  Verdict verdict = Verdict::NonTypical;
  std::vector<int> certificate_orbit;  // ascending
  std::optional<FormulaRef> witness;   // strict-minority formula, when requested
};

// Applies the filter test to the extension of f (one free variable; v covers
// the parameters). Majority: |ext| > |complement|. Frechet: complement
// finite, hence constant true on finite structures.
PropertyClassification classify_property(const FiniteStructure& s, const Formula& f,
                                         const Valuation& v, FilterMode mode);
PropertyClassification classify_property(const FiniteStructure& s, const FormulaRef& f,
                                         const Valuation& v, FilterMode mode);

// Typical iff 2*|orbit of a under the pointwise stabilizer of params| >= n.
// The tie 2*|orbit| = n counts as typical: no definable strict minority can
// contain the element.
TypicalityVerdict classify_element(const FiniteStructure& s, int a,
                                   const std::vector<int>& params);

// { a : classify_element(s, a, params) is typical }, ascending.
std::vector<int> typical_set(const FiniteStructure& s, const std::vector<int>& params);

}  // namespace typlab
