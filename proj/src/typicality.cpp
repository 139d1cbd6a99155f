#include "typlab/typicality.hpp"

#include <algorithm>

#include "typlab/error.hpp"

namespace typlab {

PropertyClassification classify_property(const FiniteStructure& s, const Formula& f,
                                         const Valuation& v, FilterMode mode) {
  FreeVars fv = free_variables(f);
  if (fv.variables.size() != 1)
    throw Error("classify_property: formula must have exactly one free variable");
  const std::string& x = *fv.variables.begin();
  for (const std::string& p : fv.parameters)
    if (!v.count(p)) throw Error("classify_property: uncovered parameter '" + p + "'");

  PropertyClassification out;
  out.mode = mode;
  out.extension = extension(s, f, x, v);
  out.complement_size = s.size() - static_cast<int>(out.extension.size());
  bool typical = mode == FilterMode::Majority
                     ? static_cast<int>(out.extension.size()) > out.complement_size
                     : true;  // complement of any subset of a finite universe is finite
  out.verdict = typical ? Verdict::Typical : Verdict::NonTypical;
  return out;
}

PropertyClassification classify_property(const FiniteStructure& s, const FormulaRef& f,
                                         const Valuation& v, FilterMode mode) {
  return classify_property(s, *f, v, mode);
}

TypicalityVerdict classify_element(const FiniteStructure& s, int a,
                                   const std::vector<int>& params) {
  if (a < 0 || a >= s.size()) throw Error("element " + std::to_string(a) + " out of range");
  for (int p : params)
    if (p < 0 || p >= s.size()) throw Error("parameter " + std::to_string(p) + " out of range");

  OrbitPartition part = orbit_partition(s, params);
  TypicalityVerdict out;
  out.element = a;
  out.params = params;
  out.certificate_orbit = part.block_of(a);
  out.verdict = 2 * static_cast<int>(out.certificate_orbit.size()) >= s.size()
                    ? Verdict::Typical
                    : Verdict::NonTypical;
  return out;
}

std::vector<int> typical_set(const FiniteStructure& s, const std::vector<int>& params) {
  OrbitPartition part = orbit_partition(s, params);
  std::vector<int> out;
  for (const auto& blk : part.blocks)
    if (2 * static_cast<int>(blk.size()) >= s.size())
      out.insert(out.end(), blk.begin(), blk.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace typlab
