#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "typlab/enumeration.hpp"
#include "typlab/exec.hpp"
#include "typlab/formula.hpp"
#include "typlab/structure.hpp"

namespace typlab {

enum class AxiomId { T1, T2, T3, T4, T5, T6, Filter };

const char* to_string(AxiomId a);
AxiomId axiom_from_string(const std::string& s);

struct AxiomBounds {
  int arity = 3;   // maximum parameter-tuple length instantiated anywhere
  int budget = 9;  // formula budget, where an axiom consults enumeration
};

enum class AxiomVerdict { Holds, Fails, HoldsWithCaveat };
const char* to_string(AxiomVerdict v);

// One violating instantiation. Interpretation per axiom:
//   T1: params = tuple with empty typical set
//   T2: element a, params = c then b-tuple
//   T3: element a, params = tuple, aux = rearranged tuple
//   T4: element a (== params[0])
//   T5: element a, aux_element b, params = c-tuple
//   T6: formula instance, element = z, params = y-tuple, aux_element = failing x
//   Filter: the two intersecting majority sets
struct AxiomViolation {
  std::optional<int> element;
  std::optional<int> aux_element;
  std::vector<int> params;
  std::vector<int> aux_params;
  std::optional<std::string> formula;        // rendered instance (T6)
  std::vector<std::vector<int>> filter_sets;  // Filter: the failing pair + intersection
};

struct AxiomReport {
  AxiomId axiom = AxiomId::T1;
  std::string structure_id;
  AxiomBounds bounds;
  AxiomVerdict verdict = AxiomVerdict::Holds;
  std::vector<AxiomViolation> violations;
  std::size_t checked_count = 0;
  std::vector<std::string> caveats;

  bool holds() const { return verdict != AxiomVerdict::Fails; }
};

// Per-formula list for the T6 scheme: a formula with free variable x and the
// parameter placeholders it mentions (in instantiation order).
struct SchemeFormula {
  FormulaRef formula;
  std::vector<std::string> params;
};

// Exhaustive check of one axiom at the given bounds. T6 requires a formula
// list; the other axioms ignore it.
AxiomReport check_axiom(AxiomId axiom, const FiniteStructure& s, const AxiomBounds& bounds,
                        const std::vector<SchemeFormula>& scheme = {});

// Closure of majority sets under pairwise intersection. Raw mode quantifies
// over all subsets (n <= 20); definable mode over unions of orbit blocks.
AxiomReport check_majority_filter_closure(const FiniteStructure& s, bool definable_only);

}  // namespace typlab
