#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "typlab/axioms.hpp"
#include "typlab/exec.hpp"
#include "typlab/structure.hpp"

namespace typlab {

// Families of finite structures enumerated exhaustively: all labeled
// structures of the signature template, deduplicated by canonical form
// (minimum relation encoding over all vertex permutations), so results are
// up to isomorphism.
enum class FamilyKind {
  EmptySignature,  // pure equality structures
  Graphs,          // one symmetric irreflexive binary relation E
  Digraphs,        // one arbitrary binary relation E (loops allowed)
};

const char* to_string(FamilyKind k);
FamilyKind family_kind_from_string(const std::string& s);

struct StructureFamilySpec {
  FamilyKind kind = FamilyKind::Graphs;
  int min_n = 1;
  int max_n = 5;
};

// "KIND:MIN..MAX", e.g. "graphs:1..5".
StructureFamilySpec parse_family_spec(const std::string& text);

struct FamilyCount {
  int n = 0;
  std::uint64_t labeled = 0;        // enumerated
  std::uint64_t labeled_closed_form = 0;
  std::uint64_t canonical = 0;      // up to isomorphism
};

struct SearchOutcome {
  StructureFamilySpec family;
  AxiomId axiom = AxiomId::T5;
  AxiomBounds bounds;
  std::vector<FamilyCount> counts;  // one row per universe size, exhaustive
  // First violation in enumeration order (ascending n, then relation code),
  // or empty for a certified "none up to bound".
  std::optional<std::string> witness_structure;  // structure file text
  std::optional<std::uint64_t> witness_code;
  std::optional<int> witness_n;
  std::optional<AxiomViolation> violation;
};

// Exhaustive counterexample search over the family. The reported witness is
// the minimum in enumeration order regardless of execution mode.
SearchOutcome search_counterexample(AxiomId axiom, const StructureFamilySpec& family,
                                    const AxiomBounds& bounds,
                                    const std::vector<SchemeFormula>& scheme = {},
                                    ExecMode exec = ExecMode::Parallel);

// Builds the labeled structure of the family with the given relation code.
FiniteStructure family_structure(FamilyKind kind, int n, std::uint64_t code);

std::uint64_t family_code_count(FamilyKind kind, int n);  // closed form

}  // namespace typlab
