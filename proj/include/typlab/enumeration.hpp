#pragma once

#include <optional>
#include <vector>

#include "typlab/exec.hpp"
#include "typlab/formula.hpp"
#include "typlab/structure.hpp"

namespace typlab {

struct EnumOptions {
  int budget = 9;    // max formula AST size (terms are free)
  int max_vars = 3;  // variable pool: x plus max_vars-1 bound variables
  ExecMode exec = ExecMode::Parallel;
};

// All distinct extensions of one-free-variable formulas of AST size <=
// budget over the given parameter elements (placeholders p0, p1, ...).
// Atom arguments range over pool variables, parameters, constants, and
// depth-1 function applications. Output is lexicographically sorted;
// enumeration is deterministic and independent of the execution mode.
std::vector<std::vector<int>> enumerate_definable_sets(const FiniteStructure& s,
                                                       const std::vector<int>& params,
                                                       const EnumOptions& opts = {});

// First enumerated formula (by size, then production order) whose extension
// contains `a` and is a strict minority (2*|X| < n). A witness certifies
// that `a` is not typical over the parameters.
std::optional<FormulaRef> find_witness(const FiniteStructure& s, int a,
                                       const std::vector<int>& params,
                                       const EnumOptions& opts = {});

}  // namespace typlab
