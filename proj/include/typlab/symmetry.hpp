#pragma once

#include <vector>

#include "typlab/structure.hpp"

namespace typlab {

// A bijection on 0..n-1 stored as its image array.
using Permutation = std::vector<int>;

// Full listing of the automorphisms of a structure fixing a given element
// list pointwise. Listing is supported for n <= 10 only.
struct AutomorphismGroup {
  int n = 0;
  std::vector<int> fixed;
  std::vector<Permutation> perms;  // lexicographically sorted; contains identity

  std::size_t order() const { return perms.size(); }
};

// Orbits of the pointwise stabilizer. Blocks are ascending element lists,
// sorted by least element; together they partition 0..n-1.
struct OrbitPartition {
  int n = 0;
  std::vector<int> fixed;
  std::vector<std::vector<int>> blocks;

  int block_index_of(int a) const;
  const std::vector<int>& block_of(int a) const { return blocks[block_index_of(a)]; }
};

// Exact Aut(S / fixed) by backtracking with color-refinement pruning.
// Throws Error for out-of-range fixed elements or n > 10.
AutomorphismGroup stabilizer_group(const FiniteStructure& s, const std::vector<int>& fixed);

OrbitPartition orbit_partition(const FiniteStructure& s, const std::vector<int>& fixed);
OrbitPartition orbit_partition(const AutomorphismGroup& g);

// Elements with singleton stabilizer orbits: exactly those with a defining
// formula over the fixed elements. Ascending.
std::vector<int> definable_closure(const FiniteStructure& s, const std::vector<int>& fixed);

}  // namespace typlab
