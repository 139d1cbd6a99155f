#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "typlab/signature.hpp"

namespace typlab {

// A finite L-structure. Elements are 0..n-1; every declared symbol is
// interpreted, function tables are total, and all entries are in range.
class FiniteStructure {
 public:
  FiniteStructure(std::string name, Signature sig, int universe_size);

  const std::string& name() const { return name_; }
  const Signature& signature() const { return sig_; }
  int size() const { return n_; }

  void set_relation(const std::string& rel, std::set<std::vector<int>> tuples);
  // Table indexed by mixed-radix encoding of the argument tuple (base n).
  void set_function(const std::string& fn, std::vector<int> table);
  void set_constant(const std::string& c, int value);

  // Throws Error unless every symbol of the signature is interpreted.
  void validate() const;

  bool holds(const std::string& rel, const std::vector<int>& tuple) const;
  int apply(const std::string& fn, const std::vector<int>& args) const;
  int constant(const std::string& c) const;

  const std::set<std::vector<int>>& relation_tuples(const std::string& rel) const;

 private:
  std::string name_;
  Signature sig_;
  int n_;
  std::map<std::string, std::set<std::vector<int>>> relations_;
  std::map<std::string, std::vector<int>> functions_;
  std::map<std::string, int> constants_;
};

// Parses the line-oriented structure format:
//
//   # comment
//   universe N
//   relation NAME ARITY: (t,...) (t,...) ...
//   function NAME ARITY: a,b -> c ; a,b -> c ; ...
//   constant NAME = a
//
// Rejects non-total function tables, out-of-range elements, and arity
// mismatches.
FiniteStructure load_structure(const std::string& text, const std::string& name = "inline");
FiniteStructure load_structure_file(const std::string& path);

}  // namespace typlab
