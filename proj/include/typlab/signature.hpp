#pragma once

#include <map>
#include <optional>
#include <string>

namespace typlab {

// Symbol table of a first-order language: relation and function symbols with
// arities, plus constant symbols. Names are nonempty identifiers and no two
// symbols share a name.
class Signature {
 public:
  void add_relation(const std::string& name, int arity);
  void add_function(const std::string& name, int arity);
  void add_constant(const std::string& name);

  bool has_relation(const std::string& name) const { return relations_.count(name) != 0; }
  bool has_function(const std::string& name) const { return functions_.count(name) != 0; }
  bool has_constant(const std::string& name) const { return constants_.count(name) != 0; }
  bool has_symbol(const std::string& name) const {
    return has_relation(name) || has_function(name) || has_constant(name);
  }

  int relation_arity(const std::string& name) const;
  int function_arity(const std::string& name) const;

  const std::map<std::string, int>& relations() const { return relations_; }
  const std::map<std::string, int>& functions() const { return functions_; }
  const std::map<std::string, bool>& constants() const { return constants_; }

 private:
  void check_fresh(const std::string& name) const;

  std::map<std::string, int> relations_;
  std::map<std::string, int> functions_;
  std::map<std::string, bool> constants_;  // value unused; map keeps names sorted
};

// True iff `s` matches [A-Za-z_][A-Za-z0-9_]* and is not a reserved keyword.
bool is_identifier(const std::string& s);

}  // namespace typlab
