#include "typlab/signature.hpp"

#include <array>
#include <cctype>

#include "typlab/error.hpp"

namespace typlab {

namespace {
constexpr std::array<const char*, 4> kKeywords = {"forall", "exists", "Qmost", "Qinf"};
}

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  for (const char* kw : kKeywords)
    if (s == kw) return false;
  return true;
}

void Signature::check_fresh(const std::string& name) const {
  if (!is_identifier(name)) throw Error("invalid symbol name '" + name + "'");
  if (has_symbol(name)) throw Error("duplicate symbol name '" + name + "'");
}

void Signature::add_relation(const std::string& name, int arity) {
  check_fresh(name);
  if (arity < 0) throw Error("negative arity for relation '" + name + "'");
  relations_[name] = arity;
}

void Signature::add_function(const std::string& name, int arity) {
  check_fresh(name);
  if (arity < 0) throw Error("negative arity for function '" + name + "'");
  functions_[name] = arity;
}

void Signature::add_constant(const std::string& name) {
  check_fresh(name);
  constants_[name] = true;
}

int Signature::relation_arity(const std::string& name) const {
  auto it = relations_.find(name);
  if (it == relations_.end()) throw Error("unknown relation '" + name + "'");
  return it->second;
}

int Signature::function_arity(const std::string& name) const {
  auto it = functions_.find(name);
  if (it == functions_.end()) throw Error("unknown function '" + name + "'");
  return it->second;
}

}  // namespace typlab
