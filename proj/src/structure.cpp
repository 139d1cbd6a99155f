#include "typlab/structure.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "typlab/error.hpp"

namespace typlab {

FiniteStructure::FiniteStructure(std::string name, Signature sig, int universe_size)
    : name_(std::move(name)), sig_(std::move(sig)), n_(universe_size) {
  if (n_ < 1) throw Error("universe size must be at least 1");
}

static std::size_t table_size(int n, int arity) {
  std::size_t s = 1;
  for (int i = 0; i < arity; ++i) s *= static_cast<std::size_t>(n);
  return s;
}

void FiniteStructure::set_relation(const std::string& rel, std::set<std::vector<int>> tuples) {
  int arity = sig_.relation_arity(rel);
  for (const auto& t : tuples) {
    if (static_cast<int>(t.size()) != arity)
      throw Error("tuple arity mismatch for relation '" + rel + "'");
    for (int e : t)
      if (e < 0 || e >= n_)
        throw Error("element " + std::to_string(e) + " out of range in relation '" + rel + "'");
  }
  relations_[rel] = std::move(tuples);
}

void FiniteStructure::set_function(const std::string& fn, std::vector<int> table) {
  int arity = sig_.function_arity(fn);
  if (table.size() != table_size(n_, arity))
    throw Error("function '" + fn + "' table is not total");
  for (int e : table)
    if (e < 0 || e >= n_)
      throw Error("element " + std::to_string(e) + " out of range in function '" + fn + "'");
  functions_[fn] = std::move(table);
}

void FiniteStructure::set_constant(const std::string& c, int value) {
  if (!sig_.has_constant(c)) throw Error("unknown constant '" + c + "'");
  if (value < 0 || value >= n_)
    throw Error("element " + std::to_string(value) + " out of range for constant '" + c + "'");
  constants_[c] = value;
}

void FiniteStructure::validate() const {
  for (const auto& [r, arity] : sig_.relations()) {
    (void)arity;
    if (!relations_.count(r)) throw Error("relation '" + r + "' not interpreted");
  }
  for (const auto& [f, arity] : sig_.functions()) {
    (void)arity;
    if (!functions_.count(f)) throw Error("function '" + f + "' not interpreted");
  }
  for (const auto& [c, unused] : sig_.constants()) {
    (void)unused;
    if (!constants_.count(c)) throw Error("constant '" + c + "' not interpreted");
  }
}

bool FiniteStructure::holds(const std::string& rel, const std::vector<int>& tuple) const {
  auto it = relations_.find(rel);
  if (it == relations_.end()) throw Error("relation '" + rel + "' not interpreted");
  return it->second.count(tuple) != 0;
}

int FiniteStructure::apply(const std::string& fn, const std::vector<int>& args) const {
  auto it = functions_.find(fn);
  if (it == functions_.end()) throw Error("function '" + fn + "' not interpreted");
  std::size_t idx = 0;
  for (int a : args) idx = idx * static_cast<std::size_t>(n_) + static_cast<std::size_t>(a);
  return it->second[idx];
}

int FiniteStructure::constant(const std::string& c) const {
  auto it = constants_.find(c);
  if (it == constants_.end()) throw Error("constant '" + c + "' not interpreted");
  return it->second;
}

const std::set<std::vector<int>>& FiniteStructure::relation_tuples(const std::string& rel) const {
  auto it = relations_.find(rel);
  if (it == relations_.end()) throw Error("relation '" + rel + "' not interpreted");
  return it->second;
}

namespace {

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw Error("");
    return v;
  } catch (...) {
    throw Error("expected integer for " + what + ", got '" + s + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(strip(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(strip(cur));
  return out;
}

std::vector<int> parse_tuple_body(const std::string& body, int arity, const std::string& rel) {
  std::vector<int> tuple;
  if (!strip(body).empty())
    for (const std::string& f : split(body, ',')) tuple.push_back(parse_int(f, "tuple entry"));
  if (static_cast<int>(tuple.size()) != arity)
    throw Error("tuple arity mismatch for relation '" + rel + "'");
  return tuple;
}

}  // namespace

FiniteStructure load_structure(const std::string& text, const std::string& name) {
  std::istringstream in(text);
  std::string line;

  struct RelDecl {
    int arity;
    std::set<std::vector<int>> tuples;
  };
  struct FnDecl {
    int arity;
    std::map<std::vector<int>, int> rows;
  };
  int n = -1;
  Signature sig;
  std::map<std::string, RelDecl> rels;
  std::map<std::string, FnDecl> fns;
  std::map<std::string, int> consts;
  int lineno = 0;

  auto fail = [&](const std::string& msg) {
    throw Error("structure '" + name + "' line " + std::to_string(lineno) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;

    std::istringstream ls(line);
    std::string head;
    ls >> head;

    if (head == "universe") {
      std::string rest;
      std::getline(ls, rest);
      n = parse_int(strip(rest), "universe size");
      if (n < 1) fail("universe size must be at least 1");
      continue;
    }
    if (n < 0) fail("'universe N' must come first");

    if (head == "relation" || head == "function") {
      std::string sym, arity_tok;
      ls >> sym >> arity_tok;
      if (!arity_tok.empty() && arity_tok.back() == ':') arity_tok.pop_back();
      int arity = parse_int(arity_tok, "arity");
      std::string rest;
      std::getline(ls, rest);
      rest = strip(rest);
      if (!rest.empty() && rest.front() == ':') rest = strip(rest.substr(1));

      if (head == "relation") {
        try {
          sig.add_relation(sym, arity);
        } catch (const Error& e) {
          fail(e.what());
        }
        RelDecl decl{arity, {}};
        std::size_t i = 0;
        while (i < rest.size()) {
          if (std::isspace(static_cast<unsigned char>(rest[i]))) {
            ++i;
            continue;
          }
          if (rest[i] != '(') fail("expected '(' in tuple list");
          std::size_t close = rest.find(')', i);
          if (close == std::string::npos) fail("unterminated tuple");
          std::vector<int> tuple = parse_tuple_body(rest.substr(i + 1, close - i - 1), arity, sym);
          for (int e : tuple)
            if (e < 0 || e >= n) fail("element " + std::to_string(e) + " out of range");
          decl.tuples.insert(std::move(tuple));
          i = close + 1;
        }
        rels[sym] = std::move(decl);
      } else {
        try {
          sig.add_function(sym, arity);
        } catch (const Error& e) {
          fail(e.what());
        }
        FnDecl decl{arity, {}};
        if (!rest.empty()) {
          for (const std::string& row : split(rest, ';')) {
            if (row.empty()) continue;
            std::size_t arrow = row.find("->");
            if (arrow == std::string::npos) fail("expected '->' in function row");
            std::string lhs = strip(row.substr(0, arrow));
            std::string rhs = strip(row.substr(arrow + 2));
            std::vector<int> args;
            if (!lhs.empty())
              for (const std::string& f : split(lhs, ',')) args.push_back(parse_int(f, "argument"));
            if (static_cast<int>(args.size()) != arity)
              fail("function '" + sym + "' row arity mismatch");
            int val = parse_int(rhs, "function value");
            for (int e : args)
              if (e < 0 || e >= n) fail("element " + std::to_string(e) + " out of range");
            if (val < 0 || val >= n) fail("element " + std::to_string(val) + " out of range");
            if (decl.rows.count(args)) fail("duplicate function row");
            decl.rows[args] = val;
          }
        }
        fns[sym] = std::move(decl);
      }
      continue;
    }

    if (head == "constant") {
      std::string sym, eq, val;
      ls >> sym >> eq >> val;
      if (eq != "=") fail("expected 'constant NAME = a'");
      try {
        sig.add_constant(sym);
      } catch (const Error& e) {
        fail(e.what());
      }
      int v = parse_int(val, "constant value");
      if (v < 0 || v >= n) fail("element " + std::to_string(v) + " out of range");
      consts[sym] = v;
      continue;
    }

    fail("unknown directive '" + head + "'");
  }

  if (n < 0) throw Error("structure '" + name + "': missing 'universe N'");

  FiniteStructure s(name, sig, n);
  for (auto& [r, decl] : rels) s.set_relation(r, std::move(decl.tuples));
  for (auto& [f, decl] : fns) {
    std::vector<int> table(table_size(n, decl.arity), -1);
    for (const auto& [args, val] : decl.rows) {
      std::size_t idx = 0;
      for (int a : args) idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(a);
      table[idx] = val;
    }
    for (int v : table)
      if (v < 0) throw Error("structure '" + name + "': function '" + f + "' is not total");
    s.set_function(f, std::move(table));
  }
  for (const auto& [c, v] : consts) s.set_constant(c, v);
  s.validate();
  return s;
}

FiniteStructure load_structure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open structure file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  std::string base = path;
  std::size_t slash = base.find_last_of("/\\");
  if (slash != std::string::npos) base = base.substr(slash + 1);
  std::size_t dot = base.find_last_of('.');
  if (dot != std::string::npos && dot > 0) base = base.substr(0, dot);
  return load_structure(ss.str(), base);
}

}  // namespace typlab
