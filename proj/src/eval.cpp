#include "typlab/eval.hpp"

#include "typlab/error.hpp"

namespace typlab {

int evaluate_term(const FiniteStructure& s, const Term& t, const Valuation& v) {
  switch (t.kind) {
    case Term::Kind::Variable:
    case Term::Kind::Parameter: {
      auto it = v.find(t.name);
      if (it == v.end()) throw Error("uncovered free name '" + t.name + "'");
      return it->second;
    }
    case Term::Kind::Constant:
      return s.constant(t.name);
    case Term::Kind::Apply: {
      std::vector<int> args;
      args.reserve(t.args.size());
      for (const Term& a : t.args) args.push_back(evaluate_term(s, a, v));
      return s.apply(t.name, args);
    }
  }
  throw Error("evaluate_term: bad kind");
}

static bool eval_rec(const FiniteStructure& s, const Formula& f, Valuation& v) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::Relation: {
      std::vector<int> tuple;
      tuple.reserve(f.terms.size());
      for (const Term& t : f.terms) tuple.push_back(evaluate_term(s, t, v));
      return s.holds(f.symbol, tuple);
    }
    case K::Equal:
      return evaluate_term(s, f.terms[0], v) == evaluate_term(s, f.terms[1], v);
    case K::Not:
      return !eval_rec(s, *f.left, v);
    case K::And:
      return eval_rec(s, *f.left, v) && eval_rec(s, *f.right, v);
    case K::Or:
      return eval_rec(s, *f.left, v) || eval_rec(s, *f.right, v);
    case K::Implies:
      return !eval_rec(s, *f.left, v) || eval_rec(s, *f.right, v);
    case K::Iff:
      return eval_rec(s, *f.left, v) == eval_rec(s, *f.right, v);
    case K::Forall:
    case K::Exists:
    case K::Qmost:
    case K::Qinf: {
      int n = s.size();
      int count = 0;
      auto it = v.find(f.symbol);
      bool had = it != v.end();
      int saved = had ? it->second : 0;
      for (int m = 0; m < n; ++m) {
        v[f.symbol] = m;
        if (eval_rec(s, *f.left, v)) ++count;
      }
      if (had)
        v[f.symbol] = saved;
      else
        v.erase(f.symbol);
      switch (f.kind) {
        case K::Forall: return count == n;
        case K::Exists: return count > 0;
        case K::Qmost: return 2 * count > n;
        // Complement of any subset of a finite universe is finite.
        case K::Qinf: return true;
        default: break;
      }
    }
  }
  throw Error("evaluate: bad kind");
}

bool evaluate(const FiniteStructure& s, const Formula& f, const Valuation& v) {
  Valuation scratch = v;
  return eval_rec(s, f, scratch);
}

std::vector<int> extension(const FiniteStructure& s, const Formula& f, const std::string& x,
                           const Valuation& v) {
  std::vector<int> out;
  Valuation scratch = v;
  for (int a = 0; a < s.size(); ++a) {
    scratch[x] = a;
    if (eval_rec(s, f, scratch)) out.push_back(a);
  }
  return out;
}

}  // namespace typlab
