#include "typlab/dlo.hpp"

#include <algorithm>
#include <map>

#include "typlab/error.hpp"
#include "typlab/parser.hpp"

namespace typlab {

int ParamConfig::index_of(const std::string& name) const {
  for (int i = 0; i < k(); ++i)
    if (names[i] == name) return i;
  return -1;
}

ParamConfig parse_param_config(const std::string& text) {
  ParamConfig cfg;
  if (text.find_first_not_of(" \t") == std::string::npos) return cfg;
  std::string cur;
  auto flush = [&] {
    std::size_t b = cur.find_first_not_of(" \t");
    std::size_t e = cur.find_last_not_of(" \t");
    std::string name = b == std::string::npos ? "" : cur.substr(b, e - b + 1);
    if (!is_identifier(name)) throw Error("invalid parameter name '" + name + "'");
    if (cfg.index_of(name) >= 0) throw Error("duplicate parameter name '" + name + "'");
    cfg.names.push_back(name);
    cur.clear();
  };
  for (char c : text) {
    if (c == '<') flush();
    else cur += c;
  }
  flush();
  return cfg;
}

Signature order_signature() {
  Signature sig;
  sig.add_relation("lt", 2);
  return sig;
}

namespace {

// Point ids during elimination: 0..k-1 are the parameters in order; k is the
// free variable; higher ids are bound variables.
struct Atom {
  bool less;  // else equality
  int a, b;
  auto operator<=>(const Atom&) const = default;
};
using Conj = std::vector<Atom>;
using Dnf = std::vector<Conj>;  // empty = false; conj {} = true

Dnf dnf_true() { return {{}}; }
Dnf dnf_false() { return {}; }

void normalize(Conj& c) {
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
}

Dnf dnf_or(Dnf a, const Dnf& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Dnf dnf_and(const Dnf& a, const Dnf& b) {
  Dnf out;
  for (const Conj& x : a)
    for (const Conj& y : b) {
      Conj c = x;
      c.insert(c.end(), y.begin(), y.end());
      normalize(c);
      out.push_back(std::move(c));
    }
  return out;
}

Dnf atom_neg(const Atom& at) {
  if (at.less) return {{{false, at.a, at.b}}, {{true, at.b, at.a}}};  // a=b or b<a
  return {{{true, at.a, at.b}}, {{true, at.b, at.a}}};               // a<b or b<a
}

Dnf dnf_not(const Dnf& d) {
  Dnf acc = dnf_true();
  for (const Conj& c : d) {
    Dnf neg_c = dnf_false();
    for (const Atom& at : c) neg_c = dnf_or(std::move(neg_c), atom_neg(at));
    if (c.empty()) neg_c = dnf_false();  // negation of true
    acc = dnf_and(acc, neg_c);
    if (acc.empty()) return acc;
  }
  return acc;
}

// Substitutes point `from` by `to` in a conjunct.
void substitute(Conj& c, int from, int to) {
  for (Atom& at : c) {
    if (at.a == from) at.a = to;
    if (at.b == from) at.b = to;
  }
}

// Removes trivial atoms; returns false if the conjunct is contradictory on
// its face (t < t).
bool strip_trivial(Conj& c) {
  Conj out;
  for (const Atom& at : c) {
    if (at.a == at.b) {
      if (at.less) return false;  // t < t
      continue;                   // t = t
    }
    out.push_back(at);
  }
  c = std::move(out);
  normalize(c);
  return true;
}

// One-variable elimination by case analysis on the position of v among the
// remaining points: an equality pins v; otherwise density and the absence of
// endpoints reduce the constraints to lower < upper for every pair.
Dnf eliminate_var(const Conj& conj, int v) {
  Conj c = conj;
  if (!strip_trivial(c)) return dnf_false();
  for (const Atom& at : c) {
    if (!at.less && (at.a == v || at.b == v)) {
      int other = at.a == v ? at.b : at.a;
      Conj sub = c;
      substitute(sub, v, other);
      if (!strip_trivial(sub)) return dnf_false();
      return {sub};
    }
  }
  Conj rest;
  std::vector<int> lower, upper;
  for (const Atom& at : c) {
    if (at.a == v) upper.push_back(at.b);
    else if (at.b == v) lower.push_back(at.a);
    else rest.push_back(at);
  }
  for (int l : lower)
    for (int u : upper) {
      if (l == u) return dnf_false();  // would need l < v < l
      rest.push_back({true, l, u});
    }
  normalize(rest);
  return {rest};
}

Dnf eliminate_exists(const Dnf& d, int v) {
  Dnf out;
  for (const Conj& c : d) out = dnf_or(std::move(out), eliminate_var(c, v));
  return out;
}

std::vector<int> points_of(const Dnf& d, int except) {
  std::vector<int> pts;
  for (const Conj& c : d)
    for (const Atom& at : c) {
      if (at.a != except) pts.push_back(at.a);
      if (at.b != except) pts.push_back(at.b);
    }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

class Eliminator {
 public:
  Eliminator(const ParamConfig& cfg) : cfg_(cfg), next_id_(cfg.k() + 1) {}

  Dnf run(const Formula& f, const std::string& free_var) {
    ids_.clear();
    ids_[free_var] = cfg_.k();
    return elim(f);
  }

 private:
  int point_of(const Term& t) {
    if (t.kind == Term::Kind::Parameter) {
      int i = cfg_.index_of(t.name);
      if (i < 0) throw Error("parameter '" + t.name + "' not in the configuration");
      return i;
    }
    if (t.kind != Term::Kind::Variable)
      throw Error("order formulas admit variables and parameters only");
    auto it = ids_.find(t.name);
    if (it == ids_.end()) throw Error("unbound variable '" + t.name + "'");
    return it->second;
  }

  Dnf elim(const Formula& f) {
    using K = Formula::Kind;
    switch (f.kind) {
      case K::Relation:
        if (f.symbol != "lt")
          throw Error("non-order signature symbol '" + f.symbol + "'");
        return {{{true, point_of(f.terms[0]), point_of(f.terms[1])}}};
      case K::Equal:
        return {{{false, point_of(f.terms[0]), point_of(f.terms[1])}}};
      case K::Not:
        return dnf_not(elim(*f.left));
      case K::And:
        return dnf_and(elim(*f.left), elim(*f.right));
      case K::Or:
        return dnf_or(elim(*f.left), elim(*f.right));
      case K::Implies:
        return dnf_or(dnf_not(elim(*f.left)), elim(*f.right));
      case K::Iff: {
        Dnf l = elim(*f.left), r = elim(*f.right);
        return dnf_or(dnf_and(l, r), dnf_and(dnf_not(l), dnf_not(r)));
      }
      case K::Forall:
      case K::Exists:
      case K::Qmost:
      case K::Qinf: {
        auto saved = ids_.find(f.symbol) != ids_.end()
                         ? std::optional<int>(ids_[f.symbol])
                         : std::nullopt;
        int v = next_id_++;
        ids_[f.symbol] = v;
        Dnf body = elim(*f.left);
        if (saved)
          ids_[f.symbol] = *saved;
        else
          ids_.erase(f.symbol);

        if (f.kind == K::Exists) return eliminate_exists(body, v);
        if (f.kind == K::Forall) return dnf_not(eliminate_exists(dnf_not(body), v));
        // Qinf: the extension along v is a finite union of cells over the
        // other points; it is cofinite iff it contains every open cell, i.e.
        // body holds whenever v avoids all other points. Qmost coincides
        // with Qinf over a countable order.
        Dnf guarded = dnf_not(body);
        Dnf guard = dnf_true();
        for (int u : points_of(body, v)) {
          Dnf ne{{{true, v, u}}, {{true, u, v}}};
          guard = dnf_and(guard, ne);
        }
        return dnf_not(eliminate_exists(dnf_and(guard, std::move(guarded)), v));
      }
    }
    throw Error("eliminate_quantifiers: bad kind");
  }

  const ParamConfig& cfg_;
  std::map<std::string, int> ids_;
  int next_id_;
};

}  // namespace

bool QFOrderFormula::eval_region(int region) const {
  if (tautology) return true;
  for (const Conjunct& c : disjuncts) {
    bool ok = true;
    for (const Atom& at : c) {
      int point_region = 2 * at.param + 1;
      bool val = at.kind == AtomKind::LessXP   ? region < point_region
                 : at.kind == AtomKind::LessPX ? region > point_region
                                               : region == point_region;
      if (!val) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

FormulaRef QFOrderFormula::to_formula(const ParamConfig& cfg) const {
  Term x = Term::variable("x");
  if (tautology) return Formula::equal(x, x);
  if (disjuncts.empty()) return Formula::negation(Formula::equal(x, x));
  FormulaRef out;
  for (const Conjunct& c : disjuncts) {
    FormulaRef conj;
    for (const Atom& at : c) {
      Term p = Term::parameter(cfg.names.at(at.param));
      FormulaRef lit = at.kind == AtomKind::LessXP ? Formula::relation("lt", {x, p})
                       : at.kind == AtomKind::LessPX ? Formula::relation("lt", {p, x})
                                                     : Formula::equal(x, p);
      conj = conj ? Formula::conjunction(conj, lit) : lit;
    }
    if (!conj) conj = Formula::equal(x, x);
    out = out ? Formula::disjunction(out, conj) : conj;
  }
  return out;
}

std::string QFOrderFormula::to_text(const ParamConfig& cfg) const {
  return render_formula(to_formula(cfg));
}

QFOrderFormula eliminate_quantifiers(const Formula& f, const ParamConfig& cfg) {
  FreeVars fv = free_variables(f);
  if (fv.variables.size() != 1)
    throw Error("expected exactly one free variable, got " +
                std::to_string(fv.variables.size()));
  for (const std::string& p : fv.parameters)
    if (cfg.index_of(p) < 0) throw Error("parameter '" + p + "' not in the configuration");

  Eliminator el(cfg);
  Dnf d = el.run(f, *fv.variables.begin());

  const int x = cfg.k();
  QFOrderFormula out;
  std::vector<QFOrderFormula::Conjunct> conjs;
  for (const Conj& c : d) {
    QFOrderFormula::Conjunct qc;
    bool dead = false;
    for (const Atom& at : c) {
      if (at.a > x || at.b > x) throw Error("bound variable escaped elimination");
      if (at.a == x && at.b == x) {
        if (at.less) dead = true;  // x < x
        continue;                  // x = x
      }
      if (at.a < x && at.b < x) {
        bool val = at.less ? at.a < at.b : at.a == at.b;
        if (!val) dead = true;
        continue;
      }
      QFOrderFormula::Atom qa{};
      if (at.a == x) {
        qa.kind = at.less ? QFOrderFormula::AtomKind::LessXP : QFOrderFormula::AtomKind::EqXP;
        qa.param = at.b;
      } else {
        qa.kind = at.less ? QFOrderFormula::AtomKind::LessPX : QFOrderFormula::AtomKind::EqXP;
        qa.param = at.a;
      }
      qc.push_back(qa);
      if (dead) break;
    }
    if (dead) continue;
    std::sort(qc.begin(), qc.end());
    qc.erase(std::unique(qc.begin(), qc.end()), qc.end());
    if (qc.empty()) {
      out.tautology = true;
      out.disjuncts.clear();
      return out;
    }
    conjs.push_back(std::move(qc));
  }
  std::sort(conjs.begin(), conjs.end());
  conjs.erase(std::unique(conjs.begin(), conjs.end()), conjs.end());
  out.disjuncts = std::move(conjs);
  return out;
}

std::vector<SemiLinearSet::Item> SemiLinearSet::items() const {
  std::vector<Item> out;
  int r = 0;
  int total = 2 * k + 1;
  while (r < total) {
    if (!regions[r]) {
      ++r;
      continue;
    }
    int lo = r;
    while (r < total && regions[r]) ++r;
    int hi = r - 1;
    // gaps are even indices; trim leading/trailing points of the run
    int glo = lo % 2 == 0 ? lo : lo + 1;
    int ghi = hi % 2 == 0 ? hi : hi - 1;
    if (glo > hi || ghi < lo) {
      // a lone parameter point
      out.push_back({true, (lo - 1) / 2, 0, 0});
      continue;
    }
    if (lo < glo) out.push_back({true, (lo - 1) / 2, 0, 0});
    Item iv{};
    iv.is_point = false;
    iv.left = glo / 2 - 1;   // -1 encodes -inf
    iv.right = ghi / 2;      // k encodes +inf
    out.push_back(iv);
    if (hi > ghi) out.push_back({true, (hi - 1) / 2, 0, 0});
  }
  return out;
}

std::string SemiLinearSet::to_text(const ParamConfig& cfg) const {
  auto boundary = [&](int b, bool left) {
    if (left && b < 0) return std::string("-inf");
    if (!left && b >= k) return std::string("+inf");
    return cfg.names.at(b);
  };
  std::vector<Item> its = items();
  if (its.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < its.size(); ++i) {
    if (i) out += " u ";
    if (its[i].is_point)
      out += "{" + cfg.names.at(its[i].point) + "}";
    else
      out += "(" + boundary(its[i].left, true) + "," + boundary(its[i].right, false) + ")";
  }
  return out;
}

bool SemiLinearSet::is_all() const {
  for (bool b : regions)
    if (!b) return false;
  return true;
}

bool SemiLinearSet::is_cofinite() const {
  for (int g = 0; g <= k; ++g)
    if (!regions[2 * g]) return false;
  return true;
}

SemiLinearSet extension_dlo(const QFOrderFormula& qf, const ParamConfig& cfg) {
  SemiLinearSet out;
  out.k = cfg.k();
  out.regions.resize(2 * out.k + 1);
  for (int r = 0; r < 2 * out.k + 1; ++r) out.regions[r] = qf.eval_region(r);
  return out;
}

DloClassification classify_property_dlo(const Formula& f, const ParamConfig& cfg) {
  DloClassification out;
  out.qf = eliminate_quantifiers(f, cfg);
  out.extension = extension_dlo(out.qf, cfg);
  // over a countable order the majority filter equals the Frechet filter
  bool typical = out.extension.is_cofinite();
  out.majority_verdict = typical ? Verdict::Typical : Verdict::NonTypical;
  out.frechet_verdict = out.majority_verdict;
  out.verdict = out.majority_verdict;
  return out;
}

SemiLinearSet typical_elements_dlo(const ParamConfig& cfg) {
  SemiLinearSet out;
  out.k = cfg.k();
  out.regions.resize(2 * out.k + 1);
  for (int g = 0; g <= out.k; ++g) out.regions[2 * g] = true;
  return out;
}

DichotomyResult dichotomy(const Formula& f) {
  FreeVars fv = free_variables(f);
  if (!fv.parameters.empty()) throw Error("dichotomy requires a parameter-free property");
  ParamConfig cfg;
  DloClassification phi = classify_property_dlo(f, cfg);
  DloClassification neg = classify_property_dlo(*Formula::negation(
                              std::make_shared<const Formula>(f)), cfg);
  DichotomyResult out;
  out.phi_typical = phi.verdict == Verdict::Typical;
  out.phi_extension = phi.extension;
  out.neg_extension = neg.extension;
  if (out.phi_typical == (neg.verdict == Verdict::Typical))
    throw Error("dichotomy violated, which cannot happen over a dense order");
  return out;
}

}  // namespace typlab
