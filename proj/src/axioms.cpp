#include "typlab/axioms.hpp"

#include <algorithm>
#include <map>

#include "typlab/error.hpp"
#include "typlab/eval.hpp"
#include "typlab/parser.hpp"
#include "typlab/symmetry.hpp"
#include "typlab/typicality.hpp"

namespace typlab {

const char* to_string(AxiomId a) {
  switch (a) {
    case AxiomId::T1: return "T1";
    case AxiomId::T2: return "T2";
    case AxiomId::T3: return "T3";
    case AxiomId::T4: return "T4";
    case AxiomId::T5: return "T5";
    case AxiomId::T6: return "T6";
    case AxiomId::Filter: return "FILTER";
  }
  return "?";
}

AxiomId axiom_from_string(const std::string& s) {
  for (AxiomId a : {AxiomId::T1, AxiomId::T2, AxiomId::T3, AxiomId::T4, AxiomId::T5, AxiomId::T6,
                    AxiomId::Filter})
    if (s == to_string(a)) return a;
  throw Error("unknown axiom '" + s + "'");
}

const char* to_string(AxiomVerdict v) {
  switch (v) {
    case AxiomVerdict::Holds: return "holds";
    case AxiomVerdict::Fails: return "fails";
    case AxiomVerdict::HoldsWithCaveat: return "holds-with-caveat";
  }
  return "?";
}

namespace {

// Caches orbit partitions per fixed set; the pointwise stabilizer depends
// only on the set of parameters.
class TpOracle {
 public:
  explicit TpOracle(const FiniteStructure& s) : s_(s) {}

  bool typical(int a, const std::vector<int>& params) {
    std::vector<int> key = params;
    std::sort(key.begin(), key.end());
    key.erase(std::unique(key.begin(), key.end()), key.end());
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, orbit_partition(s_, key)).first;
    return 2 * static_cast<int>(it->second.block_of(a).size()) >= s_.size();
  }

 private:
  const FiniteStructure& s_;
  std::map<std::vector<int>, OrbitPartition> cache_;
};

// Ascending mixed-radix enumeration of M^k for k = lo..hi.
template <typename F>
void for_each_tuple(int n, int lo, int hi, F&& fn) {
  for (int k = lo; k <= hi; ++k) {
    std::vector<int> t(k, 0);
    while (true) {
      fn(t);
      int i = k - 1;
      for (; i >= 0; --i) {
        if (++t[i] < n) break;
        t[i] = 0;
      }
      if (i < 0) break;
    }
  }
}

constexpr std::size_t kMaxViolations = 1000;

void add_violation(AxiomReport& rep, AxiomViolation v) {
  if (rep.violations.size() < kMaxViolations)
    rep.violations.push_back(std::move(v));
  else if (std::find(rep.caveats.begin(), rep.caveats.end(), "violation list truncated") ==
           rep.caveats.end())
    rep.caveats.push_back("violation list truncated");
}

void check_t1(const FiniteStructure& s, TpOracle& tp, const AxiomBounds& b, AxiomReport& rep) {
  for_each_tuple(s.size(), 0, b.arity, [&](const std::vector<int>& params) {
    ++rep.checked_count;
    bool any = false;
    for (int a = 0; a < s.size() && !any; ++a) any = tp.typical(a, params);
    if (!any) {
      AxiomViolation v;
      v.params = params;
      add_violation(rep, std::move(v));
    }
  });
}

void check_t2(const FiniteStructure& s, TpOracle& tp, const AxiomBounds& b, AxiomReport& rep) {
  for_each_tuple(s.size(), 0, b.arity - 1, [&](const std::vector<int>& bs) {
    for (int c = 0; c < s.size(); ++c) {
      std::vector<int> cbs{c};
      cbs.insert(cbs.end(), bs.begin(), bs.end());
      for (int a = 0; a < s.size(); ++a) {
        ++rep.checked_count;
        if (tp.typical(a, cbs) && !tp.typical(a, bs)) {
          AxiomViolation v;
          v.element = a;
          v.params = cbs;
          v.aux_params = bs;
          add_violation(rep, std::move(v));
        }
      }
    }
  });
}

void check_t3(const FiniteStructure& s, TpOracle& tp, const AxiomBounds& b, AxiomReport& rep) {
  for_each_tuple(s.size(), 1, b.arity, [&](const std::vector<int>& bs) {
    std::vector<int> perm = bs;
    std::sort(perm.begin(), perm.end());
    for (int a = 0; a < s.size(); ++a) {
      bool base = tp.typical(a, bs);
      // (a) permutation invariance
      std::vector<int> p = perm;
      do {
        ++rep.checked_count;
        if (base && !tp.typical(a, p)) {
          AxiomViolation v;
          v.element = a;
          v.params = bs;
          v.aux_params = p;
          add_violation(rep, std::move(v));
        }
      } while (std::next_permutation(p.begin(), p.end()));
      // (b) duplication of the leading parameter
      if (static_cast<int>(bs.size()) + 1 <= b.arity) {
        std::vector<int> dup{bs[0]};
        dup.insert(dup.end(), bs.begin(), bs.end());
        ++rep.checked_count;
        if (base && !tp.typical(a, dup)) {
          AxiomViolation v;
          v.element = a;
          v.params = bs;
          v.aux_params = dup;
          add_violation(rep, std::move(v));
        }
      }
    }
  });
}

void check_t4(const FiniteStructure& s, TpOracle& tp, AxiomReport& rep) {
  for (int a = 0; a < s.size(); ++a) {
    ++rep.checked_count;
    if (tp.typical(a, {a})) {
      AxiomViolation v;
      v.element = a;
      v.params = {a};
      add_violation(rep, std::move(v));
    }
  }
}

void check_t5(const FiniteStructure& s, TpOracle& tp, const AxiomBounds& b, AxiomReport& rep) {
  for_each_tuple(s.size(), 0, b.arity - 1, [&](const std::vector<int>& cs) {
    for (int a = 0; a < s.size(); ++a) {
      if (!tp.typical(a, cs)) continue;
      std::vector<int> acs{a};
      acs.insert(acs.end(), cs.begin(), cs.end());
      for (int bel = 0; bel < s.size(); ++bel) {
        ++rep.checked_count;
        if (!tp.typical(bel, acs)) continue;
        std::vector<int> bcs{bel};
        bcs.insert(bcs.end(), cs.begin(), cs.end());
        if (!tp.typical(a, bcs)) {
          AxiomViolation v;
          v.element = a;
          v.aux_element = bel;
          v.params = cs;
          add_violation(rep, std::move(v));
        }
      }
    }
  });
}

void check_t6(const FiniteStructure& s, TpOracle& tp, const AxiomBounds& b,
              const std::vector<SchemeFormula>& scheme, AxiomReport& rep) {
  if (scheme.empty()) {
    rep.caveats.push_back("no scheme formulas supplied");
    return;
  }
  for (const SchemeFormula& sf : scheme) {
    FreeVars fv = free_variables(sf.formula);
    if (fv.variables.size() != 1 || *fv.variables.begin() != "x")
      throw Error("T6 scheme formula must have exactly the free variable x");
    int m = static_cast<int>(sf.params.size());
    if (m + 1 > b.arity) {
      rep.caveats.push_back("scheme formula skipped: parameter tuple exceeds arity bound");
      continue;
    }
    for_each_tuple(s.size(), m, m, [&](const std::vector<int>& ys) {
      Valuation val;
      for (int i = 0; i < m; ++i) val[sf.params[i]] = ys[i];
      std::vector<int> sat(s.size());
      for (int el = 0; el < s.size(); ++el) {
        val["x"] = el;
        sat[el] = evaluate(s, sf.formula, val);
      }
      val.erase("x");
      auto all_typical_satisfy = [&](const std::vector<int>& params, int* failing) {
        for (int el = 0; el < s.size(); ++el)
          if (tp.typical(el, params) && !sat[el]) {
            if (failing) *failing = el;
            return false;
          }
        return true;
      };
      for (int z = 0; z < s.size(); ++z) {
        ++rep.checked_count;
        std::vector<int> zys{z};
        zys.insert(zys.end(), ys.begin(), ys.end());
        int failing = -1;
        if (all_typical_satisfy(zys, nullptr) && !all_typical_satisfy(ys, &failing)) {
          AxiomViolation v;
          v.element = z;
          v.aux_element = failing;
          v.params = ys;
          v.formula = render_formula(sf.formula);
          add_violation(rep, std::move(v));
        }
      }
    });
  }
  rep.caveats.push_back("scheme checked for " + std::to_string(scheme.size()) +
                        " supplied formula(s) only");
}

}  // namespace

AxiomReport check_axiom(AxiomId axiom, const FiniteStructure& s, const AxiomBounds& bounds,
                        const std::vector<SchemeFormula>& scheme) {
  if (bounds.arity < 1) throw Error("arity bound must be at least 1");
  AxiomReport rep;
  rep.axiom = axiom;
  rep.structure_id = s.name();
  rep.bounds = bounds;

  TpOracle tp(s);
  switch (axiom) {
    case AxiomId::T1: check_t1(s, tp, bounds, rep); break;
    case AxiomId::T2: check_t2(s, tp, bounds, rep); break;
    case AxiomId::T3: check_t3(s, tp, bounds, rep); break;
    case AxiomId::T4: check_t4(s, tp, rep); break;
    case AxiomId::T5: check_t5(s, tp, bounds, rep); break;
    case AxiomId::T6: check_t6(s, tp, bounds, scheme, rep); break;
    case AxiomId::Filter:
      throw Error("use check_majority_filter_closure for the FILTER check");
  }

  if (!rep.violations.empty())
    rep.verdict = AxiomVerdict::Fails;
  else if (axiom == AxiomId::T6)
    rep.verdict = AxiomVerdict::HoldsWithCaveat;
  else
    rep.verdict = AxiomVerdict::Holds;
  return rep;
}

AxiomReport check_majority_filter_closure(const FiniteStructure& s, bool definable_only) {
  AxiomReport rep;
  rep.axiom = AxiomId::Filter;
  rep.structure_id = s.name();
  rep.caveats.push_back(definable_only ? "definable sets only (orbit unions)" : "all subsets");

  int n = s.size();
  std::vector<std::vector<int>> majorities;

  if (definable_only) {
    OrbitPartition part = orbit_partition(s, {});
    int blocks = static_cast<int>(part.blocks.size());
    if (blocks > 20) throw Error("too many orbit blocks for closure check");
    for (std::uint64_t m = 0; m < (1ULL << blocks); ++m) {
      std::vector<int> set;
      for (int i = 0; i < blocks; ++i)
        if ((m >> i) & 1) set.insert(set.end(), part.blocks[i].begin(), part.blocks[i].end());
      std::sort(set.begin(), set.end());
      if (2 * static_cast<int>(set.size()) > n) majorities.push_back(std::move(set));
    }
  } else {
    if (n > 12) throw Error("raw closure check supported for n <= 12 only");
    for (std::uint64_t m = 0; m < (1ULL << n); ++m) {
      std::vector<int> set;
      for (int i = 0; i < n; ++i)
        if ((m >> i) & 1) set.push_back(i);
      if (2 * static_cast<int>(set.size()) > n) majorities.push_back(std::move(set));
    }
  }

  std::sort(majorities.begin(), majorities.end());
  for (std::size_t i = 0; i < majorities.size(); ++i)
    for (std::size_t j = i; j < majorities.size(); ++j) {
      ++rep.checked_count;
      std::vector<int> inter;
      std::set_intersection(majorities[i].begin(), majorities[i].end(), majorities[j].begin(),
                            majorities[j].end(), std::back_inserter(inter));
      if (2 * static_cast<int>(inter.size()) <= n) {
        AxiomViolation v;
        v.filter_sets = {majorities[i], majorities[j], inter};
        add_violation(rep, std::move(v));
      }
    }

  rep.verdict = rep.violations.empty() ? AxiomVerdict::Holds : AxiomVerdict::Fails;
  return rep;
}

}  // namespace typlab
