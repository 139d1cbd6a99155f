#include "typlab/enumeration.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "typlab/error.hpp"
#include "typlab/eval.hpp"

namespace typlab {

int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

using Table = std::vector<std::uint64_t>;

struct TableKey {
  std::uint32_t mask;
  Table table;
  bool operator==(const TableKey& o) const { return mask == o.mask && table == o.table; }
};

struct TableKeyHash {
  std::size_t operator()(const TableKey& k) const {
    std::size_t h = k.mask;
    for (std::uint64_t w : k.table) h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

enum class Op : std::uint8_t { Atom, Not, Quant, Binary };

struct Entry {
  std::uint32_t mask;  // bit i set iff pool variable i occurs free
  Table table;         // truth over all n^V assignments
  int size;
  Op op;
  Formula::Kind kind;  // Quant/Binary connective
  int child_a = -1, child_b = -1;
  FormulaRef atom;  // Op::Atom only
};

// Term template evaluated against an assignment of the variable pool.
struct SemTerm {
  enum class Kind { Var, Fixed, Apply } kind;
  int var = 0;            // Var
  int value = 0;          // Fixed
  std::string fn;         // Apply
  std::vector<SemTerm> args;
  Term ast;

  int eval(const FiniteStructure& s, const std::vector<int>& digits) const {
    switch (kind) {
      case Kind::Var: return digits[var];
      case Kind::Fixed: return value;
      case Kind::Apply: {
        std::vector<int> a;
        a.reserve(args.size());
        for (const SemTerm& t : args) a.push_back(t.eval(s, digits));
        return s.apply(fn, a);
      }
    }
    return 0;
  }

  std::uint32_t var_mask() const {
    if (kind == Kind::Var) return 1u << var;
    std::uint32_t m = 0;
    for (const SemTerm& t : args) m |= t.var_mask();
    return m;
  }
};

class Enumerator {
 public:
  Enumerator(const FiniteStructure& s, const std::vector<int>& params, const EnumOptions& opts)
      : s_(s), n_(s.size()), vars_(std::max(1, opts.max_vars)), opts_(opts) {
    for (int p : params)
      if (p < 0 || p >= n_) throw Error("parameter " + std::to_string(p) + " out of range");
    space_ = 1;
    for (int i = 0; i < vars_; ++i) space_ *= static_cast<std::size_t>(n_);
    words_ = (space_ + 63) / 64;
    var_names_.push_back("x");
    for (int i = 1; i < vars_; ++i) var_names_.push_back("v" + std::to_string(i));
    build_terms(params);
    run();
  }

  const std::vector<Entry>& entries() const { return entries_; }

  std::vector<int> extension_of(const Entry& e) const {
    std::vector<int> out;
    for (int a = 0; a < n_; ++a) {
      std::size_t idx = static_cast<std::size_t>(a);  // x has stride 1, others 0
      if (bit(e.table, idx)) out.push_back(a);
    }
    return out;
  }

  FormulaRef rebuild(int id) const {
    const Entry& e = entries_[id];
    switch (e.op) {
      case Op::Atom: return e.atom;
      case Op::Not: return Formula::negation(rebuild(e.child_a));
      case Op::Quant:
        return Formula::quantifier(e.kind, var_names_[e.child_b], rebuild(e.child_a));
      case Op::Binary: {
        FormulaRef l = rebuild(e.child_a), r = rebuild(e.child_b);
        switch (e.kind) {
          case Formula::Kind::And: return Formula::conjunction(l, r);
          case Formula::Kind::Or: return Formula::disjunction(l, r);
          case Formula::Kind::Implies: return Formula::implication(l, r);
          default: return Formula::biconditional(l, r);
        }
      }
    }
    throw Error("rebuild: bad op");
  }

 private:
  static bool bit(const Table& t, std::size_t i) { return (t[i >> 6] >> (i & 63)) & 1; }
  static void set_bit(Table& t, std::size_t i) { t[i >> 6] |= 1ULL << (i & 63); }

  void build_terms(const std::vector<int>& params) {
    for (int i = 0; i < vars_; ++i) {
      SemTerm t;
      t.kind = SemTerm::Kind::Var;
      t.var = i;
      t.ast = Term::variable(var_names_[i]);
      terms_.push_back(std::move(t));
    }
    for (std::size_t j = 0; j < params.size(); ++j) {
      SemTerm t;
      t.kind = SemTerm::Kind::Fixed;
      t.value = params[j];
      t.ast = Term::parameter("p" + std::to_string(j));
      terms_.push_back(std::move(t));
    }
    for (const auto& [c, unused] : s_.signature().constants()) {
      (void)unused;
      SemTerm t;
      t.kind = SemTerm::Kind::Fixed;
      t.value = s_.constant(c);
      t.ast = Term::constant(c);
      terms_.push_back(std::move(t));
    }
    // depth-1 applications over the base terms
    std::size_t base_count = terms_.size();
    for (const auto& [fn, arity] : s_.signature().functions()) {
      std::vector<std::size_t> idx(arity, 0);
      while (true) {
        SemTerm t;
        t.kind = SemTerm::Kind::Apply;
        t.fn = fn;
        std::vector<Term> ast_args;
        for (std::size_t i : idx) {
          t.args.push_back(terms_[i]);
          ast_args.push_back(terms_[i].ast);
        }
        t.ast = Term::apply(fn, std::move(ast_args));
        terms_.push_back(std::move(t));
        int i = arity - 1;
        for (; i >= 0; --i) {
          if (++idx[i] < base_count) break;
          idx[i] = 0;
        }
        if (i < 0) break;
      }
      if (arity == 0) continue;
    }
  }

  Table atom_table(const std::vector<const SemTerm*>& ts, const std::string& rel,
                   bool equality) const {
    Table t(words_, 0);
    std::vector<int> digits(vars_, 0);
    std::vector<int> tuple(ts.size(), 0);
    for (std::size_t idx = 0; idx < space_; ++idx) {
      std::size_t rest = idx;
      for (int i = 0; i < vars_; ++i) {
        digits[i] = static_cast<int>(rest % n_);
        rest /= n_;
      }
      for (std::size_t i = 0; i < ts.size(); ++i) tuple[i] = ts[i]->eval(s_, digits);
      bool val = equality ? tuple[0] == tuple[1] : s_.holds(rel, tuple);
      if (val) set_bit(t, idx);
    }
    return t;
  }

  void seed_atoms() {
    auto add_atom = [&](FormulaRef ast, std::uint32_t mask, Table table) {
      Entry e;
      e.mask = mask;
      e.table = std::move(table);
      e.size = 1;
      e.op = Op::Atom;
      e.kind = Formula::Kind::Relation;
      e.atom = std::move(ast);
      try_insert(std::move(e));
    };

    for (const auto& [rel, arity] : s_.signature().relations()) {
      std::vector<std::size_t> idx(arity, 0);
      while (true) {
        std::vector<const SemTerm*> ts;
        std::vector<Term> ast_args;
        std::uint32_t mask = 0;
        for (std::size_t i : idx) {
          ts.push_back(&terms_[i]);
          ast_args.push_back(terms_[i].ast);
          mask |= terms_[i].var_mask();
        }
        add_atom(Formula::relation(rel, std::move(ast_args)), mask, atom_table(ts, rel, false));
        int i = arity - 1;
        for (; i >= 0; --i) {
          if (++idx[i] < terms_.size()) break;
          idx[i] = 0;
        }
        if (i < 0) break;
      }
    }
    for (std::size_t i = 0; i < terms_.size(); ++i)
      for (std::size_t j = i; j < terms_.size(); ++j) {
        std::vector<const SemTerm*> ts{&terms_[i], &terms_[j]};
        add_atom(Formula::equal(terms_[i].ast, terms_[j].ast),
                 terms_[i].var_mask() | terms_[j].var_mask(), atom_table(ts, "", true));
      }
  }

  struct Candidate {
    std::uint32_t mask;
    Table table;
    Op op;
    Formula::Kind kind;
    int child_a, child_b;
  };

  Candidate make_not(int child) const {
    const Entry& c = entries_[child];
    Candidate out{c.mask, Table(words_, 0), Op::Not, Formula::Kind::Not, child, -1};
    for (std::size_t w = 0; w < words_; ++w) out.table[w] = ~c.table[w];
    trim(out.table);
    return out;
  }

  Candidate make_quant(int child, int v, int which) const {
    static constexpr Formula::Kind kinds[4] = {Formula::Kind::Forall, Formula::Kind::Exists,
                                               Formula::Kind::Qmost, Formula::Kind::Qinf};
    const Entry& c = entries_[child];
    Formula::Kind k = kinds[which];
    Candidate out{c.mask & ~(1u << v), Table(words_, 0), Op::Quant, k, child, v};
    std::size_t stride = 1;
    for (int i = 0; i < v; ++i) stride *= static_cast<std::size_t>(n_);
    std::size_t limit = space_;
    for (std::size_t base = 0; base < limit; ++base) {
      // visit each line along axis v once, at its v=0 point
      if ((base / stride) % static_cast<std::size_t>(n_) != 0) continue;
      int cnt = 0;
      for (int m = 0; m < n_; ++m)
        if (bit(c.table, base + static_cast<std::size_t>(m) * stride)) ++cnt;
      bool val = false;
      switch (k) {
        case Formula::Kind::Forall: val = cnt == n_; break;
        case Formula::Kind::Exists: val = cnt > 0; break;
        case Formula::Kind::Qmost: val = 2 * cnt > n_; break;
        default: val = true; break;  // Qinf: complement always finite
      }
      if (val)
        for (int m = 0; m < n_; ++m) set_bit(out.table, base + static_cast<std::size_t>(m) * stride);
    }
    return out;
  }

  Candidate make_binary(int l, int r, int which) const {
    static constexpr Formula::Kind kinds[4] = {Formula::Kind::And, Formula::Kind::Or,
                                               Formula::Kind::Implies, Formula::Kind::Iff};
    const Entry& a = entries_[l];
    const Entry& b = entries_[r];
    Candidate out{a.mask | b.mask, Table(words_, 0), Op::Binary, kinds[which], l, r};
    for (std::size_t w = 0; w < words_; ++w) {
      switch (kinds[which]) {
        case Formula::Kind::And: out.table[w] = a.table[w] & b.table[w]; break;
        case Formula::Kind::Or: out.table[w] = a.table[w] | b.table[w]; break;
        case Formula::Kind::Implies: out.table[w] = ~a.table[w] | b.table[w]; break;
        default: out.table[w] = ~(a.table[w] ^ b.table[w]); break;
      }
    }
    trim(out.table);
    return out;
  }

  void trim(Table& t) const {
    if (space_ % 64) t[words_ - 1] &= (1ULL << (space_ % 64)) - 1;
  }

  void try_insert(Entry e) {
    TableKey key{e.mask, e.table};
    auto it = index_.find(key);
    if (it != index_.end()) return;
    index_.emplace(std::move(key), static_cast<int>(entries_.size()));
    entries_.push_back(std::move(e));
  }

  void run() {
    size_start_.assign(opts_.budget + 2, 0);
    seed_atoms();
    size_start_[1] = 0;
    size_start_[2] = entries_.size();

    for (int s = 2; s <= opts_.budget; ++s) {
      // production space at size s, indexed deterministically
      struct Block {
        std::size_t begin, count;
        int tag;  // 0 = not, 1 = quant, else s1 for binary
      };
      std::vector<Block> blocks;
      std::size_t total = 0;
      std::size_t prev = count_of(s - 1);
      blocks.push_back({total, prev, 0});
      total += prev;
      blocks.push_back({total, prev * static_cast<std::size_t>(vars_) * 4, 1});
      total += blocks.back().count;
      for (int s1 = 1; s1 <= s - 2; ++s1) {
        std::size_t cnt = count_of(s1) * count_of(s - 1 - s1) * 4;
        blocks.push_back({total, cnt, 2 + s1});
        total += cnt;
      }

      const std::size_t kChunk = 1 << 14;
      std::vector<Candidate> buf;
      for (std::size_t base = 0; base < total; base += kChunk) {
        std::size_t end = std::min(base + kChunk, total);
        buf.resize(end - base);
        bool parallel = opts_.exec == ExecMode::Parallel;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel && end - base > 256)
#endif
        for (std::ptrdiff_t off = 0; off < static_cast<std::ptrdiff_t>(end - base); ++off) {
          buf[off] = decode_and_make(blocks, s, base + static_cast<std::size_t>(off));
        }
        (void)parallel;
        for (Candidate& c : buf) {
          Entry e;
          e.mask = c.mask;
          e.table = std::move(c.table);
          e.size = s;
          e.op = c.op;
          e.kind = c.kind;
          e.child_a = c.child_a;
          e.child_b = c.child_b;
          try_insert(std::move(e));
        }
      }
      size_start_[s + 1] = entries_.size();
    }
  }

  std::size_t count_of(int s) const { return size_start_[s + 1] - size_start_[s]; }
  int entry_at(int s, std::size_t i) const { return static_cast<int>(size_start_[s] + i); }

  template <typename Blocks>
  Candidate decode_and_make(const Blocks& blocks, int s, std::size_t p) const {
    for (const auto& blk : blocks) {
      if (p >= blk.begin + blk.count) continue;
      std::size_t off = p - blk.begin;
      if (blk.tag == 0) return make_not(entry_at(s - 1, off));
      if (blk.tag == 1) {
        std::size_t per = static_cast<std::size_t>(vars_) * 4;
        return make_quant(entry_at(s - 1, off / per), static_cast<int>((off % per) / 4),
                          static_cast<int>(off % 4));
      }
      int s1 = blk.tag - 2;
      int s2 = s - 1 - s1;
      std::size_t rcount = count_of(s2) * 4;
      return make_binary(entry_at(s1, off / rcount), entry_at(s2, (off % rcount) / 4),
                         static_cast<int>(off % 4));
    }
    throw Error("production index out of range");
  }

  const FiniteStructure& s_;
  int n_;
  int vars_;
  EnumOptions opts_;
  std::size_t space_ = 0, words_ = 0;
  std::vector<std::string> var_names_;
  std::vector<SemTerm> terms_;
  std::vector<Entry> entries_;
  std::vector<std::size_t> size_start_;
  std::unordered_map<TableKey, int, TableKeyHash> index_;
};

}  // namespace

std::vector<std::vector<int>> enumerate_definable_sets(const FiniteStructure& s,
                                                       const std::vector<int>& params,
                                                       const EnumOptions& opts) {
  if (opts.budget < 1) throw Error("enumeration budget must be at least 1");
  Enumerator en(s, params, opts);
  std::set<std::vector<int>> exts;
  for (const Entry& e : en.entries())
    if (e.mask == 1u) exts.insert(en.extension_of(e));
  return {exts.begin(), exts.end()};
}

std::optional<FormulaRef> find_witness(const FiniteStructure& s, int a,
                                       const std::vector<int>& params, const EnumOptions& opts) {
  if (a < 0 || a >= s.size()) throw Error("element " + std::to_string(a) + " out of range");
  if (opts.budget < 1) throw Error("enumeration budget must be at least 1");
  Enumerator en(s, params, opts);
  const auto& entries = en.entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].mask != 1u) continue;
    std::vector<int> ext = en.extension_of(entries[i]);
    if (2 * static_cast<int>(ext.size()) < s.size() &&
        std::binary_search(ext.begin(), ext.end(), a))
      return en.rebuild(static_cast<int>(i));
  }
  return std::nullopt;
}

}  // namespace typlab
