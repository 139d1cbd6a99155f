#include "typlab/symmetry.hpp"

#include <algorithm>
#include <map>
#include <functional>
#include <numeric>
#include <set>

#include "typlab/error.hpp"

namespace typlab {

int OrbitPartition::block_index_of(int a) const {
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (std::binary_search(blocks[i].begin(), blocks[i].end(), a)) return static_cast<int>(i);
  throw Error("element " + std::to_string(a) + " out of range");
}

namespace {

// Iterated color refinement. Starting colors separate the fixed elements
// (each gets its own color), constants, and unary relation membership;
// refinement folds in, per relation and function, the multiset of tuples an
// element occurs in together with the co-occupants' colors.
std::vector<int> refine_colors(const FiniteStructure& s, const std::vector<int>& fixed) {
  int n = s.size();
  std::vector<std::vector<int>> sig0(n);
  for (std::size_t i = 0; i < fixed.size(); ++i) sig0[fixed[i]].push_back(static_cast<int>(i));
  {
    int ci = 0;
    for (const auto& [c, unused] : s.signature().constants()) {
      (void)unused;
      sig0[s.constant(c)].push_back(1000 + ci);
      ++ci;
    }
  }
  std::vector<int> color(n, 0);
  {
    std::map<std::vector<int>, int> codes;
    for (int v = 0; v < n; ++v) {
      auto [it, ok] = codes.emplace(sig0[v], static_cast<int>(codes.size()));
      (void)ok;
      color[v] = it->second;
    }
  }

  for (int round = 0; round < n; ++round) {
    // signature of v: (old color, sorted occurrence descriptors)
    std::vector<std::vector<std::vector<int>>> occ(n);
    int rel_id = 0;
    for (const auto& [rel, arity] : s.signature().relations()) {
      (void)arity;
      for (const auto& tuple : s.relation_tuples(rel)) {
        for (std::size_t pos = 0; pos < tuple.size(); ++pos) {
          std::vector<int> desc{rel_id, static_cast<int>(pos)};
          for (int e : tuple) desc.push_back(color[e]);
          occ[tuple[pos]].push_back(std::move(desc));
        }
      }
      ++rel_id;
    }
    int fn_id = 0;
    for (const auto& [fn, arity] : s.signature().functions()) {
      std::vector<int> args(arity, 0);
      bool done = false;
      while (!done) {
        int val = s.apply(fn, args);
        std::vector<int> desc{-1 - fn_id, -1};
        for (int a : args) desc.push_back(color[a]);
        desc.push_back(color[val]);
        for (std::size_t pos = 0; pos < args.size(); ++pos) {
          std::vector<int> d = desc;
          d[1] = static_cast<int>(pos);
          occ[args[pos]].push_back(std::move(d));
        }
        std::vector<int> dval = desc;
        dval[1] = arity;
        occ[val].push_back(std::move(dval));
        // next tuple
        done = true;
        for (int i = arity - 1; i >= 0; --i) {
          if (++args[i] < n) {
            done = false;
            break;
          }
          args[i] = 0;
        }
        if (arity == 0) done = true;
      }
      ++fn_id;
    }

    std::map<std::pair<int, std::vector<std::vector<int>>>, int> codes;
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) {
      std::sort(occ[v].begin(), occ[v].end());
      auto key = std::make_pair(color[v], std::move(occ[v]));
      auto [it, ok] = codes.emplace(std::move(key), static_cast<int>(codes.size()));
      (void)ok;
      next[v] = it->second;
    }
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

struct SearchState {
  const FiniteStructure& s;
  int n;
  std::vector<int> color;
  std::vector<int> image;  // -1 = unassigned
  std::vector<bool> used;
  std::vector<Permutation>* out;
};

// Relations/functions/constants restricted to the currently mapped elements
// must be preserved in both directions.
bool consistent(const SearchState& st, int v) {
  const FiniteStructure& s = st.s;
  for (const auto& [rel, arity] : s.signature().relations()) {
    if (arity == 0) continue;
    for (const auto& tuple : s.relation_tuples(rel)) {
      bool involves = false, mapped = true;
      for (int e : tuple) {
        if (e == v) involves = true;
        if (st.image[e] < 0) mapped = false;
      }
      if (involves && mapped) {
        std::vector<int> img(tuple.size());
        for (std::size_t i = 0; i < tuple.size(); ++i) img[i] = st.image[tuple[i]];
        if (!s.holds(rel, img)) return false;
      }
    }
    // inverse direction: mapped tuples landing in R must come from R
    int a = arity;
    std::vector<int> idx(a, 0);
    // Enumerating all n^a tuples is acceptable at these sizes.
    while (true) {
      bool involves = false, mapped = true;
      for (int i = 0; i < a; ++i) {
        if (idx[i] == v) involves = true;
        if (st.image[idx[i]] < 0) {
          mapped = false;
          break;
        }
      }
      if (involves && mapped) {
        std::vector<int> img(a);
        for (int i = 0; i < a; ++i) img[i] = st.image[idx[i]];
        if (s.holds(rel, img) != s.holds(rel, idx)) return false;
      }
      int i = a - 1;
      for (; i >= 0; --i) {
        if (++idx[i] < st.n) break;
        idx[i] = 0;
      }
      if (i < 0) break;
    }
  }
  for (const auto& [fn, arity] : s.signature().functions()) {
    std::vector<int> args(arity, 0);
    while (true) {
      bool involves = false, mapped = true;
      int val = s.apply(fn, args);
      if (val == v) involves = true;
      for (int a : args) {
        if (a == v) involves = true;
        if (st.image[a] < 0) mapped = false;
      }
      if (involves && mapped && st.image[val] >= 0) {
        std::vector<int> img(arity);
        for (int i = 0; i < arity; ++i) img[i] = st.image[args[i]];
        if (s.apply(fn, img) != st.image[val]) return false;
      }
      int i = arity - 1;
      for (; i >= 0; --i) {
        if (++args[i] < st.n) break;
        args[i] = 0;
      }
      if (i < 0) break;
    }
  }
  return true;
}

void search(SearchState& st, int v) {
  if (v == st.n) {
    st.out->push_back(st.image);
    return;
  }
  if (st.image[v] >= 0) {
    search(st, v + 1);
    return;
  }
  for (int w = 0; w < st.n; ++w) {
    if (st.used[w] || st.color[w] != st.color[v]) continue;
    st.image[v] = w;
    st.used[w] = true;
    if (consistent(st, v)) search(st, v + 1);
    st.image[v] = -1;
    st.used[w] = false;
  }
}

void verify_group(const AutomorphismGroup& g) {
  std::set<Permutation> members(g.perms.begin(), g.perms.end());
  Permutation id(g.n);
  std::iota(id.begin(), id.end(), 0);
  if (!members.count(id)) throw Error("automorphism group misses the identity");
  for (const Permutation& p : g.perms) {
    Permutation inv(g.n);
    for (int i = 0; i < g.n; ++i) inv[p[i]] = i;
    if (!members.count(inv)) throw Error("automorphism group not closed under inverse");
  }
  if (g.perms.size() <= 256) {
    for (const Permutation& p : g.perms)
      for (const Permutation& q : g.perms) {
        Permutation pq(g.n);
        for (int i = 0; i < g.n; ++i) pq[i] = p[q[i]];
        if (!members.count(pq)) throw Error("automorphism group not closed under composition");
      }
  }
}

}  // namespace

AutomorphismGroup stabilizer_group(const FiniteStructure& s, const std::vector<int>& fixed) {
  int n = s.size();
  if (n > 10) throw Error("full automorphism listing supported for n <= 10 only");
  for (int f : fixed)
    if (f < 0 || f >= n) throw Error("fixed element " + std::to_string(f) + " out of range");

  AutomorphismGroup g;
  g.n = n;
  g.fixed = fixed;

  SearchState st{s, n, refine_colors(s, fixed), std::vector<int>(n, -1),
                 std::vector<bool>(n, false), &g.perms};
  for (int f : fixed) {
    if (st.image[f] >= 0 && st.image[f] != f) throw Error("inconsistent fixed list");
    st.image[f] = f;
    st.used[f] = true;
  }
  // Constants are fixed by every automorphism.
  for (const auto& [c, unused] : s.signature().constants()) {
    (void)unused;
    int v = s.constant(c);
    if (st.image[v] >= 0 && st.image[v] != v)
      throw Error("fixed list conflicts with constant interpretation");
    st.image[v] = v;
    st.used[v] = true;
  }
  search(st, 0);
  std::sort(g.perms.begin(), g.perms.end());
  verify_group(g);
  return g;
}

OrbitPartition orbit_partition(const AutomorphismGroup& g) {
  std::vector<int> parent(g.n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Permutation& p : g.perms)
    for (int v = 0; v < g.n; ++v) {
      int a = find(v), b = find(p[v]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<int, std::vector<int>> blocks;
  for (int v = 0; v < g.n; ++v) blocks[find(v)].push_back(v);
  OrbitPartition part;
  part.n = g.n;
  part.fixed = g.fixed;
  for (auto& [root, blk] : blocks) {
    (void)root;
    part.blocks.push_back(std::move(blk));
  }
  return part;
}

OrbitPartition orbit_partition(const FiniteStructure& s, const std::vector<int>& fixed) {
  return orbit_partition(stabilizer_group(s, fixed));
}

std::vector<int> definable_closure(const FiniteStructure& s, const std::vector<int>& fixed) {
  OrbitPartition part = orbit_partition(s, fixed);
  std::vector<int> out;
  for (const auto& blk : part.blocks)
    if (blk.size() == 1) out.push_back(blk[0]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace typlab
