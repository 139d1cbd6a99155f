#include "typlab/family.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "typlab/error.hpp"

namespace typlab {

const char* to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::EmptySignature: return "empty";
    case FamilyKind::Graphs: return "graphs";
    case FamilyKind::Digraphs: return "digraphs";
  }
  return "?";
}

FamilyKind family_kind_from_string(const std::string& s) {
  if (s == "empty") return FamilyKind::EmptySignature;
  if (s == "graphs") return FamilyKind::Graphs;
  if (s == "digraphs") return FamilyKind::Digraphs;
  throw Error("unknown family kind '" + s + "'");
}

StructureFamilySpec parse_family_spec(const std::string& text) {
  std::size_t colon = text.find(':');
  if (colon == std::string::npos) throw Error("family spec must be KIND:MIN..MAX");
  StructureFamilySpec spec;
  spec.kind = family_kind_from_string(text.substr(0, colon));
  std::string range = text.substr(colon + 1);
  std::size_t dots = range.find("..");
  try {
    if (dots == std::string::npos) {
      spec.min_n = spec.max_n = std::stoi(range);
    } else {
      spec.min_n = std::stoi(range.substr(0, dots));
      spec.max_n = std::stoi(range.substr(dots + 2));
    }
  } catch (...) {
    throw Error("bad family range '" + range + "'");
  }
  if (spec.min_n < 1 || spec.max_n < spec.min_n) throw Error("bad family range");
  return spec;
}

namespace {

int family_bits(FamilyKind kind, int n) {
  switch (kind) {
    case FamilyKind::EmptySignature: return 0;
    case FamilyKind::Graphs: return n * (n - 1) / 2;
    case FamilyKind::Digraphs: return n * n;
  }
  return 0;
}

int max_family_n(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::EmptySignature: return 8;
    case FamilyKind::Graphs: return 6;
    case FamilyKind::Digraphs: return 4;
  }
  return 0;
}

// bit index of edge (i,j); graphs use unordered pairs i < j in lex order
int edge_bit(FamilyKind kind, int n, int i, int j) {
  if (kind == FamilyKind::Digraphs) return i * n + j;
  if (i > j) std::swap(i, j);
  // pairs (0,1),(0,2),...,(0,n-1),(1,2),...
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::uint64_t permute_code(FamilyKind kind, int n, std::uint64_t code,
                           const std::vector<int>& perm) {
  std::uint64_t out = 0;
  if (kind == FamilyKind::Digraphs) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if ((code >> edge_bit(kind, n, i, j)) & 1)
          out |= 1ULL << edge_bit(kind, n, perm[i], perm[j]);
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if ((code >> edge_bit(kind, n, i, j)) & 1)
          out |= 1ULL << edge_bit(kind, n, perm[i], perm[j]);
  }
  return out;
}

std::vector<std::vector<int>> all_perms(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool is_canonical(FamilyKind kind, int n, std::uint64_t code,
                  const std::vector<std::vector<int>>& perms) {
  for (const auto& p : perms)
    if (permute_code(kind, n, code, p) < code) return false;
  return true;
}

}  // namespace

FiniteStructure family_structure(FamilyKind kind, int n, std::uint64_t code) {
  Signature sig;
  std::ostringstream name;
  name << to_string(kind) << n << "_" << code;
  if (kind == FamilyKind::EmptySignature) {
    FiniteStructure s(name.str(), sig, n);
    s.validate();
    return s;
  }
  sig.add_relation("E", 2);
  FiniteStructure s(name.str(), sig, n);
  std::set<std::vector<int>> tuples;
  if (kind == FamilyKind::Digraphs) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if ((code >> edge_bit(kind, n, i, j)) & 1) tuples.insert({i, j});
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if ((code >> edge_bit(kind, n, i, j)) & 1) {
          tuples.insert({i, j});
          tuples.insert({j, i});
        }
  }
  s.set_relation("E", std::move(tuples));
  s.validate();
  return s;
}

std::uint64_t family_code_count(FamilyKind kind, int n) {
  return 1ULL << family_bits(kind, n);
}

namespace {

std::string structure_text(FamilyKind kind, int n, std::uint64_t code) {
  std::ostringstream out;
  out << "# " << to_string(kind) << " n=" << n << " code=" << code << "\n";
  out << "universe " << n << "\n";
  if (kind == FamilyKind::EmptySignature) return out.str();
  out << "relation E 2:";
  FiniteStructure s = family_structure(kind, n, code);
  for (const auto& t : s.relation_tuples("E")) out << " (" << t[0] << "," << t[1] << ")";
  out << "\n";
  return out.str();
}

}  // namespace

SearchOutcome search_counterexample(AxiomId axiom, const StructureFamilySpec& family,
                                    const AxiomBounds& bounds,
                                    const std::vector<SchemeFormula>& scheme, ExecMode exec) {
  if (axiom == AxiomId::Filter) throw Error("FILTER is not searchable over families");
  if (family.max_n > max_family_n(family.kind))
    throw Error(std::string("family '") + to_string(family.kind) + "' supported up to n = " +
                std::to_string(max_family_n(family.kind)));

  SearchOutcome out;
  out.family = family;
  out.axiom = axiom;
  out.bounds = bounds;

  for (int n = family.min_n; n <= family.max_n; ++n) {
    const std::uint64_t total = family_code_count(family.kind, n);
    auto perms = all_perms(n);

    FamilyCount row;
    row.n = n;
    row.labeled = total;
    row.labeled_closed_form = total;

    std::uint64_t found_code = total;  // sentinel: none
    std::uint64_t canonical = 0;

    bool parallel = exec == ExecMode::Parallel && total > 1024;
#ifdef _OPENMP
#pragma omp parallel if (parallel)
#endif
    {
      std::uint64_t local_found = total;
      std::uint64_t local_canonical = 0;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 256) nowait
#endif
      for (std::int64_t code = 0; code < static_cast<std::int64_t>(total); ++code) {
        std::uint64_t c = static_cast<std::uint64_t>(code);
        if (!is_canonical(family.kind, n, c, perms)) continue;
        ++local_canonical;
        if (c >= local_found) continue;
        FiniteStructure s = family_structure(family.kind, n, c);
        AxiomReport rep = check_axiom(axiom, s, bounds, scheme);
        if (!rep.holds()) local_found = std::min(local_found, c);
      }
#ifdef _OPENMP
#pragma omp critical
#endif
      {
        canonical += local_canonical;
        found_code = std::min(found_code, local_found);
      }
    }
    (void)parallel;

    row.canonical = canonical;
    out.counts.push_back(row);

    if (found_code < total && !out.violation) {
      FiniteStructure s = family_structure(family.kind, n, found_code);
      AxiomReport rep = check_axiom(axiom, s, bounds, scheme);
      out.witness_code = found_code;
      out.witness_n = n;
      out.witness_structure = structure_text(family.kind, n, found_code);
      out.violation = rep.violations.at(0);
    }
  }
  return out;
}

}  // namespace typlab
