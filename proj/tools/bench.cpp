// Compares the serial reference kernels against the OpenMP-parallel ones on
// the two search-heavy workloads: definable-set enumeration and
// counterexample search over a structure family.

#include <chrono>
#include <cstdio>
#include <string>

#include "typlab/enumeration.hpp"
#include "typlab/family.hpp"
#include "typlab/structure.hpp"

using namespace typlab;

namespace {

double seconds(std::chrono::steady_clock::time_point a,
               std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

template <typename F>
double timed(F&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return seconds(t0, std::chrono::steady_clock::now());
}

const char* kPq6 =
    "universe 6\n"
    "relation P 1: (0) (1)\n"
    "relation Q 1: (2) (3)\n";

}  // namespace

int main(int argc, char** argv) {
  int budget = argc > 1 ? std::stoi(argv[1]) : 10;
  std::printf("threads: %d\n\n", hardware_threads());

  {
    FiniteStructure s = load_structure(kPq6, "pq6");
    EnumOptions serial{budget, 3, ExecMode::Serial};
    EnumOptions parallel{budget, 3, ExecMode::Parallel};
    std::size_t count_serial = 0, count_parallel = 0;
    double ts = timed([&] { count_serial = enumerate_definable_sets(s, {}, serial).size(); });
    double tp = timed([&] { count_parallel = enumerate_definable_sets(s, {}, parallel).size(); });
    std::printf("enumerate_definable_sets pq6 budget=%d\n", budget);
    std::printf("  serial   %8.3fs  (%zu extensions)\n", ts, count_serial);
    std::printf("  parallel %8.3fs  (%zu extensions)  speedup %.2fx\n", tp, count_parallel,
                tp > 0 ? ts / tp : 0.0);
    if (count_serial != count_parallel) {
      std::printf("  MISMATCH\n");
      return 1;
    }
  }

  {
    StructureFamilySpec family{FamilyKind::Digraphs, 1, 4};
    AxiomBounds bounds{2, budget};
    std::string vs, vp;
    double ts = timed([&] {
      SearchOutcome o = search_counterexample(AxiomId::T5, family, bounds, {}, ExecMode::Serial);
      vs = o.violation ? std::to_string(*o.witness_code) : "none";
    });
    double tp = timed([&] {
      SearchOutcome o =
          search_counterexample(AxiomId::T5, family, bounds, {}, ExecMode::Parallel);
      vp = o.violation ? std::to_string(*o.witness_code) : "none";
    });
    std::printf("\nsearch_counterexample T5 digraphs:1..4 arity=%d\n", bounds.arity);
    std::printf("  serial   %8.3fs  (witness %s)\n", ts, vs.c_str());
    std::printf("  parallel %8.3fs  (witness %s)  speedup %.2fx\n", tp, vp.c_str(),
                tp > 0 ? ts / tp : 0.0);
    if (vs != vp) {
      std::printf("  MISMATCH\n");
      return 1;
    }
  }
  return 0;
}
