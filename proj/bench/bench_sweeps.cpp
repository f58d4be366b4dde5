// Serial reference loop vs OpenMP for each parallel sweep. Both runs must
// produce identical reports; timings and speedups go to stdout.
// Usage: bench_sweeps [--quick]

#include <omp.h>

#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "fockpath/fockspace.hpp"
#include "fockpath/sweep.hpp"

using namespace fockpath;

namespace {

bool same(const SweepReport& a, const SweepReport& b) {
  return a.checked == b.checked && a.counters == b.counters && a.failures == b.failures;
}

}  // namespace

int main(int argc, char** argv) {
  const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  const int n2 = quick ? 8 : 11, n3 = quick ? 7 : 9, positions = quick ? 7 : 9;

  // The oracle is memoized; warm it so both runs time only the comparison.
  for (int n = 0; n <= n2 + 1; ++n) shared_basis(2).ensure_size(n);
  for (int n = 0; n <= n3; ++n) shared_basis(3).ensure_size(n);

  struct Case {
    std::string name;
    std::function<SweepReport(Exec)> run;
  };
  const std::vector<Case> cases = {
      {"formula e=2", [&](Exec x) { return sweep_formula(2, n2, x); }},
      {"branching e=2", [&](Exec x) { return sweep_branching(2, n2, x); }},
      {"shape e=3", [&](Exec x) { return sweep_shape(3, n3, x); }},
      {"consistency e=3", [&](Exec x) { return sweep_consistency(3, n3, x); }},
      {"bijection multisets", [&](Exec x) { return sweep_bijection_exhaustive(positions, x); }},
      {"bijection random", [&](Exec x) { return sweep_bijection_random(quick ? 500 : 3000, 12, 7, x); }},
      {"construction", [&](Exec x) { return sweep_construction(positions, x); }},
      {"lattice", [&](Exec x) { return sweep_lattice(positions + 1, x); }},
  };

  std::printf("threads %d\n", omp_get_max_threads());
  std::printf("%-22s %10s %10s %10s %8s %s\n", "sweep", "checked", "serial_s", "parallel_s", "speedup", "agree");
  bool all_same = true;
  for (const auto& c : cases) {
    const auto s = c.run(Exec::serial);
    const auto p = c.run(Exec::parallel);
    const bool agree = same(s, p);
    all_same = all_same && agree;
    std::printf("%-22s %10ld %10.3f %10.3f %8.2f %s\n", c.name.c_str(), s.checked, s.seconds, p.seconds,
                p.seconds > 0 ? s.seconds / p.seconds : 0.0, agree ? "yes" : "NO");
  }
  return all_same ? 0 : 1;
}
