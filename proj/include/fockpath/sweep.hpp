#pragma once

// Verification sweeps. Each sweep builds its task list up front, then runs
// the same per-task check either in a plain loop (the reference) or under
// OpenMP. Reports merge per-thread results, so both modes agree exactly on
// counts and on the sorted failure list.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fockpath/signseq.hpp"

namespace fockpath {

enum class Exec { serial, parallel };

struct Failure {
  std::string instance;
  std::string detail;
  friend bool operator==(const Failure&, const Failure&) = default;
  friend auto operator<=>(const Failure&, const Failure&) = default;
};

struct SweepReport {
  std::string name;
  long checked = 0;
  std::map<std::string, long> counters;
  std::vector<Failure> failures;  // sorted
  double seconds = 0;

  bool ok() const { return failures.empty(); }
  void fail(std::string instance, std::string detail);
  void merge(const SweepReport& other);
  std::string summary() const;
};

/// All 2^k sign sequences on positions 1..k.
std::vector<SignSequence> sign_sequences_on(int k);

/// v_decomposition against the oracle over e-regular columns |λ| ≤ max_n,
/// every residue and every A ↔ B (including the empty move).
SweepReport sweep_formula(int e, int max_n, Exec exec = Exec::parallel);
/// Branching formula against the G-expansion of f_r(G(λ)) for e-regular λ.
SweepReport sweep_branching(int e, int max_n, Exec exec = Exec::parallel);
/// vN0[v] shape, unit diagonal and first-row removal over all λ.
SweepReport sweep_shape(int e, int max_n, Exec exec = Exec::parallel);
/// Left and right consistency sums over all λ (regular and singular).
SweepReport sweep_consistency(int e, int max_n, Exec exec = Exec::parallel);

/// Norm multisets of L and R on every sign sequence of ≤ max_positions.
SweepReport sweep_bijection_exhaustive(int max_positions, Exec exec = Exec::parallel);
/// The same on `count` seeded random instances of ≤ max_positions.
SweepReport sweep_bijection_random(int count, int max_positions, std::uint64_t seed, Exec exec = Exec::parallel);
/// bijection_map on every instance of ≤ max_positions; failures are logged
/// together with whether the norm multisets disagree.
SweepReport sweep_construction(int max_positions, Exec exec = Exec::parallel);

/// Fast vs slow latticed-path enumeration and the path invariants on every
/// window of ≤ max_positions.
SweepReport sweep_lattice(int max_positions, Exec exec = Exec::parallel);
/// Partial-order axioms of ≼ for |X|, |Y| ≤ max_side.
SweepReport sweep_order(int max_side);
/// Jantzen steps never lower the r-class, for |λ| ≤ max_n.
SweepReport sweep_jantzen(int e, int max_n);

}  // namespace fockpath
