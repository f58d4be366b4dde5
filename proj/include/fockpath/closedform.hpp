#pragma once

// The closed formulas: decomposition numbers as sums over well-nested
// latticed paths, branching coefficients of f_r on the canonical basis, and
// the two sides of the consistency identity that ties them together.
//
// Positions are columns. T_r(λ) has the removable r-nodes as plus positions
// and the indent r-nodes as minus positions. A move λ↑A↓B adds the indent
// nodes in columns A and removes the removable nodes in columns B; elements
// common to A and B cancel.

#include <optional>
#include <stdexcept>

#include "fockpath/latticepath.hpp"
#include "fockpath/laurent.hpp"
#include "fockpath/partition.hpp"
#include "fockpath/signseq.hpp"

namespace fockpath {

struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct MoveSpec {
  Partition lambda;
  int e = 2;
  int r = 0;
  PositionSet A;
  PositionSet B;

  /// λ↑A↓B; throws std::invalid_argument if a column is not an indent /
  /// removable r-node.
  Partition result() const;
};

/// T_r(λ).
SignSequence sign_sequence_of(const Partition& lambda, int e, int r);

Partition apply_move(const Partition& lambda, int e, int r, const PositionSet& a, const PositionSet& b);

/// The (r, A, B) with A ∩ B = ∅ turning λ into ν, or nullopt when the diagram
/// difference is not a single-residue move. λ == ν gives r = 0 and empty sets.
/// Throws std::invalid_argument when the sizes differ.
std::optional<MoveSpec> detect_move(const Partition& lambda, const Partition& nu, int e);

struct Decomposition {
  LaurentPolynomial poly;
  std::size_t paths = 0;
};

/// d_{λ↑A↓B, λ}(v) as Σ_{ω ∈ Ω(T_A^B)} v^{‖ω‖}; zero unless A ↔ B.
Decomposition v_decomposition(const MoveSpec& m);
Decomposition v_decomposition(const SignSequence& t, const PositionSet& a, const PositionSet& b);

/// a_{λ↑A↓B, λ}(v). Requires |A| = |B| + 1 and A ↠ B (PreconditionError).
LaurentPolynomial branching_coefficient(const Partition& lambda, int e, int r, const PositionSet& a,
                                        const PositionSet& b);
LaurentPolynomial branching_formula(const SignSequence& t, const PositionSet& a, const PositionSet& b);

struct ConsistencyPair {
  LaurentPolynomial left;
  LaurentPolynomial right;
};

/// Throws PreconditionError unless A ⊆ T⁻, B ⊆ T⁺, |A| = |B| + 1, A ↠ B.
void check_branching_instance(const SignSequence& t, const PositionSet& a, const PositionSet& b);

/// Both sides of the consistency identity, each summed over its own index set.
ConsistencyPair consistency_pair(const SignSequence& t, const PositionSet& a, const PositionSet& b);
ConsistencyPair consistency_pair(const Partition& lambda, int e, int r, const PositionSet& a, const PositionSet& b);

/// Σ_{ω ∈ Ω} v^{‖ω‖} for the well-nested collections of (T, A, B).
LaurentPolynomial wellnested_polynomial(const SignSequence& t, const PositionSet& a, const PositionSet& b);

/// Exponent shifts of the two sums.
int left_shift(const SignSequence& t, const PositionSet& a, const PositionSet& b, int c);
int right_shift(const SignSequence& t, int d, int dprime);

}  // namespace fockpath
