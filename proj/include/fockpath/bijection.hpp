#pragma once

// The index sets L_A^B(T) and R_A^B(T) whose generating functions are the
// two consistency sums, and a recursive norm-preserving bijection between
// them.
//
// The bijection reduces an instance until B is empty. Each reduction is
// realized as a map between enumerated sets, and every step is checked:
// images must land in the target set, must not collide, and must cover it.
// A failed check raises ConstructionError naming the instance.

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "fockpath/closedform.hpp"
#include "fockpath/latticepath.hpp"
#include "fockpath/signseq.hpp"

namespace fockpath {

struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LElement {
  int c = 0;
  WellNestedCollection omega;
  int norm = 0;
};

struct RElement {
  int d = 0;
  int dprime = 0;
  WellNestedCollection varpi;
  int norm = 0;
};

/// (lo, hi, flat) of each path, in opener order. Identifies a collection
/// once the ambient sequence is fixed.
using CollectionKey = std::vector<std::tuple<int, int, PositionSet>>;
CollectionKey key_of(const WellNestedCollection& w);
using LKey = std::pair<int, CollectionKey>;
using RKey = std::tuple<int, int, CollectionKey>;
LKey key_of(const LElement& x);
RKey key_of(const RElement& y);

/// Both throw PreconditionError unless A ⊆ T⁻, B ⊆ T⁺, |A| = |B| + 1, A ↠ B.
std::vector<LElement> enumerate_L(const SignSequence& t, const PositionSet& a, const PositionSet& b);
std::vector<RElement> enumerate_R(const SignSequence& t, const PositionSet& a, const PositionSet& b);

/// domain = enumerate_L(T, A, B); image[i] is the partner of domain[i].
struct BijectionMap {
  std::vector<LElement> domain;
  std::vector<RElement> image;
};

/// Throws ConstructionError when a reduction step fails its checks.
BijectionMap bijection_map(const SignSequence& t, const PositionSet& a, const PositionSet& b);

/// Total, injective, onto R, and norm-preserving.
bool is_norm_preserving_bijection(const BijectionMap& m, const std::vector<RElement>& codomain);

struct NormMultisets {
  std::vector<int> left;   // sorted
  std::vector<int> right;  // sorted
  bool equal() const { return left == right; }
};
NormMultisets norm_multisets(const SignSequence& t, const PositionSet& a, const PositionSet& b);
bool verify_norm_multisets(const SignSequence& t, const PositionSet& a, const PositionSet& b);

/// Every (A, B) with A ⊆ T⁻, B ⊆ T⁺, |A| = |B| + 1 and A ↠ B.
std::vector<std::pair<PositionSet, PositionSet>> admissible_pairs(const SignSequence& t);

std::string describe_instance(const SignSequence& t, const PositionSet& a, const PositionSet& b);

}  // namespace fockpath
