#pragma once

// Partitions, Young-diagram nodes, residues, beta-sets, dominance, the
// Jantzen bead-swap step and the residue-class profiles used to order
// partitions relative to a fixed residue.

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace fockpath {

/// A weakly decreasing sequence of positive integers. The empty sequence is
/// the partition of 0.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless `parts` is weakly decreasing and
  /// positive.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // |λ|
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// 1-based row length; 0 beyond the last row.
  int row(int i) const;

  /// Comma-separated parts; "" for the empty partition.
  std::string str() const;
  /// Accepts "4,2,1"; "" and "0" both denote the empty partition.
  static Partition parse(std::string_view text);

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

std::vector<Partition> partitions_of(int n);

struct Node {
  int row = 0;  // 1-based
  int col = 0;  // 1-based
  friend auto operator<=>(const Node&, const Node&) = default;
};

/// (col - row) mod e, normalised into {0, ..., e-1}.
int residue(const Node& node, int e);
int normalize_residue(int r, int e);

/// Adds/removes a single node; throws std::invalid_argument if the result is
/// not a partition.
Partition add_node(const Partition& lambda, const Node& node);
Partition remove_node(const Partition& lambda, const Node& node);

struct BoundaryNodes {
  std::vector<Node> removable;  // R_r(λ), column ascending
  std::vector<Node> indent;     // I_r(λ), column ascending
};

BoundaryNodes boundary_nodes(const Partition& lambda, int e, int r);
/// All addable / removable nodes regardless of residue, column ascending.
std::vector<Node> addable_nodes(const Partition& lambda);
std::vector<Node> removable_nodes(const Partition& lambda);

struct BetaSet {
  int t = 0;
  std::vector<int> elements;  // strictly decreasing
  friend bool operator==(const BetaSet&, const BetaSet&) = default;
};

/// {λ_i + t - i : 1 <= i <= t}; throws std::invalid_argument when t < l(λ).
BetaSet beta_set(const Partition& lambda, int t);
/// Inverse of beta_set. Throws std::invalid_argument on a malformed set.
Partition partition_from_beta(const BetaSet& beta);
/// B_{t+1}(λ) computed from B_t(λ).
BetaSet shift_beta(const BetaSet& beta);

/// λ dominates-or-equals μ: equal sizes, l(λ) <= l(μ) and every partial sum
/// of λ is at least the matching partial sum of μ.
bool dominates(const Partition& lambda, const Partition& mu);

/// All τ with λ → τ in a single Jantzen step, sorted.
std::vector<Partition> jantzen_successors(const Partition& lambda, int e);

/// Partitions reachable from λ by at most `max_steps` Jantzen steps
/// (including λ itself). Bounded search; intended for tests.
std::vector<Partition> jantzen_reachable(const Partition& lambda, int e, int max_steps);

/// The profile s_{λ,r,t}. values[i] holds s(i); entries past the end are 0.
struct ResidueProfile {
  int r = 0;
  int t = 0;
  std::vector<int> values;

  int at(int i) const {
    return (i >= 0 && static_cast<std::size_t>(i) < values.size()) ? values[static_cast<std::size_t>(i)] : 0;
  }
};

ResidueProfile s_profile(const Partition& lambda, int e, int r, int t);

enum class ClassOrder { less, equal, greater };

/// Compares the ~_r classes of λ and τ in the total order on classes.
ClassOrder class_compare(const Partition& lambda, const Partition& tau, int e, int r);

std::string to_string(ClassOrder order);

}  // namespace fockpath
