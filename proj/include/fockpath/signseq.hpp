#pragma once

// Sign sequences and bracket pairings.
//
// A position set is a sorted vector of distinct integers. Pairing runs on
// the path that draws openers as up-strokes and closers as down-strokes;
// an opener is paired with the next closer to its right at the same level.

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fockpath {

using PositionSet = std::vector<int>;

/// Sorts and deduplicates.
PositionSet make_positions(std::vector<int> values);
PositionSet set_union(const PositionSet& a, const PositionSet& b);
PositionSet set_difference(const PositionSet& a, const PositionSet& b);
PositionSet set_intersection(const PositionSet& a, const PositionSet& b);
bool contains(const PositionSet& s, int x);
bool is_subset(const PositionSet& sub, const PositionSet& super);
PositionSet with(const PositionSet& s, int x);
PositionSet without(const PositionSet& s, int x);
/// Elements strictly above / strictly below / strictly between.
PositionSet above(const PositionSet& s, int c);
PositionSet below(const PositionSet& s, int c);
PositionSet between(const PositionSet& s, int lo, int hi);
std::string str(const PositionSet& s);
/// "2,3,5" -> {2,3,5}; empty string -> {}.
PositionSet parse_positions(const std::string& text);

struct Matching {
  std::vector<std::pair<int, int>> pairs;  // (opener, closer), sorted by opener
  PositionSet unpaired_openers;
  PositionSet unpaired_closers;
  PositionSet self_paired;

  std::optional<int> closer_of(int opener) const;
  std::optional<int> opener_of(int closer) const;
};

/// Bracket matching of openers against closers. Common elements are paired
/// with themselves and matching runs on the two set differences.
Matching match_pairs(const PositionSet& openers, const PositionSet& closers);

/// A ↠ B: every closer is paired.
bool onto(const PositionSet& openers, const PositionSet& closers);
/// A ↔ B: every element on both sides is paired.
bool bijective(const PositionSet& openers, const PositionSet& closers);

/// Interval endpoint for subsequence extraction.
struct Bound {
  enum class Kind { unbounded, open, closed };
  Kind kind = Kind::unbounded;
  int value = 0;

  static Bound none() { return {}; }
  static Bound open(int v) { return {Kind::open, v}; }
  static Bound closed(int v) { return {Kind::closed, v}; }
};

/// T = (T⁺, T⁻) with T⁺ ∩ T⁻ = ∅.
class SignSequence {
 public:
  SignSequence() = default;
  /// Throws std::invalid_argument when plus and minus intersect.
  SignSequence(PositionSet plus, PositionSet minus);

  const PositionSet& plus() const { return plus_; }
  const PositionSet& minus() const { return minus_; }
  /// T^± in ascending order.
  PositionSet positions() const;
  /// +1, -1, or 0 when p ∉ T^±.
  int sign_at(int p) const;
  /// |T| = |T⁺| - |T⁻|.
  int weight() const;
  bool empty() const { return plus_.empty() && minus_.empty(); }

  /// T↑d = (T⁺ ∪ {d}, T⁻ \ {d}).
  SignSequence raise(int d) const;
  SignSequence subsequence(Bound lower, Bound upper) const;
  /// T_a = T ∩ (a, ∞)
  SignSequence after(int a) const { return subsequence(Bound::open(a), Bound::none()); }
  /// T_a^b = T ∩ (a, b)
  SignSequence window(int a, int b) const { return subsequence(Bound::open(a), Bound::open(b)); }

  /// Height of Γ(T) just after stroke p (the path starts at height 0 before
  /// the first stroke). For p ∉ T^± this is the height at the gap after p.
  int height_after(int p) const;

  std::string str() const;

  friend bool operator==(const SignSequence&, const SignSequence&) = default;

 private:
  PositionSet plus_;
  PositionSet minus_;
};

/// V(T) = { v ∈ T⁻ : (T⁺)^{>v} ↠ (T⁻)^{>v} }.
PositionSet valley_set(const SignSequence& t);
/// U⁺(T): up-strokes of Γ(T) left unpaired.
PositionSet unpaired_plus(const SignSequence& t);
/// P⁺(T): up-strokes of Γ(T) that are paired.
PositionSet paired_plus(const SignSequence& t);

/// (A,B) ≼ (C,D) iff |A|-|B| = |C|-|D| and (B ∪ C) ↠ (A ∪ D).
bool preceq(const PositionSet& a, const PositionSet& b, const PositionSet& c, const PositionSet& d);

}  // namespace fockpath
