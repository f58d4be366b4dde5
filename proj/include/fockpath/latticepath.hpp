#pragma once

// Latticed paths and well-nested collections.
//
// A latticed path over the window (lo, hi) of an ambient sign sequence is
// the generic path Γ on the positions strictly inside the window with some
// strokes replaced by flat segments. The flat set is always a union of
// Γ-matched (up, down) pairs closed under nesting; equivalently every maximal
// run of consecutive flat positions reads as a balanced bracket word.
//
// Heights are absolute: a path starts at the height of the ambient Γ just
// after lo.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fockpath/signseq.hpp"

namespace fockpath {

struct PairingError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct LatticedPath {
  int lo = 0;
  int hi = 0;
  std::vector<int> positions;  // ambient positions in (lo, hi), ascending
  std::vector<int> signs;      // +1 up, -1 down, per position
  PositionSet flat;
  int start_height = 0;

  bool degenerate() const { return lo == hi; }
  /// 1 + number of diagonal strokes; 0 for the degenerate window.
  int norm() const;
  bool is_flat(int p) const { return contains(flat, p); }
  /// Step at index i: +1, -1 or 0 (flat).
  int step(std::size_t i) const;
  /// Height after each position, same length as positions.
  std::vector<int> heights() const;
  /// Height at the vertex after position p; p must be lo or a window position.
  int height_after(int p) const;
  /// Number of down strokes that are not flattened.
  int down_count() const;
  /// The flattened matched pairs, sorted by opener.
  std::vector<std::pair<int, int>> flattened_pairs() const;

  friend bool operator==(const LatticedPath&, const LatticedPath&) = default;
};

/// Builds the path on window (lo, hi) of the ambient sequence with the given
/// flat positions. lo == hi gives the degenerate empty path. Throws
/// std::invalid_argument if lo > hi or if the flat set is not a valid ridge
/// flattening of the window.
LatticedPath make_path(const SignSequence& ambient, int lo, int hi, PositionSet flat = {});

/// The window's generic path with every matched pair flattened.
LatticedPath descending_path(const SignSequence& ambient, int lo, int hi);

/// 𝕃 of the window (lo, hi): one path per nesting-closed set of matched
/// pairs. The generic path comes first.
std::vector<LatticedPath> enumerate_latticed(const SignSequence& ambient, int lo, int hi);
/// 𝕃 of a whole sequence used as its own window.
std::vector<LatticedPath> enumerate_latticed(const SignSequence& window);

/// Reference generator: closure of the generic path under flattening one
/// up·flat*·down plateau at a time. Exponential; for cross-checking only.
std::vector<LatticedPath> enumerate_latticed_slow(const SignSequence& ambient, int lo, int hi);

struct WellNestedCollection {
  std::vector<std::pair<int, int>> pairs;  // (a, π(a)) sorted by a
  std::vector<LatticedPath> paths;         // parallel to pairs
  int norm = 0;

  /// The path attached to opener a; throws std::out_of_range if absent.
  const LatticedPath& path_of(int a) const;
};

/// Ω(T_A^B). Requires bijective(A, B) with A∖B ⊆ T⁻ and B∖A ⊆ T⁺; throws
/// PairingError otherwise. The all-generic collection comes first.
std::vector<WellNestedCollection> enumerate_wellnested(const SignSequence& t, const PositionSet& a,
                                                       const PositionSet& b);

/// The inner path never falls below the outer one on the inner window.
bool nested_ok(const LatticedPath& outer, const LatticedPath& inner);
/// Checks the nesting condition on every nested pair of a collection.
bool is_well_nested(const WellNestedCollection& w);

/// Validates and assembles a collection from its pairs and paths.
WellNestedCollection make_collection(std::vector<std::pair<int, int>> pairs, std::vector<LatticedPath> paths);

enum class RenderFormat { ascii, svg };
RenderFormat parse_render_format(const std::string& name);

/// Deterministic drawing of one path. In SVG the generic path of the same
/// window can be overlaid dashed.
std::string render_path(const LatticedPath& p, RenderFormat fmt, bool generic_overlay = false);
/// Γ(T) of a whole sequence.
std::string render_sequence(const SignSequence& t, RenderFormat fmt);
/// All paths of a collection on the ambient positions, one row block (ascii)
/// or one polyline (svg) per path.
std::string render_collection(const WellNestedCollection& w, RenderFormat fmt);

}  // namespace fockpath
