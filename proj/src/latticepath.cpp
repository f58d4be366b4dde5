#include "fockpath/latticepath.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fockpath {

int LatticedPath::norm() const {
  if (degenerate()) return 0;
  return 1 + static_cast<int>(positions.size() - flat.size());
}

int LatticedPath::step(std::size_t i) const { return is_flat(positions[i]) ? 0 : signs[i]; }

std::vector<int> LatticedPath::heights() const {
  std::vector<int> out(positions.size());
  int h = start_height;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    h += step(i);
    out[i] = h;
  }
  return out;
}

int LatticedPath::height_after(int p) const {
  if (p == lo) return start_height;
  int h = start_height;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    h += step(i);
    if (positions[i] == p) return h;
  }
  throw std::out_of_range("height_after: position " + std::to_string(p) + " is outside the path");
}

int LatticedPath::down_count() const {
  int n = 0;
  for (std::size_t i = 0; i < positions.size(); ++i)
    if (step(i) < 0) ++n;
  return n;
}

std::vector<std::pair<int, int>> LatticedPath::flattened_pairs() const {
  PositionSet ups, downs;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (!is_flat(positions[i])) continue;
    (signs[i] > 0 ? ups : downs).push_back(positions[i]);
  }
  return match_pairs(ups, downs).pairs;
}

namespace {

struct Window {
  std::vector<int> positions;
  std::vector<int> signs;
};

Window window_of(const SignSequence& t, int lo, int hi) {
  Window w;
  for (int p : t.positions()) {
    if (p <= lo || p >= hi) continue;
    w.positions.push_back(p);
    w.signs.push_back(t.sign_at(p));
  }
  return w;
}

LatticedPath bare_path(const SignSequence& t, int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("latticed path window is reversed");
  LatticedPath p;
  p.lo = lo;
  p.hi = hi;
  if (lo == hi) return p;
  auto w = window_of(t, lo, hi);
  p.positions = std::move(w.positions);
  p.signs = std::move(w.signs);
  p.start_height = t.height_after(lo);
  return p;
}

// Every maximal run of consecutive flat positions must be a balanced word.
bool valid_flat_runs(const LatticedPath& p) {
  int depth = 0;
  bool in_run = false;
  for (std::size_t i = 0; i < p.positions.size(); ++i) {
    if (!p.is_flat(p.positions[i])) {
      if (in_run && depth != 0) return false;
      in_run = false;
      depth = 0;
      continue;
    }
    in_run = true;
    depth += p.signs[i];
    if (depth < 0) return false;
  }
  return depth == 0;
}

struct PairForest {
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<std::size_t>> children;
  std::vector<std::size_t> roots;
};

PairForest forest_of(const Window& w) {
  PositionSet ups, downs;
  for (std::size_t i = 0; i < w.positions.size(); ++i) (w.signs[i] > 0 ? ups : downs).push_back(w.positions[i]);
  PairForest f;
  f.pairs = match_pairs(ups, downs).pairs;  // sorted by opener: parents precede children
  f.children.resize(f.pairs.size());
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < f.pairs.size(); ++i) {
    while (!stack.empty() && f.pairs[stack.back()].second < f.pairs[i].first) stack.pop_back();
    if (stack.empty())
      f.roots.push_back(i);
    else
      f.children[stack.back()].push_back(i);
    stack.push_back(i);
  }
  return f;
}

void collect_subtree(const PairForest& f, std::size_t node, PositionSet& out) {
  out.push_back(f.pairs[node].first);
  out.push_back(f.pairs[node].second);
  for (auto c : f.children[node]) collect_subtree(f, c, out);
}

std::vector<PositionSet> ideals_of_forest(const PairForest& f, const std::vector<std::size_t>& nodes);

// Ideals of one tree: either the root is flat (so is its whole subtree),
// or the root stays and the children choose independently.
std::vector<PositionSet> ideals_of_tree(const PairForest& f, std::size_t node) {
  auto out = ideals_of_forest(f, f.children[node]);
  PositionSet all;
  collect_subtree(f, node, all);
  out.push_back(make_positions(std::move(all)));
  return out;
}

std::vector<PositionSet> ideals_of_forest(const PairForest& f, const std::vector<std::size_t>& nodes) {
  std::vector<PositionSet> acc{PositionSet{}};
  for (auto n : nodes) {
    auto sub = ideals_of_tree(f, n);
    std::vector<PositionSet> next;
    next.reserve(acc.size() * sub.size());
    for (const auto& x : acc)
      for (const auto& y : sub) next.push_back(set_union(x, y));
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

LatticedPath make_path(const SignSequence& ambient, int lo, int hi, PositionSet flat) {
  auto p = bare_path(ambient, lo, hi);
  flat = make_positions(std::move(flat));
  if (!is_subset(flat, p.positions)) throw std::invalid_argument("flat positions lie outside the window");
  p.flat = std::move(flat);
  if (!valid_flat_runs(p)) throw std::invalid_argument("flat positions do not form flattened ridges");
  return p;
}

LatticedPath descending_path(const SignSequence& ambient, int lo, int hi) {
  auto p = bare_path(ambient, lo, hi);
  PositionSet flat;
  for (const auto& [u, d] : forest_of({p.positions, p.signs}).pairs) {
    flat.push_back(u);
    flat.push_back(d);
  }
  p.flat = make_positions(std::move(flat));
  return p;
}

std::vector<LatticedPath> enumerate_latticed(const SignSequence& ambient, int lo, int hi) {
  auto base = bare_path(ambient, lo, hi);
  if (base.degenerate()) return {base};
  auto forest = forest_of({base.positions, base.signs});
  std::vector<LatticedPath> out;
  for (auto& flat : ideals_of_forest(forest, forest.roots)) {
    auto p = base;
    p.flat = std::move(flat);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<LatticedPath> enumerate_latticed(const SignSequence& window) {
  const auto pos = window.positions();
  const int lo = pos.empty() ? 0 : pos.front() - 1;
  const int hi = pos.empty() ? 1 : pos.back() + 1;
  return enumerate_latticed(window, lo, hi);
}

std::vector<LatticedPath> enumerate_latticed_slow(const SignSequence& ambient, int lo, int hi) {
  auto base = bare_path(ambient, lo, hi);
  if (base.degenerate()) return {base};
  std::set<PositionSet> seen{PositionSet{}};
  std::vector<PositionSet> queue{PositionSet{}};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    auto cur = base;
    cur.flat = queue[qi];
    // An up stroke followed, after flats only, by a down stroke.
    int last_up = -1;
    for (std::size_t i = 0; i < cur.positions.size(); ++i) {
      const int s = cur.step(i);
      if (s == 0) continue;
      if (s < 0 && last_up >= 0) {
        auto next = with(with(cur.flat, cur.positions[static_cast<std::size_t>(last_up)]), cur.positions[i]);
        if (seen.insert(next).second) queue.push_back(next);
      }
      last_up = s > 0 ? static_cast<int>(i) : -1;
    }
  }
  std::vector<LatticedPath> out;
  for (const auto& flat : seen) {
    auto p = base;
    p.flat = flat;
    out.push_back(std::move(p));
  }
  return out;
}

const LatticedPath& WellNestedCollection::path_of(int a) const {
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (pairs[i].first == a) return paths[i];
  throw std::out_of_range("no path for opener " + std::to_string(a));
}

bool nested_ok(const LatticedPath& outer, const LatticedPath& inner) {
  if (inner.degenerate() || outer.degenerate()) return true;
  if (inner.start_height < outer.height_after(inner.lo)) return false;
  const auto hs = inner.heights();
  for (std::size_t i = 0; i < inner.positions.size(); ++i)
    if (hs[i] < outer.height_after(inner.positions[i])) return false;
  return true;
}

namespace {

bool encloses(const std::pair<int, int>& outer, const std::pair<int, int>& inner) {
  return outer.first < inner.first && inner.second < outer.second;
}

}  // namespace

bool is_well_nested(const WellNestedCollection& w) {
  for (std::size_t i = 0; i < w.pairs.size(); ++i)
    for (std::size_t j = 0; j < w.pairs.size(); ++j)
      if (encloses(w.pairs[i], w.pairs[j]) && !nested_ok(w.paths[i], w.paths[j])) return false;
  return true;
}

WellNestedCollection make_collection(std::vector<std::pair<int, int>> pairs, std::vector<LatticedPath> paths) {
  if (pairs.size() != paths.size()) throw std::invalid_argument("collection: pairs and paths differ in length");
  std::vector<std::size_t> order(pairs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return pairs[x].first < pairs[y].first; });
  WellNestedCollection w;
  for (auto i : order) {
    if (paths[i].lo != pairs[i].first || paths[i].hi != pairs[i].second)
      throw std::invalid_argument("collection: path window does not match its pair");
    w.pairs.push_back(pairs[i]);
    w.norm += paths[i].norm();
    w.paths.push_back(std::move(paths[i]));
  }
  if (!is_well_nested(w)) throw std::invalid_argument("collection is not well nested");
  return w;
}

std::vector<WellNestedCollection> enumerate_wellnested(const SignSequence& t, const PositionSet& a,
                                                       const PositionSet& b) {
  for (int x : set_difference(a, b))
    if (!contains(t.minus(), x)) throw PairingError("opener " + std::to_string(x) + " is not a minus position");
  for (int x : set_difference(b, a))
    if (!contains(t.plus(), x)) throw PairingError("closer " + std::to_string(x) + " is not a plus position");
  const auto m = match_pairs(a, b);
  if (!m.unpaired_openers.empty() || !m.unpaired_closers.empty())
    throw PairingError("openers " + str(a) + " and closers " + str(b) + " are not perfectly paired");

  std::vector<std::pair<int, int>> pairs = m.pairs;
  for (int x : m.self_paired) pairs.emplace_back(x, x);
  std::sort(pairs.begin(), pairs.end());

  std::vector<std::vector<LatticedPath>> choices;
  for (const auto& [lo, hi] : pairs) choices.push_back(enumerate_latticed(t, lo, hi));

  // Openers ascending, so every enclosing pair is chosen before the ones inside it.
  std::vector<std::vector<std::size_t>> outer_of(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (encloses(pairs[j], pairs[i])) outer_of[i].push_back(j);

  std::vector<WellNestedCollection> out;
  std::vector<std::size_t> pick(pairs.size(), 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == pairs.size()) {
      WellNestedCollection w;
      w.pairs = pairs;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        w.paths.push_back(choices[k][pick[k]]);
        w.norm += w.paths.back().norm();
      }
      out.push_back(std::move(w));
      return;
    }
    for (std::size_t c = 0; c < choices[i].size(); ++c) {
      bool ok = true;
      for (auto j : outer_of[i])
        if (!nested_ok(choices[j][pick[j]], choices[i][c])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      pick[i] = c;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace fockpath
