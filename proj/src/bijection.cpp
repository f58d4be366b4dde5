#include "fockpath/bijection.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace fockpath {

CollectionKey key_of(const WellNestedCollection& w) {
  CollectionKey key;
  for (const auto& p : w.paths) key.emplace_back(p.lo, p.hi, p.flat);
  return key;
}

LKey key_of(const LElement& x) { return {x.c, key_of(x.omega)}; }
RKey key_of(const RElement& y) { return {y.d, y.dprime, key_of(y.varpi)}; }

std::string describe_instance(const SignSequence& t, const PositionSet& a, const PositionSet& b) {
  return "T=" + t.str() + " A=" + str(a) + " B=" + str(b);
}

std::vector<LElement> enumerate_L(const SignSequence& t, const PositionSet& a, const PositionSet& b) {
  check_branching_instance(t, a, b);
  std::vector<LElement> out;
  for (int c : set_difference(set_union(t.plus(), a), b)) {
    const auto bc = with(b, c);
    if (!onto(a, bc)) continue;
    const int shift = left_shift(t, a, b, c);
    for (auto& w : enumerate_wellnested(t, a, bc)) {
      const int norm = shift + w.norm;
      out.push_back({c, std::move(w), norm});
    }
  }
  return out;
}

std::vector<RElement> enumerate_R(const SignSequence& t, const PositionSet& a, const PositionSet& b) {
  check_branching_instance(t, a, b);
  std::vector<RElement> out;
  const auto unpaired = unpaired_plus(t);
  for (int d : valley_set(t)) {
    const auto bd = with(b, d);
    if (!onto(a, bd)) continue;
    const auto omegas = enumerate_wellnested(t.raise(d), a, bd);
    std::vector<int> dprimes{d};
    for (int u : above(unpaired, d)) dprimes.push_back(u);
    for (int dp : dprimes) {
      const int shift = right_shift(t, d, dp);
      for (const auto& w : omegas) out.push_back({d, dp, w, shift + w.norm});
    }
  }
  return out;
}

std::vector<std::pair<PositionSet, PositionSet>> admissible_pairs(const SignSequence& t) {
  const auto& minus = t.minus();
  const auto& plus = t.plus();
  if (minus.size() > 20 || plus.size() > 20) throw std::invalid_argument("admissible_pairs: sequence too long");
  std::vector<std::pair<PositionSet, PositionSet>> out;
  for (unsigned ma = 1; ma < (1u << minus.size()); ++ma) {
    PositionSet a;
    for (std::size_t i = 0; i < minus.size(); ++i)
      if (ma >> i & 1u) a.push_back(minus[i]);
    for (unsigned mb = 0; mb < (1u << plus.size()); ++mb) {
      if (static_cast<std::size_t>(__builtin_popcount(mb)) + 1 != a.size()) continue;
      PositionSet b;
      for (std::size_t i = 0; i < plus.size(); ++i)
        if (mb >> i & 1u) b.push_back(plus[i]);
      if (onto(a, b)) out.emplace_back(a, std::move(b));
    }
  }
  return out;
}

NormMultisets norm_multisets(const SignSequence& t, const PositionSet& a, const PositionSet& b) {
  NormMultisets out;
  for (const auto& x : enumerate_L(t, a, b)) out.left.push_back(x.norm);
  for (const auto& y : enumerate_R(t, a, b)) out.right.push_back(y.norm);
  std::sort(out.left.begin(), out.left.end());
  std::sort(out.right.begin(), out.right.end());
  return out;
}

bool verify_norm_multisets(const SignSequence& t, const PositionSet& a, const PositionSet& b) {
  return norm_multisets(t, a, b).equal();
}

bool is_norm_preserving_bijection(const BijectionMap& m, const std::vector<RElement>& codomain) {
  if (m.domain.size() != m.image.size() || m.image.size() != codomain.size()) return false;
  std::set<RKey> seen;
  for (std::size_t i = 0; i < m.image.size(); ++i) {
    if (m.domain[i].norm != m.image[i].norm) return false;
    if (!seen.insert(key_of(m.image[i])).second) return false;
  }
  for (const auto& y : codomain)
    if (!seen.count(key_of(y))) return false;
  return true;
}

namespace {

constexpr int kMaxDepth = 256;

struct Instance {
  SignSequence t;
  PositionSet a;
  PositionSet b;
};

struct Sets {
  std::vector<LElement> L;
  std::vector<RElement> R;
  std::map<LKey, std::size_t> lindex;
  std::map<RKey, std::size_t> rindex;
};

Sets sets_of(const Instance& in) {
  Sets s;
  s.L = enumerate_L(in.t, in.a, in.b);
  s.R = enumerate_R(in.t, in.a, in.b);
  for (std::size_t i = 0; i < s.L.size(); ++i) s.lindex.emplace(key_of(s.L[i]), i);
  for (std::size_t i = 0; i < s.R.size(); ++i) s.rindex.emplace(key_of(s.R[i]), i);
  return s;
}

[[noreturn]] void fail(const Instance& in, const std::string& what) {
  throw ConstructionError(describe_instance(in.t, in.a, in.b) + ": " + what);
}

std::string key_str(const CollectionKey& key) {
  std::string out = "[";
  for (const auto& [lo, hi, flat] : key)
    out += "(" + std::to_string(lo) + "," + std::to_string(hi) + " flat " + str(flat) + ")";
  return out + "]";
}

std::size_t find_L(const Instance& in, const Sets& s, int c, const CollectionKey& key, const char* step) {
  auto it = s.lindex.find({c, key});
  if (it == s.lindex.end())
    fail(in, std::string(step) + " image c=" + std::to_string(c) + " " + key_str(key) + " is not in L");
  return it->second;
}

std::size_t find_R(const Instance& in, const Sets& s, int d, int dp, const CollectionKey& key, const char* step) {
  auto it = s.rindex.find({d, dp, key});
  if (it == s.rindex.end())
    fail(in, std::string(step) + " image d=" + std::to_string(d) + " d'=" + std::to_string(dp) + " " + key_str(key) +
                 " is not in R");
  return it->second;
}

using Entry = std::tuple<int, int, PositionSet>;

std::optional<std::size_t> index_by_lo(const CollectionKey& key, int lo) {
  for (std::size_t i = 0; i < key.size(); ++i)
    if (std::get<0>(key[i]) == lo) return i;
  return std::nullopt;
}

std::optional<std::size_t> index_by_hi(const CollectionKey& key, int hi) {
  for (std::size_t i = 0; i < key.size(); ++i)
    if (std::get<1>(key[i]) == hi && std::get<0>(key[i]) != hi) return i;
  return std::nullopt;
}

void normalize(CollectionKey& key) { std::sort(key.begin(), key.end()); }

// Adds the adjacent flat pair (b1, a2) to every window strictly straddling b1.
CollectionKey insert_flats(CollectionKey key, int b1, int a2) {
  for (auto& [lo, hi, flat] : key)
    if (lo < b1 && b1 < hi) flat = with(with(flat, b1), a2);
  return key;
}

std::vector<std::size_t> solve(const Instance& in, const Sets& s, int depth);

std::vector<std::size_t> solve_base(const Instance& in, const Sets& s) {
  const SignSequence& t = in.t;
  const int a = in.a.front();
  const auto valleys = valley_set(t);
  const auto paired = paired_plus(t);
  const auto unpaired = unpaired_plus(t);
  auto next_valley = [&](int x) {
    auto v = above(valleys, x);
    if (v.empty()) fail(in, "no valley above " + std::to_string(x));
    return v.front();
  };
  // The window (lo, d) of T↑d with every matched pair flattened; no up stroke may survive.
  auto descending_flats = [&](const SignSequence& td, int lo, int d) {
    auto p = descending_path(td, lo, d);
    for (std::size_t i = 0; i < p.positions.size(); ++i)
      if (p.signs[i] > 0 && !p.is_flat(p.positions[i]))
        fail(in, "descending path on (" + std::to_string(lo) + "," + std::to_string(d) + ") keeps an up stroke");
    return p.flat;
  };

  std::vector<std::size_t> out;
  for (const auto& x : s.L) {
    const int c = x.c;
    const auto& flat = x.omega.paths.front().flat;
    if (c == a) {
      if (contains(valleys, a)) {
        out.push_back(find_R(in, s, a, a, {Entry{a, a, {}}}, "base c=a"));
      } else {
        const int d = next_valley(a);
        out.push_back(find_R(in, s, d, d, {Entry{a, d, descending_flats(t.raise(d), a, d)}}, "base c=a"));
      }
    } else if (contains(paired, c)) {
      const int d = next_valley(c);
      auto f = set_union(flat, descending_flats(t.raise(d), c, d));
      out.push_back(find_R(in, s, d, d, {Entry{a, d, f}}, "base paired c"));
    } else if (contains(unpaired, c)) {
      // Cut γ at its last down stroke; nothing of γ remains if it has none.
      int d = a;
      for (int m : between(t.minus(), a, c))
        if (!contains(flat, m)) d = m;
      const CollectionKey key = d == a ? CollectionKey{Entry{a, a, {}}} : CollectionKey{Entry{a, d, below(flat, d)}};
      out.push_back(find_R(in, s, d, c, key, "base unpaired c"));
    } else {
      fail(in, "base case met c=" + std::to_string(c) + " outside T+ and A");
    }
  }
  return out;
}

std::optional<std::pair<int, int>> forced_pair(const Instance& in) {
  for (int b : in.b) {
    auto lower = below(in.a, b);
    if (lower.empty()) continue;
    const int a = lower.back();
    if (between(in.t.plus(), a, b).empty()) return std::pair{a, b};
  }
  return std::nullopt;
}

std::vector<std::size_t> solve_forced(const Instance& in, const Sets& s, int a0, int b0, int depth) {
  const SignSequence& t = in.t;
  const Instance sub{t, without(in.a, a0), without(in.b, b0)};
  const Sets ss = sets_of(sub);
  const auto chi = solve(sub, ss, depth + 1);
  const int shift = 1 - t.window(a0, b0).weight();

  std::vector<std::size_t> phi;
  for (const auto& x : s.L) {
    auto key = key_of(x.omega);
    auto i = index_by_lo(key, a0);
    if (!i) fail(in, "no path at a0");
    const auto [lo, hi, f] = key[*i];
    if (x.c != a0 && hi != b0) fail(in, "a0 is not paired with b0 for c=" + std::to_string(x.c));
    key.erase(key.begin() + static_cast<std::ptrdiff_t>(*i));
    const int c = x.c == a0 ? b0 : x.c;
    const auto j = find_L(sub, ss, c, key, "forced phi");
    if (x.norm - ss.L[j].norm != shift) fail(in, "forced phi shifts norms unevenly");
    phi.push_back(j);
  }

  std::map<std::size_t, std::size_t> psi_inverse;
  for (std::size_t ri = 0; ri < s.R.size(); ++ri) {
    const auto& y = s.R[ri];
    const int d = y.d;
    auto key = key_of(y.varpi);
    auto i = index_by_lo(key, a0);
    if (!i) fail(in, "no path at a0 on the right");
    if (d < a0 || d > b0) {
      if (std::get<1>(key[*i]) != b0) fail(in, "a0 is not paired with b0 for d=" + std::to_string(d));
      key.erase(key.begin() + static_cast<std::ptrdiff_t>(*i));
    } else {
      // d = a0 or d inside (a0, b0): drop a0's path and cut the path that
      // reaches b0 back to d.
      key.erase(key.begin() + static_cast<std::ptrdiff_t>(*i));
      auto k = index_by_hi(key, b0);
      if (!k) fail(in, "no path reaches b0 for d=" + std::to_string(d));
      auto& [lo, hi, f] = key[*k];
      if (!between(f, d - 1, b0).empty()) fail(in, "cut across a flat segment at d=" + std::to_string(d));
      hi = d;
      f = below(f, d);
    }
    normalize(key);
    const auto j = find_R(sub, ss, d, y.dprime, key, "forced psi");
    if (y.norm - ss.R[j].norm != shift) fail(in, "forced psi shifts norms unevenly");
    if (!psi_inverse.emplace(j, ri).second) fail(in, "forced psi is not injective");
  }
  if (psi_inverse.size() != ss.R.size()) fail(in, "forced psi is not onto");

  std::vector<std::size_t> out;
  for (auto j : phi) out.push_back(psi_inverse.at(chi[j]));
  return out;
}

std::vector<std::size_t> solve_split(const Instance& in, const Sets& s, int depth) {
  const SignSequence& t = in.t;
  int a0 = 0, b0 = 0;
  std::size_t best = SIZE_MAX;
  for (int a : in.a)
    for (int b : in.b) {
      if (a >= b) continue;
      const auto n = between(t.plus(), a, b).size();
      if (n < best) {
        best = n;
        a0 = a;
        b0 = b;
      }
    }
  if (best == SIZE_MAX) fail(in, "no a < b pair");
  if (auto inner = between(in.a, a0, b0); !inner.empty()) a0 = inner.back();
  if (!between(in.b, a0, b0).empty()) fail(in, "closer inside the minimal window");
  const int b1 = between(t.plus(), a0, b0).back();
  const Instance first{t, in.a, with(without(in.b, b0), b1)};
  const auto mid = t.window(b1, b0);
  if (!mid.plus().empty()) fail(in, "plus between b1 and b0");
  const bool has_second = !mid.minus().empty();
  const int a2 = has_second ? mid.minus().front() : 0;

  const Sets s1 = sets_of(first);
  const auto sol1 = solve(first, s1, depth + 1);
  std::optional<Instance> second;
  Sets s2;
  std::vector<std::size_t> sol2;
  if (has_second) {
    second = Instance{SignSequence(without(t.plus(), b1), without(t.minus(), a2)), in.a, in.b};
    s2 = sets_of(*second);
    sol2 = solve(*second, s2, depth + 1);
  }
  const int shift = 1 - mid.weight();

  // Left side: which branch and index produced each element of L.
  std::vector<std::pair<int, std::size_t>> left_source(s.L.size(), {-1, 0});
  auto claim_left = [&](std::size_t target, int branch, std::size_t from) {
    if (left_source[target].first >= 0) fail(in, "phi images overlap");
    left_source[target] = {branch, from};
  };
  for (std::size_t i = 0; i < s1.L.size(); ++i) {
    const auto& x = s1.L[i];
    auto key = key_of(x.omega);
    std::size_t target;
    if (x.c == b0) {
      target = find_L(in, s, b1, key, "phi1");
    } else {
      auto k = index_by_hi(key, b1);
      if (!k) fail(in, "phi1: no path ends at b1");
      std::get<1>(key[*k]) = b0;
      target = find_L(in, s, x.c, key, "phi1");
    }
    if (s.L[target].norm - x.norm != shift) fail(in, "phi1 shifts norms unevenly");
    claim_left(target, 1, i);
  }
  for (std::size_t i = 0; i < s2.L.size(); ++i) {
    const auto& x = s2.L[i];
    const auto target = find_L(in, s, x.c, insert_flats(key_of(x.omega), b1, a2), "phi2");
    if (s.L[target].norm != x.norm) fail(in, "phi2 changes a norm");
    claim_left(target, 2, i);
  }
  for (const auto& src : left_source)
    if (src.first < 0) fail(in, "phi images do not cover L");

  const int last_before_b0 = below(t.positions(), b0).back();
  std::map<std::size_t, std::size_t> psi1, psi2;
  std::vector<bool> hit(s.R.size(), false);
  auto claim_right = [&](std::size_t target) {
    if (hit[target]) fail(in, "psi images overlap");
    hit[target] = true;
  };
  for (std::size_t i = 0; i < s1.R.size(); ++i) {
    const auto& y = s1.R[i];
    auto key = key_of(y.varpi);
    if (y.d != last_before_b0) {
      auto k = index_by_hi(key, b1);
      if (!k) fail(in, "psi1: no path ends at b1");
      std::get<1>(key[*k]) = b0;
    } else {
      auto k0 = index_by_lo(key, a0);
      auto k1 = index_by_hi(key, y.d);
      if (!k0 || !k1 || std::get<1>(key[*k0]) != b1) fail(in, "psi1: unexpected pairing at d = max before b0");
      std::get<1>(key[*k0]) = y.d;
      std::get<1>(key[*k1]) = b0;
    }
    normalize(key);
    const auto target = find_R(in, s, y.d, y.dprime, key, "psi1");
    if (s.R[target].norm - y.norm != shift) fail(in, "psi1 shifts norms unevenly");
    claim_right(target);
    psi1.emplace(i, target);
  }
  for (std::size_t i = 0; i < s2.R.size(); ++i) {
    const auto& y = s2.R[i];
    const auto target = find_R(in, s, y.d, y.dprime, insert_flats(key_of(y.varpi), b1, a2), "psi2");
    if (s.R[target].norm != y.norm) fail(in, "psi2 changes a norm");
    claim_right(target);
    psi2.emplace(i, target);
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) fail(in, "psi images do not cover R");

  std::vector<std::size_t> out;
  for (const auto& [branch, from] : left_source) out.push_back(branch == 1 ? psi1.at(sol1[from]) : psi2.at(sol2[from]));
  return out;
}

std::vector<std::size_t> solve(const Instance& in, const Sets& s, int depth) {
  if (depth > kMaxDepth) fail(in, "recursion too deep");
  if (s.L.size() != s.R.size()) fail(in, "L and R differ in size");
  std::vector<std::size_t> out;
  if (in.b.empty()) {
    out = solve_base(in, s);
  } else if (auto forced = forced_pair(in)) {
    out = solve_forced(in, s, forced->first, forced->second, depth);
  } else {
    out = solve_split(in, s, depth);
  }
  std::vector<bool> hit(s.R.size(), false);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (hit[out[i]]) fail(in, "map is not injective");
    hit[out[i]] = true;
    if (s.L[i].norm != s.R[out[i]].norm) fail(in, "map does not preserve norms");
  }
  return out;
}

}  // namespace

BijectionMap bijection_map(const SignSequence& t, const PositionSet& a, const PositionSet& b) {
  const Instance in{t, a, b};
  Sets s = sets_of(in);
  const auto idx = solve(in, s, 0);
  BijectionMap m;
  for (std::size_t i = 0; i < idx.size(); ++i) m.image.push_back(s.R[idx[i]]);
  m.domain = std::move(s.L);
  return m;
}

}  // namespace fockpath
