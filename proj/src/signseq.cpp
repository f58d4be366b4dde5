#include "fockpath/signseq.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fockpath {

PositionSet make_positions(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

PositionSet set_union(const PositionSet& a, const PositionSet& b) {
  PositionSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

PositionSet set_difference(const PositionSet& a, const PositionSet& b) {
  PositionSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

PositionSet set_intersection(const PositionSet& a, const PositionSet& b) {
  PositionSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains(const PositionSet& s, int x) { return std::binary_search(s.begin(), s.end(), x); }

bool is_subset(const PositionSet& sub, const PositionSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

PositionSet with(const PositionSet& s, int x) { return set_union(s, PositionSet{x}); }
PositionSet without(const PositionSet& s, int x) { return set_difference(s, PositionSet{x}); }

PositionSet above(const PositionSet& s, int c) {
  return PositionSet(std::upper_bound(s.begin(), s.end(), c), s.end());
}

PositionSet below(const PositionSet& s, int c) {
  return PositionSet(s.begin(), std::lower_bound(s.begin(), s.end(), c));
}

PositionSet between(const PositionSet& s, int lo, int hi) {
  if (hi <= lo) return {};
  return PositionSet(std::upper_bound(s.begin(), s.end(), lo), std::lower_bound(s.begin(), s.end(), hi));
}

std::string str(const PositionSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

PositionSet parse_positions(const std::string& text) {
  std::vector<int> values;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.find_first_not_of(" \t") == std::string::npos) continue;
    std::size_t used = 0;
    int v = std::stoi(token, &used);
    if (token.find_first_not_of(" \t", used) != std::string::npos)
      throw std::invalid_argument("malformed position list: '" + text + "'");
    values.push_back(v);
  }
  return make_positions(std::move(values));
}

std::optional<int> Matching::closer_of(int opener) const {
  if (contains(self_paired, opener)) return opener;
  auto it = std::lower_bound(pairs.begin(), pairs.end(), std::pair<int, int>{opener, INT32_MIN});
  if (it != pairs.end() && it->first == opener) return it->second;
  return std::nullopt;
}

std::optional<int> Matching::opener_of(int closer) const {
  if (contains(self_paired, closer)) return closer;
  for (const auto& [o, c] : pairs)
    if (c == closer) return o;
  return std::nullopt;
}

Matching match_pairs(const PositionSet& openers, const PositionSet& closers) {
  Matching m;
  m.self_paired = set_intersection(openers, closers);
  const auto open_only = set_difference(openers, m.self_paired);
  const auto close_only = set_difference(closers, m.self_paired);
  std::vector<int> stack;
  std::size_t i = 0, j = 0;
  while (i < open_only.size() || j < close_only.size()) {
    const bool take_opener = j == close_only.size() || (i < open_only.size() && open_only[i] < close_only[j]);
    if (take_opener) {
      stack.push_back(open_only[i++]);
    } else {
      const int c = close_only[j++];
      if (stack.empty()) {
        m.unpaired_closers.push_back(c);
      } else {
        m.pairs.emplace_back(stack.back(), c);
        stack.pop_back();
      }
    }
  }
  m.unpaired_openers = make_positions(std::move(stack));
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

bool onto(const PositionSet& openers, const PositionSet& closers) {
  return match_pairs(openers, closers).unpaired_closers.empty();
}

bool bijective(const PositionSet& openers, const PositionSet& closers) {
  auto m = match_pairs(openers, closers);
  return m.unpaired_closers.empty() && m.unpaired_openers.empty();
}

SignSequence::SignSequence(PositionSet plus, PositionSet minus)
    : plus_(make_positions(std::move(plus))), minus_(make_positions(std::move(minus))) {
  if (!set_intersection(plus_, minus_).empty())
    throw std::invalid_argument("sign sequence: plus and minus positions overlap");
}

PositionSet SignSequence::positions() const { return set_union(plus_, minus_); }

int SignSequence::sign_at(int p) const {
  if (contains(plus_, p)) return 1;
  if (contains(minus_, p)) return -1;
  return 0;
}

int SignSequence::weight() const { return static_cast<int>(plus_.size()) - static_cast<int>(minus_.size()); }

SignSequence SignSequence::raise(int d) const {
  SignSequence out;
  out.plus_ = with(plus_, d);
  out.minus_ = without(minus_, d);
  return out;
}

SignSequence SignSequence::subsequence(Bound lower, Bound upper) const {
  auto keep = [&](int p) {
    switch (lower.kind) {
      case Bound::Kind::open: if (p <= lower.value) return false; break;
      case Bound::Kind::closed: if (p < lower.value) return false; break;
      case Bound::Kind::unbounded: break;
    }
    switch (upper.kind) {
      case Bound::Kind::open: if (p >= upper.value) return false; break;
      case Bound::Kind::closed: if (p > upper.value) return false; break;
      case Bound::Kind::unbounded: break;
    }
    return true;
  };
  SignSequence out;
  std::copy_if(plus_.begin(), plus_.end(), std::back_inserter(out.plus_), keep);
  std::copy_if(minus_.begin(), minus_.end(), std::back_inserter(out.minus_), keep);
  return out;
}

int SignSequence::height_after(int p) const {
  auto up = std::upper_bound(plus_.begin(), plus_.end(), p) - plus_.begin();
  auto down = std::upper_bound(minus_.begin(), minus_.end(), p) - minus_.begin();
  return static_cast<int>(up - down);
}

std::string SignSequence::str() const { return "(+" + fockpath::str(plus_) + ", -" + fockpath::str(minus_) + ")"; }

PositionSet valley_set(const SignSequence& t) {
  PositionSet out;
  for (int v : t.minus())
    if (onto(above(t.plus(), v), above(t.minus(), v))) out.push_back(v);
  return out;
}

PositionSet unpaired_plus(const SignSequence& t) { return match_pairs(t.plus(), t.minus()).unpaired_openers; }

PositionSet paired_plus(const SignSequence& t) { return set_difference(t.plus(), unpaired_plus(t)); }

bool preceq(const PositionSet& a, const PositionSet& b, const PositionSet& c, const PositionSet& d) {
  const long lhs = static_cast<long>(a.size()) - static_cast<long>(b.size());
  const long rhs = static_cast<long>(c.size()) - static_cast<long>(d.size());
  return lhs == rhs && onto(set_union(b, c), set_union(a, d));
}

}  // namespace fockpath
