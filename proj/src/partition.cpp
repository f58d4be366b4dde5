#include "fockpath/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <stdexcept>

namespace fockpath {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::row(int i) const {
  if (i < 1 || i > length()) return 0;
  return parts_[static_cast<std::size_t>(i - 1)];
}

std::string Partition::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition Partition::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty() || text == "0") return Partition{};
  std::vector<int> parts;
  while (true) {
    auto comma = text.find(',');
    auto token = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty())
      throw std::invalid_argument("malformed partition: '" + std::string(text) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

int normalize_residue(int r, int e) {
  int m = r % e;
  return m < 0 ? m + e : m;
}

int residue(const Node& node, int e) { return normalize_residue(node.col - node.row, e); }

Partition add_node(const Partition& lambda, const Node& node) {
  std::vector<int> parts = lambda.parts();
  if (node.row < 1 || node.row > lambda.length() + 1 || node.col != lambda.row(node.row) + 1)
    throw std::invalid_argument("add_node: node is not addable");
  if (node.row == lambda.length() + 1)
    parts.push_back(1);
  else
    parts[static_cast<std::size_t>(node.row - 1)] += 1;
  return Partition(std::move(parts));
}

Partition remove_node(const Partition& lambda, const Node& node) {
  std::vector<int> parts = lambda.parts();
  if (node.row < 1 || node.row > lambda.length() || node.col != lambda.row(node.row))
    throw std::invalid_argument("remove_node: node is not removable");
  auto& part = parts[static_cast<std::size_t>(node.row - 1)];
  part -= 1;
  if (part == 0) parts.pop_back();
  return Partition(std::move(parts));
}

std::vector<Node> addable_nodes(const Partition& lambda) {
  std::vector<Node> out;
  for (int i = 1; i <= lambda.length() + 1; ++i) {
    if (i == 1 || lambda.row(i - 1) > lambda.row(i)) out.push_back({i, lambda.row(i) + 1});
  }
  std::sort(out.begin(), out.end(), [](const Node& x, const Node& y) { return x.col < y.col; });
  return out;
}

std::vector<Node> removable_nodes(const Partition& lambda) {
  std::vector<Node> out;
  for (int i = 1; i <= lambda.length(); ++i) {
    if (lambda.row(i) > lambda.row(i + 1)) out.push_back({i, lambda.row(i)});
  }
  std::sort(out.begin(), out.end(), [](const Node& x, const Node& y) { return x.col < y.col; });
  return out;
}

BoundaryNodes boundary_nodes(const Partition& lambda, int e, int r) {
  r = normalize_residue(r, e);
  BoundaryNodes out;
  for (const auto& n : removable_nodes(lambda))
    if (residue(n, e) == r) out.removable.push_back(n);
  for (const auto& n : addable_nodes(lambda))
    if (residue(n, e) == r) out.indent.push_back(n);
  return out;
}

BetaSet beta_set(const Partition& lambda, int t) {
  if (t < lambda.length()) throw std::invalid_argument("beta_set: t is smaller than the number of parts");
  BetaSet beta{t, {}};
  beta.elements.reserve(static_cast<std::size_t>(t));
  for (int i = 1; i <= t; ++i) beta.elements.push_back(lambda.row(i) + t - i);
  return beta;
}

Partition partition_from_beta(const BetaSet& beta) {
  if (static_cast<int>(beta.elements.size()) != beta.t) throw std::invalid_argument("beta set has wrong size");
  std::vector<int> sorted = beta.elements;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("beta set has repeated elements");
  std::vector<int> parts;
  for (int i = 1; i <= beta.t; ++i) {
    int part = sorted[static_cast<std::size_t>(i - 1)] - (beta.t - i);
    if (part < 0) throw std::invalid_argument("beta set has negative elements");
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

BetaSet shift_beta(const BetaSet& beta) {
  BetaSet out{beta.t + 1, {}};
  for (int b : beta.elements) out.elements.push_back(b + 1);
  out.elements.push_back(0);
  return out;
}

bool dominates(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size() || lambda.length() > mu.length()) return false;
  int sum_l = 0, sum_m = 0;
  for (int j = 1; j <= lambda.length(); ++j) {
    sum_l += lambda.row(j);
    sum_m += mu.row(j);
    if (sum_l < sum_m) return false;
  }
  return true;
}

std::vector<Partition> jantzen_successors(const Partition& lambda, int e) {
  // Fixed t = |λ| + l(λ); larger t only shifts every bead and adds beads at 0.
  const int t = lambda.size() + lambda.length();
  if (t == 0) return {};
  const auto beta = beta_set(lambda, t);
  std::set<int> beads(beta.elements.begin(), beta.elements.end());
  std::set<Partition> out;
  for (int a : beads) {
    for (int b = 0; b < a; ++b) {
      if (beads.count(b)) continue;
      for (int i = 1; b - i * e >= 0; ++i) {
        const int low_b = b - i * e;
        const int low_a = a - i * e;
        if (!beads.count(low_b) || beads.count(low_a) || low_a == b) continue;
        std::set<int> next = beads;
        next.erase(a);
        next.erase(low_b);
        next.insert(b);
        next.insert(low_a);
        out.insert(partition_from_beta({t, std::vector<int>(next.begin(), next.end())}));
      }
    }
  }
  return {out.begin(), out.end()};
}

std::vector<Partition> jantzen_reachable(const Partition& lambda, int e, int max_steps) {
  std::set<Partition> seen{lambda};
  std::vector<Partition> frontier{lambda};
  for (int step = 0; step < max_steps && !frontier.empty(); ++step) {
    std::vector<Partition> next;
    for (const auto& p : frontier)
      for (auto& q : jantzen_successors(p, e))
        if (seen.insert(q).second) next.push_back(std::move(q));
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

ResidueProfile s_profile(const Partition& lambda, int e, int r, int t) {
  r = normalize_residue(r, e);
  const auto beta = beta_set(lambda, t);
  std::set<int> beads(beta.elements.begin(), beta.elements.end());
  const int top = beads.empty() ? 0 : *beads.rbegin() + 2;
  ResidueProfile prof{r, t, std::vector<int>(static_cast<std::size_t>(top), 0)};
  auto has = [&](int x) { return static_cast<int>(beads.count(x)); };
  for (int i = 0; i < top; ++i) {
    const int cls = normalize_residue(i - t, e);
    int value;
    if (cls == normalize_residue(r - 1, e)) {
      value = has(i) + has(i + 1);
    } else if (cls == r) {
      value = has(i) + has(i - 1);
    } else {
      value = has(i);
    }
    prof.values[static_cast<std::size_t>(i)] = value;
  }
  while (!prof.values.empty() && prof.values.back() == 0) prof.values.pop_back();
  return prof;
}

ClassOrder class_compare(const Partition& lambda, const Partition& tau, int e, int r) {
  const int t = std::max(lambda.length(), tau.length());
  const auto p = s_profile(lambda, e, r, t);
  const auto q = s_profile(tau, e, r, t);
  const int top = static_cast<int>(std::max(p.values.size(), q.values.size()));
  for (int i = top - 1; i >= 0; --i) {
    if (p.at(i) > q.at(i)) return ClassOrder::greater;
    if (p.at(i) < q.at(i)) return ClassOrder::less;
  }
  return ClassOrder::equal;
}

std::string to_string(ClassOrder order) {
  switch (order) {
    case ClassOrder::less: return "LESS";
    case ClassOrder::equal: return "EQUAL";
    case ClassOrder::greater: return "GREATER";
  }
  return "?";
}

}  // namespace fockpath
