#include "fockpath/closedform.hpp"

#include <algorithm>

namespace fockpath {

SignSequence sign_sequence_of(const Partition& lambda, int e, int r) {
  const auto bn = boundary_nodes(lambda, e, r);
  PositionSet plus, minus;
  for (const auto& n : bn.removable) plus.push_back(n.col);
  for (const auto& n : bn.indent) minus.push_back(n.col);
  return SignSequence(std::move(plus), std::move(minus));
}

Partition apply_move(const Partition& lambda, int e, int r, const PositionSet& a, const PositionSet& b) {
  const auto bn = boundary_nodes(lambda, e, r);
  std::vector<int> parts = lambda.parts();
  parts.resize(parts.size() + a.size(), 0);
  auto node_at = [](const std::vector<Node>& nodes, int col, const char* what) {
    for (const auto& n : nodes)
      if (n.col == col) return n;
    throw std::invalid_argument(std::string("no ") + what + " node in column " + std::to_string(col));
  };
  for (int c : set_difference(a, b)) parts[static_cast<std::size_t>(node_at(bn.indent, c, "indent").row - 1)] += 1;
  for (int c : set_difference(b, a))
    parts[static_cast<std::size_t>(node_at(bn.removable, c, "removable").row - 1)] -= 1;
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

Partition MoveSpec::result() const { return apply_move(lambda, e, r, A, B); }

std::optional<MoveSpec> detect_move(const Partition& lambda, const Partition& nu, int e) {
  if (lambda.size() != nu.size()) throw std::invalid_argument("detect_move needs partitions of equal size");
  if (lambda == nu) return MoveSpec{lambda, e, 0, {}, {}};
  std::vector<Node> added, removed;
  const int rows = std::max(lambda.length(), nu.length());
  for (int i = 1; i <= rows; ++i) {
    const int l = lambda.row(i), m = nu.row(i);
    if (m > l + 1 || l > m + 1) return std::nullopt;  // two cells in one row is never a move
    if (m == l + 1) added.push_back({i, m});
    if (l == m + 1) removed.push_back({i, l});
  }
  const int r = residue(added.empty() ? removed.front() : added.front(), e);
  const auto bn = boundary_nodes(lambda, e, r);
  MoveSpec spec{lambda, e, r, {}, {}};
  for (const auto& n : added) {
    if (std::find(bn.indent.begin(), bn.indent.end(), n) == bn.indent.end()) return std::nullopt;
    spec.A.push_back(n.col);
  }
  for (const auto& n : removed) {
    if (std::find(bn.removable.begin(), bn.removable.end(), n) == bn.removable.end()) return std::nullopt;
    spec.B.push_back(n.col);
  }
  spec.A = make_positions(spec.A);
  spec.B = make_positions(spec.B);
  return spec;
}

LaurentPolynomial wellnested_polynomial(const SignSequence& t, const PositionSet& a, const PositionSet& b) {
  LaurentPolynomial out;
  for (const auto& w : enumerate_wellnested(t, a, b)) out += LaurentPolynomial::monomial(w.norm);
  return out;
}

Decomposition v_decomposition(const SignSequence& t, const PositionSet& a, const PositionSet& b) {
  if (!bijective(a, b)) return {};
  Decomposition d;
  for (const auto& w : enumerate_wellnested(t, a, b)) {
    d.poly += LaurentPolynomial::monomial(w.norm);
    ++d.paths;
  }
  return d;
}

Decomposition v_decomposition(const MoveSpec& m) {
  return v_decomposition(sign_sequence_of(m.lambda, m.e, m.r), m.A, m.B);
}

void check_branching_instance(const SignSequence& t, const PositionSet& a, const PositionSet& b) {
  if (!is_subset(a, t.minus())) throw PreconditionError("A = " + str(a) + " is not inside T- = " + str(t.minus()));
  if (!is_subset(b, t.plus())) throw PreconditionError("B = " + str(b) + " is not inside T+ = " + str(t.plus()));
  if (a.size() != b.size() + 1) throw PreconditionError("need |A| = |B| + 1");
  if (!onto(a, b)) throw PreconditionError("A = " + str(a) + " does not cover B = " + str(b));
}

LaurentPolynomial branching_formula(const SignSequence& t, const PositionSet& a, const PositionSet& b) {
  if (a.size() != b.size() + 1 || !onto(a, b)) throw PreconditionError("branching needs |A| = |B| + 1 and A onto B");
  if (!b.empty() || a.size() != 1 || !contains(valley_set(t), a.front())) return {};
  const auto above_a = above(unpaired_plus(t), a.front());
  return quantum_integer(1 + static_cast<int>(above_a.size()));
}

LaurentPolynomial branching_coefficient(const Partition& lambda, int e, int r, const PositionSet& a,
                                        const PositionSet& b) {
  return branching_formula(sign_sequence_of(lambda, e, r), a, b);
}

int left_shift(const SignSequence& t, const PositionSet& a, const PositionSet& b, int c) {
  const int diff = static_cast<int>(above(b, c).size()) - static_cast<int>(above(a, c).size());
  return 2 * diff - t.after(c).weight();
}

int right_shift(const SignSequence& t, int d, int dprime) {
  return 2 * t.subsequence(Bound::open(d), Bound::closed(dprime)).weight() - t.after(d).weight();
}

ConsistencyPair consistency_pair(const SignSequence& t, const PositionSet& a, const PositionSet& b) {
  check_branching_instance(t, a, b);
  ConsistencyPair out;
  for (int c : set_difference(set_union(t.plus(), a), b)) {
    const auto bc = with(b, c);
    if (!onto(a, bc)) continue;
    out.left += LaurentPolynomial::monomial(left_shift(t, a, b, c)) * wellnested_polynomial(t, a, bc);
  }
  const auto unpaired = unpaired_plus(t);
  for (int d : valley_set(t)) {
    const auto bd = with(b, d);
    if (!onto(a, bd)) continue;
    const auto omega = wellnested_polynomial(t.raise(d), a, bd);
    out.right += LaurentPolynomial::monomial(right_shift(t, d, d)) * omega;
    for (int dp : above(unpaired, d)) out.right += LaurentPolynomial::monomial(right_shift(t, d, dp)) * omega;
  }
  return out;
}

ConsistencyPair consistency_pair(const Partition& lambda, int e, int r, const PositionSet& a, const PositionSet& b) {
  return consistency_pair(sign_sequence_of(lambda, e, r), a, b);
}

}  // namespace fockpath
