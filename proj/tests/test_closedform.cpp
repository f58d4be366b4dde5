#include <doctest.h>

#include "fockpath/closedform.hpp"
#include "fockpath/fockspace.hpp"

using namespace fockpath;

namespace {
LaurentPolynomial v(int k) { return LaurentPolynomial::monomial(k); }
}  // namespace

TEST_SUITE("closedform") {
  TEST_CASE("sign sequences of partitions") {
    CHECK(sign_sequence_of(Partition{2}, 2, 1) == SignSequence({2}, {1}));
    CHECK(sign_sequence_of(Partition{2, 1}, 2, 1) == SignSequence({1, 2}, {}));
    CHECK(sign_sequence_of(Partition{}, 4, 0) == SignSequence({}, {1}));
  }

  TEST_CASE("moves") {
    CHECK(apply_move(Partition{2}, 2, 1, {1}, {2}) == Partition{1, 1});
    CHECK(apply_move(Partition{2}, 2, 1, {1}, {}) == Partition{2, 1});
    CHECK_THROWS_AS(apply_move(Partition{2}, 2, 1, {3}, {}), std::invalid_argument);
    auto m = detect_move(Partition{2}, Partition{1, 1}, 2);
    REQUIRE(m.has_value());
    CHECK(m->r == 1);
    CHECK(m->A == PositionSet{1});
    CHECK(m->B == PositionSet{2});
    CHECK(m->result() == Partition{1, 1});
    m = detect_move(Partition{3, 1}, Partition{3, 1}, 3);
    REQUIRE(m.has_value());
    CHECK(m->A.empty());
    CHECK(m->B.empty());
    CHECK_FALSE(detect_move(Partition{3}, Partition{1, 1, 1}, 3).has_value());
    CHECK_THROWS_AS(detect_move(Partition{3}, Partition{1, 1}, 3), std::invalid_argument);
  }

  TEST_CASE("decomposition examples") {
    const MoveSpec m{Partition{2}, 2, 1, {1}, {2}};
    const auto d = v_decomposition(m);
    CHECK(d.poly == v(1));
    CHECK(d.paths == 1);
    CHECK(d.poly == oracle_coefficient(Partition{1, 1}, Partition{2}, 2));
    CHECK(v_decomposition(MoveSpec{Partition{3, 1}, 2, 0, {}, {}}).poly == 1);
    CHECK(v_decomposition(MoveSpec{Partition{3, 1}, 2, 1, {4}, {1}}).poly.is_zero());
  }

  TEST_CASE("decomposition agrees with the oracle on small sizes") {
    for (int e = 2; e <= 3; ++e)
      for (int n = 1; n <= 6; ++n)
        for (const auto& lambda : partitions_of(n)) {
          if (!is_e_regular(lambda, e)) continue;
          for (const auto& nu : partitions_of(n)) {
            const auto m = detect_move(lambda, nu, e);
            if (!m) continue;
            CHECK(v_decomposition(*m).poly == oracle_coefficient(nu, lambda, e));
          }
        }
  }

  TEST_CASE("branching examples") {
    CHECK(branching_coefficient(Partition{2}, 2, 1, {1}, {}) == v(-1) + v(1));
    CHECK(branching_coefficient(Partition{}, 3, 0, {1}, {}) == 1);
    // Both addable nodes of (1) are indent 1-nodes at e = 2. Column 1 is not
    // a valley: the minus after it is unpaired.
    const auto t = sign_sequence_of(Partition{1}, 2, 1);
    REQUIRE(t == SignSequence({}, {1, 2}));
    CHECK(branching_formula(t, {1}, {}).is_zero());
    CHECK(branching_formula(t, {2}, {}) == 1);
    CHECK_THROWS_AS(branching_formula(t, {1, 2}, {}), PreconditionError);
  }

  TEST_CASE("consistency examples") {
    auto cp = consistency_pair(SignSequence({2}, {1}), {1}, {});
    CHECK(cp.left == v(-1) + v(1));
    CHECK(cp.right == v(-1) + v(1));
    cp = consistency_pair(SignSequence({}, {1}), {1}, {});
    CHECK(cp.left == 1);
    CHECK(cp.right == 1);
    CHECK_THROWS_AS(consistency_pair(SignSequence({1}, {2}), {2}, {1}), PreconditionError);
    CHECK_THROWS_AS(consistency_pair(SignSequence({2}, {1}), {}, {}), PreconditionError);
    cp = consistency_pair(Partition{2}, 2, 1, {1}, {});
    CHECK(cp.left == cp.right);
  }

  TEST_CASE("moves stay inside the residue class") {
    for (int e = 2; e <= 3; ++e)
      for (const auto& lambda : partitions_of(6))
        for (int r = 0; r < e; ++r) {
          const auto t = sign_sequence_of(lambda, e, r);
          for (int x : t.minus()) CHECK(class_compare(apply_move(lambda, e, r, {x}, {}), lambda, e, r) == ClassOrder::equal);
          for (int y : t.plus()) CHECK(class_compare(apply_move(lambda, e, r, {}, {y}), lambda, e, r) == ClassOrder::equal);
          for (int x : t.minus())
            for (int y : t.plus())
              CHECK(class_compare(apply_move(lambda, e, r, {x}, {y}), lambda, e, r) == ClassOrder::equal);
        }
  }

  TEST_CASE("exponent shifts") {
    const SignSequence t({2}, {1});
    CHECK(left_shift(t, {1}, {}, 2) == 0);
    CHECK(right_shift(t, 1, 1) == -1);
    CHECK(right_shift(t, 1, 2) == 1);
  }
}
