#include <doctest.h>

#include <stdexcept>

#include "fockpath/signseq.hpp"

using namespace fockpath;

namespace {
const SignSequence kNine({2, 3, 5, 9}, {1, 4, 6, 7, 8});
}

TEST_SUITE("signseq") {
  TEST_CASE("position set helpers") {
    CHECK(make_positions({3, 1, 3}) == PositionSet{1, 3});
    CHECK(set_union({1, 3}, {2, 3}) == PositionSet{1, 2, 3});
    CHECK(set_difference({1, 2, 3}, {2}) == PositionSet{1, 3});
    CHECK(set_intersection({1, 2, 3}, {2, 4}) == PositionSet{2});
    CHECK(above({1, 4, 6}, 4) == PositionSet{6});
    CHECK(below({1, 4, 6}, 4) == PositionSet{1});
    CHECK(between({1, 4, 6}, 1, 6) == PositionSet{4});
    CHECK(parse_positions("2,3,5") == PositionSet{2, 3, 5});
    CHECK(parse_positions("").empty());
    CHECK_THROWS(parse_positions("2,x"));
    CHECK(str({1, 2}) == "{1,2}");
  }

  TEST_CASE("bracket matching") {
    auto m = match_pairs({2, 3, 10}, {5, 6, 8});
    CHECK(m.pairs == std::vector<std::pair<int, int>>{{2, 6}, {3, 5}});
    CHECK(m.unpaired_openers == PositionSet{10});
    CHECK(m.unpaired_closers == PositionSet{8});
    CHECK(m.closer_of(2) == 6);
    CHECK(m.opener_of(5) == 3);
    CHECK_FALSE(m.closer_of(10).has_value());
    m = match_pairs({1}, {1});
    CHECK(m.self_paired == PositionSet{1});
    CHECK(m.pairs.empty());
    m = match_pairs({1, 2}, {4, 6});
    CHECK(m.pairs == std::vector<std::pair<int, int>>{{1, 6}, {2, 4}});
  }

  TEST_CASE("onto and bijective") {
    CHECK_FALSE(onto({2, 3, 10}, {5, 6, 8}));
    CHECK(onto({}, {}));
    CHECK(onto({1}, {2}));
    CHECK_FALSE(onto({2}, {1}));
    CHECK(bijective({1, 2}, {4, 6}));
    CHECK_FALSE(bijective({2, 3, 10}, {5, 6, 8}));
    CHECK(bijective({}, {}));
    CHECK(bijective({1, 3}, {3, 4}));
  }

  TEST_CASE("sign sequences") {
    CHECK_THROWS_AS(SignSequence({1}, {1}), std::invalid_argument);
    CHECK(kNine.weight() == -1);
    CHECK(kNine.sign_at(2) == 1);
    CHECK(kNine.sign_at(1) == -1);
    CHECK(kNine.sign_at(10) == 0);
    CHECK(kNine.positions() == PositionSet{1, 2, 3, 4, 5, 6, 7, 8, 9});
    CHECK(kNine.height_after(3) == 1);
    CHECK(kNine.raise(8) == SignSequence({2, 3, 5, 8, 9}, {1, 4, 6, 7}));
  }

  TEST_CASE("subsequences") {
    const SignSequence t({2}, {1});
    CHECK(t.subsequence(Bound::open(1), Bound::open(2)).empty());
    CHECK(t.subsequence(Bound::open(1), Bound::closed(2)) == SignSequence({2}, {}));
    CHECK(kNine.after(7) == SignSequence({9}, {8}));
    CHECK(kNine.window(1, 5) == SignSequence({2, 3}, {4}));
  }

  TEST_CASE("valleys and unpaired up-strokes") {
    CHECK(valley_set(kNine) == PositionSet{8});
    CHECK(valley_set(SignSequence({1, 2}, {})).empty());
    CHECK(valley_set(SignSequence({2}, {1})) == PositionSet{1});
    CHECK(unpaired_plus(kNine) == PositionSet{9});
    CHECK(paired_plus(kNine) == PositionSet{2, 3, 5});
    CHECK(unpaired_plus(SignSequence({2}, {1})) == PositionSet{2});
    CHECK(unpaired_plus(SignSequence({}, {1})).empty());
  }

  TEST_CASE("the order on pairs") {
    CHECK(preceq({1}, {}, {1}, {}));
    CHECK(preceq({2, 3}, {5}, {2, 3}, {5}));
    // X = {4,6} minus positions, Y = {1,2}: exactly one strict direction holds.
    const bool fwd = preceq({4}, {}, {6}, {});
    const bool back = preceq({6}, {}, {4}, {});
    CHECK(fwd != back);
    CHECK_FALSE(preceq({1}, {}, {}, {}));
  }
}
