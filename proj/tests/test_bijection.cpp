#include <doctest.h>

#include <algorithm>

#include "fockpath/bijection.hpp"
#include "fockpath/sweep.hpp"

using namespace fockpath;

namespace {

template <class Xs>
std::vector<int> norms(const Xs& xs) {
  std::vector<int> out;
  for (const auto& x : xs) out.push_back(x.norm);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("bijection") {
  const SignSequence valley({2}, {1});
  const SignSequence lone({}, {1});

  TEST_CASE("index sets") {
    const auto l = enumerate_L(valley, {1}, {});
    CHECK(l.size() == 2);
    CHECK(norms(l) == std::vector<int>{-1, 1});
    const auto r = enumerate_R(valley, {1}, {});
    CHECK(r.size() == 2);
    CHECK(norms(r) == std::vector<int>{-1, 1});
    for (const auto& y : r) CHECK(y.d == 1);

    const auto l1 = enumerate_L(lone, {1}, {});
    REQUIRE(l1.size() == 1);
    CHECK(l1.front().c == 1);
    CHECK(l1.front().norm == 0);
    const auto r1 = enumerate_R(lone, {1}, {});
    REQUIRE(r1.size() == 1);
    CHECK(r1.front().d == 1);
    CHECK(r1.front().dprime == 1);
    CHECK(r1.front().norm == 0);

    // A minus followed by an unpaired minus is not a valley; only d = 2 is.
    const auto r2 = enumerate_R(SignSequence({}, {1, 2}), {1}, {});
    REQUIRE(r2.size() == 1);
    CHECK(r2.front().d == 2);
    CHECK_THROWS_AS(enumerate_L(SignSequence({1}, {2}), {2}, {1}), PreconditionError);
  }

  TEST_CASE("base case map") {
    const auto m = bijection_map(valley, {1}, {});
    REQUIRE(m.domain.size() == 2);
    for (std::size_t i = 0; i < m.domain.size(); ++i) {
      CHECK(m.domain[i].norm == m.image[i].norm);
      if (m.domain[i].c == 2) {
        CHECK(m.image[i].d == 1);
        CHECK(m.image[i].dprime == 2);
      } else {
        CHECK(m.domain[i].c == 1);
        CHECK(m.image[i].dprime == 1);
      }
    }
    CHECK(is_norm_preserving_bijection(m, enumerate_R(valley, {1}, {})));
    const auto single = bijection_map(lone, {1}, {});
    CHECK(single.domain.size() == 1);
    CHECK(single.image.size() == 1);
  }

  TEST_CASE("norm multisets") {
    CHECK(verify_norm_multisets(valley, {1}, {}));
    CHECK_THROWS_AS(verify_norm_multisets(valley, {}, {}), PreconditionError);
    const SignSequence nine({2, 3, 5, 9}, {1, 4, 6, 7, 8});
    for (const auto& [a, b] : admissible_pairs(nine)) CHECK(verify_norm_multisets(nine, a, b));
  }

  TEST_CASE("admissible pairs") {
    const auto pairs = admissible_pairs(SignSequence({2}, {1, 3}));
    // A ⊆ {1,3}, B ⊆ {2}, |A| = |B| + 1, A onto B.
    CHECK(pairs.size() == 3);
    for (const auto& [a, b] : pairs) {
      CHECK(a.size() == b.size() + 1);
      CHECK(onto(a, b));
    }
  }

  TEST_CASE("map checker rejects a broken map") {
    auto m = bijection_map(valley, {1}, {});
    std::swap(m.image[0], m.image[1]);
    CHECK_FALSE(is_norm_preserving_bijection(m, enumerate_R(valley, {1}, {})));
    m.image.pop_back();
    CHECK_FALSE(is_norm_preserving_bijection(m, enumerate_R(valley, {1}, {})));
  }

  TEST_CASE("construction is total on every instance up to six positions") {
    for (int k = 1; k <= 6; ++k)
      for (const auto& t : sign_sequences_on(k))
        for (const auto& [a, b] : admissible_pairs(t)) {
          INFO(describe_instance(t, a, b));
          const auto m = bijection_map(t, a, b);
          CHECK(is_norm_preserving_bijection(m, enumerate_R(t, a, b)));
        }
  }

  TEST_CASE("instance description names every part") {
    const auto s = describe_instance(valley, {1}, {});
    CHECK(s.find("A=") != std::string::npos);
    CHECK(s.find("B=") != std::string::npos);
  }
}
