#include <doctest.h>

#include <limits>

#include "fockpath/laurent.hpp"

using namespace fockpath;

namespace {
LaurentPolynomial v(int k, LaurentPolynomial::Coeff c = 1) { return LaurentPolynomial::monomial(k, c); }
}  // namespace

TEST_SUITE("laurent") {
  TEST_CASE("arithmetic and normal form") {
    CHECK((v(1) - v(1)).is_zero());
    CHECK((v(-1) + v(1)) * (v(-1) + v(1)) == v(-2) + 2 + v(2));
    CHECK((v(-1) + v(1)).str() == "v^-1 + v");
    CHECK((LaurentPolynomial(3) - v(2, 2)).str() == "3 - 2v^2");
    CHECK(LaurentPolynomial{}.str() == "0");
    CHECK((v(2, 3) + v(-1)).coefficient(2) == 3);
    CHECK((v(2, 3) + v(-1)).min_exponent() == -1);
    CHECK((v(2, 3) + v(-1)).max_exponent() == 2);
    CHECK((v(3, 2) + v(-3, 5)).at_one() == 7);
  }

  TEST_CASE("bar involution") {
    CHECK(v(1).bar() == v(-1));
    CHECK((v(-1) + v(1)).bar() == v(-1) + v(1));
    CHECK((3 + v(2, 2)).bar() == 3 + v(-2, 2));
    CHECK((v(-1) + v(1)).is_bar_invariant());
    CHECK_FALSE(v(1).is_bar_invariant());
  }

  TEST_CASE("positivity predicates") {
    CHECK(v(1).in_v_n0());
    CHECK((v(1) + v(3, 2)).in_v_n0());
    CHECK_FALSE(LaurentPolynomial(1).in_v_n0());
    CHECK_FALSE(v(2, -1).in_v_n0());
    CHECK((v(-1) + 2).nonnegative());
    CHECK_FALSE(v(0, -1).nonnegative());
  }

  TEST_CASE("quantum integers") {
    CHECK(quantum_integer(1) == 1);
    CHECK(quantum_integer(3) == v(-2) + 1 + v(2));
    CHECK(quantum_integer(0).is_zero());
    CHECK(quantum_factorial(2) == v(-1) + v(1));
    CHECK(quantum_factorial(0) == 1);
    CHECK(quantum_factorial(3) == quantum_integer(2) * quantum_integer(3));
  }

  TEST_CASE("exact division") {
    CHECK(exact_divide(v(-1) + v(1), quantum_integer(2)) == 1);
    CHECK(exact_divide(quantum_integer(2) * quantum_integer(2), quantum_integer(2)) == quantum_integer(2));
    CHECK(exact_divide(quantum_factorial(4), quantum_factorial(3)) == quantum_integer(4));
    CHECK_THROWS_AS(exact_divide(1 + v(1), v(-1) + v(1)), DivisibilityError);
    CHECK_THROWS_AS(exact_divide(v(1), LaurentPolynomial{}), std::domain_error);
  }

  TEST_CASE("symmetric split") {
    auto s = symmetric_split(v(-1) + v(1, 2));
    CHECK(s.symmetric == v(-1) + v(1));
    CHECK(s.positive == v(1));
    s = symmetric_split(v(3));
    CHECK(s.symmetric.is_zero());
    CHECK(s.positive == v(3));
    s = symmetric_split(5);
    CHECK(s.symmetric == 5);
    CHECK(s.positive.is_zero());
  }

  TEST_CASE("overflow is detected") {
    const auto big = LaurentPolynomial(std::numeric_limits<LaurentPolynomial::Coeff>::max());
    CHECK_THROWS_AS(big + 1, OverflowError);
    CHECK_THROWS_AS(big * 2, OverflowError);
  }
}
