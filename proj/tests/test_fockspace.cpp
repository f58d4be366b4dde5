#include <doctest.h>

#include "fockpath/fockspace.hpp"

using namespace fockpath;

namespace {
LaurentPolynomial v(int k) { return LaurentPolynomial::monomial(k); }
}  // namespace

TEST_SUITE("fockspace") {
  TEST_CASE("regularity") {
    CHECK_FALSE(is_e_regular(Partition{1, 1}, 2));
    CHECK(is_e_regular(Partition{2, 1}, 2));
    CHECK(is_e_regular(Partition{}, 5));
    CHECK(is_e_regular(Partition{1, 1}, 3));
  }

  TEST_CASE("f action") {
    // (2,1) is added left of the removable 1-node (1,2).
    const auto x = apply_f(FockVector::basis(Partition{2}), 2, 1);
    CHECK(x == v(-1) * FockVector::basis(Partition{2, 1}));
    // Both addable nodes of (1) have residue 1 at e = 2; the left one sees an
    // indent node to its right.
    const auto y = apply_f(FockVector::basis(Partition{1}), 2, 1);
    CHECK(y.coefficient(Partition{2}) == 1);
    CHECK(y.coefficient(Partition{1, 1}) == v(1));
    CHECK(apply_f(FockVector::basis(Partition{}), 3, 1).is_zero());
  }

  TEST_CASE("divided powers") {
    const auto seed = apply_f(FockVector::basis(Partition{}), 2, 0);
    const auto f2 = apply_f(apply_f(seed, 2, 1), 2, 1);
    const auto d2 = apply_f_divided(seed, 2, 1, 2);
    CHECK(quantum_factorial(2) * d2 == f2);
    CHECK(apply_f_divided(seed, 2, 1, 1) == apply_f(seed, 2, 1));
    CHECK_THROWS(apply_f_divided(seed, 2, 1, 0));
  }

  TEST_CASE("ladders") {
    using L = LadderMonomial;
    CHECK(ladder_monomial(Partition{2}, 2) == L{{0, 1}, {1, 1}});
    CHECK(ladder_monomial(Partition{1, 1}, 2) == L{{0, 1}, {1, 1}});
    CHECK(ladder_monomial(Partition{}, 3).empty());
    CHECK(ladder_seed(Partition{2}, 2).coefficient(Partition{2}) == 1);
  }

  TEST_CASE("canonical basis examples") {
    CanonicalBasis basis(2);
    CHECK(basis.get(Partition{2}).str() == "(2) + v*(1,1)");
    CHECK(basis.get(Partition{1}) == FockVector::basis(Partition{1}));
    CHECK_THROWS_AS(basis.get(Partition{1, 1}), UnsupportedError);
    CHECK(basis.coefficient(Partition{1, 1}, Partition{2}) == v(1));
    CanonicalBasis basis3(3);
    CHECK(basis3.get(Partition{2, 1}).str() == "(2,1) + v*(1,1,1)");
    CHECK_THROWS_AS(oracle_coefficient(Partition{2}, Partition{1, 1}, 2), UnsupportedError);
    CHECK_THROWS_AS(oracle_coefficient(Partition{2}, Partition{1}, 2), std::invalid_argument);
  }

  TEST_CASE("unitriangular and positive") {
    for (int e = 2; e <= 3; ++e) {
      CanonicalBasis basis(e);
      for (int n = 0; n <= 7; ++n)
        for (const auto& [mu, g] : basis.elements_of_size(n)) {
          CHECK(g.coefficient(mu) == 1);
          for (const auto& [lambda, c] : g.terms()) {
            if (lambda == mu) continue;
            CHECK(c.in_v_n0());
            CHECK(dominates(mu, lambda));
          }
        }
    }
  }

  TEST_CASE("G is bar invariant through f") {
    // f_r commutes with the bar involution, so f_r G(μ) expands with
    // bar-invariant coefficients.
    CanonicalBasis basis(2);
    for (const auto& mu : partitions_of(5)) {
      if (!is_e_regular(mu, 2)) continue;
      for (int r = 0; r < 2; ++r)
        for (const auto& [nu, c] : basis.expand(apply_f(basis.get(mu), 2, r))) CHECK(c.is_bar_invariant());
    }
  }

  TEST_CASE("expansion") {
    CanonicalBasis basis(3);
    const auto& g = basis.get(Partition{3, 1});
    const auto x = basis.expand(g);
    REQUIRE(x.size() == 1);
    CHECK(x.begin()->first == Partition{3, 1});
    CHECK(x.begin()->second == 1);
    CHECK(basis.expand(FockVector{}).empty());
  }

  TEST_CASE("value at one is an honest f action") {
    // At v = 1, f_r(λ) is the sum of λ + n over indent r-nodes n.
    const auto lambda = Partition{3, 1};
    const auto x = apply_f(FockVector::basis(lambda), 2, 0);
    LaurentPolynomial::Coeff total = 0;
    for (const auto& [mu, c] : x.terms()) total += c.at_one();
    CHECK(total == static_cast<LaurentPolynomial::Coeff>(boundary_nodes(lambda, 2, 0).indent.size()));
  }
}
