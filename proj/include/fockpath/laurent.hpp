#pragma once

// Sparse Laurent polynomials in v with integer coefficients.
//
// Coefficients are 64-bit; every arithmetic step is overflow-checked and
// throws OverflowError instead of wrapping.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace fockpath {

struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

struct DivisibilityError : std::domain_error {
  using std::domain_error::domain_error;
};

class LaurentPolynomial {
 public:
  using Coeff = std::int64_t;
  using Terms = std::map<int, Coeff>;

  LaurentPolynomial() = default;
  /// The constant polynomial c.
  LaurentPolynomial(Coeff c);  // NOLINT(google-explicit-constructor)
  explicit LaurentPolynomial(Terms terms);

  /// c·v^k
  static LaurentPolynomial monomial(int k, Coeff c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coefficient(int exponent) const;
  /// Only valid when non-zero.
  int min_exponent() const;
  int max_exponent() const;

  LaurentPolynomial bar() const;
  bool is_bar_invariant() const { return bar() == *this; }
  /// All exponents > 0 and all coefficients >= 0, i.e. p ∈ vN₀[v].
  bool in_v_n0() const;
  bool nonnegative() const;
  /// p(1).
  Coeff at_one() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator*=(const LaurentPolynomial& rhs);
  LaurentPolynomial operator-() const;

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  /// Canonical text form with exponents ascending, e.g. "v^-1 + v", "3 - 2v^2".
  std::string str() const;

 private:
  void add_term(int exponent, Coeff c);
  Terms terms_;
};

/// [k]_v = v^{-k+1} + v^{-k+3} + ... + v^{k-1}; [0]_v = 0.
LaurentPolynomial quantum_integer(int k);
/// [k]! = [1][2]...[k]; [0]! = 1.
LaurentPolynomial quantum_factorial(int k);

/// s with s·q == p; long division from the top exponent.
/// Throws DivisibilityError when q does not divide p, std::domain_error when q == 0.
LaurentPolynomial exact_divide(const LaurentPolynomial& p, const LaurentPolynomial& q);

/// p = symmetric + positive with symmetric bar-invariant and positive ∈ vZ[v].
struct SymmetricSplit {
  LaurentPolynomial symmetric;
  LaurentPolynomial positive;
};
SymmetricSplit symmetric_split(const LaurentPolynomial& p);

}  // namespace fockpath
