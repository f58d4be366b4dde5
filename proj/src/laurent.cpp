#include "fockpath/laurent.hpp"

#include <cstdlib>

namespace fockpath {

namespace {

using Coeff = LaurentPolynomial::Coeff;

Coeff checked_add(Coeff a, Coeff b) {
  Coeff out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("Laurent coefficient overflow in addition");
  return out;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("Laurent coefficient overflow in multiplication");
  return out;
}

Coeff checked_neg(Coeff a) {
  if (a == INT64_MIN) throw OverflowError("Laurent coefficient overflow in negation");
  return -a;
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(Coeff c) {
  if (c != 0) terms_.emplace(0, c);
}

LaurentPolynomial::LaurentPolynomial(Terms terms) {
  for (auto [k, c] : terms)
    if (c != 0) terms_.emplace(k, c);
}

LaurentPolynomial LaurentPolynomial::monomial(int k, Coeff c) {
  LaurentPolynomial p;
  if (c != 0) p.terms_.emplace(k, c);
  return p;
}

Coeff LaurentPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPolynomial::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of the zero polynomial");
  return terms_.begin()->first;
}

int LaurentPolynomial::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of the zero polynomial");
  return terms_.rbegin()->first;
}

LaurentPolynomial LaurentPolynomial::bar() const {
  LaurentPolynomial out;
  for (auto [k, c] : terms_) out.terms_.emplace(-k, c);
  return out;
}

bool LaurentPolynomial::in_v_n0() const {
  for (auto [k, c] : terms_)
    if (k <= 0 || c < 0) return false;
  return true;
}

bool LaurentPolynomial::nonnegative() const {
  for (auto [k, c] : terms_)
    if (c < 0) return false;
  return true;
}

Coeff LaurentPolynomial::at_one() const {
  Coeff sum = 0;
  for (auto [k, c] : terms_) sum = checked_add(sum, c);
  return sum;
}

void LaurentPolynomial::add_term(int exponent, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
  for (auto [k, c] : rhs.terms_) add_term(k, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
  for (auto [k, c] : rhs.terms_) add_term(k, checked_neg(c));
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out;
  for (auto [k, c] : terms_) out.terms_.emplace(k, checked_neg(c));
  return out;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (auto [i, x] : a.terms_)
    for (auto [j, y] : b.terms_) {
      int k;
      if (__builtin_add_overflow(i, j, &k)) throw OverflowError("Laurent exponent overflow");
      out.add_term(k, checked_mul(x, y));
    }
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

std::string LaurentPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto [k, c] : terms_) {
    Coeff mag = c < 0 ? checked_neg(c) : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (k == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += "v";
    if (k != 1) out += "^" + std::to_string(k);
  }
  return out;
}

LaurentPolynomial quantum_integer(int k) {
  if (k < 0) throw std::invalid_argument("quantum_integer: negative argument");
  LaurentPolynomial out;
  for (int e = -k + 1; e <= k - 1; e += 2) out += LaurentPolynomial::monomial(e);
  return out;
}

LaurentPolynomial quantum_factorial(int k) {
  if (k < 0) throw std::invalid_argument("quantum_factorial: negative argument");
  LaurentPolynomial out(1);
  for (int i = 2; i <= k; ++i) out *= quantum_integer(i);
  return out;
}

LaurentPolynomial exact_divide(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  if (q.is_zero()) throw std::domain_error("exact_divide: division by zero");
  LaurentPolynomial rem = p;
  LaurentPolynomial quot;
  const int q_top = q.max_exponent();
  const Coeff q_lead = q.coefficient(q_top);
  const int q_span = q_top - q.min_exponent();
  while (!rem.is_zero()) {
    const int top = rem.max_exponent();
    const Coeff lead = rem.coefficient(top);
    // Anything left below q's span can never be cancelled.
    if (top - rem.min_exponent() < q_span || lead % q_lead != 0)
      throw DivisibilityError("exact_divide: " + p.str() + " is not divisible by " + q.str());
    auto step = LaurentPolynomial::monomial(top - q_top, lead / q_lead);
    quot += step;
    rem -= step * q;
  }
  return quot;
}

SymmetricSplit symmetric_split(const LaurentPolynomial& p) {
  SymmetricSplit out;
  for (auto [k, c] : p.terms()) {
    if (k < 0) {
      out.symmetric += LaurentPolynomial::monomial(k, c);
      out.symmetric += LaurentPolynomial::monomial(-k, c);
    } else if (k == 0) {
      out.symmetric += LaurentPolynomial(c);
    }
  }
  out.positive = p - out.symmetric;
  return out;
}

}  // namespace fockpath
