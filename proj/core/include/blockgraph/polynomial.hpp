#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "blockgraph/integer.hpp"

namespace blockgraph {

/// Dense univariate polynomial over the integers, lowest degree first.
/// The coefficient vector never has trailing zeros; the zero polynomial is empty.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);

  static IntPolynomial constant(const Integer& c);
  static IntPolynomial monomial(std::size_t degree, const Integer& c = 1);
  /// x^n - 1
  static IntPolynomial x_pow_minus_one(std::size_t n);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  const Integer& leading() const { return coeffs_.back(); }

  Integer evaluate(const Integer& x) const;

  /// Quotient and remainder for a monic divisor.
  std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& divisor) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  std::string to_string(char var = 'x') const;

 private:
  void trim();

  std::vector<Integer> coeffs_;
};

/// The n-th cyclotomic polynomial, obtained by exact division of x^n - 1 by
/// the cyclotomic polynomials of all proper divisors. Results are cached.
const IntPolynomial& cyclotomic_polynomial(std::uint64_t n);

}  // namespace blockgraph
