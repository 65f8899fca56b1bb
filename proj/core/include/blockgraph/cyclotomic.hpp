#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "blockgraph/integer.hpp"

namespace blockgraph {

/// An element of the ring of integers Z[zeta_n] of a cyclotomic field.
///
/// Values are stored in the power basis 1, zeta_n, ..., zeta_n^(phi(n)-1)
/// after reduction modulo the n-th cyclotomic polynomial, and are always kept
/// at their minimal conductor: two equal values have identical representations.
/// Rational integers have conductor 1.
///
/// Text form, as used in table files:
///
///     expr := ['-'] term { ('+' | '-') term }
///     term := integer [ '*' root ] | root
///     root := 'E(' integer ')' [ '^' integer ]
///
/// where E(n) = exp(2 pi i / n).
class Cyclotomic {
 public:
  struct Term {
    std::int64_t exponent;
    Integer coeff;
  };

  Cyclotomic() : coeffs_{0} {}
  template <std::integral T>
  Cyclotomic(T value) : coeffs_{Integer(value)} {}  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Integer& value) : coeffs_{value} {}  // NOLINT(google-explicit-constructor)

  /// sum of coeff * zeta_n^exponent; exponents are taken modulo n.
  static Cyclotomic from_terms(std::uint64_t n, const std::vector<Term>& terms);
  /// zeta_n^k
  static Cyclotomic root_of_unity(std::uint64_t n, std::int64_t k = 1);
  /// Parses the text form; throws SyntaxError.
  static Cyclotomic parse(std::string_view text);

  std::uint64_t conductor() const noexcept { return conductor_; }
  /// Power-basis coefficients, exactly phi(conductor) of them.
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }

  bool is_rational() const noexcept { return conductor_ == 1; }
  bool is_zero() const noexcept { return conductor_ == 1 && coeffs_[0] == 0; }
  /// The value as an integer; throws InvalidArgument if irrational.
  const Integer& rational() const;

  /// Image under the Galois automorphism zeta -> zeta^k, gcd(k, conductor) = 1.
  Cyclotomic galois(std::int64_t k) const;
  Cyclotomic conj() const { return galois(-1); }

  /// this / d, provided the quotient stays in Z[zeta_n]; throws NotAlgebraicInteger.
  Cyclotomic div_exact(const Integer& d) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) = default;
  /// Total order: conductor first, then coefficients lexicographically.
  friend std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b);

  std::string to_string() const;

 private:
  Cyclotomic(std::uint64_t n, std::vector<Integer> coeffs) : conductor_(n), coeffs_(std::move(coeffs)) {}

  /// Reduces a length-n exponent vector modulo Phi_n and canonicalises.
  static Cyclotomic from_full(std::uint64_t n, std::vector<Integer> full);
  void canonicalize();
  /// Coefficient vector of length m holding this value in Z[zeta_m], conductor | m.
  std::vector<Integer> embed_full(std::uint64_t m) const;

  std::uint64_t conductor_ = 1;
  std::vector<Integer> coeffs_;
};

// Named operations matching the documented interface.
inline Cyclotomic cyc_make(std::uint64_t n, const std::vector<Cyclotomic::Term>& terms) {
  return Cyclotomic::from_terms(n, terms);
}
inline Cyclotomic cyc_add(const Cyclotomic& a, const Cyclotomic& b) { return a + b; }
inline Cyclotomic cyc_mul(const Cyclotomic& a, const Cyclotomic& b) { return a * b; }
inline Cyclotomic cyc_neg(const Cyclotomic& a) { return -a; }
inline Cyclotomic cyc_div_by_int(const Cyclotomic& a, const Integer& d) { return a.div_exact(d); }

/// E(n) as in the text grammar.
inline Cyclotomic E(std::uint64_t n) { return Cyclotomic::root_of_unity(n); }

}  // namespace blockgraph
