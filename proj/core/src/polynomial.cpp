#include "blockgraph/polynomial.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "blockgraph/errors.hpp"
#include "blockgraph/numtheory.hpp"

namespace blockgraph {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(std::size_t degree, const Integer& c) {
  std::vector<Integer> coeffs(degree + 1);
  coeffs[degree] = c;
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial IntPolynomial::x_pow_minus_one(std::size_t n) {
  std::vector<Integer> coeffs(n + 1);
  coeffs[0] = -1;
  coeffs[n] += 1;
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::pair<IntPolynomial, IntPolynomial> IntPolynomial::divmod_monic(const IntPolynomial& divisor) const {
  if (divisor.is_zero() || divisor.leading() != 1) {
    throw InvalidArgument("divmod_monic: divisor must be monic");
  }
  const std::size_t dd = static_cast<std::size_t>(divisor.degree());
  if (degree() < divisor.degree()) return {IntPolynomial(), *this};
  std::vector<Integer> rem = coeffs_;
  std::vector<Integer> quot(rem.size() - dd);
  for (std::size_t i = rem.size(); i-- > dd;) {
    const Integer c = rem[i];
    if (c == 0) continue;
    quot[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= c * divisor.coeffs_[j];
  }
  rem.resize(dd);
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1 || i == 0) out += magnitude.str();
    if (i > 0) {
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

const IntPolynomial& cyclotomic_polynomial(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("cyclotomic_polynomial: n must be positive");
  static std::mutex mutex;
  static std::map<std::uint64_t, std::unique_ptr<IntPolynomial>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  IntPolynomial result = IntPolynomial::x_pow_minus_one(n);
  for (std::uint64_t d : nt::divisors(n)) {
    if (d == n) continue;
    auto [quotient, remainder] = result.divmod_monic(cyclotomic_polynomial(d));
    if (!remainder.is_zero()) throw Error("cyclotomic_polynomial: inexact division");
    result = std::move(quotient);
  }
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(n, std::make_unique<IntPolynomial>(std::move(result)));
  return *it->second;
}

}  // namespace blockgraph
