#include "blockgraph/cyclotomic.hpp"

#include <cctype>
#include <map>
#include <numeric>

#include "blockgraph/errors.hpp"
#include "blockgraph/numtheory.hpp"
#include "blockgraph/polynomial.hpp"

namespace blockgraph {

namespace {

using u64 = std::uint64_t;

// In-place reduction of sum v[j] x^j modulo Phi_n; leaves phi(n) entries.
void reduce_mod_phi(u64 n, std::vector<Integer>& v) {
  const IntPolynomial& phi_n = cyclotomic_polynomial(n);
  const std::size_t deg = static_cast<std::size_t>(phi_n.degree());
  if (v.size() <= deg) {
    v.resize(deg);
    return;
  }
  std::vector<std::pair<std::size_t, Integer>> sparse;
  for (std::size_t t = 0; t < deg; ++t) {
    if (phi_n.coeffs()[t] != 0) sparse.emplace_back(t, phi_n.coeffs()[t]);
  }
  for (std::size_t j = v.size(); j-- > deg;) {
    if (v[j] == 0) continue;
    const Integer c = v[j];
    const std::size_t base = j - deg;
    for (const auto& [t, ct] : sparse) v[base + t] -= c * ct;
  }
  v.resize(deg);
}

bool all_zero(const std::vector<Integer>& v, std::size_t from = 0) {
  for (std::size_t i = from; i < v.size(); ++i) {
    if (v[i] != 0) return false;
  }
  return true;
}

// Tries to rewrite a value of Z[zeta_n] (power basis) as an element of Z[zeta_d], d = n / r.
bool try_descend(u64 n, u64 r, const std::vector<Integer>& coeffs, std::vector<Integer>& out) {
  const u64 d = n / r;
  if (d % r == 0) {
    // Phi_n(x) = Phi_d(x^r): the subfield is spanned by exponents divisible by r.
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (j % r != 0 && coeffs[j] != 0) return false;
    }
    out.assign(coeffs.size() / r, Integer(0));
    for (std::size_t j = 0; j < coeffs.size(); j += r) out[j / r] = coeffs[j];
    return true;
  }
  // gcd(r, d) = 1: zeta_n = zeta_d^x zeta_r^y with zeta_d = zeta_n^r, zeta_r = zeta_n^d.
  // Over Q(zeta_d) the field has basis 1, zeta_r, ..., zeta_r^(r-2).
  const u64 x = d == 1 ? 0 : nt::inverse_mod(r % d, d);
  const u64 y = nt::inverse_mod(d % r, r);
  std::vector<std::vector<Integer>> parts(r - 1, std::vector<Integer>(d));
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;
    const u64 a = d == 1 ? 0 : nt::mul_mod(x, j, d);
    const u64 b = nt::mul_mod(y, j, r);
    if (b + 1 < r) {
      parts[b][a] += coeffs[j];
    } else {
      for (auto& part : parts) part[a] -= coeffs[j];
    }
  }
  for (std::size_t i = 1; i < parts.size(); ++i) {
    reduce_mod_phi(d, parts[i]);
    if (!all_zero(parts[i])) return false;
  }
  reduce_mod_phi(d, parts[0]);
  out = std::move(parts[0]);
  return true;
}

}  // namespace

Cyclotomic Cyclotomic::from_full(u64 n, std::vector<Integer> full) {
  reduce_mod_phi(n, full);
  Cyclotomic result(n, std::move(full));
  result.canonicalize();
  return result;
}

void Cyclotomic::canonicalize() {
  while (conductor_ > 1) {
    if (all_zero(coeffs_, 1)) {
      coeffs_.resize(1);
      conductor_ = 1;
      return;
    }
    bool descended = false;
    for (u64 r : nt::prime_divisors(conductor_)) {
      std::vector<Integer> smaller;
      if (try_descend(conductor_, r, coeffs_, smaller)) {
        conductor_ /= r;
        coeffs_ = std::move(smaller);
        descended = true;
        break;
      }
    }
    if (!descended) return;
  }
}

std::vector<Integer> Cyclotomic::embed_full(u64 m) const {
  std::vector<Integer> full(m);
  const u64 step = m / conductor_;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) full[i * step] = coeffs_[i];
  return full;
}

Cyclotomic Cyclotomic::from_terms(u64 n, const std::vector<Term>& terms) {
  if (n == 0) throw InvalidArgument("cyclotomic conductor must be positive");
  std::vector<Integer> full(n);
  const auto sn = static_cast<std::int64_t>(n);
  for (const auto& term : terms) {
    std::int64_t e = term.exponent % sn;
    if (e < 0) e += sn;
    full[static_cast<std::size_t>(e)] += term.coeff;
  }
  return from_full(n, std::move(full));
}

Cyclotomic Cyclotomic::root_of_unity(u64 n, std::int64_t k) { return from_terms(n, {{k, Integer(1)}}); }

const Integer& Cyclotomic::rational() const {
  if (!is_rational()) throw InvalidArgument("value " + to_string() + " is not rational");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::galois(std::int64_t k) const {
  if (is_rational()) return *this;
  const auto sn = static_cast<std::int64_t>(conductor_);
  std::int64_t kk = k % sn;
  if (kk < 0) kk += sn;
  if (std::gcd(static_cast<u64>(kk), conductor_) != 1) {
    throw InvalidArgument("galois: exponent is not coprime to the conductor");
  }
  std::vector<Integer> full(conductor_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) full[nt::mul_mod(i, static_cast<u64>(kk), conductor_)] = coeffs_[i];
  }
  reduce_mod_phi(conductor_, full);
  return Cyclotomic(conductor_, std::move(full));
}

Cyclotomic Cyclotomic::div_exact(const Integer& d) const {
  if (d == 0) throw InvalidArgument("division by zero");
  std::vector<Integer> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] % d != 0) {
      throw NotAlgebraicInteger(to_string() + " / " + d.str() + " is not an algebraic integer");
    }
    out[i] = coeffs_[i] / d;
  }
  return Cyclotomic(conductor_, std::move(out));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  if (other.is_rational()) {
    // Adding a rational never changes the conductor.
    coeffs_[0] += other.coeffs_[0];
    return *this;
  }
  if (is_rational()) {
    Integer c = coeffs_[0];
    *this = other;
    coeffs_[0] += c;
    return *this;
  }
  if (conductor_ == other.conductor_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    canonicalize();
    return *this;
  }
  const u64 m = nt::lcm(conductor_, other.conductor_);
  std::vector<Integer> full = embed_full(m);
  const u64 step = m / other.conductor_;
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) full[i * step] += other.coeffs_[i];
  *this = from_full(m, std::move(full));
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) { return *this += -other; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  *this = *this * other;
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.is_rational() || b.is_rational()) {
    const Cyclotomic& scalar = a.is_rational() ? a : b;
    const Cyclotomic& other = a.is_rational() ? b : a;
    if (scalar.coeffs_[0] == 0) return Cyclotomic();
    Cyclotomic out = other;
    for (auto& c : out.coeffs_) c *= scalar.coeffs_[0];
    return out;
  }
  const u64 m = nt::lcm(a.conductor_, b.conductor_);
  const u64 sa = m / a.conductor_;
  const u64 sb = m / b.conductor_;
  std::vector<Integer> full(m);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      full[(i * sa + j * sb) % m] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Cyclotomic::from_full(m, std::move(full));
}

std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b) {
  if (auto c = a.conductor_ <=> b.conductor_; c != 0) return c;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] < b.coeffs_[i]) return std::strong_ordering::less;
    if (a.coeffs_[i] > b.coeffs_[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return coeffs_[0].str();
  const std::string root = "E(" + std::to_string(conductor_) + ")";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (negative) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (i == 0) {
      out += magnitude.str();
      continue;
    }
    if (magnitude != 1) out += magnitude.str() + "*";
    out += root;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) text_.push_back(ch);
    }
  }

  Cyclotomic parse() {
    if (text_.empty()) fail("empty expression");
    bool negative = accept('-');
    term(negative);
    while (pos_ < text_.size()) {
      if (accept('+')) {
        term(false);
      } else if (accept('-')) {
        term(true);
      } else {
        fail("expected '+' or '-'");
      }
    }
    Cyclotomic value;
    for (auto& [n, terms] : by_conductor_) value += Cyclotomic::from_terms(n, terms);
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError("cyclotomic expression '" + text_ + "': " + what + " at offset " + std::to_string(pos_));
  }

  bool accept(char ch) {
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char ch) {
    if (!accept(ch)) fail(std::string("expected '") + ch + "'");
  }

  Integer integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(text_.substr(start, pos_ - start));
  }

  void term(bool negative) {
    Integer coeff = 1;
    bool has_root = true;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      coeff = integer();
      has_root = accept('*');
    }
    if (negative) coeff = -coeff;
    if (!has_root) {
      by_conductor_[1].push_back({0, coeff});
      return;
    }
    expect('E');
    expect('(');
    const Integer n = integer();
    expect(')');
    if (n == 0 || n > Integer(std::numeric_limits<std::int32_t>::max())) fail("root order out of range");
    Integer exponent = 1;
    if (accept('^')) exponent = integer();
    const auto order = static_cast<std::uint64_t>(n);
    const auto e = static_cast<std::int64_t>(exponent % order);
    by_conductor_[order].push_back({e, coeff});
  }

  std::string text_;
  std::size_t pos_ = 0;
  std::map<std::uint64_t, std::vector<Cyclotomic::Term>> by_conductor_;
};

}  // namespace

Cyclotomic Cyclotomic::parse(std::string_view text) { return ExpressionParser(text).parse(); }

}  // namespace blockgraph
