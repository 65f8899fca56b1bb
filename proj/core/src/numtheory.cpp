#include "blockgraph/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include <boost/multiprecision/miller_rabin.hpp>

#include "blockgraph/errors.hpp"

namespace blockgraph::nt {

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

u64 inverse_mod(u64 a, u64 m) {
  if (m == 1) return 0;
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    std::int64_t quotient = r / new_r;
    t = std::exchange(new_t, t - quotient * new_t);
    r = std::exchange(new_r, r - quotient * new_r);
  }
  if (r != 1) throw InvalidArgument("inverse_mod: " + std::to_string(a) + " is not invertible modulo " + std::to_string(m));
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<u64>(t);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // This witness set is exact for every n < 2^64.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_probable_prime(const Integer& n) {
  if (n < 2) return false;
  if (n <= std::numeric_limits<u64>::max()) return is_prime(static_cast<u64>(n));
  std::mt19937_64 gen(0x5eed);
  return boost::multiprecision::miller_rabin_test(n, 32, gen);
}

namespace {

u64 pollard_brent(u64 n, u64 seed) {
  if (n % 2 == 0) return 2;
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<u64> dist(1, n - 1);
  while (true) {
    u64 y = dist(gen), c = dist(gen), m = 128;
    u64 g = 1, r = 1, q = 1, x = 0, ys = 0;
    auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1U;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_brent(n, n ^ 0x9e3779b97f4a7c15ULL);
  factor_into(d, out);
  factor_into(n / d, out);
}

Integer pollard_rho(const Integer& n, unsigned seed) {
  if (n % 2 == 0) return 2;
  Integer c = seed + 1;
  Integer x = 2, y = 2, d = 1;
  auto f = [&](const Integer& v) { return (v * v + c) % n; };
  while (d == 1) {
    x = f(x);
    y = f(f(y));
    d = boost::multiprecision::gcd(x > y ? Integer(x - y) : Integer(y - x), n);
  }
  return d;
}

void factor_into(const Integer& n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (n <= std::numeric_limits<u64>::max()) {
    std::vector<u64> small;
    factor_into(static_cast<u64>(n), small);
    for (u64 p : small) out.emplace_back(p);
    return;
  }
  if (is_probable_prime(n)) {
    out.push_back(n);
    return;
  }
  for (unsigned seed = 0;; ++seed) {
    Integer d = pollard_rho(n, seed);
    if (d != n) {
      factor_into(d, out);
      factor_into(Integer(n / d), out);
      return;
    }
  }
}

template <class T>
std::vector<std::pair<T, unsigned>> collect(std::vector<T> primes) {
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<T, unsigned>> result;
  for (const T& p : primes) {
    if (!result.empty() && result.back().first == p) {
      ++result.back().second;
    } else {
      result.emplace_back(p, 1U);
    }
  }
  return result;
}

}  // namespace

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
  if (n == 0) throw InvalidArgument("factorize: zero has no factorisation");
  std::vector<u64> primes;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  for (u64 p = 17; p < 1000 && p * p <= n; p += 2) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  factor_into(n, primes);
  return collect(std::move(primes));
}

std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n) {
  if (n <= 0) throw InvalidArgument("factorize: expected a positive integer");
  Integer rest = n;
  std::vector<Integer> primes;
  for (u64 p = 2; p < 10000; p += (p == 2 ? 1 : 2)) {
    if (rest < Integer(p) * p) break;
    while (rest % p == 0) {
      primes.emplace_back(p);
      rest /= p;
    }
  }
  factor_into(rest, primes);
  return collect(std::move(primes));
}

std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> result;
  for (const auto& [p, e] : factorize(n)) result.push_back(p);
  return result;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> result{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t count = result.size();
    u64 power = 1;
    for (unsigned i = 1; i <= e; ++i) {
      power *= p;
      for (std::size_t j = 0; j < count; ++j) result.push_back(result[j] * power);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

u64 euler_phi(u64 n) {
  u64 result = n;
  for (const auto& [p, e] : factorize(n)) result = result / p * (p - 1);
  return result;
}

u64 lcm(u64 a, u64 b) { return a / std::gcd(a, b) * b; }

unsigned valuation(u64 n, u64 p) {
  unsigned k = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

unsigned valuation(const Integer& n, u64 p) {
  Integer m = n;
  unsigned k = 0;
  while (m != 0 && m % p == 0) {
    m /= p;
    ++k;
  }
  return k;
}

u64 multiplicative_order(u64 a, u64 n) {
  if (n == 0) throw InvalidArgument("multiplicative_order: modulus must be positive");
  if (n == 1) return 1;
  if (std::gcd(a % n, n) != 1) {
    throw InvalidArgument("multiplicative_order: " + std::to_string(a) + " is not a unit modulo " + std::to_string(n));
  }
  u64 order = euler_phi(n);
  for (const auto& [p, e] : factorize(order)) {
    for (unsigned i = 0; i < e && order % p == 0 && pow_mod(a, order / p, n) == 1; ++i) order /= p;
  }
  return order;
}

std::pair<u64, unsigned> prime_power(u64 q) {
  if (q < 2) return {0, 0};
  auto f = factorize(q);
  if (f.size() != 1) return {0, 0};
  return f.front();
}

Integer ipow(const Integer& base, unsigned exp) { return boost::multiprecision::pow(base, exp); }

}  // namespace blockgraph::nt
