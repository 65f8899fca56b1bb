#include "blockgraph/finite_field.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "blockgraph/errors.hpp"
#include "blockgraph/numtheory.hpp"
#include "detail/gfp_poly.hpp"

namespace blockgraph {

namespace gfp = detail::gfp;
using u64 = std::uint64_t;

namespace {

struct Split {
  u64 m_prime;
  u64 p_power;
};

Split split_prime(u64 m, u64 p) {
  if (m == 0) throw InvalidArgument("reduction context: m must be positive");
  if (!nt::is_prime(p)) throw InvalidArgument("reduction context: " + std::to_string(p) + " is not prime");
  Split s{m, 1};
  while (s.m_prime % p == 0) {
    s.m_prime /= p;
    s.p_power *= p;
  }
  return s;
}

gfp::Poly pad(gfp::Poly a, std::size_t k) {
  a.resize(k, 0);
  return a;
}

// Monic minimal polynomial over F_p of beta in F_p[x]/(g), given its degree k.
gfp::Poly minimal_polynomial(const gfp::Poly& beta, std::size_t k, const gfp::Poly& g, u64 p) {
  const std::size_t n = static_cast<std::size_t>(gfp::degree(g));
  std::vector<gfp::Poly> powers;
  powers.push_back(pad(gfp::rem({1}, g, p), n));
  gfp::Poly cur = gfp::rem({1}, g, p);
  for (std::size_t i = 1; i <= k; ++i) {
    cur = gfp::mulmod(cur, beta, g, p);
    powers.push_back(pad(cur, n));
  }
  // sum_{i<k} c_i beta^i = -beta^k, overdetermined n x k system of full column rank k.
  std::vector<std::vector<u64>> a(n, std::vector<u64>(k + 1, 0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i <= k; ++i) a[r][i] = powers[i][r];
  }
  // The null space of [beta^0 .. beta^k] is one-dimensional.
  auto kernel = gfp::null_space(a, p);
  if (kernel.size() != 1 || kernel[0][k] == 0) throw Error("minimal polynomial: unexpected kernel");
  return gfp::monic(kernel[0], p);
}

// Compares monic polynomials of equal degree from the leading coefficient down.
bool leading_lex_less(const gfp::Poly& a, const gfp::Poly& b) {
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

}  // namespace

bool FiniteFieldElt::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](u64 c) { return c == 0; });
}

std::vector<ReductionContext::Poly> ReductionContext::irreducible_factors(u64 m, u64 p) {
  const Split s = split_prime(m, p);
  const u64 mp = s.m_prime;
  if (mp == 1) return {gfp::Poly{p - 1, 1}};
  const auto k = static_cast<std::size_t>(nt::multiplicative_order(p % mp, mp));

  std::mt19937_64 rng(m * 0x9e3779b97f4a7c15ULL ^ p);
  std::uniform_int_distribution<u64> digit(0, p - 1);

  // A field F_{p^k} = F_p[x]/(g).
  gfp::Poly g;
  if (k == 1) {
    g = {0, 1};
  } else {
    do {
      g.assign(k + 1, 0);
      for (std::size_t i = 0; i < k; ++i) g[i] = digit(rng);
      g[k] = 1;
    } while (g[0] == 0 || !gfp::is_irreducible(g, p));
  }

  // A primitive m'-th root of unity alpha in that field.
  const Integer group_order = nt::ipow(Integer(p), static_cast<unsigned>(k)) - 1;
  const Integer cofactor = group_order / mp;
  const auto primes = nt::prime_divisors(mp);
  gfp::Poly alpha;
  while (true) {
    gfp::Poly beta(k, 0);
    for (auto& c : beta) c = digit(rng);
    gfp::trim(beta);
    if (beta.empty()) continue;
    alpha = gfp::powmod(beta, cofactor, g, p);
    bool primitive = true;
    for (u64 r : primes) {
      if (gfp::powmod(alpha, Integer(mp / r), g, p) == gfp::Poly{1}) {
        primitive = false;
        break;
      }
    }
    if (primitive) break;
  }

  // One factor per Frobenius orbit of primitive exponents.
  std::vector<bool> seen(mp, false);
  std::vector<Poly> factors;
  for (u64 j = 1; j < mp; ++j) {
    if (seen[j] || std::gcd(j, mp) != 1) continue;
    for (u64 e = j; !seen[e]; e = nt::mul_mod(e, p, mp)) seen[e] = true;
    const gfp::Poly beta = gfp::powmod(alpha, Integer(j), g, p);
    factors.push_back(minimal_polynomial(beta, k, g, p));
  }
  std::sort(factors.begin(), factors.end(), leading_lex_less);
  return factors;
}

ReductionContext ReductionContext::make(u64 m, u64 p) {
  auto factors = irreducible_factors(m, p);
  return ReductionContext(m, p, std::move(factors.front()), true);
}

ReductionContext::ReductionContext(u64 m, u64 p, Poly f) : ReductionContext(m, p, std::move(f), false) {}

ReductionContext::ReductionContext(u64 m, u64 p, Poly f, bool trusted) : p_(p), m_(m), f_(std::move(f)) {
  const Split s = split_prime(m, p);
  m_prime_ = s.m_prime;
  k_ = m_prime_ == 1 ? 1 : static_cast<std::size_t>(nt::multiplicative_order(p % m_prime_, m_prime_));
  shift_ = m_prime_ == 1 ? 0 : nt::inverse_mod(s.p_power % m_prime_, m_prime_);
  gfp::trim(f_);
  if (!trusted) {
    for (auto c : f_) {
      if (c >= p) throw InvalidArgument("reduction context: coefficient out of range");
    }
    if (static_cast<std::size_t>(gfp::degree(f_)) != k_ || f_.back() != 1) {
      throw InvalidArgument("reduction context: factor must be monic of degree " + std::to_string(k_));
    }
    if (!gfp::is_irreducible(f_, p)) throw InvalidArgument("reduction context: factor is reducible");
    const gfp::Poly y{0, 1};
    const gfp::Poly one = gfp::rem({1}, f_, p);
    bool ok = gfp::powmod(y, Integer(m_prime_), f_, p) == one;
    for (u64 r : m_prime_ == 1 ? std::vector<u64>{} : nt::prime_divisors(m_prime_)) {
      ok = ok && gfp::powmod(y, Integer(m_prime_ / r), f_, p) != one;
    }
    if (!ok) throw InvalidArgument("reduction context: factor does not divide the cyclotomic polynomial");
  }
  build_power_table();
}

void ReductionContext::build_power_table() {
  powers_.assign(m_prime_ * k_, 0);
  std::vector<u64> cur(k_, 0);
  cur[0] = 1;
  for (u64 e = 0; e < m_prime_; ++e) {
    std::copy(cur.begin(), cur.end(), powers_.begin() + static_cast<std::ptrdiff_t>(e * k_));
    // cur *= y modulo the monic f
    const u64 top = cur[k_ - 1];
    for (std::size_t i = k_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (std::size_t i = 0; i < k_; ++i) {
        const u64 t = nt::mul_mod(top, f_[i], p_);
        cur[i] = cur[i] >= t ? cur[i] - t : p_ - (t - cur[i]);
      }
    }
  }
}

FiniteFieldElt ReductionContext::reduce(const Cyclotomic& a) const {
  const u64 c = a.conductor();
  if (m_ % c != 0) {
    throw ConductorMismatch("conductor " + std::to_string(c) + " does not divide " + std::to_string(m_));
  }
  const u64 step = m_ / c;
  FiniteFieldElt out = zero();
  const auto& coeffs = a.coeffs();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    const u64 r = residue(coeffs[i], p_);
    if (r == 0) continue;
    const u64 e = m_prime_ == 1 ? 0 : nt::mul_mod(nt::mul_mod(i, step, m_prime_), shift_, m_prime_);
    const u64* row = &powers_[e * k_];
    for (std::size_t j = 0; j < k_; ++j) {
      out.coeffs[j] = (out.coeffs[j] + nt::mul_mod(r, row[j], p_)) % p_;
    }
  }
  return out;
}

FiniteFieldElt ReductionContext::zero() const { return FiniteFieldElt{p_, std::vector<u64>(k_, 0)}; }

FiniteFieldElt ReductionContext::one() const {
  FiniteFieldElt out = zero();
  out.coeffs[0] = 1;
  return out;
}

FiniteFieldElt ReductionContext::root() const {
  FiniteFieldElt out = zero();
  std::copy_n(powers_.begin() + static_cast<std::ptrdiff_t>((m_prime_ > 1 ? 1 : 0) * k_), k_, out.coeffs.begin());
  return out;
}

FiniteFieldElt ReductionContext::add(const FiniteFieldElt& a, const FiniteFieldElt& b) const {
  FiniteFieldElt out = zero();
  for (std::size_t i = 0; i < k_; ++i) out.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % p_;
  return out;
}

FiniteFieldElt ReductionContext::mul(const FiniteFieldElt& a, const FiniteFieldElt& b) const {
  gfp::Poly x = a.coeffs, y = b.coeffs;
  gfp::trim(x);
  gfp::trim(y);
  return FiniteFieldElt{p_, pad(gfp::rem(gfp::mul(x, y, p_), f_, p_), k_)};
}

}  // namespace blockgraph
