#include "blockgraph/lietype.hpp"

#include <algorithm>
#include <numeric>

#include <boost/multiprecision/integer.hpp>

#include "blockgraph/errors.hpp"
#include "blockgraph/numtheory.hpp"
#include "blockgraph/polynomial.hpp"

namespace blockgraph {

using u64 = std::uint64_t;

namespace {

struct FamilyInfo {
  Family family;
  const char* name;
  unsigned fixed_rank;
};

constexpr FamilyInfo kFamilies[] = {
    {Family::A, "A", 0},       {Family::B, "B", 0},       {Family::C, "C", 0},       {Family::D, "D", 0},
    {Family::E6, "E6", 6},     {Family::E7, "E7", 7},     {Family::E8, "E8", 8},     {Family::F4, "F4", 4},
    {Family::G2, "G2", 2},     {Family::A2, "2A", 0},     {Family::D2, "2D", 0},     {Family::E6_2, "2E6", 6},
    {Family::D4_3, "3D4", 4},  {Family::B2_2, "2B2", 2},  {Family::F4_2, "2F4", 4},  {Family::G2_2, "2G2", 2},
};

const FamilyInfo& info(Family f) {
  for (const auto& i : kFamilies) {
    if (i.family == f) return i;
  }
  throw InvalidDescriptor("unknown family");
}

Integer evaluate_cyclotomic(unsigned k, const Integer& x) { return cyclotomic_polynomial(k).evaluate(x); }

// x^d - eps as cyclotomic exponents.
void add_binomial(std::map<unsigned, unsigned>& out, unsigned d, int eps) {
  for (u64 k : nt::divisors(eps > 0 ? d : 2 * d)) {
    if (eps < 0 && d % k == 0) continue;
    ++out[static_cast<unsigned>(k)];
  }
}

Integer smallest_prime_factor(const Integer& n) {
  Integer best = 0;
  for (const auto& [p, e] : nt::factorize(n)) {
    if (best == 0 || p < best) best = p;
  }
  return best;
}

// The part of n made of primes r with ord_r(base) = order, i.e. n with the primes of `order` removed,
// intersected with Phi_order(base).
Integer primitive_part(const Integer& n, u64 base, u64 order) {
  Integer g = boost::multiprecision::gcd(n, evaluate_cyclotomic(static_cast<unsigned>(order), Integer(base)));
  for (u64 r : nt::prime_divisors(order)) {
    while (g % r == 0) g /= r;
  }
  return g;
}

Integer isqrt_exact(const Integer& v) {
  Integer r = boost::multiprecision::sqrt(v);
  if (r * r != v) throw Error("expected a perfect square");
  return r;
}

}  // namespace

std::string family_name(Family f) { return info(f).name; }

const std::vector<Family>& all_families() {
  static const std::vector<Family> families = [] {
    std::vector<Family> v;
    for (const auto& i : kFamilies) v.push_back(i.family);
    return v;
  }();
  return families;
}

bool is_exceptional(Family f) { return info(f).fixed_rank != 0; }
unsigned fixed_rank(Family f) { return info(f).fixed_rank; }

Family parse_family(std::string_view text) {
  std::string s(text);
  if (s.rfind("^", 0) == 0) s.erase(0, 1);
  if (s.rfind("²", 0) == 0) s.replace(0, 2, "2");
  if (s.rfind("³", 0) == 0) s.replace(0, 2, "3");
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
  for (const auto& i : kFamilies) {
    if (s == i.name) return i.family;
  }
  throw InvalidDescriptor("unknown family '" + std::string(text) + "'");
}

std::string LieGroup::name() const {
  std::string r = family_name(family);
  if (!is_exceptional(family)) r += std::to_string(rank);
  return r + "(" + std::to_string(q) + ")";
}

LieGroup make_lie_group(Family family, unsigned rank, u64 q) {
  const auto [p, f] = nt::prime_power(q);
  if (p == 0) throw InvalidDescriptor("q = " + std::to_string(q) + " is not a prime power");
  const unsigned fixed = fixed_rank(family);
  if (fixed != 0) {
    if (rank != 0 && rank != fixed) {
      throw InvalidDescriptor(family_name(family) + " has rank " + std::to_string(fixed));
    }
    rank = fixed;
  }
  LieGroup s{family, rank, p, f, q};
  auto reject = [&](const std::string& why) { throw InvalidDescriptor(s.name() + ": " + why); };
  switch (family) {
    case Family::A:
      if (rank < 1) reject("rank must be at least 1");
      if (rank == 1 && (q == 2 || q == 3)) reject("not simple");
      break;
    case Family::B:
      if (rank < 2) reject("rank must be at least 2");
      if (rank == 2 && q == 2) reject("not simple");
      break;
    case Family::C:
      if (rank < 3) reject("rank must be at least 3");
      break;
    case Family::D:
    case Family::D2:
      if (rank < 4) reject("rank must be at least 4");
      break;
    case Family::A2:
      if (rank < 2) reject("rank must be at least 2");
      if (rank == 2 && q == 2) reject("not simple");
      break;
    case Family::G2:
      if (q == 2) reject("not simple");
      break;
    case Family::B2_2:
    case Family::F4_2:
    case Family::G2_2: {
      const u64 want = family == Family::G2_2 ? 3 : 2;
      if (p != want || f % 2 == 0) reject("q must be an odd power of " + std::to_string(want));
      if (family == Family::F4_2 && f == 1) {
        throw TitsGroup("2F4(2) is not simple; its derived subgroup, the Tits group, is treated as sporadic");
      }
      if (f < 3) reject("q must be at least " + std::to_string(want * want * want));
      break;
    }
    default:
      break;
  }
  return s;
}

FamilyData family_data(Family family, unsigned rank) {
  FamilyData d;
  auto range = [&](unsigned from, unsigned to, unsigned step) {
    for (unsigned v = from; v <= to; v += step) d.degrees.push_back(v);
  };
  switch (family) {
    case Family::A:
    case Family::A2:
      range(2, rank + 1, 1);
      break;
    case Family::B:
    case Family::C:
      range(2, 2 * rank, 2);
      break;
    case Family::D:
    case Family::D2:
      range(2, 2 * rank - 2, 2);
      d.degrees.push_back(rank);
      break;
    case Family::E6:
    case Family::E6_2:
      d.degrees = {2, 5, 6, 8, 9, 12};
      break;
    case Family::E7:
      d.degrees = {2, 6, 8, 10, 12, 14, 18};
      break;
    case Family::E8:
      d.degrees = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case Family::F4:
    case Family::F4_2:
      d.degrees = {2, 6, 8, 12};
      break;
    case Family::G2:
    case Family::G2_2:
      d.degrees = {2, 6};
      break;
    case Family::D4_3:
      d.degrees = {2, 4, 4, 6};
      break;
    case Family::B2_2:
      d.degrees = {2, 4};
      break;
  }
  std::sort(d.degrees.begin(), d.degrees.end());
  for (unsigned deg : d.degrees) d.positive_roots += deg - 1;

  switch (family) {
    case Family::A2:
    case Family::E6_2:
      for (unsigned deg : d.degrees) d.eps.push_back(deg % 2 == 0 ? 1 : -1);
      break;
    case Family::D2: {
      bool flipped = false;
      for (unsigned deg : d.degrees) {
        // the degree n carries the twist (once, when n is even and repeated)
        const bool twist = deg == rank && !flipped;
        d.eps.push_back(twist ? -1 : 1);
        flipped = flipped || twist;
      }
      break;
    }
    case Family::D4_3:
      d.cyclotomic_factors = {{1, 2}, {2, 2}, {3, 2}, {6, 2}, {12, 1}};
      break;
    case Family::B2_2:
      d.positive_roots = 2;
      d.cyclotomic_factors = {{1, 1}, {4, 1}};
      break;
    case Family::F4_2:
      d.positive_roots = 12;
      d.cyclotomic_factors = {{1, 2}, {2, 2}, {4, 2}, {6, 1}, {12, 1}};
      break;
    case Family::G2_2:
      d.positive_roots = 3;
      d.cyclotomic_factors = {{1, 1}, {2, 1}, {6, 1}};
      break;
    default:
      d.eps.assign(d.degrees.size(), 1);
      break;
  }
  if (!d.eps.empty()) {
    for (std::size_t i = 0; i < d.degrees.size(); ++i) add_binomial(d.cyclotomic_factors, d.degrees[i], d.eps[i]);
  }
  return d;
}

Integer diagonal_index(const LieGroup& s) {
  const Integer q = s.q;
  const Integer qn = nt::ipow(q, s.rank);
  auto g = [](const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); };
  switch (s.family) {
    case Family::A: return g(Integer(s.rank + 1), q - 1);
    case Family::B:
    case Family::C:
    case Family::E7: return g(Integer(2), q - 1);
    case Family::D: return g(Integer(4), qn - 1);
    case Family::E6: return g(Integer(3), q - 1);
    case Family::A2: return g(Integer(s.rank + 1), q + 1);
    case Family::D2: return g(Integer(4), qn + 1);
    case Family::E6_2: return g(Integer(3), q + 1);
    default: return 1;
  }
}

FactoredOrder group_order(const LieGroup& s) {
  const FamilyData data = family_data(s.family, s.rank);
  const Integer q = s.q;
  Integer value = nt::ipow(q, data.positive_roots);
  for (const auto& [k, a] : data.cyclotomic_factors) value *= nt::ipow(evaluate_cyclotomic(k, q), a);
  value /= diagonal_index(s);
  return FactoredOrder{value, nt::factorize(value)};
}

u64 e_of(u64 ell, u64 q) {
  if (!nt::is_prime(ell)) throw BadPrime(std::to_string(ell) + " is not prime");
  if (q % ell == 0) throw BadPrime(std::to_string(ell) + " divides q = " + std::to_string(q));
  return nt::multiplicative_order(q % (ell == 2 ? 4 : ell), ell == 2 ? 4 : ell);
}

std::optional<Integer> zsigmondy(u64 t, u64 n) {
  if (t < 2 || n < 2) throw InvalidArgument("zsigmondy: t and n must exceed 1");
  const Integer part = primitive_part(evaluate_cyclotomic(static_cast<unsigned>(n), Integer(t)), t, n);
  if (part == 1) return std::nullopt;
  return smallest_prime_factor(part);
}

bool regular_by_degree_criterion(const FamilyData& data, u64 e) {
  std::size_t degrees = 0, codegrees = 0;
  for (unsigned d : data.degrees) {
    if (d % e == 0) ++degrees;
    if ((d - 2) % e == 0) ++codegrees;
  }
  return degrees == codegrees;
}

bool is_regular(Family family, unsigned rank, u64 e) {
  if (e == 0) throw InvalidArgument("e must be positive");
  if (e <= 2) return true;
  switch (family) {
    case Family::A2: {
      // Ennola duality with the untwisted type: e -> e*.
      const u64 star = e % 2 == 1 ? 2 * e : (e % 4 == 2 ? e / 2 : e);
      return rank % star == 0 || (rank + 1) % star == 0;
    }
    case Family::D2:
      return (2 * rank - 2) % e == 0 || ((2 * rank) % e == 0 && ((2 * rank) / e) % 2 == 1);
    case Family::E6_2: {
      static const std::vector<u64> regular{1, 2, 3, 4, 6, 8, 12, 18};
      return std::find(regular.begin(), regular.end(), e) != regular.end();
    }
    case Family::D4_3:
    case Family::B2_2:
    case Family::F4_2:
    case Family::G2_2: {
      // every e that occurs for a prime dividing the order is regular
      const auto factors = family_data(family, rank).cyclotomic_factors;
      return factors.count(static_cast<unsigned>(e)) > 0;
    }
    default:
      return regular_by_degree_criterion(family_data(family, rank), e);
  }
}

bool steinberg_in_principal_block(const LieGroup& s, u64 ell) {
  if (ell == s.p) throw DefiningPrime(std::to_string(ell) + " is the defining characteristic of " + s.name());
  if (!nt::is_prime(ell)) throw BadPrime(std::to_string(ell) + " is not prime");
  if (group_order(s).value % ell != 0) {
    throw NotADivisor(std::to_string(ell) + " does not divide |" + s.name() + "|");
  }
  return is_regular(s.family, s.rank, e_of(ell, s.q));
}

namespace {

// enforce = false evaluates the formulas even where the row's conditions fail.
SylowTorusData torus_row(const LieGroup& s, bool enforce) {
  const Integer q = s.q;
  const unsigned n = s.rank;
  const u64 f = s.f;
  auto violated = [&](const std::string& what) -> void {
    if (!enforce) return;
    throw ConditionViolated(s.name() + " violates the condition " + what);
  };
  auto phi = [&](unsigned k) { return evaluate_cyclotomic(k, q); };
  SylowTorusData r;
  r.d = diagonal_index(s);
  auto fill = [&](Integer t, Integer te, u64 e, u64 nc) {
    r.torus_order = std::move(t);
    r.te_order = std::move(te);
    r.e = e;
    r.normalizer_quotient = nc;
    r.ord_r_p = e * f;
  };
  const Integer qn = nt::ipow(q, n);
  switch (s.family) {
    case Family::A:
      if ((n == 2 && (s.q == 2 || s.q == 4)) || (n == 5 && s.q == 2)) violated("(n,q) != (2,2), (2,4), (5,2)");
      fill((q * qn - 1) / (q - 1), phi(n + 1), n + 1, n + 1);
      break;
    case Family::B:
      if (n == 3 && s.q == 2) violated("(n,q) != (3,2)");
      if (n == 2 && s.q % 2 == 0) violated("q odd when n = 2");
      fill(qn + 1, phi(2 * n), 2 * n, 2 * n);
      break;
    case Family::C:
      if (n == 3 && s.q == 2) violated("(n,q) != (3,2)");
      fill(qn + 1, phi(2 * n), 2 * n, 2 * n);
      break;
    case Family::D:
      if (n == 6 && s.q == 2) violated("(n,q) != (6,2)");
      fill(qn - 1, phi(n), n, n);
      break;
    case Family::E6:
      fill(phi(9) / r.d, phi(9) / r.d, 9, 9);
      break;
    case Family::E7:
      fill(phi(2) * phi(18) / r.d, phi(18), 18, 18);
      break;
    case Family::E8:
      fill(phi(30), phi(30), 30, 30);
      break;
    case Family::F4:
      if (s.q == 2) violated("q != 2");
      fill(phi(12), phi(12), 12, 12);
      break;
    case Family::G2:
      if (s.q % 3 == 0) violated("3 does not divide q");
      fill(phi(6), phi(6), 6, 6);
      break;
    case Family::A2:
      if (n % 2 == 0) {
        if (n == 2 && s.q == 2) violated("(n,q) != (2,2)");
        fill((q * qn + 1) / (q + 1), phi(2 * (n + 1)), 2 * (n + 1), n + 1);
      } else {
        if (n == 3 && s.q == 2) violated("(n,q) != (3,2)");
        fill(qn + 1, phi(2 * n), 2 * n, n);
      }
      break;
    case Family::D2:
      fill(qn + 1, phi(2 * n), 2 * n, n);
      break;
    case Family::E6_2:
      fill(phi(18) / r.d, phi(18) / r.d, 18, 18);
      break;
    case Family::D4_3:
      fill(phi(12), phi(12), 12, 12);
      break;
    case Family::B2_2: {
      const Integer t = q + isqrt_exact(2 * q) + 1;
      fill(t, t, 4, 4);
      break;
    }
    case Family::F4_2: {
      const Integer t = q * q + isqrt_exact(2 * q * q * q) + q + isqrt_exact(2 * q) + 1;
      fill(t, t, 12, 12);
      break;
    }
    case Family::G2_2: {
      const Integer t = q - isqrt_exact(3 * q) + 1;
      fill(t, t, 6, 6);
      break;
    }
  }
  return r;
}

}  // namespace

SylowTorusData sylow_torus_data(const LieGroup& s) { return torus_row(s, true); }

std::optional<Integer> zsigmondy_prime_of_te(const LieGroup& s) {
  // The excluded rows are exactly where no such prime exists; report absence instead of failing.
  const SylowTorusData data = torus_row(s, false);
  const Integer part = primitive_part(data.te_order, s.p, data.ord_r_p);
  if (part == 1) return std::nullopt;
  return smallest_prime_factor(part);
}

}  // namespace blockgraph
