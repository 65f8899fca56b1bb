#include "detail/gfp_poly.hpp"

#include <algorithm>

#include "blockgraph/errors.hpp"
#include "blockgraph/numtheory.hpp"

namespace blockgraph::detail::gfp {

using nt::inverse_mod;
using nt::mul_mod;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly add(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    u64 x = i < a.size() ? a[i] : 0;
    u64 y = i < b.size() ? b[i] : 0;
    r[i] = x + y >= p || x + y < x ? x + y - p : x + y;
  }
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    u64 x = i < a.size() ? a[i] : 0;
    u64 y = i < b.size() ? b[i] : 0;
    r[i] = x >= y ? x - y : p - (y - x);
  }
  trim(r);
  return r;
}

Poly scale(const Poly& a, u64 c, u64 p) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul_mod(a[i], c, p);
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + mul_mod(a[i], b[j], p)) % p;
    }
  }
  trim(r);
  return r;
}

Poly rem(const Poly& a, const Poly& m, u64 p) {
  if (m.empty()) throw InvalidArgument("polynomial division by zero");
  Poly r = a;
  trim(r);
  const std::size_t dm = m.size() - 1;
  const u64 lead_inv = inverse_mod(m.back(), p);
  while (r.size() > dm) {
    const u64 c = mul_mod(r.back(), lead_inv, p);
    const std::size_t shift = r.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      const u64 t = mul_mod(c, m[i], p);
      u64& x = r[shift + i];
      x = x >= t ? x - t : p - (t - x);
    }
    trim(r);
  }
  return r;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, u64 p) { return rem(mul(a, b, p), m, p); }

Poly powmod(const Poly& a, const Integer& e, const Poly& m, u64 p) {
  Poly result = rem(Poly{1}, m, p);
  Poly base = rem(a, m, p);
  const std::size_t bits = e == 0 ? 0 : boost::multiprecision::msb(e) + 1;
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(result, result, m, p);
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) result = mulmod(result, base, m, p);
  }
  return result;
}

Poly monic(const Poly& a, u64 p) {
  if (a.empty()) return a;
  return scale(a, inverse_mod(a.back(), p), p);
}

Poly gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

bool is_irreducible(const Poly& f, u64 p) {
  const int n = degree(f);
  if (n < 1) return false;
  if (n == 1) return true;
  const Poly x{0, 1};
  Poly xp = x;
  for (int i = 1; i <= n / 2; ++i) {
    xp = powmod(xp, Integer(p), f, p);
    if (degree(gcd(f, sub(xp, x, p), p)) != 0) return false;
  }
  return true;
}

namespace {

void split_roots(const Poly& f, u64 p, std::mt19937_64& rng, std::vector<u64>& out) {
  const int n = degree(f);
  if (n <= 0) return;
  if (n == 1) {
    const Poly g = monic(f, p);
    out.push_back(g[0] == 0 ? 0 : p - g[0]);
    return;
  }
  if (p == 2) {
    // f divides x^2 - x and has degree 2
    out.push_back(0);
    out.push_back(1);
    return;
  }
  std::uniform_int_distribution<u64> dist(0, p - 1);
  const Integer half = (Integer(p) - 1) / 2;
  while (true) {
    const Poly shift{dist(rng), 1};
    Poly h = powmod(shift, half, f, p);
    h = sub(h, Poly{1}, p);
    Poly g = gcd(f, h, p);
    const int dg = degree(g);
    if (dg > 0 && dg < n) {
      split_roots(g, p, rng, out);
      // exact quotient f / g
      Poly quotient(static_cast<std::size_t>(n - dg + 1), 0);
      Poly r = monic(f, p);
      const Poly& gm = g;
      while (degree(r) >= dg) {
        const u64 c = r.back();
        const std::size_t shift_by = r.size() - gm.size();
        quotient[shift_by] = c;
        for (std::size_t i = 0; i < gm.size(); ++i) {
          const u64 t = mul_mod(c, gm[i], p);
          u64& x = r[shift_by + i];
          x = x >= t ? x - t : p - (t - x);
        }
        trim(r);
      }
      trim(quotient);
      split_roots(quotient, p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<u64> roots(const Poly& f, u64 p, std::mt19937_64& rng) {
  Poly g = monic(f, p);
  if (g.empty()) throw InvalidArgument("roots of the zero polynomial");
  // Keep only the split squarefree part: gcd(f, x^p - x).
  const Poly x{0, 1};
  Poly xp = powmod(x, Integer(p), g, p);
  g = gcd(g, sub(xp, x, p), p);
  std::vector<u64> out;
  split_roots(g, p, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool solve(std::vector<std::vector<u64>> a, std::vector<u64> b, u64 p, std::vector<u64>& x) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return false;
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    const u64 inv = inverse_mod(a[c][c], p);
    for (std::size_t j = c; j < n; ++j) a[c][j] = mul_mod(a[c][j], inv, p);
    b[c] = mul_mod(b[c], inv, p);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const u64 factor = a[r][c];
      for (std::size_t j = c; j < n; ++j) {
        const u64 t = mul_mod(factor, a[c][j], p);
        a[r][j] = a[r][j] >= t ? a[r][j] - t : p - (t - a[r][j]);
      }
      const u64 t = mul_mod(factor, b[c], p);
      b[r] = b[r] >= t ? b[r] - t : p - (t - b[r]);
    }
  }
  x = std::move(b);
  return true;
}

std::vector<std::vector<u64>> null_space(std::vector<std::vector<u64>> a, u64 p) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const u64 inv = inverse_mod(a[r][c], p);
    for (std::size_t j = c; j < cols; ++j) a[r][j] = mul_mod(a[r][j], inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const u64 factor = a[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        const u64 t = mul_mod(factor, a[r][j], p);
        a[i][j] = a[i][j] >= t ? a[i][j] - t : p - (t - a[i][j]);
      }
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<u64>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<u64> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
      const u64 t = a[i][free];
      v[pivot_cols[i]] = t == 0 ? 0 : p - t;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace blockgraph::detail::gfp
