#include "blockgraph/tablegen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <boost/container_hash/hash.hpp>
#include <nlohmann/json.hpp>

#include "detail/gfp_poly.hpp"

namespace blockgraph {

using u64 = std::uint64_t;
namespace gfp = detail::gfp;

Perm PermRep::identity() const {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0U);
  return p;
}

Perm PermRep::multiply(const Perm& a, const Perm& b) const {
  Perm r(degree);
  for (std::size_t i = 0; i < degree; ++i) r[i] = b[a[i]];
  return r;
}

std::size_t PermRep::Hash::operator()(const Perm& e) const { return boost::hash_range(e.begin(), e.end()); }

PermGroup PermGroup::enumerate(std::size_t degree, std::vector<Perm> generators, std::size_t bound) {
  if (degree == 0) throw InvalidArgument("permutation degree must be positive");
  for (const auto& g : generators) {
    if (g.size() != degree) throw InvalidArgument("generator has the wrong degree");
    std::vector<bool> seen(degree, false);
    for (auto v : g) {
      if (v >= degree || seen[v]) throw InvalidArgument("generator is not a permutation");
      seen[v] = true;
    }
  }
  PermGroup out;
  out.engine_ = std::make_shared<const FiniteGroup<PermRep>>(PermRep{degree}, std::move(generators), bound);
  return out;
}

PermGroup parse_perm_group(std::string_view document, std::size_t bound) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document.begin(), document.end());
  } catch (const nlohmann::json::exception& e) {
    throw SyntaxError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("degree") || !doc.contains("generators") ||
      !doc["degree"].is_number_unsigned() || !doc["generators"].is_array()) {
    throw SyntaxError("expected {\"degree\": int, \"generators\": [[int, ...], ...]}");
  }
  const auto degree = doc["degree"].get<std::size_t>();
  std::vector<Perm> gens;
  for (const auto& g : doc["generators"]) {
    if (!g.is_array()) throw SyntaxError("each generator must be an array");
    Perm p;
    for (const auto& v : g) {
      if (!v.is_number_unsigned()) throw SyntaxError("permutation entries must be nonnegative integers");
      p.push_back(v.get<std::uint32_t>());
    }
    gens.push_back(std::move(p));
  }
  return PermGroup::enumerate(degree, std::move(gens), bound);
}

ClassData conjugacy_classes(const PermGroup& g) { return g.engine().class_data(); }

namespace {

u64 add_mod(u64 a, u64 b, u64 p) { return a >= p - b ? a - (p - b) : a + b; }
u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : p - (b - a); }

using Matrix = std::vector<std::vector<u64>>;

// Characteristic polynomial det(xI - A), lowest degree first (Faddeev-LeVerrier).
gfp::Poly characteristic_polynomial(const Matrix& a, u64 p) {
  const std::size_t d = a.size();
  gfp::Poly c(d + 1, 0);
  c[d] = 1;
  Matrix m(d, std::vector<u64>(d, 0));
  for (std::size_t k = 1; k <= d; ++k) {
    // m <- a m + c[d-k+1] I
    Matrix next(d, std::vector<u64>(d, 0));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t l = 0; l < d; ++l) {
        if (a[i][l] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) next[i][j] = add_mod(next[i][j], nt::mul_mod(a[i][l], m[l][j], p), p);
      }
      next[i][i] = add_mod(next[i][i], c[d - k + 1], p);
    }
    m = std::move(next);
    u64 trace = 0;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t l = 0; l < d; ++l) trace = add_mod(trace, nt::mul_mod(a[i][l], m[l][i], p), p);
    }
    c[d - k] = sub_mod(0, nt::mul_mod(trace, nt::inverse_mod(k % p, p), p), p);
  }
  return c;
}

// Column basis with an identity block on the pivot rows.
struct Subspace {
  Matrix basis;  // r x d
  std::vector<std::size_t> pivots;
};

Subspace echelon(const std::vector<std::vector<u64>>& vectors, u64 p) {
  // rows of `rows` are the spanning vectors; reduce to RREF
  Matrix rows = vectors;
  const std::size_t n = rows.empty() ? 0 : rows[0].size();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const u64 inv = nt::inverse_mod(rows[r][c], p);
    for (auto& v : rows[r]) v = nt::mul_mod(v, inv, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const u64 f = rows[i][c];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = sub_mod(rows[i][j], nt::mul_mod(f, rows[r][j], p), p);
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  Subspace s;
  s.pivots = pivots;
  s.basis.assign(n, std::vector<u64>(r, 0));
  for (std::size_t b = 0; b < r; ++b) {
    for (std::size_t i = 0; i < n; ++i) s.basis[i][b] = rows[b][i];
  }
  return s;
}

std::vector<Subspace> split(const Subspace& w, const Matrix& m, u64 p, std::mt19937_64& rng) {
  const std::size_t r = m.size();
  const std::size_t d = w.pivots.size();
  // m w = w a, read off on the pivot rows
  Matrix mw(r, std::vector<u64>(d, 0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t l = 0; l < r; ++l) {
      if (m[i][l] == 0) continue;
      for (std::size_t b = 0; b < d; ++b) mw[i][b] = add_mod(mw[i][b], nt::mul_mod(m[i][l], w.basis[l][b], p), p);
    }
  }
  Matrix a(d, std::vector<u64>(d));
  for (std::size_t x = 0; x < d; ++x) a[x] = mw[w.pivots[x]];
  const auto eigenvalues = gfp::roots(characteristic_polynomial(a, p), p, rng);
  if (eigenvalues.size() <= 1) return {w};
  std::vector<Subspace> out;
  for (u64 lambda : eigenvalues) {
    Matrix shifted = a;
    for (std::size_t x = 0; x < d; ++x) shifted[x][x] = sub_mod(shifted[x][x], lambda, p);
    const auto kernel = gfp::null_space(shifted, p);
    std::vector<std::vector<u64>> vectors;
    for (const auto& coords : kernel) {
      std::vector<u64> v(r, 0);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t b = 0; b < d; ++b) v[i] = add_mod(v[i], nt::mul_mod(w.basis[i][b], coords[b], p), p);
      }
      vectors.push_back(std::move(v));
    }
    out.push_back(echelon(vectors, p));
  }
  return out;
}

u64 choose_prime(const ClassData& data, u64 exponent) {
  const u64 max_size = *std::max_element(data.sizes.begin(), data.sizes.end());
  const long double bound = std::max<long double>(
      2.0L * std::sqrt(static_cast<long double>(data.order)) * static_cast<long double>(max_size),
      static_cast<long double>(data.order));
  const auto lower = static_cast<u64>(bound);
  u64 candidate = (lower / exponent + 1) * exponent + 1;
  while (!nt::is_prime(candidate)) candidate += exponent;
  return candidate;
}

u64 primitive_root_of_unity(u64 m, u64 p) {
  const auto primes = nt::prime_divisors(m == 1 ? 2 : m);
  for (u64 a = 2;; ++a) {
    const u64 z = nt::pow_mod(a, (p - 1) / m, p);
    bool ok = true;
    for (u64 r : primes) {
      if (m % r == 0 && nt::pow_mod(z, m / r, p) == 1) ok = false;
    }
    if (ok) return z;
  }
}

}  // namespace

CharacterTable dixon_table(const ClassData& data, std::string name) {
  const std::size_t r = data.sizes.size();
  u64 exponent = 1;
  for (u64 o : data.element_orders) exponent = nt::lcm(exponent, o);
  const u64 p = choose_prime(data, exponent);
  std::mt19937_64 rng(p);

  std::vector<std::size_t> order(r);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return data.sizes[a] < data.sizes[b]; });

  Matrix identity(r, std::vector<u64>(r, 0));
  for (std::size_t i = 0; i < r; ++i) identity[i][i] = 1;
  std::vector<Subspace> spaces{echelon(identity, p)};
  for (std::size_t j : order) {
    if (data.sizes[j] == 1 && data.element_orders[j] == 1) continue;
    if (std::all_of(spaces.begin(), spaces.end(), [](const Subspace& s) { return s.pivots.size() == 1; })) break;
    Matrix m(r, std::vector<u64>(r));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t k = 0; k < r; ++k) m[i][k] = data.structure[j][i][k] % p;
    }
    std::vector<Subspace> next;
    for (const auto& s : spaces) {
      if (s.pivots.size() == 1) {
        next.push_back(s);
        continue;
      }
      for (auto& piece : split(s, m, p, rng)) next.push_back(std::move(piece));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) throw Error("dixon: class matrices did not separate the characters");

  const u64 z = primitive_root_of_unity(exponent, p);
  std::vector<std::size_t> inverse_class(r);
  for (std::size_t k = 0; k < r; ++k) {
    inverse_class[k] = data.power_maps[k].size() == 1 ? 0 : data.power_maps[k].back();
  }

  CharacterTable t;
  t.name = std::move(name);
  t.order = data.order;
  for (std::size_t k = 0; k < r; ++k) t.classes.push_back(ConjClass{data.sizes[k], data.element_orders[k], ""});

  const auto divisors = nt::divisors(data.order);
  for (const auto& s : spaces) {
    std::vector<u64> omega(r);
    const u64 scale = nt::inverse_mod(s.basis[0][0], p);
    for (std::size_t k = 0; k < r; ++k) omega[k] = nt::mul_mod(s.basis[k][0], scale, p);
    u64 sum = 0;
    for (std::size_t k = 0; k < r; ++k) {
      sum = add_mod(sum, nt::mul_mod(nt::mul_mod(omega[k], omega[inverse_class[k]], p), nt::inverse_mod(data.sizes[k] % p, p), p), p);
    }
    const u64 degree_sq = nt::mul_mod(data.order % p, nt::inverse_mod(sum, p), p);
    u64 degree = 0;
    for (u64 d : divisors) {
      if (d * d > data.order) break;
      if (nt::mul_mod(d, d, p) == degree_sq) {
        degree = d;
        break;
      }
    }
    if (degree == 0) throw Error("dixon: no character degree matches");
    std::vector<u64> values(r);
    for (std::size_t k = 0; k < r; ++k) {
      values[k] = nt::mul_mod(nt::mul_mod(omega[k], degree, p), nt::inverse_mod(data.sizes[k] % p, p), p);
    }
    std::vector<Cyclotomic> row;
    for (std::size_t k = 0; k < r; ++k) {
      const u64 o = data.element_orders[k];
      const u64 zo = nt::pow_mod(z, exponent / o, p);
      const u64 zo_inv = nt::inverse_mod(zo, p);
      const u64 o_inv = nt::inverse_mod(o % p, p);
      std::vector<Cyclotomic::Term> terms;
      for (u64 t_exp = 0; t_exp < o; ++t_exp) {
        // multiplicity of the eigenvalue zeta_o^t
        u64 acc = 0;
        const u64 step = nt::pow_mod(zo_inv, t_exp, p);
        u64 w = 1;
        for (u64 j = 0; j < o; ++j) {
          acc = add_mod(acc, nt::mul_mod(values[data.power_maps[k][j]], w, p), p);
          w = nt::mul_mod(w, step, p);
        }
        const u64 mult = nt::mul_mod(acc, o_inv, p);
        if (mult > degree) throw Error("dixon: eigenvalue multiplicity out of range");
        if (mult != 0) terms.push_back({static_cast<std::int64_t>(t_exp), Integer(mult)});
      }
      row.push_back(Cyclotomic::from_terms(o, terms));
    }
    t.irr.push_back(std::move(row));
  }
  if (auto violations = validate(t); !violations.empty()) throw ValidationError(std::move(violations));
  return canonicalize(std::move(t));
}

CharacterTable dixon_table(const PermGroup& g, std::string name) {
  return dixon_table(conjugacy_classes(g), std::move(name));
}

}  // namespace blockgraph
