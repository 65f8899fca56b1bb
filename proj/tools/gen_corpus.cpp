// Regenerates the larger corpus tables from generators.
//
//   gen_corpus <output-dir> [name...]
//   gen_corpus --normalize <table.json>...   (rewrite hand-written tables in canonical form)
//
// Names: S5 A6 L2(7) L2(11) D8xC3 Sz(8) J1 L5(2). With no names, all but L5(2) are built
// (L5(2) has order 9999360 and takes a while).

#include <array>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>

#include <boost/container_hash/hash.hpp>

#include "blockgraph/chartab.hpp"

#include "blockgraph/group_engine.hpp"
#include "blockgraph/tablegen.hpp"

using namespace blockgraph;

namespace {

// Projective line over F_q, q prime: points 0..q-1 and infinity = q.
std::vector<Perm> projective_line_generators(std::uint32_t q) {
  Perm shift(q + 1), invert(q + 1);
  for (std::uint32_t x = 0; x < q; ++x) shift[x] = (x + 1) % q;
  shift[q] = q;
  // x -> -1/x
  for (std::uint32_t x = 1; x < q; ++x) {
    invert[x] = static_cast<std::uint32_t>(q - nt::inverse_mod(x, q));
  }
  invert[0] = q;
  invert[q] = 0;
  return {shift, invert};
}

// 4 x 4 matrices over GF(8) = GF(2)[x]/(x^3 + x + 1).
struct SuzukiRep {
  using Element = std::array<std::uint8_t, 16>;
  struct Hash {
    std::size_t operator()(const Element& e) const { return boost::hash_range(e.begin(), e.end()); }
  };

  static std::uint8_t mul(std::uint8_t a, std::uint8_t b) {
    std::uint8_t r = 0;
    for (int i = 0; i < 3; ++i) {
      if ((b >> i) & 1U) r ^= static_cast<std::uint8_t>(a << i);
    }
    for (int i = 4; i >= 3; --i) {
      if ((r >> i) & 1U) r ^= static_cast<std::uint8_t>(0b1011 << (i - 3));
    }
    return r;
  }
  static std::uint8_t theta(std::uint8_t a) { return mul(mul(a, a), mul(a, a)); }

  Element identity() const {
    Element e{};
    for (int i = 0; i < 4; ++i) e[i * 5] = 1;
    return e;
  }
  Element multiply(const Element& a, const Element& b) const {
    Element r{};
    for (int i = 0; i < 4; ++i) {
      for (int k = 0; k < 4; ++k) {
        if (a[i * 4 + k] == 0) continue;
        for (int j = 0; j < 4; ++j) r[i * 4 + j] ^= mul(a[i * 4 + k], b[k * 4 + j]);
      }
    }
    return r;
  }

  static Element s(std::uint8_t a, std::uint8_t b) {
    const std::uint8_t ta = theta(a), tb = theta(b);
    Element m{};
    m = {1, 0, 0, 0,
         a, 1, 0, 0,
         b, ta, 1, 0,
         static_cast<std::uint8_t>(mul(mul(a, a), ta) ^ mul(a, b) ^ tb), static_cast<std::uint8_t>(mul(a, ta) ^ b), a, 1};
    return m;
  }
  static Element t() {
    Element m{};
    for (int i = 0; i < 4; ++i) m[i * 4 + (3 - i)] = 1;
    return m;
  }
};

// 5 x 5 matrices over GF(2), one 5-bit row per 5 bits.
struct L52Rep {
  using Element = std::uint32_t;
  Element identity() const {
    Element e = 0;
    for (unsigned i = 0; i < 5; ++i) e |= 1U << (5 * i + i);
    return e;
  }
  Element multiply(Element a, Element b) const {
    Element r = 0;
    for (unsigned i = 0; i < 5; ++i) {
      const unsigned row = (a >> (5 * i)) & 31U;
      unsigned out = 0;
      for (unsigned k = 0; k < 5; ++k) {
        if ((row >> k) & 1U) out ^= (b >> (5 * k)) & 31U;
      }
      r |= out << (5 * i);
    }
    return r;
  }
  std::size_t dense_bound() const { return std::size_t{1} << 25; }
  std::size_t dense_key(Element e) const { return e; }

  static Element transvection(unsigned i, unsigned j) {
    L52Rep rep;
    return rep.identity() | (1U << (5 * i + j));
  }
};

// 7 x 7 matrices over GF(11).
struct J1Rep {
  using Element = std::array<std::uint8_t, 49>;
  struct Hash {
    std::size_t operator()(const Element& e) const { return boost::hash_range(e.begin(), e.end()); }
  };
  Element identity() const {
    Element e{};
    for (int i = 0; i < 7; ++i) e[i * 8] = 1;
    return e;
  }
  Element multiply(const Element& a, const Element& b) const {
    Element r{};
    for (int i = 0; i < 7; ++i) {
      for (int j = 0; j < 7; ++j) {
        unsigned s = 0;
        for (int k = 0; k < 7; ++k) s += static_cast<unsigned>(a[i * 7 + k]) * b[k * 7 + j];
        r[i * 7 + j] = static_cast<std::uint8_t>(s % 11);
      }
    }
    return r;
  }
  static std::vector<Element> generators() {
    Element y{};
    for (int i = 0; i < 7; ++i) y[i * 7 + (i + 1) % 7] = 1;
    const int z[7][7] = {{-3, 2, -1, -1, -3, -1, -3}, {-2, 1, 1, 3, 1, 3, 3},  {-1, -1, -3, -1, -3, -3, 2},
                         {-1, -3, -1, -3, -3, 2, -1}, {-3, -1, -3, -3, 2, -1, -1}, {1, 3, 3, -2, 1, 1, 3},
                         {3, 3, -2, 1, 1, 3, 1}};
    Element zz{};
    for (int i = 0; i < 7; ++i) {
      for (int j = 0; j < 7; ++j) zz[i * 7 + j] = static_cast<std::uint8_t>((z[i][j] % 11 + 11) % 11);
    }
    return {y, zz};
  }
};

template <class Rep>
CharacterTable table_of(Rep rep, std::vector<typename Rep::Element> gens, const std::string& name,
                        const std::string& provenance) {
  const FiniteGroup<Rep> g(std::move(rep), std::move(gens), std::size_t{20'000'000});
  std::cerr << name << ": order " << g.order() << "\n";
  CharacterTable t = dixon_table(g.class_data(), name);
  t.provenance = provenance;
  return t;
}

CharacterTable perm_table(std::size_t degree, std::vector<Perm> gens, const std::string& name,
                          const std::string& description) {
  return table_of(PermRep{degree}, std::move(gens), name,
                  "Dixon-Schneider computation (gen_corpus) from " + description);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: gen_corpus <output-dir> [name...]\n";
    return 3;
  }
  if (std::string(argv[1]) == "--normalize") {
    for (int i = 2; i < argc; ++i) {
      std::ifstream in(argv[i], std::ios::binary);
      const std::string text = print_table(parse_table(in));
      in.close();
      std::ofstream(argv[i], std::ios::binary) << text;
    }
    return 0;
  }
  const std::filesystem::path dir = argv[1];
  std::map<std::string, std::function<CharacterTable()>> builders{
      {"S5", [] { return perm_table(5, {{1, 0, 2, 3, 4}, {1, 2, 3, 4, 0}}, "S5", "permutations (0 1), (0 1 2 3 4)"); }},
      {"A6", [] {
         return perm_table(6, {{1, 2, 0, 3, 4, 5}, {0, 2, 3, 4, 5, 1}}, "A6", "permutations (0 1 2), (1 2 3 4 5)");
       }},
      {"L2(7)", [] {
         return perm_table(8, projective_line_generators(7), "L2(7)", "x -> x+1, x -> -1/x on the projective line over F_7");
       }},
      {"L2(11)", [] {
         return perm_table(12, projective_line_generators(11), "L2(11)",
                           "x -> x+1, x -> -1/x on the projective line over F_11");
       }},
      {"D8xC3", [] {
         return perm_table(7, {{1, 2, 3, 0, 4, 5, 6}, {3, 2, 1, 0, 4, 5, 6}, {0, 1, 2, 3, 5, 6, 4}}, "D8xC3",
                           "permutations (0 1 2 3), (0 3)(1 2), (4 5 6)");
       }},
      {"Sz(8)", [] {
         return table_of(SuzukiRep{}, {SuzukiRep::s(1, 0), SuzukiRep::s(0, 1), SuzukiRep::s(2, 0), SuzukiRep::t()},
                         "Sz(8)",
                         "Dixon-Schneider computation (gen_corpus) from the 4-dimensional representation over GF(8): "
                         "lower unitriangular S(a,b) for (a,b) = (1,0), (0,1), (x,0) and the antidiagonal involution");
       }},
      {"J1", [] {
         return table_of(J1Rep{}, J1Rep::generators(), "J1",
                         "Dixon-Schneider computation (gen_corpus) from Janko's 7-dimensional matrices Y, Z over GF(11)");
       }},
      {"L5(2)", [] {
         std::vector<L52Rep::Element> gens;
         for (unsigned i = 0; i < 4; ++i) {
           gens.push_back(L52Rep::transvection(i, i + 1));
           gens.push_back(L52Rep::transvection(i + 1, i));
         }
         return table_of(L52Rep{}, gens, "L5(2)",
                         "Dixon-Schneider computation (gen_corpus) from the elementary transvections of GL(5,2)");
       }},
  };

  std::vector<std::string> names(argv + 2, argv + argc);
  if (names.empty()) names = {"S5", "A6", "L2(7)", "L2(11)", "D8xC3", "Sz(8)", "J1"};
  std::filesystem::create_directories(dir);
  for (const auto& name : names) {
    auto it = builders.find(name);
    if (it == builders.end()) {
      std::cerr << "unknown group " << name << "\n";
      return 3;
    }
    const auto start = std::chrono::steady_clock::now();
    const CharacterTable t = it->second();
    std::ofstream(dir / (name + ".json")) << print_table(t);
    std::cerr << name << ": " << t.size() << " classes in "
              << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s\n";
  }
  return 0;
}
