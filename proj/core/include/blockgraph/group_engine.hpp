#pragma once

// Brute-force enumeration of a finite group given by generators in some faithful
// representation, followed by the class data needed for a character table.

#include <cstdint>
#include <deque>
#include <string>
#include <unordered_map>
#include <vector>

#include "blockgraph/errors.hpp"
#include "blockgraph/numtheory.hpp"

namespace blockgraph {

/// Class-level data of a finite group: everything the Dixon-Schneider step consumes.
struct ClassData {
  std::uint64_t order = 1;
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint64_t> element_orders;
  /// power_maps[k][j] = class of g_k^j for 0 <= j < element_orders[k].
  std::vector<std::vector<std::size_t>> power_maps;
  /// structure[j][i][k] = #{x in K_j : x^-1 g_k in K_i} for a fixed g_k in K_k.
  std::vector<std::vector<std::vector<std::uint64_t>>> structure;
};

/// Rep must provide Element, identity(), multiply(a, b) and either
/// dense_bound() with dense_key(e) < dense_bound(), or a Hash functor type.
template <class Rep>
class FiniteGroup {
 public:
  using Element = typename Rep::Element;

  FiniteGroup(Rep rep, std::vector<Element> generators, std::size_t bound)
      : rep_(std::move(rep)), generators_(std::move(generators)) {
    if constexpr (kDense) dense_index_.assign(rep_.dense_bound(), kNone);
    add(rep_.identity());
    for (std::size_t head = 0; head < elements_.size(); ++head) {
      for (const auto& g : generators_) {
        Element x = rep_.multiply(elements_[head], g);
        if (find(x) == kNone) {
          if (elements_.size() >= bound) {
            throw SizeExceeded("group order exceeds the bound " + std::to_string(bound));
          }
          add(std::move(x));
        }
      }
    }
  }

  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  const std::vector<Element>& generators() const noexcept { return generators_; }
  const Rep& rep() const noexcept { return rep_; }

  std::size_t index_of(const Element& e) const { return find(e); }

  std::uint64_t element_order(const Element& e) const {
    std::uint64_t n = 1;
    const Element one = rep_.identity();
    for (Element x = e; !(x == one); x = rep_.multiply(x, e)) ++n;
    return n;
  }

  /// Classes are numbered in discovery order, starting with the identity.
  ClassData class_data() const {
    const std::size_t n = elements_.size();
    std::vector<Element> inverses;
    for (const auto& g : generators_) inverses.push_back(power(g, element_order(g) - 1));

    constexpr std::uint32_t kUnset = 0xffffffffU;
    std::vector<std::uint32_t> class_of(n, kUnset);
    std::vector<std::size_t> reps;
    ClassData data;
    data.order = n;
    for (std::size_t start = 0; start < n; ++start) {
      if (class_of[start] != kUnset) continue;
      const auto c = static_cast<std::uint32_t>(reps.size());
      reps.push_back(start);
      std::uint64_t size = 0;
      std::vector<std::size_t> stack{start};
      class_of[start] = c;
      while (!stack.empty()) {
        const std::size_t cur = stack.back();
        stack.pop_back();
        ++size;
        for (std::size_t s = 0; s < generators_.size(); ++s) {
          const Element y = rep_.multiply(rep_.multiply(inverses[s], elements_[cur]), generators_[s]);
          const std::size_t idx = find(y);
          if (class_of[idx] == kUnset) {
            class_of[idx] = c;
            stack.push_back(idx);
          }
        }
      }
      data.sizes.push_back(size);
    }
    const std::size_t r = reps.size();
    for (std::size_t k = 0; k < r; ++k) {
      const Element& g = elements_[reps[k]];
      std::vector<std::size_t> pm{0};
      for (Element x = g; !(x == rep_.identity()); x = rep_.multiply(x, g)) pm.push_back(class_of[find(x)]);
      data.element_orders.push_back(pm.size());
      data.power_maps.push_back(std::move(pm));
    }
    std::vector<std::size_t> inverse_class(r);
    for (std::size_t k = 0; k < r; ++k) {
      const auto& pm = data.power_maps[k];
      inverse_class[k] = pm.size() == 1 ? 0 : pm.back();
    }
    data.structure.assign(r, std::vector<std::vector<std::uint64_t>>(r, std::vector<std::uint64_t>(r, 0)));
    for (std::size_t k = 0; k < r; ++k) {
      const Element& g = elements_[reps[k]];
      for (std::size_t u = 0; u < n; ++u) {
        // x = g u lies in K_j and x^-1 g = u^-1 lies in K_i.
        const std::size_t j = class_of[find(rep_.multiply(g, elements_[u]))];
        const std::size_t i = inverse_class[class_of[u]];
        ++data.structure[j][i][k];
      }
    }
    return data;
  }

 private:
  static constexpr bool kDense = requires(const Rep& r, const Element& e) { r.dense_key(e); };
  static constexpr std::uint32_t kNone = 0xffffffffU;

  Element power(const Element& g, std::uint64_t e) const {
    Element x = rep_.identity();
    for (std::uint64_t i = 0; i < e; ++i) x = rep_.multiply(x, g);
    return x;
  }

  std::size_t find(const Element& e) const {
    if constexpr (kDense) {
      const std::uint32_t i = dense_index_[rep_.dense_key(e)];
      return i == kNone ? kNone : i;
    } else {
      auto it = hashed_index_.find(e);
      return it == hashed_index_.end() ? kNone : it->second;
    }
  }

  void add(Element e) {
    const auto i = static_cast<std::uint32_t>(elements_.size());
    if constexpr (kDense) {
      dense_index_[rep_.dense_key(e)] = i;
    } else {
      hashed_index_.emplace(e, i);
    }
    elements_.push_back(std::move(e));
  }

  struct NoHash {
    std::size_t operator()(const Element&) const { return 0; }
  };
  template <class R>
  static auto hash_type(int) -> typename R::Hash;
  template <class R>
  static auto hash_type(long) -> NoHash;
  using HashType = decltype(hash_type<Rep>(0));

  Rep rep_;
  std::vector<Element> generators_;
  std::vector<Element> elements_;
  std::vector<std::uint32_t> dense_index_;
  std::unordered_map<Element, std::uint32_t, HashType> hashed_index_;
};

}  // namespace blockgraph
