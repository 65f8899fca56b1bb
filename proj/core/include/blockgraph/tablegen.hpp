#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "blockgraph/chartab.hpp"
#include "blockgraph/group_engine.hpp"

namespace blockgraph {

inline constexpr std::size_t kMaxPermGroupOrder = 1'000'000;

/// Permutation in one-line form on {0, ..., degree - 1}.
using Perm = std::vector<std::uint32_t>;

struct PermRep {
  using Element = Perm;
  std::size_t degree = 0;

  Element identity() const;
  /// Composition: apply a first, then b.
  Element multiply(const Element& a, const Element& b) const;

  struct Hash {
    std::size_t operator()(const Element& e) const;
  };
};

class PermGroup {
 public:
  /// Closure of the generators; throws InvalidArgument for malformed permutations and
  /// SizeExceeded when the order passes `bound`.
  static PermGroup enumerate(std::size_t degree, std::vector<Perm> generators,
                             std::size_t bound = kMaxPermGroupOrder);

  std::size_t degree() const noexcept { return engine_->rep().degree; }
  std::size_t order() const noexcept { return engine_->order(); }
  const std::vector<Perm>& generators() const noexcept { return engine_->generators(); }
  const std::vector<Perm>& elements() const noexcept { return engine_->elements(); }
  const FiniteGroup<PermRep>& engine() const noexcept { return *engine_; }

 private:
  std::shared_ptr<const FiniteGroup<PermRep>> engine_;
};

/// Parses {"degree": n, "generators": [[...], ...]}; throws SyntaxError.
PermGroup parse_perm_group(std::string_view document, std::size_t bound = kMaxPermGroupOrder);

ClassData conjugacy_classes(const PermGroup& g);

/// Dixon-Schneider over a prime field, lifted to cyclotomic values, validated and canonically ordered.
CharacterTable dixon_table(const ClassData& data, std::string name = "G");
CharacterTable dixon_table(const PermGroup& g, std::string name = "G");

}  // namespace blockgraph
