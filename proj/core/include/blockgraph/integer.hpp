#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace blockgraph {

/// Arbitrary precision signed integer used for all exact coefficients.
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Integer& v) { return v.str(); }

/// Least nonnegative residue of v modulo m (m > 0).
inline std::uint64_t residue(const Integer& v, std::uint64_t m) {
  Integer r = v % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

}  // namespace blockgraph
