#pragma once

#include <cstdint>
#include <vector>

#include "waldron/errors.hpp"

namespace waldron {

/// Label for a node: alpha in N_0^{d+1} with |alpha| = n.
using MultiIndex = std::vector<int>;

/// C(n+d, d) = number of multi-indices of modulus n in d+1 entries.
inline std::int64_t simplex_lattice_size(int n, int d) {
  if (n < 0 || d < 0) throw InvalidArgument("simplex_lattice_size: negative arg");
  std::int64_t r = 1;
  for (int k = 1; k <= d; ++k) r = r * (n + k) / k;
  return r;
}

/// Visit every alpha with |alpha| = n over d+1 entries in lexicographic
/// order: (0,...,0,n), (0,...,1,n-1), ..., (n,0,...,0).
template <class F>
void for_each_multi_index(int n, int d, F&& visit) {
  if (n < 0 || d < 1) throw InvalidArgument("for_each_multi_index: bad n or d");
  MultiIndex alpha(static_cast<std::size_t>(d) + 1, 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == d) {
      alpha[static_cast<std::size_t>(pos)] = remaining;
      visit(const_cast<const MultiIndex&>(alpha));
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      alpha[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, n);
}

inline std::vector<MultiIndex> enumerate_multi_indices(int n, int d) {
  std::vector<MultiIndex> out;
  out.reserve(static_cast<std::size_t>(simplex_lattice_size(n, d)));
  for_each_multi_index(n, d, [&](const MultiIndex& a) { out.push_back(a); });
  return out;
}

}  // namespace waldron
