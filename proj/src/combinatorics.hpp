#pragma once

#include <vector>

#include "mixvol/linalg.hpp"

namespace mixvol::detail {

/// Nonempty subsets of {0..n-1}, ordered by size then lexicographically.
inline std::vector<std::vector<int>> subsets_by_size(int n) {
  std::vector<std::vector<int>> out;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      out.push_back(idx);
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

inline Rational factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Picks one vector from each candidate list so that the picks are linearly
/// independent. By Rado's theorem it suffices to search over bases of the
/// spans. Returns the chosen indices, or an empty vector if impossible.
std::vector<int> independent_transversal(const std::vector<RMat>& candidates, int ncols);

}  // namespace mixvol::detail
