#include "combinatorics.hpp"

namespace mixvol::detail {

namespace {

bool extend(const std::vector<RMat>& candidates, int ncols, std::size_t slot, RMat& chosen,
            std::vector<int>& picks) {
  if (slot == candidates.size()) return true;
  for (int j = 0; j < static_cast<int>(candidates[slot].size()); ++j) {
    chosen.push_back(candidates[slot][j]);
    if (rank(chosen, ncols) == static_cast<int>(chosen.size())) {
      picks.push_back(j);
      if (extend(candidates, ncols, slot + 1, chosen, picks)) return true;
      picks.pop_back();
    }
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::vector<int> independent_transversal(const std::vector<RMat>& candidates, int ncols) {
  RMat chosen;
  std::vector<int> picks;
  if (!extend(candidates, ncols, 0, chosen, picks)) return {};
  return picks;
}

}  // namespace mixvol::detail
