#pragma once

#include <functional>
#include <vector>

namespace stabenv {

struct SignedPermutation {
  std::vector<int> perm;  // 0-based images
  int sign = 1;
};

// All k! permutations of {0..k-1} in lexicographic order, with signs.
std::vector<SignedPermutation> signed_permutations(int k);

// Calls fn on every tuple of `parts` nonnegative integers summing to total,
// in lexicographic order. Nothing is visited when total < 0.
void for_each_weak_composition(int total, int parts,
                               const std::function<void(const std::vector<int>&)>& fn);

// All ordered k-tuples of distinct entries in 1..n with j_r >= lower_r.
std::vector<std::vector<int>> ordered_tuples_above(int n, const std::vector<int>& lower);

}  // namespace stabenv
