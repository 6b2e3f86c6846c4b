#include "stabenv/combinatorics.hpp"

#include <algorithm>
#include <numeric>

namespace stabenv {

std::vector<SignedPermutation> signed_permutations(int k) {
  std::vector<SignedPermutation> out;
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  do {
    int inversions = 0;
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        inversions += p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)];
      }
    }
    out.push_back({p, inversions % 2 == 0 ? 1 : -1});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

void for_each_weak_composition(int total, int parts,
                               const std::function<void(const std::vector<int>&)>& fn) {
  if (total < 0 || parts < 1) {
    return;
  }
  // Odometer over the first parts-1 entries; the last absorbs the rest.
  std::vector<int> c(static_cast<std::size_t>(parts), 0);
  c.back() = total;
  while (true) {
    fn(c);
    int pos = parts - 2;
    while (pos >= 0) {
      auto p = static_cast<std::size_t>(pos);
      if (c.back() > 0) {
        ++c[p];
        --c.back();
        break;
      }
      c.back() += c[p];
      c[p] = 0;
      --pos;
    }
    if (pos < 0) {
      return;
    }
  }
}

std::vector<std::vector<int>> ordered_tuples_above(int n, const std::vector<int>& lower) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::function<void()> rec = [&] {
    if (cur.size() == lower.size()) {
      out.push_back(cur);
      return;
    }
    for (int j = lower[cur.size()]; j <= n; ++j) {
      if (!used[static_cast<std::size_t>(j)]) {
        used[static_cast<std::size_t>(j)] = true;
        cur.push_back(j);
        rec();
        cur.pop_back();
        used[static_cast<std::size_t>(j)] = false;
      }
    }
  };
  rec();
  return out;
}

}  // namespace stabenv
