#pragma once

#include <map>
#include <utility>
#include <vector>

#include "stabenv/localize.hpp"

namespace stabenv {

using Box = std::pair<int, int>;  // (row, col), 1-based

/// Every box of the (n-k) x k rectangle once; the boxes of lambda and of its
/// complement each appear in a valid removal order.
struct BoxPath {
  std::vector<Box> boxes;

  friend bool operator==(const BoxPath&, const BoxPath&) = default;
  friend auto operator<=>(const BoxPath&, const BoxPath&) = default;
};

/// sum_i k_i a_i, keyed by i.
using WeightedMultiset = std::map<int, int>;

// Box (r, c) carries a_{r-c+k}.
int box_index(const Box& b, int k);

// Depth first, removable boxes tried in (column, row) order.
std::vector<BoxPath> enumerate_paths(const BoxPartition& lam);

// C(k(n-k), |lam|) * f^lam * f^{lam^c}.
Integer path_count(const BoxPartition& lam);

// Standard Young tableaux count by the hook length formula.
Integer hook_length_count(const std::vector<int>& parts);

// Prefix multisets T(S)_1, ..., T(S)_{k(n-k)}.
std::vector<WeightedMultiset> multiset_sequence(const BoxPath& path, int k);

// sum_i h k_i (k_i - k_{i+1}) + k_i (a_{i+1} - a_i) over equivariant_vars(n).
MultiPoly multiset_weight(const WeightedMultiset& a, int n);

// Factors w(T(S)_j) of one path. Throws ZeroWeightEncountered.
std::vector<MultiPoly> path_weights(const BoxPath& path, int n, int k);

// V(lambda), summed over removal states: every path through a state shares
// its weight, so the sum is a recursion over states rather than over paths.
// Throws ZeroWeightEncountered.
RationalFunction path_sum(const BoxPartition& lam, Execution exec = Execution::parallel);

// Term-by-term sum over enumerate_paths; reference for path_sum.
RationalFunction path_sum_by_paths(const BoxPartition& lam);

// V(lambda) after a_s -> s z h, times h^{k(n-k)}, as a function of z.
RationalFunction path_sum_z(const BoxPartition& lam, Execution exec = Execution::parallel);

// Limit z -> 0 of path_sum_z; throws PoleAtZero or NonIntegerResult.
IntegralValue path_sum_limit(const BoxPartition& lam, Execution exec = Execution::parallel);

// a_i -> -a_{n+1-i}, h fixed.
RationalFunction alpha(const RationalFunction& f, int n);

// path_sum on affine_chart(n); with twisted, alpha(path_sum) instead.
FactoredFraction path_sum_on_chart(const BoxPartition& lam, bool twisted = false,
                                   Execution exec = Execution::parallel);

// Default guard k(n-k) <= 9 for the conjecture checks.
inline constexpr int kPathBoxLimit = 9;

// V(lambda) = localization_sum(Omega(lambda)) for every lambda, compared on
// affine_chart(n), and the limit of V agrees with the z-limit integral.
// Throws CostLimitExceeded.
CheckOutcome conjecture_44_check(int n, int k, int box_limit = kPathBoxLimit);

// V(lambda) = alpha(V(lambda^c)) for every lambda, compared on
// affine_chart(n). Throws CostLimitExceeded.
CheckOutcome conjecture_45_check(int n, int k, int box_limit = kPathBoxLimit);

// (r, c) -> (n-k+1-r, k+1-c), a bijection from paths to lambda onto paths
// to lambda^c.
BoxPath complement_path(const BoxPath& path, int n, int k);

// Paths S to lambda with alpha(T(S)) != T(complement_path(S)) as multiset
// sequences, reading alpha on indices as i -> n+1-i.
std::size_t alpha_termwise_failures(const BoxPartition& lam);

}  // namespace stabenv
