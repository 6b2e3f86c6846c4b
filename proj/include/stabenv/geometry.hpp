#pragma once

#include <string>
#include <vector>

#include "stabenv/multipoly.hpp"

namespace stabenv {

// Variables a1..an followed by h (the cotangent fiber weight). Cached, so
// repeated calls for one n return the same pointer.
VarSetPtr equivariant_vars(int n);
std::string a_name(int i);
inline constexpr const char* kHbar = "h";

/// Torus fixed point p_I of T*Gr(k, n): 1 <= i_1 < ... < i_k <= n.
struct FixedPoint {
  int n = 0;
  int k = 0;
  std::vector<int> indices;

  int weight() const;  // |I|
  bool contains(int i) const;
  std::vector<int> complement() const;
  // "1,3"
  std::string to_string() const;
  // "<13>" (comma separated once n > 9)
  std::string label() const;

  friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
  friend auto operator<=>(const FixedPoint&, const FixedPoint&) = default;
};

FixedPoint make_fixed_point(int n, int k, std::vector<int> indices);
// Parses "2,3" (sorted on input).
FixedPoint parse_fixed_point(int n, int k, const std::string& text);

// All C(n, k) points in lexicographic order.
std::vector<FixedPoint> enumerate_fixed_points(int n, int k);

/// Permutation tau of {1..n}; perm[i-1] = tau(i). The identity is the
/// standard chamber a_1 <= ... <= a_n. tau acts on variables by
/// a_i -> a_tau(i).
struct Chamber {
  std::vector<int> perm;

  static Chamber identity(int n);
  int n() const { return static_cast<int>(perm.size()); }
  int operator()(int i) const { return perm.at(static_cast<std::size_t>(i - 1)); }
  Chamber inverse() const;
  bool is_identity() const;
  std::string to_string() const;

  friend bool operator==(const Chamber&, const Chamber&) = default;
};

// Parses "4,3,2,1" or "4321" (n <= 9); validates a permutation of 1..n.
Chamber parse_chamber(int n, const std::string& text);

// tau(I) = {tau(i)}, re-sorted.
FixedPoint apply(const Chamber& tau, const FixedPoint& p);

// a_i -> a_tau(i) on a polynomial over equivariant_vars(n).
MultiPoly apply(const Chamber& tau, const MultiPoly& poly);
Bindings relabel_bindings(const Chamber& tau, const VarSetPtr& vars);

/// Linear weight a_x - a_y + shift*h over equivariant_vars(n).
MultiPoly weight_form(int n, int x, int y, int shift);

// Weights (a_v - a_s) and (a_s - a_v + h), v not in I, s in I.
std::vector<MultiPoly> tangent_weights(const FixedPoint& p);
MultiPoly tangent_euler_class(const FixedPoint& p);

std::vector<MultiPoly> repelling_weights(const FixedPoint& p, const Chamber& c);
MultiPoly repelling_euler_class(const FixedPoint& p, const Chamber& c);
// Complementary half: repelling * attracting = tangent_euler_class.
MultiPoly attracting_euler_class(const FixedPoint& p, const Chamber& c);

// Componentwise order i_r <= j_r used to truncate the localization sums.
bool attracting_leq(const FixedPoint& lhs, const FixedPoint& rhs);
// Same order read in the chamber tau: tau^{-1}(I) <= tau^{-1}(J).
bool attracting_leq(const FixedPoint& lhs, const FixedPoint& rhs, const Chamber& tau);

struct MomentEdge {
  FixedPoint lower;  // contains s
  FixedPoint upper;  // lower with s replaced by q
  int s = 0;
  int q = 0;
  MultiPoly zero_section;  // a_q - a_s
  MultiPoly cotangent;     // a_s - a_q + h
  // True when the zero-section weight pairs positively with the cocharacter
  // (z, z^2, ..., z^n), i.e. q > s.
  bool attracting = false;
};

struct MomentGraph {
  int n = 0;
  int k = 0;
  std::vector<FixedPoint> vertices;
  std::vector<MomentEdge> edges;

  std::size_t degree(const FixedPoint& p) const;
};

MomentGraph build_moment_graph(int n, int k);

/// Partition inside the (n-k) x k rectangle: at most n-k parts, each <= k.
/// Rows are indexed 1..n-k and columns 1..k; box (r, c) lies in the
/// partition when c <= parts[r-1].
struct BoxPartition {
  int n = 0;
  int k = 0;
  std::vector<int> parts;  // weakly decreasing, no trailing zeros

  int rows() const { return n - k; }
  int cols() const { return k; }
  int size() const;
  int part(int row) const;  // 0 past the end
  bool contains(int row, int col) const;
  // Transposed partition, living in the k x (n-k) box of Gr(n-k, n).
  BoxPartition conjugate() const;
  // Complement inside the rectangle, rotated by 180 degrees.
  BoxPartition complement() const;
  std::string to_string() const;

  friend bool operator==(const BoxPartition&, const BoxPartition&) = default;
};

BoxPartition make_partition(int n, int k, std::vector<int> parts);
// Parses "2,1"; empty text is the empty partition.
BoxPartition parse_partition(int n, int k, const std::string& text);
std::vector<BoxPartition> enumerate_partitions(int n, int k);

// Omega(lambda) = lambda^t + (k, k-1, ..., 1), sorted ascending.
FixedPoint omega(const BoxPartition& lam);
BoxPartition omega_inverse(const FixedPoint& p);

}  // namespace stabenv
