#include "stabenv/paths.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <unordered_map>

#include "stabenv/errors.hpp"

namespace stabenv {

namespace {

// Boxes of the rectangle numbered row-major; a state is the bitmask of
// removed boxes.
struct Rectangle {
  int rows;
  int cols;
  int k;
  std::uint32_t in_lambda = 0;

  int bit(int r, int c) const { return (r - 1) * cols + (c - 1); }
  int size() const { return rows * cols; }
  bool inside(int r, int c) const { return r >= 1 && r <= rows && c >= 1 && c <= cols; }
  Box box(int b) const { return {b / cols + 1, b % cols + 1}; }
};

Rectangle rectangle(const BoxPartition& lam) {
  if (lam.k * (lam.n - lam.k) > 30) {
    throw CostLimitExceeded("path model limited to 30 boxes");
  }
  Rectangle rect{lam.rows(), lam.cols(), lam.k};
  for (int r = 1; r <= rect.rows; ++r) {
    for (int c = 1; c <= lam.part(r); ++c) {
      rect.in_lambda |= 1u << rect.bit(r, c);
    }
  }
  return rect;
}

// A box of lambda goes once its right and lower neighbors in lambda are
// gone; a box of the complement once its left and upper neighbors there are.
bool removable(const Rectangle& rect, std::uint32_t removed, int r, int c) {
  int b = rect.bit(r, c);
  if ((removed >> b) & 1u) {
    return false;
  }
  bool lam = (rect.in_lambda >> b) & 1u;
  auto present = [&](int rr, int cc) {
    if (!rect.inside(rr, cc)) {
      return false;
    }
    int o = rect.bit(rr, cc);
    return (((rect.in_lambda >> o) & 1u) != 0) == lam && ((removed >> o) & 1u) == 0;
  };
  return lam ? !present(r + 1, c) && !present(r, c + 1) : !present(r - 1, c) && !present(r, c - 1);
}

std::vector<Box> candidates(const Rectangle& rect, std::uint32_t removed) {
  std::vector<Box> out;
  for (int c = 1; c <= rect.cols; ++c) {
    for (int r = 1; r <= rect.rows; ++r) {
      if (removable(rect, removed, r, c)) {
        out.emplace_back(r, c);
      }
    }
  }
  return out;
}

void dfs(const Rectangle& rect, std::uint32_t removed, std::vector<Box>& prefix, std::vector<BoxPath>& out) {
  if (static_cast<int>(prefix.size()) == rect.size()) {
    out.push_back({prefix});
    return;
  }
  for (const Box& b : candidates(rect, removed)) {
    prefix.push_back(b);
    dfs(rect, removed | (1u << rect.bit(b.first, b.second)), prefix, out);
    prefix.pop_back();
  }
}

WeightedMultiset state_multiset(const Rectangle& rect, std::uint32_t removed) {
  WeightedMultiset a;
  for (int b = 0; b < rect.size(); ++b) {
    if ((removed >> b) & 1u) {
      ++a[box_index(rect.box(b), rect.k)];
    }
  }
  return a;
}

MultiPoly checked_weight(const WeightedMultiset& a, int n) {
  MultiPoly w = multiset_weight(a, n);
  if (w.is_zero()) {
    std::string text = "{";
    for (const auto& [i, m] : a) {
      text += " " + std::to_string(m) + "*a" + std::to_string(i);
    }
    throw ZeroWeightEncountered("w(" + text + " }) vanishes");
  }
  return w;
}

// w after a_s -> s z h, divided by h.
MultiPoly weight_z(const WeightedMultiset& a) {
  const VarSetPtr& v = z_vars();
  MultiPoly z = MultiPoly::variable(v, 0);
  Rational hcoef = 0;
  Rational zcoef = 0;
  for (const auto& [i, m] : a) {
    auto next = a.find(i + 1);
    int m_next = next == a.end() ? 0 : next->second;
    hcoef += Rational(m) * (m - m_next);
    zcoef += Rational(m);  // a_{i+1} - a_i -> z
  }
  return z * zcoef + MultiPoly::constant(v, hcoef);
}

// Sum over removal states: F(empty) = 1 and F(s) = sum_{s' -> s} F(s') / w(s),
// one layer of states (by number of removed boxes) at a time.
template <typename Weight>
FactoredFraction state_sum(const Rectangle& rect, const VarSetPtr& vars, Weight weight, Execution exec) {
  std::vector<std::uint32_t> states{0u};
  std::vector<FactoredFraction> values{FactoredFraction(MultiPoly::constant(vars, Rational(1)))};
  for (int step = 0; step < rect.size(); ++step) {
    std::unordered_map<std::uint32_t, std::size_t> index;
    for (std::size_t i = 0; i < states.size(); ++i) {
      index.emplace(states[i], i);
    }
    std::set<std::uint32_t> reached;
    for (std::uint32_t removed : states) {
      for (const Box& b : candidates(rect, removed)) {
        reached.insert(removed | (1u << rect.bit(b.first, b.second)));
      }
    }
    std::vector<std::uint32_t> next(reached.begin(), reached.end());
    auto computed = parallel_map<FactoredFraction>(
        next.size(),
        [&](std::size_t i) {
          std::uint32_t s = next[i];
          FactoredFraction sum{MultiPoly(vars)};
          for (int b = 0; b < rect.size(); ++b) {
            if (((s >> b) & 1u) == 0) {
              continue;
            }
            std::uint32_t prev = s & ~(1u << b);
            auto it = index.find(prev);
            Box box = rect.box(b);
            if (it != index.end() && removable(rect, prev, box.first, box.second)) {
              sum += values[it->second];
            }
          }
          sum.divide_by(weight(state_multiset(rect, s)));
          return sum;
        },
        exec);
    states = std::move(next);
    values = std::move(computed);
  }
  return values.front();
}

void guard(int n, int k, int box_limit) {
  if (k * (n - k) > box_limit) {
    throw CostLimitExceeded("path checks for Gr(" + std::to_string(k) + "," + std::to_string(n) + ") have " +
                            std::to_string(k * (n - k)) + " boxes > " + std::to_string(box_limit));
  }
}

}  // namespace

int box_index(const Box& b, int k) { return b.first - b.second + k; }

std::vector<BoxPath> enumerate_paths(const BoxPartition& lam) {
  Rectangle rect = rectangle(lam);
  std::vector<BoxPath> out;
  std::vector<Box> prefix;
  dfs(rect, 0u, prefix, out);
  return out;
}

Integer hook_length_count(const std::vector<int>& parts) {
  int size = 0;
  Integer hooks = 1;
  for (std::size_t r = 0; r < parts.size(); ++r) {
    for (int c = 1; c <= parts[r]; ++c) {
      ++size;
      int arm = parts[r] - c;
      int leg = 0;
      for (std::size_t rr = r + 1; rr < parts.size() && parts[rr] >= c; ++rr) {
        ++leg;
      }
      hooks *= arm + leg + 1;
    }
  }
  return factorial(static_cast<unsigned>(size)) / hooks;
}

Integer path_count(const BoxPartition& lam) {
  return binomial(lam.k * (lam.n - lam.k), lam.size()) * hook_length_count(lam.parts) *
         hook_length_count(lam.complement().parts);
}

std::vector<WeightedMultiset> multiset_sequence(const BoxPath& path, int k) {
  std::vector<WeightedMultiset> out;
  WeightedMultiset cur;
  for (const Box& b : path.boxes) {
    ++cur[box_index(b, k)];
    out.push_back(cur);
  }
  return out;
}

MultiPoly multiset_weight(const WeightedMultiset& a, int n) {
  const VarSetPtr& vars = equivariant_vars(n);
  MultiPoly h = MultiPoly::variable(vars, vars->size() - 1);
  MultiPoly w(vars);
  for (const auto& [i, m] : a) {
    if (m == 0) {
      continue;
    }
    if (i < 1 || i >= n) {
      throw std::invalid_argument("multiset index " + std::to_string(i) + " outside 1.." + std::to_string(n - 1));
    }
    auto next = a.find(i + 1);
    int m_next = next == a.end() ? 0 : next->second;
    w += h * Rational(m * (m - m_next));
    w += weight_form(n, i + 1, i, 0) * Rational(m);
  }
  return w;
}

std::vector<MultiPoly> path_weights(const BoxPath& path, int n, int k) {
  std::vector<MultiPoly> out;
  for (const auto& a : multiset_sequence(path, k)) {
    out.push_back(checked_weight(a, n));
  }
  return out;
}

RationalFunction path_sum(const BoxPartition& lam, Execution exec) {
  Rectangle rect = rectangle(lam);
  const int n = lam.n;
  return state_sum(
             rect, equivariant_vars(n), [n](const WeightedMultiset& a) { return checked_weight(a, n); }, exec)
      .to_rational_function();
}

RationalFunction path_sum_by_paths(const BoxPartition& lam) {
  const VarSetPtr& vars = equivariant_vars(lam.n);
  FactoredFraction sum{MultiPoly(vars)};
  for (const auto& path : enumerate_paths(lam)) {
    sum += FactoredFraction(MultiPoly::constant(vars, Rational(1)), path_weights(path, lam.n, lam.k));
  }
  return sum.to_rational_function();
}

RationalFunction path_sum_z(const BoxPartition& lam, Execution exec) {
  Rectangle rect = rectangle(lam);
  const int n = lam.n;
  return state_sum(
             rect, z_vars(),
             [n](const WeightedMultiset& a) {
               checked_weight(a, n);
               return weight_z(a);
             },
             exec)
      .to_rational_function();
}

IntegralValue path_sum_limit(const BoxPartition& lam, Execution exec) {
  FixedPoint p = omega(lam);
  RationalFunction limit = rational_limit_at_zero(path_sum_z(lam, exec), "z");
  Rational value = limit.as_polynomial().constant_value();
  if (!is_integer(value)) {
    throw NonIntegerResult("path-sum limit of " + lam.to_string() + " is " + to_string(value));
  }
  return {p, value, "paths"};
}

RationalFunction alpha(const RationalFunction& f, int n) {
  const VarSetPtr& vars = equivariant_vars(n);
  Bindings b;
  for (int i = 1; i <= n; ++i) {
    b.emplace(a_name(i), -MultiPoly::variable(vars, a_name(n + 1 - i)));
  }
  return RationalFunction::from_coprime(substitute(f.num(), b, vars), substitute(f.den(), b, vars));
}

FactoredFraction path_sum_on_chart(const BoxPartition& lam, bool twisted, Execution exec) {
  const int n = lam.n;
  const AffineChart& chart = affine_chart(n);
  Bindings flip;
  if (twisted) {
    const VarSetPtr& vars = equivariant_vars(n);
    for (int i = 1; i <= n; ++i) {
      flip.emplace(a_name(i), -MultiPoly::variable(vars, a_name(n + 1 - i)));
    }
  }
  return state_sum(
      rectangle(lam), chart.vars,
      [&](const WeightedMultiset& a) {
        MultiPoly w = checked_weight(a, n);
        return chart.linear(twisted ? substitute(w, flip, w.vars()) : w);
      },
      exec);
}

CheckOutcome conjecture_44_check(int n, int k, int box_limit) {
  guard(n, k, box_limit);
  std::vector<std::string> failures;
  std::size_t cases = 0;
  for (const auto& lam : enumerate_partitions(n, k)) {
    FixedPoint p = omega(lam);
    FactoredFraction diff = path_sum_on_chart(lam) - localization_sum_on_chart(p);
    ++cases;
    if (!diff.is_zero()) {
      failures.push_back("V" + lam.to_string() + " differs from the localization sum of " + p.label() +
                         " at h = 1, a" + std::to_string(n) + " = 0 by " +
                         diff.to_rational_function().to_string());
    }
    Rational lim = path_sum_limit(lam).value;
    Rational z = integral_via_z_limit(p).value;
    ++cases;
    if (lim != z) {
      failures.push_back("limit of V" + lam.to_string() + " is " + to_string(lim) + " but the integral of " +
                         p.label() + " is " + to_string(z));
    }
  }
  return make_outcome("path sum = localization sum Gr(" + std::to_string(k) + "," + std::to_string(n) + ")", true,
                      std::move(failures), cases);
}

CheckOutcome conjecture_45_check(int n, int k, int box_limit) {
  guard(n, k, box_limit);
  std::vector<std::string> failures;
  std::size_t cases = 0;
  for (const auto& lam : enumerate_partitions(n, k)) {
    FactoredFraction diff = path_sum_on_chart(lam) - path_sum_on_chart(lam.complement(), true);
    ++cases;
    if (!diff.is_zero()) {
      failures.push_back("V" + lam.to_string() + " != alpha(V" + lam.complement().to_string() + ")");
    }
  }
  return make_outcome("path sum duality Gr(" + std::to_string(k) + "," + std::to_string(n) + ")", true,
                      std::move(failures), cases);
}

BoxPath complement_path(const BoxPath& path, int n, int k) {
  BoxPath out;
  for (const auto& [r, c] : path.boxes) {
    out.boxes.emplace_back(n - k + 1 - r, k + 1 - c);
  }
  return out;
}

std::size_t alpha_termwise_failures(const BoxPartition& lam) {
  const int n = lam.n;
  const int k = lam.k;
  std::size_t failures = 0;
  for (const auto& path : enumerate_paths(lam)) {
    auto mine = multiset_sequence(path, k);
    auto theirs = multiset_sequence(complement_path(path, n, k), k);
    for (std::size_t j = 0; j < mine.size(); ++j) {
      WeightedMultiset image;
      for (const auto& [i, m] : mine[j]) {
        image[n + 1 - i] = m;
      }
      if (image != theirs[j]) {
        ++failures;
        break;
      }
    }
  }
  return failures;
}

}  // namespace stabenv
