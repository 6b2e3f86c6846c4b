#include "stabenv/weightfn.hpp"

#include <functional>
#include <map>
#include <mutex>

#include "stabenv/combinatorics.hpp"
#include "stabenv/errors.hpp"

namespace stabenv {

VarSetPtr weight_vars(int n, int k) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, VarSetPtr> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, k}];
  if (!slot) {
    std::vector<std::string> names;
    for (int r = 1; r <= k; ++r) {
      names.push_back("t" + std::to_string(r));
    }
    for (int i = 1; i <= n; ++i) {
      names.push_back(a_name(i));
    }
    names.emplace_back(kHbar);
    slot = make_varset(std::move(names));
  }
  return slot;
}

namespace {

// x - y + shift*h where x, y are variable indices of vars and h is last.
MultiPoly linear(const VarSetPtr& vars, std::size_t x, std::size_t y, int shift) {
  std::vector<Term> terms;
  Monomial mx;
  mx.set(x, 1);
  Monomial my;
  my.set(y, 1);
  terms.push_back({mx, Rational(1)});
  terms.push_back({my, Rational(-1)});
  if (shift != 0) {
    Monomial mh;
    mh.set(vars->size() - 1, 1);
    terms.push_back({mh, Rational(shift)});
  }
  return MultiPoly::from_terms(vars, std::move(terms));
}

}  // namespace

FactoredFraction WeightSummand::fraction() const {
  return FactoredFraction::from_products(numerator.front().vars(), numerator, denominator);
}

Rational WeightSummand::evaluate(const std::vector<Rational>& pt) const {
  Rational num = 1;
  for (const auto& f : numerator) {
    num *= f.evaluate(pt);
  }
  Rational den = 1;
  for (const auto& f : denominator) {
    den *= f.evaluate(pt);
  }
  if (den == 0) {
    throw DenominatorVanishes("weight function summand has a vanishing denominator");
  }
  return num / den;
}

RationalFunction WeightFunction::expression() const {
  FactoredFraction sum{MultiPoly(vars())};
  for (const auto& s : summands) {
    sum += s.fraction();
  }
  return sum.to_rational_function();
}

Rational WeightFunction::evaluate(const std::vector<Rational>& pt) const {
  Rational sum = 0;
  for (const auto& s : summands) {
    sum += s.evaluate(pt);
  }
  return sum;
}

WeightFunction weight_function(const FixedPoint& p, const Chamber& c) {
  const int n = p.n;
  const int k = p.k;
  const VarSetPtr& vars = weight_vars(n, k);
  auto t = [&](int r) { return static_cast<std::size_t>(r); };          // 0-based t index
  auto a = [&](int i) { return static_cast<std::size_t>(k + i - 1); };  // 1-based a index
  FixedPoint base = c.is_identity() ? p : apply(c.inverse(), p);

  Bindings relabel;
  if (!c.is_identity()) {
    for (int i = 1; i <= n; ++i) {
      relabel.emplace(a_name(i), MultiPoly::variable(vars, a(c(i))));
    }
  }

  WeightFunction w{p, c, vars, {}};
  for (const auto& sp : signed_permutations(k)) {
    std::vector<MultiPoly> num;
    std::vector<MultiPoly> den;
    for (int r = 0; r < k; ++r) {
      int ir = base.indices[static_cast<std::size_t>(r)];
      std::size_t tr = t(sp.perm[static_cast<std::size_t>(r)]);
      for (int alpha = 1; alpha < ir; ++alpha) {
        num.push_back(linear(vars, a(alpha), tr, 0));
      }
      for (int beta = ir + 1; beta <= n; ++beta) {
        num.push_back(linear(vars, tr, a(beta), 1));
      }
    }
    for (int l = 0; l < k; ++l) {
      for (int m = l + 1; m < k; ++m) {
        std::size_t tl = t(sp.perm[static_cast<std::size_t>(l)]);
        std::size_t tm = t(sp.perm[static_cast<std::size_t>(m)]);
        den.push_back(linear(vars, tl, tm, 0));
        den.push_back(linear(vars, tl, tm, 1));
      }
    }
    // k = 1 with n = 1 never occurs, but keep the numerator non-empty.
    num.push_back(MultiPoly::constant(vars, Rational(1)));
    if (!c.is_identity()) {
      for (auto& f : num) {
        f = substitute(f, relabel, vars);
      }
      for (auto& f : den) {
        f = substitute(f, relabel, vars);
      }
    }
    w.summands.push_back({std::move(num), std::move(den)});
  }
  return w;
}

MultiPoly restrict(const WeightFunction& w, const FixedPoint& j) {
  const VarSetPtr& target = equivariant_vars(w.point.n);
  Bindings at;
  for (int r = 0; r < w.point.k; ++r) {
    at.emplace("t" + std::to_string(r + 1),
               MultiPoly::variable(target, a_name(j.indices[static_cast<std::size_t>(r)])));
  }
  FactoredFraction sum{MultiPoly(target)};
  for (const auto& s : w.summands) {
    std::vector<MultiPoly> num;
    bool vanishes = false;
    for (const auto& f : s.numerator) {
      num.push_back(substitute(f, at, target));
      if (num.back().is_zero()) {
        vanishes = true;
        break;
      }
    }
    if (vanishes) {
      continue;
    }
    std::vector<MultiPoly> den;
    for (const auto& f : s.denominator) {
      den.push_back(substitute(f, at, target));
    }
    sum += FactoredFraction::from_products(target, num, den);
  }
  if (!sum.factors().empty()) {
    throw NonPolynomialRestriction("W(" + w.point.label() + ")|" + j.label() +
                                   " keeps a denominator");
  }
  return sum.num();
}

namespace {

// Calls fn(sigma) for every bijection sigma of {0..k-1} with
// j[sigma(r)] >= i[r]; the remaining permutations put a factor a_x - a_x in
// the numerator.
void for_each_admissible(const FixedPoint& i, const FixedPoint& j,
                         const std::function<void(const std::vector<int>&)>& fn) {
  const int k = i.k;
  std::vector<int> sigma(static_cast<std::size_t>(k));
  std::vector<bool> used(static_cast<std::size_t>(k), false);
  std::function<void(int)> place = [&](int r) {
    if (r == k) {
      fn(sigma);
      return;
    }
    for (int s = 0; s < k; ++s) {
      auto us = static_cast<std::size_t>(s);
      if (!used[us] && j.indices[us] >= i.indices[static_cast<std::size_t>(r)]) {
        used[us] = true;
        sigma[static_cast<std::size_t>(r)] = s;
        place(r + 1);
        used[us] = false;
      }
    }
  };
  place(0);
}

}  // namespace

MultiPoly restriction_with(const FixedPoint& i, const FixedPoint& j, const VarSetPtr& vars,
                           const LinearForm& form) {
  const int n = i.n;
  const int k = i.k;
  FactoredFraction sum{MultiPoly(vars)};
  for_each_admissible(i, j, [&](const std::vector<int>& sigma) {
    std::vector<MultiPoly> num;
    for (int r = 0; r < k; ++r) {
      int ir = i.indices[static_cast<std::size_t>(r)];
      int jr = j.indices[static_cast<std::size_t>(sigma[static_cast<std::size_t>(r)])];
      for (int alpha = 1; alpha < ir; ++alpha) {
        num.push_back(form(alpha, jr, 0));
      }
      for (int beta = ir + 1; beta <= n; ++beta) {
        num.push_back(form(jr, beta, 1));
      }
    }
    std::vector<MultiPoly> den;
    for (int l = 0; l < k; ++l) {
      for (int m = l + 1; m < k; ++m) {
        int jl = j.indices[static_cast<std::size_t>(sigma[static_cast<std::size_t>(l)])];
        int jm = j.indices[static_cast<std::size_t>(sigma[static_cast<std::size_t>(m)])];
        den.push_back(form(jl, jm, 0));
        den.push_back(form(jl, jm, 1));
      }
    }
    sum += FactoredFraction::from_products(vars, num, den);
  });
  if (!sum.factors().empty()) {
    throw NonPolynomialRestriction("W(" + i.label() + ")|" + j.label() + " keeps a denominator");
  }
  return sum.num();
}

namespace {

MultiPoly restriction_std(const FixedPoint& i, const FixedPoint& j) {
  const int n = i.n;
  return restriction_with(i, j, equivariant_vars(n),
                          [n](int x, int y, int shift) { return weight_form(n, x, y, shift); });
}

}  // namespace

MultiPoly restriction(const FixedPoint& i, const FixedPoint& j, const Chamber& c) {
  if (c.is_identity()) {
    return restriction_std(i, j);
  }
  Chamber inv = c.inverse();
  return apply(c, restriction_std(apply(inv, i), apply(inv, j)));
}

const MultiPoly& StabClass::at(const FixedPoint& j) const {
  for (const auto& [point, value] : restrictions) {
    if (point == j) {
      return value;
    }
  }
  throw std::out_of_range("no restriction stored for " + j.label());
}

StabClass stab_class(const FixedPoint& p, const Chamber& c, Execution exec) {
  auto points = enumerate_fixed_points(p.n, p.k);
  auto values = parallel_map<MultiPoly>(
      points.size(), [&](std::size_t idx) { return restriction(p, points[idx], c); }, exec);
  StabClass s{p, {}};
  for (std::size_t idx = 0; idx < points.size(); ++idx) {
    s.restrictions.emplace_back(points[idx], std::move(values[idx]));
  }
  return s;
}

CheckOutcome gkm_check(const StabClass& s, const MomentGraph& g) {
  std::vector<std::string> failures;
  for (const auto& e : g.edges) {
    MultiPoly diff = s.at(e.lower) - s.at(e.upper);
    if (!try_divide(diff, e.zero_section)) {
      failures.push_back("edge " + e.lower.label() + "-" + e.upper.label() + ": (" +
                         e.zero_section.to_string() + ") does not divide the difference");
    }
  }
  return make_outcome("gkm " + s.point.label(), false, std::move(failures), g.edges.size());
}

CheckOutcome axiom_check(const StabClass& s, const Chamber& c) {
  const FixedPoint& p = s.point;
  std::vector<std::size_t> a_vars;
  for (int i = 0; i < p.n; ++i) {
    a_vars.push_back(static_cast<std::size_t>(i));
  }
  const int bound = p.k * (p.n - p.k);
  std::vector<std::string> failures;
  for (const auto& [j, value] : s.restrictions) {
    if (j == p) {
      MultiPoly expect = repelling_euler_class(p, c);
      if (!(value == expect)) {
        failures.push_back("(ii) " + j.label() + ": " + value.to_string() + " != " + expect.to_string());
      }
      continue;
    }
    if (!attracting_leq(p, j, c)) {
      if (!value.is_zero()) {
        failures.push_back("(i) " + j.label() + " outside the attracting order but restriction is " +
                           value.to_string());
      }
      continue;
    }
    if (!value.is_zero() && value.degree_in(a_vars) >= bound) {
      failures.push_back("(iii) " + j.label() + " has a-degree " +
                         std::to_string(value.degree_in(a_vars)) + " >= " + std::to_string(bound));
    }
  }
  return make_outcome("axioms " + p.label() + " chamber " + c.to_string(), false, std::move(failures),
                      s.restrictions.size());
}

}  // namespace stabenv
