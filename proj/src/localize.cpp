#include "stabenv/localize.hpp"

#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <random>

#include "stabenv/errors.hpp"

namespace stabenv {

namespace {

FactoredFraction add(FactoredFraction lhs, const FactoredFraction& rhs) {
  lhs += rhs;
  return lhs;
}

std::vector<FixedPoint> attracted(const FixedPoint& p, const Chamber& c) {
  std::vector<FixedPoint> out;
  for (auto& j : enumerate_fixed_points(p.n, p.k)) {
    if (attracting_leq(p, j, c)) {
      out.push_back(std::move(j));
    }
  }
  return out;
}

MultiPoly z_form(int x, int y, int shift) {
  const VarSetPtr& z = z_vars();
  return MultiPoly::variable(z, 0) * MultiPoly::constant(z, Rational(x - y)) +
         MultiPoly::constant(z, Rational(shift));
}

// Weights of the tangent space at J after a_s -> s z h, h = 1.
std::vector<MultiPoly> tangent_weights_z(const FixedPoint& j) {
  std::vector<MultiPoly> out;
  for (int v : j.complement()) {
    for (int s : j.indices) {
      out.push_back(z_form(v, s, 0));
      out.push_back(z_form(s, v, 1));
    }
  }
  return out;
}

Rational check_integral(const FixedPoint& p, const Rational& value, const std::string& method) {
  if (!is_integer(value)) {
    throw NonIntegerResult("integral of " + p.label() + " by " + method + " is " + to_string(value));
  }
  return value;
}

MultiPoly product_of(const VarSetPtr& vars, const std::vector<MultiPoly>& factors) {
  MultiPoly out = MultiPoly::constant(vars, Rational(1));
  for (const auto& f : factors) {
    out *= f;
  }
  return out;
}

}  // namespace

LocalizationSum localization_sum(const FixedPoint& p, const Chamber& c, Execution exec) {
  const VarSetPtr& vars = equivariant_vars(p.n);
  auto points = attracted(p, c);
  FactoredFraction sum = map_reduce(
      points.size(),
      [&](std::size_t idx) {
        const FixedPoint& j = points[idx];
        return FactoredFraction(restriction(p, j, c), tangent_weights(j));
      },
      add, FactoredFraction(MultiPoly(vars)), exec);
  return {p, c, sum.to_rational_function()};
}

RationalFunction localization_sum_from_weight_function(const FixedPoint& p, const Chamber& c,
                                                       Execution exec) {
  const VarSetPtr& vars = equivariant_vars(p.n);
  WeightFunction w = weight_function(p, c);
  auto points = enumerate_fixed_points(p.n, p.k);
  FactoredFraction sum = map_reduce(
      points.size(),
      [&](std::size_t idx) {
        const FixedPoint& j = points[idx];
        return FactoredFraction(restrict(w, j), tangent_weights(j));
      },
      add, FactoredFraction(MultiPoly(vars)), exec);
  return sum.to_rational_function();
}

MultiPoly AffineChart::form(int x, int y, int shift) const {
  MultiPoly out = MultiPoly::constant(vars, Rational(shift));
  if (x != n) {
    out += MultiPoly::variable(vars, static_cast<std::size_t>(x - 1));
  }
  if (y != n) {
    out -= MultiPoly::variable(vars, static_cast<std::size_t>(y - 1));
  }
  return out;
}

MultiPoly AffineChart::linear(const MultiPoly& w) const {
  Rational a_total = 0;
  for (const auto& t : w.terms()) {
    if (t.mono.degree != 1) {
      throw std::invalid_argument("not a homogeneous linear form: " + w.to_string());
    }
    if (t.mono[static_cast<std::size_t>(n)] == 0) {
      a_total += t.coeff;
    }
  }
  if (a_total != 0) {
    throw std::invalid_argument("not translation invariant: " + w.to_string());
  }
  return substitute(w, bindings, vars);
}

const AffineChart& affine_chart(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<AffineChart>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    std::vector<std::string> names;
    for (int i = 1; i < n; ++i) {
      names.push_back(a_name(i));
    }
    slot = std::make_unique<AffineChart>();
    slot->n = n;
    slot->vars = make_varset(std::move(names));
    for (int i = 1; i < n; ++i) {
      slot->bindings.emplace(a_name(i), MultiPoly::variable(slot->vars, static_cast<std::size_t>(i - 1)));
    }
    slot->bindings.emplace(a_name(n), MultiPoly(slot->vars));
    slot->bindings.emplace(kHbar, MultiPoly::constant(slot->vars, Rational(1)));
  }
  return *slot;
}

FactoredFraction localization_sum_on_chart(const FixedPoint& p, Execution exec) {
  const AffineChart& chart = affine_chart(p.n);
  auto points = attracted(p, Chamber::identity(p.n));
  LinearForm form = [&chart](int x, int y, int shift) { return chart.form(x, y, shift); };
  return map_reduce(
      points.size(),
      [&](std::size_t idx) {
        const FixedPoint& j = points[idx];
        std::vector<MultiPoly> den;
        for (const auto& w : tangent_weights(j)) {
          den.push_back(chart.linear(w));
        }
        return FactoredFraction(restriction_with(p, j, chart.vars, form), den);
      },
      add, FactoredFraction(MultiPoly(chart.vars)), exec);
}

VarSetPtr z_vars() {
  static const VarSetPtr vars = make_varset({"z"});
  return vars;
}

MultiPoly restriction_z(const FixedPoint& i, const FixedPoint& j) {
  // Each linear form a_x - a_y + shift*h maps to h*(z(x - y) + shift); the
  // summands have k(n-1) numerator and k(k-1) denominator forms, so exactly
  // h^{k(n-k)} factors out of every one of them.
  return restriction_with(i, j, z_vars(), z_form);
}

RationalFunction scaled_sum_z(const FixedPoint& p, Execution exec) {
  const VarSetPtr& vars = z_vars();
  auto points = attracted(p, Chamber::identity(p.n));
  FactoredFraction sum = map_reduce(
      points.size(),
      [&](std::size_t idx) {
        const FixedPoint& j = points[idx];
        return FactoredFraction(restriction_z(p, j), tangent_weights_z(j));
      },
      add, FactoredFraction(MultiPoly(vars)), exec);
  return sum.to_rational_function();
}

IntegralValue integral_via_z_limit(const FixedPoint& p, Execution exec) {
  RationalFunction limit = rational_limit_at_zero(scaled_sum_z(p, exec), "z");
  Rational value = limit.as_polynomial().constant_value();
  return {p, check_integral(p, value, "z-limit"), "z"};
}

IntegralValue integral_from_sum(const LocalizationSum& s) {
  const FixedPoint& p = s.point;
  const VarSetPtr& vars = s.value.vars();
  Bindings zero;
  for (int i = 1; i <= p.n; ++i) {
    zero.emplace(a_name(i), MultiPoly(vars));
  }
  MultiPoly num = substitute(s.value.num(), zero, vars);
  MultiPoly den = substitute(s.value.den(), zero, vars);
  if (den.is_zero()) {
    throw PoleAtZero("localization sum of " + p.label() + " has a pole at a = 0");
  }
  // Both are now monomials in h; their ratio must be c * h^{-k(n-k)}.
  const int d = p.k * (p.n - p.k);
  if (num.size() > 1 || den.size() != 1 ||
      (!num.is_zero() && num.total_degree() + d != den.total_degree())) {
    throw IndeterminateInternal("a = 0 value of the sum of " + p.label() +
                                " is not a multiple of h^-" + std::to_string(d));
  }
  Rational value = num.is_zero() ? Rational(0) : num.leading_coeff() / den.leading_coeff();
  return {p, check_integral(p, value, "full"), "full"};
}

long full_multivariate_cost(int n, int k) {
  return binomial(n, k).get_si() * 2L * k * (n - k);
}

long full_multivariate_cost_limit() {
  if (const char* env = std::getenv("ENVELOPE_MAX_COST")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) {
      return v;
    }
  }
  return 360;
}

IntegralValue integral_full_multivariate(const FixedPoint& p, Execution exec) {
  long cost = full_multivariate_cost(p.n, p.k);
  long limit = full_multivariate_cost_limit();
  if (cost > limit) {
    throw CostLimitExceeded("full multivariate sum for Gr(" + std::to_string(p.k) + "," +
                            std::to_string(p.n) + ") has cost " + std::to_string(cost) +
                            " > ENVELOPE_MAX_COST=" + std::to_string(limit));
  }
  return integral_from_sum(localization_sum(p, Chamber::identity(p.n), exec));
}

MultiPoly full_vandermonde(int n) {
  std::vector<MultiPoly> forms;
  for (int x = 1; x <= n; ++x) {
    for (int y = x + 1; y <= n; ++y) {
      forms.push_back(weight_form(n, x, y, 0));
    }
  }
  return product_of(equivariant_vars(n), forms);
}

FactoredFraction vandermonde_combined_sum(const FixedPoint& p, Execution exec) {
  const int n = p.n;
  const int k = p.k;
  const VarSetPtr& vars = equivariant_vars(n);
  auto points = attracted(p, Chamber::identity(n));
  return map_reduce(
      points.size(),
      [&](std::size_t idx) {
        const FixedPoint& j = points[idx];
        std::vector<MultiPoly> vj;
        std::vector<MultiPoly> dj;  // D'_J = V^h_J * conj(V^h_J)
        for (int l = 0; l < k; ++l) {
          for (int m = l + 1; m < k; ++m) {
            int jl = j.indices[static_cast<std::size_t>(l)];
            int jm = j.indices[static_cast<std::size_t>(m)];
            vj.push_back(weight_form(n, jl, jm, 0));
            dj.push_back(weight_form(n, jl, jm, 1));
            dj.push_back(weight_form(n, jm, jl, 1));
          }
        }
        // N'_J = N_J / V_J = W|_J * D_J / V_J = W|_J * D'_J.
        MultiPoly n_prime = restriction(p, j, Chamber::identity(n)) * product_of(vars, dj);
        std::vector<MultiPoly> num{n_prime};
        num.insert(num.end(), vj.begin(), vj.end());
        auto comp = j.complement();
        for (std::size_t a = 0; a < comp.size(); ++a) {
          for (std::size_t b = a + 1; b < comp.size(); ++b) {
            num.push_back(weight_form(n, comp[a], comp[b], 0));
          }
        }
        std::vector<MultiPoly> den = dj;
        for (int v : comp) {
          for (int s : j.indices) {
            den.push_back(weight_form(n, s, v, 1));
          }
        }
        long exponent = static_cast<long>(k) * n + static_cast<long>(k) * (k - 1) / 2 + j.weight();
        if (exponent % 2 != 0) {
          num.push_back(MultiPoly::constant(vars, Rational(-1)));
        }
        return FactoredFraction::from_products(vars, num, den);
      },
      add, FactoredFraction(MultiPoly(vars)), exec);
}

CheckOutcome vandermonde_divisibility_check(const FixedPoint& p, Execution exec) {
  const int n = p.n;
  if (n > 6) {
    throw CostLimitExceeded("Vandermonde divisibility check is limited to n <= 6");
  }
  const VarSetPtr& vars = equivariant_vars(n);
  FactoredFraction combined = vandermonde_combined_sum(p, exec);
  for (const auto& f : combined.factors()) {
    // Only h-shifted forms may remain in the denominator, so the lcm
    // numerator and the numerator over the full product differ by a factor
    // coprime to the Vandermonde.
    if (f.poly.degree_in(vars->size() - 1) == 0) {
      return make_outcome("vandermonde divisibility " + p.label(), false,
                          {"unexpected denominator factor " + f.poly.to_string()}, 1);
    }
  }
  std::vector<std::string> failures;
  const MultiPoly& num = combined.num();
  if (!try_divide(num, full_vandermonde(n))) {
    failures.push_back("Vandermonde does not divide the combined numerator");
  }
  std::mt19937_64 rng(static_cast<std::uint64_t>(n) * 1000003u + static_cast<std::uint64_t>(p.weight()));
  std::size_t pairs = 0;
  if (n >= 2) {
    for (int trial = 0; trial < 3; ++trial, ++pairs) {
      int x = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
      int y = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
      if (y >= x) {
        ++y;
      } else {
        std::swap(x, y);
      }
      Bindings collapse{{a_name(y), MultiPoly::variable(vars, a_name(x))}};
      if (!substitute(num, collapse, vars).is_zero()) {
        failures.push_back("numerator does not vanish at a" + std::to_string(x) + " = a" +
                           std::to_string(y));
      }
    }
  }
  return make_outcome("vandermonde divisibility " + p.label(), false, std::move(failures), 1 + pairs);
}

CheckOutcome chamber_covariance_check(const FixedPoint& p, const Chamber& tau, Execution exec) {
  RationalFunction lhs = localization_sum_from_weight_function(p, tau, exec);
  RationalFunction standard =
      localization_sum(apply(tau.inverse(), p), Chamber::identity(p.n), exec).value;
  RationalFunction rhs =
      RationalFunction::from_coprime(apply(tau, standard.num()), apply(tau, standard.den()));
  std::vector<std::string> failures;
  if (!(lhs == rhs)) {
    failures.push_back(lhs.to_string() + " != " + rhs.to_string());
  }
  return make_outcome("chamber " + tau.to_string() + " " + p.label(), false, std::move(failures), 1);
}

}  // namespace stabenv
