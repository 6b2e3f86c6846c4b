#include "stabenv/closedform.hpp"

#include <map>
#include <stdexcept>

#include "stabenv/combinatorics.hpp"
#include "stabenv/errors.hpp"

namespace stabenv {

std::vector<long> delta_multiset(const std::vector<int>& j) {
  std::vector<long> out;
  for (std::size_t l = 0; l < j.size(); ++l) {
    for (std::size_t m = l + 1; m < j.size(); ++m) {
      out.push_back(static_cast<long>(j[m]) - j[l]);
    }
  }
  return out;
}

Integer elementary_symmetric(int m, const std::vector<long>& values) {
  if (m < 0 || static_cast<std::size_t>(m) > values.size()) {
    throw std::invalid_argument("e_" + std::to_string(m) + " of " + std::to_string(values.size()) +
                                " values");
  }
  std::vector<Integer> e(static_cast<std::size_t>(m) + 1, Integer(0));
  e[0] = 1;
  for (long v : values) {
    for (std::size_t d = static_cast<std::size_t>(m); d >= 1; --d) {
      e[d] += e[d - 1] * v;
    }
  }
  return e[static_cast<std::size_t>(m)];
}

namespace {

Integer power(long base, unsigned e) {
  Integer b(base);
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

}  // namespace

Rational g_term(int lambda, int i, int j) {
  if (i < 1 || j < i || lambda < 0) {
    throw std::invalid_argument("g_term needs i >= 1, j >= i, lambda >= 0");
  }
  Rational sum = 0;
  for (int p = 0; p <= i - 1; ++p) {
    Integer term = power(p + j - i, static_cast<unsigned>(lambda + i - 1));  // 0^0 = 1
    if ((i - 1 - p) % 2 != 0) {
      term = -term;
    }
    sum += Rational(term) / (factorial(static_cast<unsigned>(i - 1 - p)) *
                             factorial(static_cast<unsigned>(p)));
  }
  return lambda % 2 == 0 ? sum : Rational(-sum);
}

IntegralValue closed_form_integral(const FixedPoint& p, Execution exec) {
  const int n = p.n;
  const int k = p.k;
  const int pairs = k * (k - 1) / 2;
  const int weight = p.weight();
  auto tuples = ordered_tuples_above(n, p.indices);

  Rational total = map_reduce(
      tuples.size(),
      [&](std::size_t idx) {
        const std::vector<int>& j = tuples[idx];
        std::vector<long> delta = delta_multiset(j);
        int jweight = 0;
        Rational a(elementary_symmetric(pairs, delta));
        for (int r = 0; r < k; ++r) {
          int jr = j[static_cast<std::size_t>(r)];
          int ir = p.indices[static_cast<std::size_t>(r)];
          jweight += jr;
          a /= Rational(factorial(static_cast<unsigned>(n - jr)) *
                        factorial(static_cast<unsigned>(jr - ir)));
        }
        if (jweight % 2 != 0) {
          a = -a;
        }
        if (sgn(a) == 0) {
          return Rational(0);
        }
        // The inner sum of B_J: the G-type factor without the (-1)^lambda,
        // cached per (s, lambda_s).
        std::map<std::pair<int, int>, Rational> cache;
        auto inner = [&](int s, int lam) -> const Rational& {
          auto [it, fresh] = cache.try_emplace({s, lam});
          if (fresh) {
            int is = p.indices[static_cast<std::size_t>(s)];
            int js = j[static_cast<std::size_t>(s)];
            Rational sum = 0;
            for (int q = 0; q <= is - 1; ++q) {
              Integer t = power(q + js - is, static_cast<unsigned>(is + lam - 1));
              if (q % 2 != 0) {
                t = -t;
              }
              sum += Rational(t) / (factorial(static_cast<unsigned>(is - 1 - q)) *
                                    factorial(static_cast<unsigned>(q)));
            }
            it->second = sum;
          }
          return it->second;
        };
        Rational b = 0;
        for (int d = 0; d <= pairs; ++d) {
          Rational comps = 0;
          for_each_weak_composition(k * (n - k + 1) + d - weight, k, [&](const std::vector<int>& lam) {
            Rational prod = 1;
            for (int s = 0; s < k && sgn(prod) != 0; ++s) {
              prod *= inner(s, lam[static_cast<std::size_t>(s)]);
            }
            comps += prod;
          });
          Rational term = Rational(elementary_symmetric(pairs - d, delta)) * comps;
          b += d % 2 == 0 ? term : Rational(-term);
        }
        return Rational(a * b);
      },
      [](Rational acc, const Rational& t) { return Rational(acc + t); }, Rational(0), exec);

  if ((k * (n - k) - weight) % 2 != 0) {
    total = -total;
  }
  if (!is_integer(total)) {
    throw NonIntegerResult("closed form for " + p.label() + " gives " + to_string(total));
  }
  return {p, total, "closed"};
}

Rational gr2_closed_form(int i1, int i2, int n) {
  if (n < 3 || i1 < 1 || i2 < 1 || i1 > n || i2 > n) {
    throw std::invalid_argument("gr2_closed_form needs n >= 3 and 1 <= i1, i2 <= n");
  }
  Rational pre(factorial(static_cast<unsigned>(n - 2)) * factorial(static_cast<unsigned>(n - 3)));
  pre /= Rational(factorial(static_cast<unsigned>(i1 - 1)) * factorial(static_cast<unsigned>(i2 - 1)) *
                  factorial(static_cast<unsigned>(n - i1)) * factorial(static_cast<unsigned>(n - i2)));
  long a = i1;
  long b = i2;
  long m = n;
  long poly = -3 * a + b - a * a + 4 * a * b - b * b + m * (2 * (a - 2 * b + 1) + (b - a) * (b - a)) +
              m * m * (b - a);
  return pre * poly;
}

Integer narayana(int n, int k) {
  if (k < 1 || k > n) {
    throw std::invalid_argument("narayana needs 1 <= k <= n");
  }
  Integer v = binomial(n, k) * binomial(n, k - 1);
  return v / n;
}

}  // namespace stabenv
