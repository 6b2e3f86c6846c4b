#include "stabenv/factored_fraction.hpp"

#include <algorithm>
#include <cstdint>

#include "stabenv/errors.hpp"

namespace stabenv {

bool poly_less(const MultiPoly& lhs, const MultiPoly& rhs) {
  const auto& l = lhs.terms();
  const auto& r = rhs.terms();
  std::size_t n = std::min(l.size(), r.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (!(l[i].mono == r[i].mono)) {
      return grlex_less(l[i].mono, r[i].mono);
    }
    if (l[i].coeff != r[i].coeff) {
      return l[i].coeff < r[i].coeff;
    }
  }
  return l.size() < r.size();
}

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e != 0; e >>= 1, a = mul_mod(a, a)) {
    if (e & 1) {
      r = mul_mod(r, a);
    }
  }
  return r;
}

// Residue of q mod kPrime, or nullopt when the denominator is not invertible.
std::optional<std::uint64_t> residue(const Rational& q) {
  std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), kPrime);
  if (mpz_cmp_ui(q.get_den_mpz_t(), 1) == 0) {
    return num;
  }
  std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), kPrime);
  if (den == 0) {
    return std::nullopt;
  }
  return mul_mod(num, pow_mod(den, kPrime - 2));
}

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return (x ^ (x >> 31)) % kPrime;
}

// False only when the linear form g certainly does not divide f: f = g*q
// survives reduction mod p whenever p divides no denominator of f or g and
// not the leading coefficient of g, so f vanishes on g = 0 over F_p.
bool may_divide_linear(const MultiPoly& f, const MultiPoly& g) {
  const Term& lead = g.leading_term();
  std::size_t x = 0;
  while (lead.mono.exps[x] == 0) {
    ++x;
  }
  std::size_t dim = f.vars()->size();
  std::vector<std::uint64_t> point(dim);
  for (std::size_t v = 0; v < dim; ++v) {
    point[v] = mix(v * 7919 + 17);
  }
  auto lc = residue(lead.coeff);
  if (!lc || *lc == 0) {
    return true;
  }
  std::uint64_t rest = 0;
  for (std::size_t i = 1; i < g.terms().size(); ++i) {
    const Term& t = g.terms()[i];
    auto c = residue(t.coeff);
    if (!c) {
      return true;
    }
    std::uint64_t value = *c;
    for (std::size_t v = 0; v < dim; ++v) {
      if (t.mono.exps[v] != 0) {
        value = mul_mod(value, point[v]);
      }
    }
    rest = (rest + value) % kPrime;
  }
  point[x] = mul_mod(kPrime - rest, pow_mod(*lc, kPrime - 2));
  std::vector<std::vector<std::uint64_t>> powers(dim, std::vector<std::uint64_t>{1});
  std::uint64_t sum = 0;
  for (const auto& t : f.terms()) {
    auto c = residue(t.coeff);
    if (!c) {
      return true;
    }
    std::uint64_t value = *c;
    for (std::size_t v = 0; v < dim; ++v) {
      unsigned e = t.mono.exps[v];
      if (e == 0) {
        continue;
      }
      auto& cache = powers[v];
      while (cache.size() <= e) {
        cache.push_back(mul_mod(cache.back(), point[v]));
      }
      value = mul_mod(value, cache[e]);
    }
    sum = (sum + value) % kPrime;
  }
  return sum == 0;
}

}  // namespace

FactoredFraction::FactoredFraction(MultiPoly num) : num_(std::move(num)) {}

FactoredFraction FactoredFraction::from_products(const VarSetPtr& vars,
                                                 const std::vector<MultiPoly>& num,
                                                 const std::vector<MultiPoly>& den) {
  FactoredFraction out(MultiPoly::constant(vars, Rational(1)));
  for (const auto& d : den) {
    out.absorb(d, 1);
  }
  std::vector<MultiPoly> rest;
  bool linear = true;
  for (const auto& f : num) {
    require_same_vars(out.num_, f);
    if (f.is_zero()) {
      return FactoredFraction(MultiPoly(vars));
    }
    if (f.is_constant()) {
      out.num_ *= f.constant_value();
      continue;
    }
    Rational c = f.content();
    MultiPoly norm = f * (1 / c);
    auto it = std::find_if(out.factors_.begin(), out.factors_.end(),
                           [&](const Factor& g) { return g.mult > 0 && g.poly == norm; });
    if (f.total_degree() == 1 && it != out.factors_.end()) {
      --it->mult;
      out.num_ *= c;
      continue;
    }
    linear = linear && f.total_degree() == 1;
    rest.push_back(f);
  }
  std::erase_if(out.factors_, [](const Factor& g) { return g.mult == 0; });
  for (const auto& f : rest) {
    out.num_ *= f;
  }
  for (const auto& g : out.factors_) {
    linear = linear && g.poly.total_degree() == 1;
  }
  if (!linear) {
    out.cancel();
  }
  return out;
}

FactoredFraction::FactoredFraction(MultiPoly num, const std::vector<MultiPoly>& den)
    : num_(std::move(num)) {
  for (const auto& d : den) {
    absorb(d, 1);
  }
  cancel();
}

int FactoredFraction::denominator_degree() const {
  int d = 0;
  for (const auto& f : factors_) {
    d += f.poly.total_degree() * static_cast<int>(f.mult);
  }
  return d;
}

// Splits poly^mult into constant, single-variable and normalized parts and
// moves them into the denominator.
void FactoredFraction::absorb(const MultiPoly& poly, unsigned mult) {
  if (mult == 0) {
    return;
  }
  require_same_vars(num_, poly);
  if (poly.is_zero()) {
    throw DivisionByZero("zero factor in a denominator");
  }
  if (poly.is_constant()) {
    Rational c = poly.constant_value();
    Rational inv = 1 / c;
    Rational scale;
    mpz_pow_ui(scale.get_num_mpz_t(), inv.get_num_mpz_t(), mult);
    mpz_pow_ui(scale.get_den_mpz_t(), inv.get_den_mpz_t(), mult);
    scale.canonicalize();
    num_ *= scale;
    return;
  }
  Monomial common = poly.terms().front().mono;
  for (const auto& t : poly.terms()) {
    common = monomial_gcd(common, t.mono);
  }
  MultiPoly rest = poly;
  if (!common.is_one()) {
    rest = exact_divide(poly, MultiPoly::monomial(poly.vars(), common, Rational(1)));
    for (std::size_t v = 0; v < vars()->size(); ++v) {
      if (common.exps[v] != 0) {
        insert_factor(MultiPoly::variable(vars(), v), mult * common.exps[v]);
      }
    }
  }
  if (rest.is_constant()) {
    absorb(rest, mult);
    return;
  }
  Rational c = rest.content();
  absorb(MultiPoly::constant(vars(), c), mult);
  insert_factor(rest * (1 / c), mult);
}

void FactoredFraction::insert_factor(MultiPoly norm, unsigned mult) {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), norm,
                             [](const Factor& f, const MultiPoly& p) { return poly_less(f.poly, p); });
  if (it != factors_.end() && it->poly == norm) {
    it->mult += mult;
  } else {
    factors_.insert(it, Factor{std::move(norm), mult});
  }
}

void FactoredFraction::cancel() {
  if (num_.is_zero()) {
    factors_.clear();
    return;
  }
  for (auto& f : factors_) {
    while (f.mult > 0 && num_.total_degree() >= f.poly.total_degree()) {
      if (f.poly.total_degree() == 1 && !may_divide_linear(num_, f.poly)) {
        break;
      }
      auto q = try_divide(num_, f.poly);
      if (!q) {
        break;
      }
      num_ = std::move(*q);
      --f.mult;
    }
  }
  std::erase_if(factors_, [](const Factor& f) { return f.mult == 0; });
}

FactoredFraction FactoredFraction::operator-() const {
  FactoredFraction out = *this;
  out.num_ = -out.num_;
  return out;
}

FactoredFraction& FactoredFraction::operator+=(const FactoredFraction& rhs) {
  require_same_vars(num_, rhs.num_);
  if (rhs.is_zero()) {
    return *this;
  }
  if (is_zero()) {
    return *this = rhs;
  }
  // Cofactors lcm/den for each side.
  MultiPoly lcof = MultiPoly::constant(vars(), Rational(1));
  MultiPoly rcof = lcof;
  std::vector<Factor> merged;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < factors_.size() || j < rhs.factors_.size()) {
    bool take_l = j == rhs.factors_.size() ||
                  (i < factors_.size() && poly_less(factors_[i].poly, rhs.factors_[j].poly));
    bool take_r = i == factors_.size() ||
                  (j < rhs.factors_.size() && poly_less(rhs.factors_[j].poly, factors_[i].poly));
    if (take_l) {
      rcof *= factors_[i].poly.pow(factors_[i].mult);
      merged.push_back(factors_[i++]);
    } else if (take_r) {
      lcof *= rhs.factors_[j].poly.pow(rhs.factors_[j].mult);
      merged.push_back(rhs.factors_[j++]);
    } else {
      unsigned ml = factors_[i].mult;
      unsigned mr = rhs.factors_[j].mult;
      if (ml < mr) {
        lcof *= factors_[i].poly.pow(mr - ml);
      } else if (mr < ml) {
        rcof *= factors_[i].poly.pow(ml - mr);
      }
      merged.push_back(Factor{factors_[i].poly, std::max(ml, mr)});
      ++i;
      ++j;
    }
  }
  num_ = num_ * lcof + rhs.num_ * rcof;
  factors_ = std::move(merged);
  cancel();
  return *this;
}

FactoredFraction& FactoredFraction::operator-=(const FactoredFraction& rhs) {
  return *this += -rhs;
}

FactoredFraction& FactoredFraction::operator*=(const FactoredFraction& rhs) {
  require_same_vars(num_, rhs.num_);
  num_ *= rhs.num_;
  for (const auto& f : rhs.factors_) {
    absorb(f.poly, f.mult);
  }
  cancel();
  return *this;
}

FactoredFraction& FactoredFraction::operator*=(const MultiPoly& rhs) {
  num_ *= rhs;
  cancel();
  return *this;
}

FactoredFraction& FactoredFraction::divide_by(const MultiPoly& poly, unsigned mult) {
  absorb(poly, mult);
  cancel();
  return *this;
}

Rational FactoredFraction::evaluate(const std::vector<Rational>& point) const {
  Rational den = 1;
  for (const auto& f : factors_) {
    Rational v = f.poly.evaluate(point);
    if (sgn(v) == 0) {
      throw DenominatorVanishes("factor " + f.poly.to_string() + " vanishes at the point");
    }
    for (unsigned m = 0; m < f.mult; ++m) {
      den *= v;
    }
  }
  return num_.evaluate(point) / den;
}

MultiPoly FactoredFraction::denominator() const {
  MultiPoly den = MultiPoly::constant(vars(), Rational(1));
  for (const auto& f : factors_) {
    den *= f.poly.pow(f.mult);
  }
  return den;
}

RationalFunction FactoredFraction::to_rational_function() const {
  bool linear = std::all_of(factors_.begin(), factors_.end(),
                            [](const Factor& f) { return f.poly.total_degree() == 1; });
  if (linear) {
    // Distinct normalized linear forms are pairwise non-associate primes and
    // cancel() already removed every one dividing num.
    return RationalFunction::from_coprime(num_, denominator());
  }
  return RationalFunction(num_, denominator());
}

FactoredFraction substitute(const FactoredFraction& f, const Bindings& bindings,
                            const VarSetPtr& target) {
  std::vector<MultiPoly> den;
  for (const auto& factor : f.factors()) {
    MultiPoly image = substitute(factor.poly, bindings, target);
    if (image.is_zero()) {
      throw DenominatorVanishes("factor " + factor.poly.to_string() + " vanishes under substitution");
    }
    for (unsigned m = 0; m < factor.mult; ++m) {
      den.push_back(image);
    }
  }
  return FactoredFraction(substitute(f.num(), bindings, target), den);
}

}  // namespace stabenv
