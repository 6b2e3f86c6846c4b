#include "stabenv/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "stabenv/errors.hpp"

namespace stabenv {

void Monomial::set(std::size_t var, unsigned exponent) {
  if (exponent > 255) {
    throw std::overflow_error("monomial exponent exceeds 255");
  }
  degree = static_cast<std::uint16_t>(degree - exps[var] + exponent);
  exps[var] = static_cast<std::uint8_t>(exponent);
}

Monomial monomial_mul(const Monomial& lhs, const Monomial& rhs) {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned e = unsigned{lhs.exps[i]} + rhs.exps[i];
    if (e > 255) {
      throw std::overflow_error("monomial exponent exceeds 255");
    }
    out.exps[i] = static_cast<std::uint8_t>(e);
  }
  out.degree = static_cast<std::uint16_t>(lhs.degree + rhs.degree);
  return out;
}

bool monomial_divides(const Monomial& lhs, const Monomial& rhs) {
  if (lhs.degree > rhs.degree) {
    return false;
  }
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (lhs.exps[i] > rhs.exps[i]) {
      return false;
    }
  }
  return true;
}

Monomial monomial_div(const Monomial& num, const Monomial& den) {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    out.exps[i] = static_cast<std::uint8_t>(num.exps[i] - den.exps[i]);
  }
  out.degree = static_cast<std::uint16_t>(num.degree - den.degree);
  return out;
}

Monomial monomial_gcd(const Monomial& lhs, const Monomial& rhs) {
  Monomial out;
  unsigned degree = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    out.exps[i] = std::min(lhs.exps[i], rhs.exps[i]);
    degree += out.exps[i];
  }
  out.degree = static_cast<std::uint16_t>(degree);
  return out;
}

struct PolyAccess {
  static std::vector<Term>& terms(MultiPoly& p) { return p.terms_; }
  // Wraps an already canonical term vector.
  static MultiPoly wrap(VarSetPtr vars, std::vector<Term> terms) {
    MultiPoly p(std::move(vars));
    p.terms_ = std::move(terms);
    return p;
  }
};

namespace {

using Accumulator = std::unordered_map<Monomial, Rational, MonomialHash>;

void accumulate(Accumulator& acc, const Monomial& mono, const Rational& coeff) {
  auto [it, inserted] = acc.try_emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
  }
}

std::vector<Term> drain(Accumulator& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [mono, coeff] : acc) {
    if (sgn(coeff) != 0) {
      out.push_back({mono, std::move(coeff)});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Term& l, const Term& r) { return grlex_greater(l.mono, r.mono); });
  return out;
}

// lhs + sign * rhs for sorted term vectors.
std::vector<Term> merge(const std::vector<Term>& lhs, const std::vector<Term>& rhs, int sign) {
  std::vector<Term> out;
  out.reserve(lhs.size() + rhs.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < lhs.size() && j < rhs.size()) {
    if (grlex_greater(lhs[i].mono, rhs[j].mono)) {
      out.push_back(lhs[i++]);
    } else if (grlex_greater(rhs[j].mono, lhs[i].mono)) {
      out.push_back(rhs[j++]);
      if (sign < 0) {
        out.back().coeff = -out.back().coeff;
      }
    } else {
      Rational c = sign < 0 ? Rational(lhs[i].coeff - rhs[j].coeff)
                            : Rational(lhs[i].coeff + rhs[j].coeff);
      if (sgn(c) != 0) {
        out.push_back({lhs[i].mono, std::move(c)});
      }
      ++i;
      ++j;
    }
  }
  for (; i < lhs.size(); ++i) {
    out.push_back(lhs[i]);
  }
  for (; j < rhs.size(); ++j) {
    out.push_back(rhs[j]);
    if (sign < 0) {
      out.back().coeff = -out.back().coeff;
    }
  }
  return out;
}

std::string var_power(const std::string& name, unsigned e) {
  return e == 1 ? name : name + "^" + std::to_string(e);
}

}  // namespace

void require_same_vars(const MultiPoly& lhs, const MultiPoly& rhs) {
  if (!same_vars(lhs.vars(), rhs.vars())) {
    throw VarSetMismatch("polynomials live over different variable sets");
  }
}

MultiPoly MultiPoly::constant(VarSetPtr vars, const Rational& value) {
  MultiPoly p(std::move(vars));
  if (sgn(value) != 0) {
    p.terms_.push_back({Monomial{}, value});
  }
  return p;
}

MultiPoly MultiPoly::variable(VarSetPtr vars, std::string_view name) {
  std::size_t index = vars->require(name);
  return variable(std::move(vars), index);
}

MultiPoly MultiPoly::variable(VarSetPtr vars, std::size_t index) {
  if (index >= vars->size()) {
    throw std::out_of_range("variable index out of range");
  }
  Monomial m;
  m.set(index, 1);
  return monomial(std::move(vars), m, Rational(1));
}

MultiPoly MultiPoly::monomial(VarSetPtr vars, const Monomial& mono, const Rational& coeff) {
  MultiPoly p(std::move(vars));
  if (sgn(coeff) != 0) {
    p.terms_.push_back({mono, coeff});
  }
  return p;
}

MultiPoly MultiPoly::from_terms(VarSetPtr vars, std::vector<Term> terms) {
  Accumulator acc;
  acc.reserve(terms.size());
  for (auto& t : terms) {
    accumulate(acc, t.mono, t.coeff);
  }
  return PolyAccess::wrap(std::move(vars), drain(acc));
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool MultiPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
}

Rational MultiPoly::constant_value() const {
  if (!is_constant()) {
    throw std::logic_error("constant_value of a non-constant polynomial");
  }
  return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

const Term& MultiPoly::leading_term() const {
  if (terms_.empty()) {
    throw std::logic_error("leading term of the zero polynomial");
  }
  return terms_.front();
}

int MultiPoly::total_degree() const {
  return terms_.empty() ? -1 : terms_.front().mono.degree;
}

int MultiPoly::degree_in(std::size_t var) const {
  if (terms_.empty()) {
    return -1;
  }
  int d = 0;
  for (const auto& t : terms_) {
    d = std::max(d, int{t.mono.exps[var]});
  }
  return d;
}

int MultiPoly::degree_in(const std::vector<std::size_t>& vars) const {
  if (terms_.empty()) {
    return -1;
  }
  int best = 0;
  for (const auto& t : terms_) {
    int d = 0;
    for (auto v : vars) {
      d += t.mono.exps[v];
    }
    best = std::max(best, d);
  }
  return best;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& t : out.terms_) {
    t.coeff = -t.coeff;
  }
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  require_same_vars(*this, rhs);
  if (rhs.terms_.empty()) {
    return *this;
  }
  terms_ = merge(terms_, rhs.terms_, +1);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  require_same_vars(*this, rhs);
  if (rhs.terms_.empty()) {
    return *this;
  }
  terms_ = merge(terms_, rhs.terms_, -1);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) {
    t.coeff *= scalar;
  }
  return *this;
}

MultiPoly MultiPoly::mul_term(const Monomial& mono, const Rational& coeff) const {
  MultiPoly out(vars_);
  if (sgn(coeff) == 0) {
    return out;
  }
  out.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves a monomial order.
  for (const auto& t : terms_) {
    out.terms_.push_back({monomial_mul(t.mono, mono), t.coeff * coeff});
  }
  return out;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant(vars_, Rational(1));
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) {
      result = result * base;
    }
    exponent >>= 1U;
    if (exponent > 0) {
      base = base * base;
    }
  }
  return result;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  require_same_vars(lhs, rhs);
  if (lhs.is_zero() || rhs.is_zero()) {
    return MultiPoly(lhs.vars());
  }
  const MultiPoly& small = lhs.size() <= rhs.size() ? lhs : rhs;
  const MultiPoly& large = lhs.size() <= rhs.size() ? rhs : lhs;
  if (small.size() <= 8) {
    MultiPoly out(lhs.vars());
    for (const auto& t : small.terms()) {
      out += large.mul_term(t.mono, t.coeff);
    }
    return out;
  }
  Accumulator acc;
  acc.reserve(small.size() * large.size());
  Rational prod;
  for (const auto& s : small.terms()) {
    for (const auto& l : large.terms()) {
      mpq_mul(prod.get_mpq_t(), s.coeff.get_mpq_t(), l.coeff.get_mpq_t());
      accumulate(acc, monomial_mul(s.mono, l.mono), prod);
    }
  }
  return PolyAccess::wrap(lhs.vars(), drain(acc));
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != vars_->size()) {
    throw std::invalid_argument("evaluation point has wrong dimension");
  }
  std::vector<std::vector<Rational>> powers(point.size());
  auto power = [&](std::size_t var, unsigned e) -> const Rational& {
    auto& cache = powers[var];
    if (cache.empty()) {
      cache.emplace_back(1);
    }
    while (cache.size() <= e) {
      cache.push_back(cache.back() * point[var]);
    }
    return cache[e];
  };
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational value = t.coeff;
    for (std::size_t v = 0; v < point.size(); ++v) {
      if (t.mono.exps[v] != 0) {
        value *= power(v, t.mono.exps[v]);
      }
    }
    sum += value;
  }
  return sum;
}

Rational MultiPoly::content() const {
  if (terms_.empty()) {
    return Rational(0);
  }
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational c(num_gcd, den_lcm);
  c.canonicalize();
  if (sgn(terms_.front().coeff) < 0) {
    c = -c;
  }
  return c;
}

MultiPoly MultiPoly::normalized() const {
  if (terms_.empty()) {
    return *this;
  }
  Rational c = content();
  if (c == 1) {
    return *this;
  }
  MultiPoly out = *this;
  Rational inv = 1 / c;
  out *= inv;
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational mag = abs(t.coeff);
    bool negative = sgn(t.coeff) < 0;
    if (first) {
      if (negative) {
        out << "-";
      }
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t v = 0; v < vars_->size(); ++v) {
      if (t.mono.exps[v] != 0) {
        if (!mono.empty()) {
          mono += "*";
        }
        mono += var_power(vars_->name(v), t.mono.exps[v]);
      }
    }
    if (mono.empty()) {
      out << mag.get_str();
    } else if (mag == 1) {
      out << mono;
    } else {
      out << mag.get_str() << "*" << mono;
    }
  }
  return out.str();
}

bool operator==(const MultiPoly& lhs, const MultiPoly& rhs) {
  if (!same_vars(lhs.vars(), rhs.vars())) {
    return false;
  }
  if (lhs.terms().size() != rhs.terms().size()) {
    return false;
  }
  for (std::size_t i = 0; i < lhs.terms().size(); ++i) {
    if (!(lhs.terms()[i].mono == rhs.terms()[i].mono) ||
        lhs.terms()[i].coeff != rhs.terms()[i].coeff) {
      return false;
    }
  }
  return true;
}

MultiPoly poly_arith(const MultiPoly& lhs, const MultiPoly& rhs, ArithKind kind) {
  switch (kind) {
    case ArithKind::add:
      return lhs + rhs;
    case ArithKind::sub:
      return lhs - rhs;
    case ArithKind::mul:
      return lhs * rhs;
  }
  throw std::invalid_argument("unknown arithmetic kind");
}

// ---------------------------------------------------------------------------
// Division

std::optional<MultiPoly> try_divide(const MultiPoly& num, const MultiPoly& den) {
  require_same_vars(num, den);
  if (den.is_zero()) {
    throw DivisionByZero("division by the zero polynomial");
  }
  if (num.is_zero()) {
    return MultiPoly(num.vars());
  }
  const Term& lead = den.leading_term();
  if (den.size() == 1) {
    std::vector<Term> q;
    q.reserve(num.size());
    Rational inv = 1 / lead.coeff;
    for (const auto& t : num.terms()) {
      if (!monomial_divides(lead.mono, t.mono)) {
        return std::nullopt;
      }
      q.push_back({monomial_div(t.mono, lead.mono), t.coeff * inv});
    }
    return PolyAccess::wrap(num.vars(), std::move(q));
  }
  if (num.total_degree() < den.total_degree()) {
    return std::nullopt;
  }

  // Remainder kept in an ordered map so each quotient step only touches
  // |den| entries.
  auto cmp = [](const Monomial& l, const Monomial& r) { return grlex_greater(l, r); };
  std::map<Monomial, Rational, decltype(cmp)> rem(cmp);
  for (const auto& t : num.terms()) {
    rem.emplace_hint(rem.end(), t.mono, t.coeff);
  }
  std::vector<Term> quotient;
  Rational inv = 1 / lead.coeff;
  Rational prod;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!monomial_divides(lead.mono, top->first)) {
      return std::nullopt;
    }
    Monomial qm = monomial_div(top->first, lead.mono);
    Rational qc = top->second * inv;
    rem.erase(top);
    for (std::size_t i = 1; i < den.size(); ++i) {
      const Term& d = den.terms()[i];
      mpq_mul(prod.get_mpq_t(), qc.get_mpq_t(), d.coeff.get_mpq_t());
      Monomial m = monomial_mul(qm, d.mono);
      auto [it, inserted] = rem.try_emplace(m);
      it->second -= prod;
      if (sgn(it->second) == 0) {
        rem.erase(it);
      }
    }
    quotient.push_back({qm, std::move(qc)});
  }
  return PolyAccess::wrap(num.vars(), std::move(quotient));
}

MultiPoly exact_divide(const MultiPoly& num, const MultiPoly& den) {
  auto q = try_divide(num, den);
  if (!q) {
    throw NotDivisible("(" + num.to_string() + ") is not divisible by (" + den.to_string() + ")");
  }
  return std::move(*q);
}

// ---------------------------------------------------------------------------
// GCD: content in the main variable plus a subresultant remainder sequence.

namespace {

using UPoly = std::vector<MultiPoly>;

UPoly to_univariate(const MultiPoly& p, std::size_t var) {
  UPoly out(static_cast<std::size_t>(std::max(p.degree_in(var), 0)) + 1, MultiPoly(p.vars()));
  std::vector<std::vector<Term>> buckets(out.size());
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    unsigned e = m.exps[var];
    m.set(var, 0);
    buckets[e].push_back({m, t.coeff});
  }
  for (std::size_t e = 0; e < out.size(); ++e) {
    // Removing one variable can break the order, so re-sort.
    out[e] = MultiPoly::from_terms(p.vars(), std::move(buckets[e]));
  }
  return out;
}

MultiPoly from_univariate(const UPoly& u, std::size_t var, const VarSetPtr& vars) {
  MultiPoly out(vars);
  for (std::size_t e = 0; e < u.size(); ++e) {
    if (u[e].is_zero()) {
      continue;
    }
    Monomial m;
    m.set(var, static_cast<unsigned>(e));
    out += u[e].mul_term(m, Rational(1));
  }
  return out;
}

void trim(UPoly& u) {
  while (!u.empty() && u.back().is_zero()) {
    u.pop_back();
  }
}

MultiPoly gcd_rec(const MultiPoly& lhs, const MultiPoly& rhs);

MultiPoly content_of(const UPoly& u) {
  MultiPoly g(u.front().vars());
  for (const auto& c : u) {
    if (c.is_zero()) {
      continue;
    }
    g = gcd_rec(g, c);
    if (g.is_constant()) {
      break;
    }
  }
  return g;
}

UPoly prem(const UPoly& f, const UPoly& g) {
  UPoly r = f;
  const std::size_t dg = g.size() - 1;
  const MultiPoly& lcg = g.back();
  long e = static_cast<long>(f.size()) - static_cast<long>(g.size()) + 1;
  while (!r.empty() && r.size() - 1 >= dg) {
    std::size_t shift = r.size() - 1 - dg;
    MultiPoly top = r.back();
    for (auto& c : r) {
      c = c * lcg;
    }
    for (std::size_t i = 0; i <= dg; ++i) {
      r[i + shift] -= top * g[i];
    }
    trim(r);
    --e;
  }
  if (e > 0 && !r.empty()) {
    MultiPoly scale = lcg.pow(static_cast<unsigned>(e));
    for (auto& c : r) {
      c = c * scale;
    }
  }
  return r;
}

// gcd of two polynomials primitive with respect to var, both of positive
// degree in var.
MultiPoly subresultant_gcd(const MultiPoly& a, const MultiPoly& b, std::size_t var) {
  UPoly f1 = to_univariate(a, var);
  UPoly f2 = to_univariate(b, var);
  if (f1.size() < f2.size()) {
    std::swap(f1, f2);
  }
  const VarSetPtr& vars = a.vars();
  MultiPoly g = MultiPoly::constant(vars, Rational(1));
  MultiPoly h = g;
  while (true) {
    std::size_t d = f1.size() - f2.size();
    UPoly r = prem(f1, f2);
    if (r.empty()) {
      break;
    }
    if (r.size() == 1) {
      return MultiPoly::constant(vars, Rational(1));
    }
    MultiPoly divisor = g * h.pow(static_cast<unsigned>(d));
    for (auto& c : r) {
      c = exact_divide(c, divisor);
    }
    f1 = std::move(f2);
    f2 = std::move(r);
    g = f1.back();
    if (d > 0) {
      h = exact_divide(g.pow(static_cast<unsigned>(d)), h.pow(static_cast<unsigned>(d - 1)));
    }
  }
  MultiPoly cont = content_of(f2);
  MultiPoly result = from_univariate(f2, var, vars);
  return exact_divide(result, cont).normalized();
}

MultiPoly monomial_content(const MultiPoly& p) {
  Monomial m = p.terms().front().mono;
  for (const auto& t : p.terms()) {
    m = monomial_gcd(m, t.mono);
    if (m.is_one()) {
      break;
    }
  }
  return MultiPoly::monomial(p.vars(), m, Rational(1));
}

MultiPoly gcd_rec(const MultiPoly& lhs, const MultiPoly& rhs) {
  if (lhs.is_zero()) {
    return rhs.normalized();
  }
  if (rhs.is_zero()) {
    return lhs.normalized();
  }
  const VarSetPtr& vars = lhs.vars();
  if (lhs.is_constant() || rhs.is_constant()) {
    return MultiPoly::constant(vars, Rational(1));
  }
  if (lhs.size() == 1 || rhs.size() == 1) {
    Monomial m = monomial_gcd(monomial_content(lhs).terms().front().mono,
                              monomial_content(rhs).terms().front().mono);
    return MultiPoly::monomial(vars, m, Rational(1));
  }
  std::size_t var = vars->size();
  for (std::size_t v = 0; v < vars->size(); ++v) {
    if (lhs.uses(v) || rhs.uses(v)) {
      var = v;
      break;
    }
  }
  bool in_lhs = lhs.uses(var);
  bool in_rhs = rhs.uses(var);
  if (!in_lhs) {
    return gcd_rec(lhs, content_of(to_univariate(rhs, var)));
  }
  if (!in_rhs) {
    return gcd_rec(content_of(to_univariate(lhs, var)), rhs);
  }
  MultiPoly ca = content_of(to_univariate(lhs, var));
  MultiPoly cb = content_of(to_univariate(rhs, var));
  MultiPoly pa = exact_divide(lhs, ca);
  MultiPoly pb = exact_divide(rhs, cb);
  MultiPoly c = gcd_rec(ca, cb);
  MultiPoly g = subresultant_gcd(pa, pb, var);
  return (c * g).normalized();
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& lhs, const MultiPoly& rhs) {
  require_same_vars(lhs, rhs);
  return gcd_rec(lhs, rhs);
}

// ---------------------------------------------------------------------------
// Substitution

MultiPoly substitute(const MultiPoly& poly, const Bindings& bindings, const VarSetPtr& target) {
  const VarSet& source = *poly.vars();
  std::vector<bool> used(source.size(), false);
  for (const auto& t : poly.terms()) {
    for (std::size_t v = 0; v < source.size(); ++v) {
      if (t.mono.exps[v] != 0) {
        used[v] = true;
      }
    }
  }
  std::vector<MultiPoly> images(source.size(), MultiPoly(target));
  bool monomial_images = true;
  for (std::size_t v = 0; v < source.size(); ++v) {
    if (!used[v]) {
      continue;
    }
    auto it = bindings.find(source.name(v));
    if (it != bindings.end()) {
      if (!same_vars(it->second.vars(), target)) {
        throw VarSetMismatch("binding for '" + source.name(v) + "' is not over the target variables");
      }
      images[v] = it->second;
    } else {
      images[v] = MultiPoly::variable(target, target->require(source.name(v)));
    }
    if (images[v].size() > 1) {
      monomial_images = false;
    }
  }

  if (monomial_images) {
    std::vector<Term> out;
    out.reserve(poly.size());
    for (const auto& t : poly.terms()) {
      Term image{Monomial{}, t.coeff};
      bool vanished = false;
      for (std::size_t v = 0; v < source.size() && !vanished; ++v) {
        unsigned e = t.mono.exps[v];
        if (e == 0) {
          continue;
        }
        if (images[v].is_zero()) {
          vanished = true;
          break;
        }
        const Term& img = images[v].terms().front();
        for (unsigned r = 0; r < e; ++r) {
          image.mono = monomial_mul(image.mono, img.mono);
        }
        Rational c;
        mpz_pow_ui(c.get_num_mpz_t(), img.coeff.get_num_mpz_t(), e);
        mpz_pow_ui(c.get_den_mpz_t(), img.coeff.get_den_mpz_t(), e);
        image.coeff *= c;
      }
      if (!vanished) {
        out.push_back(std::move(image));
      }
    }
    return MultiPoly::from_terms(target, std::move(out));
  }

  std::vector<std::vector<MultiPoly>> powers(source.size());
  auto power = [&](std::size_t v, unsigned e) -> const MultiPoly& {
    auto& cache = powers[v];
    if (cache.empty()) {
      cache.push_back(MultiPoly::constant(target, Rational(1)));
    }
    while (cache.size() <= e) {
      cache.push_back(cache.back() * images[v]);
    }
    return cache[e];
  };
  Accumulator acc;
  for (const auto& t : poly.terms()) {
    MultiPoly value = MultiPoly::constant(target, t.coeff);
    for (std::size_t v = 0; v < source.size() && !value.is_zero(); ++v) {
      if (t.mono.exps[v] != 0) {
        value = value * power(v, t.mono.exps[v]);
      }
    }
    for (const auto& term : value.terms()) {
      accumulate(acc, term.mono, term.coeff);
    }
  }
  return PolyAccess::wrap(target, drain(acc));
}

MultiPoly rebase(const MultiPoly& poly, const VarSetPtr& target) {
  if (same_vars(poly.vars(), target)) {
    return poly;
  }
  return substitute(poly, Bindings{}, target);
}

}  // namespace stabenv
