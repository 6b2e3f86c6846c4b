#include "stabenv/simplex.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "stabenv/errors.hpp"

namespace stabenv {

namespace {

Rational integral(const FixedPoint& p, LayerSource source, Execution exec) {
  switch (source) {
    case LayerSource::closed_form:
      return closed_form_integral(p, exec).value;
    case LayerSource::gr2_formula:
      if (p.k != 2) {
        throw std::invalid_argument("the k = 2 formula needs k = 2");
      }
      return gr2_closed_form(p.indices[0], p.indices[1], p.n);
    case LayerSource::localization:
      return integral_via_z_limit(p, exec).value;
  }
  throw std::logic_error("unknown layer source");
}

Rational narayana_or_zero(int n, int k) {
  return k < 1 || k > n ? Rational(0) : Rational(narayana(n, k));
}

std::string entry_label(int n, int i1, int i2) {
  return "<" + std::to_string(i1) + "," + std::to_string(i2) + ">_" + std::to_string(n);
}

MultiPoly linear_abc(int a, int b, int c) {
  const VarSetPtr& v = abc_vars();
  return MultiPoly::variable(v, 0) * Rational(a) + MultiPoly::variable(v, 1) * Rational(b) +
         MultiPoly::variable(v, 2) * Rational(c);
}

// Centers rows of cells on a grid with two columns per cell.
std::string format_rows(const std::vector<std::vector<std::string>>& rows) {
  std::size_t width = 1;
  std::size_t widest = 0;
  for (const auto& row : rows) {
    widest = std::max(widest, row.size());
    for (const auto& cell : row) {
      width = std::max(width, cell.size());
    }
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line((widest - row.size()) * width, ' ');
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::string cell = row[c];
      cell.insert(0, width - cell.size(), ' ');
      line += cell;
      if (c + 1 < row.size()) {
        line.append(width, ' ');
      }
    }
    while (!line.empty() && line.back() == ' ') {
      line.pop_back();
    }
    out << line << '\n';
  }
  return out.str();
}

}  // namespace

Rational SimplexLayer::at(int i1, int i2) const {
  auto it = entries.find({i1, i2});
  return it == entries.end() ? Rational(0) : it->second;
}

SimplexLayer build_layer(int n, LayerSource source, Execution exec) {
  if (n < 2) {
    throw std::invalid_argument("layers start at n = 2");
  }
  SimplexLayer layer;
  layer.n = n;
  if (n == 2) {
    layer.entries[{1, 2}] = 1;
    return layer;
  }
  for (const auto& p : enumerate_fixed_points(n, 2)) {
    layer.entries[{p.indices[0], p.indices[1]}] = integral(p, source, exec);
  }
  return layer;
}

SimplexLayer build_extended_layer(int n) {
  if (n < 2) {
    throw std::invalid_argument("layers start at n = 2");
  }
  SimplexLayer layer;
  layer.n = n;
  layer.extended = true;
  if (n == 2) {
    layer.entries[{1, 2}] = 1;
    return layer;
  }
  for (int i1 = 1; i1 <= n; ++i1) {
    for (int i2 = i1; i2 <= n; ++i2) {
      layer.entries[{i1, i2}] = gr2_closed_form(i1, i2, n);
    }
  }
  return layer;
}

CheckOutcome four_neighbor_check(const SimplexLayer& lo, const SimplexLayer& hi, NeighborMode mode) {
  if (hi.n != lo.n + 1) {
    throw std::invalid_argument("four_neighbor_check needs consecutive layers");
  }
  if ((mode == NeighborMode::extended) != (lo.extended && hi.extended)) {
    throw std::invalid_argument("extended mode needs extended layers, other modes standard ones");
  }
  const int n = hi.n;
  std::vector<std::string> failures;
  std::size_t cases = 0;
  for (const auto& [key, value] : hi.entries) {
    auto [i, j] = key;
    if (i == j) {
      continue;  // <ii>_n only feeds the next layer
    }
    ++cases;
    if (mode == NeighborMode::with_exception && j == i + 1 && i > 1 && n > 3) {
      Rational expected = narayana_or_zero(n - 2, i) + narayana_or_zero(n - 2, i - 1);
      if (value != expected) {
        failures.push_back(entry_label(n, i, j) + " = " + to_string(value) + " but N(" +
                           std::to_string(n - 2) + "," + std::to_string(i) + ") + N(" +
                           std::to_string(n - 2) + "," + std::to_string(i - 1) + ") = " +
                           to_string(expected));
      }
      continue;
    }
    Rational sum = lo.at(i, j) + lo.at(i - 1, j) + lo.at(i, j - 1) + lo.at(i - 1, j - 1);
    if (value != sum) {
      failures.push_back(entry_label(n, i, j) + " = " + to_string(value) + " but the four neighbors give " +
                         to_string(lo.at(i, j)) + " + " + to_string(lo.at(i - 1, j)) + " + " +
                         to_string(lo.at(i, j - 1)) + " + " + to_string(lo.at(i - 1, j - 1)) + " = " +
                         to_string(sum));
    }
  }
  const char* tag = mode == NeighborMode::plain            ? "plain"
                    : mode == NeighborMode::with_exception ? "with-exception"
                                                           : "extended";
  return make_outcome(std::string("four-neighbor ") + tag + " n=" + std::to_string(n), false,
                      std::move(failures), cases);
}

namespace {

CheckOutcome merge(std::string name, const std::vector<CheckOutcome>& parts, bool conjecture) {
  std::vector<std::string> failures;
  std::size_t cases = 0;
  for (const auto& p : parts) {
    cases += p.cases;
    failures.insert(failures.end(), p.failures.begin(), p.failures.end());
  }
  return make_outcome(std::move(name), conjecture, std::move(failures), cases);
}

}  // namespace

CheckOutcome four_neighbor_theorem_check(int n_low, int n_max) {
  std::vector<CheckOutcome> parts;
  SimplexLayer lo = build_layer(n_low);
  for (int n = n_low + 1; n <= n_max; ++n) {
    SimplexLayer hi = build_layer(n);
    parts.push_back(four_neighbor_check(lo, hi, NeighborMode::with_exception));
    lo = std::move(hi);
  }
  return merge("four-neighbor with Narayana exception n=" + std::to_string(n_low) + ".." + std::to_string(n_max), parts, false);
}

CheckOutcome extended_recurrence_check(int n_low, int n_max) {
  std::vector<CheckOutcome> parts;
  SimplexLayer lo = build_extended_layer(n_low);
  for (int n = n_low + 1; n <= n_max; ++n) {
    SimplexLayer hi = build_extended_layer(n);
    parts.push_back(four_neighbor_check(lo, hi, NeighborMode::extended));
    lo = std::move(hi);
  }
  return merge("extended four-neighbor n=" + std::to_string(n_low) + ".." + std::to_string(n_max), parts, false);
}

VarSetPtr abc_vars() {
  static const VarSetPtr vars = make_varset({"a", "b", "c"});
  return vars;
}

VarSetPtr xyz_vars() {
  static const VarSetPtr vars = make_varset({"x", "y", "z"});
  return vars;
}

MultiPoly layer_to_polynomial(const SimplexLayer& layer) {
  if (layer.extended) {
    throw std::invalid_argument("layer_to_polynomial needs a standard layer");
  }
  std::vector<Term> terms;
  for (const auto& [key, value] : layer.entries) {
    auto [i1, i2] = key;
    Monomial m;
    m.set(0, static_cast<unsigned>(i1 - 1));
    m.set(1, static_cast<unsigned>(i2 - i1 - 1));
    m.set(2, static_cast<unsigned>(layer.n - i2));
    terms.push_back({m, value});
  }
  return MultiPoly::from_terms(abc_vars(), std::move(terms));
}

MultiPoly reduce_layer(const MultiPoly& layer_poly) {
  return exact_divide(layer_poly, linear_abc(1, 2, 1));
}

CheckOutcome divisibility_check(int n_max) {
  std::vector<std::string> failures;
  std::size_t cases = 0;
  for (int n = 3; n <= n_max; ++n, ++cases) {
    if (!try_divide(layer_to_polynomial(build_layer(n)), linear_abc(1, 2, 1))) {
      failures.push_back("layer " + std::to_string(n) + " is not divisible by a+2b+c");
    }
  }
  return make_outcome("divisibility by a+2b+c n<=" + std::to_string(n_max), true, std::move(failures),
                      cases);
}

ReducedLayer reduced_layer(int l) {
  if (l < 1) {
    throw std::invalid_argument("reduced layers start at l = 1");
  }
  MultiPoly q = reduce_layer(layer_to_polynomial(build_layer(l + 2)));
  ReducedLayer out;
  for (int r = 1; r <= l; ++r) {
    for (int c = 1; c <= r; ++c) {
      out[{r, c}] = 0;
    }
  }
  // a^{r-c} b^{l-r} c^{c-1}
  for (const auto& t : q.terms()) {
    out[{l - t.mono[1], t.mono[2] + 1}] = t.coeff;
  }
  return out;
}

CheckOutcome reduced_recurrence_check(int n_max) {
  if (n_max < 3) {
    throw std::invalid_argument("reduced_recurrence_check needs n_max >= 3");
  }
  std::vector<std::string> failures;
  std::size_t cases = 0;
  ReducedLayer prev = reduced_layer(1);
  auto get = [](const ReducedLayer& layer, int r, int c) {
    auto it = layer.find({r, c});
    return it == layer.end() ? Rational(0) : it->second;
  };
  for (int l = 2; l <= n_max - 2; ++l) {
    ReducedLayer cur = reduced_layer(l);
    for (const auto& [key, value] : cur) {
      auto [r, c] = key;
      ++cases;
      Rational sum = get(prev, r, c) + get(prev, r - 1, c) + get(prev, r - 1, c - 1) + get(prev, r - 2, c - 1);
      if (value != sum) {
        failures.push_back("xi_{" + std::to_string(l) + "," + std::to_string(r) + "," + std::to_string(c) +
                           "} = " + to_string(value) + " but the four neighbors give " + to_string(sum));
      }
    }
    prev = std::move(cur);
  }
  return make_outcome("reduced four-neighbor n<=" + std::to_string(n_max), true, std::move(failures), cases);
}

Monomial abc_to_xyz(const Monomial& m) {
  unsigned i = m[0];
  unsigned j = m[1];
  unsigned k = m[2];
  Monomial out;
  out.set(0, i + j + k + 1);
  out.set(1, i + k + 1);
  out.set(2, k + 1);
  return out;
}

Monomial xyz_to_abc(const Monomial& m) {
  int l = m[0];
  int r = m[1];
  int k = m[2];
  if (!(1 <= k && k <= r && r <= l)) {
    throw std::invalid_argument("x^l y^r z^k needs 1 <= k <= r <= l");
  }
  Monomial out;
  out.set(0, static_cast<unsigned>(r - k));
  out.set(1, static_cast<unsigned>(l - r));
  out.set(2, static_cast<unsigned>(k - 1));
  return out;
}

GeneratingFunctions generating_functions(int order) {
  if (order < 1) {
    throw InsufficientOrder("generating functions need order >= 1");
  }
  static std::mutex mu;
  static std::map<int, GeneratingFunctions> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(order); it != cache.end()) {
      return it->second;
    }
  }
  const VarSetPtr& v = xyz_vars();
  auto s = [&](const MultiPoly& p) { return TruncatedSeries(p, order); };
  MultiPoly one = MultiPoly::constant(v, Rational(1));
  MultiPoly x = MultiPoly::variable(v, 0);
  MultiPoly y = MultiPoly::variable(v, 1);
  MultiPoly z = MultiPoly::variable(v, 2);
  MultiPoly xy = x * y;
  MultiPoly xyz = xy * z;
  MultiPoly u = one - xy * (one + z);
  TruncatedSeries disc = s(u * u - Rational(4) * xy * xy * z);
  TruncatedSeries root = series_sqrt(disc);
  TruncatedSeries half_yz = s(y * z * Rational(1, 2));
  TruncatedSeries num = s(xyz) - half_yz * (s(u) - root);
  TruncatedSeries den = s(one - x * (one + y) * (one + y * z));
  TruncatedSeries b = num * series_inverse(den);
  TruncatedSeries f = s(xyz) + s(xy + x * Rational(2) + xyz) * b;
  GeneratingFunctions out{b, f};
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(order, out);
  return out;
}

Rational generating_function_coeff(const GeneratingFunctions& gf, int n, int i1, int i2) {
  if (n < 2 || i1 < 1 || i2 <= i1 || i2 > n) {
    throw std::invalid_argument("generating_function_coeff needs 1 <= i1 < i2 <= n");
  }
  Monomial m;
  m.set(0, static_cast<unsigned>(n - 1));
  m.set(1, static_cast<unsigned>(n - (i2 - i1)));
  m.set(2, static_cast<unsigned>(i1));
  return gf.f.coefficient(m);
}

Rational generating_function_coeff(int n, int i1, int i2, int order) {
  if (order <= 3 * n) {
    throw InsufficientOrder("order " + std::to_string(order) + " must exceed 3n = " + std::to_string(3 * n));
  }
  return generating_function_coeff(generating_functions(order), n, i1, i2);
}

std::map<FixedPoint, Rational> build_layer_k(int n, int k, LayerSource source, Execution exec) {
  std::map<FixedPoint, Rational> out;
  for (const auto& p : enumerate_fixed_points(n, k)) {
    out.emplace(p, integral(p, source, exec));
  }
  return out;
}

std::string format_layer_text(const SimplexLayer& layer) {
  const int n = layer.n;
  std::vector<std::vector<std::string>> rows;
  for (int r = n - 1; r >= (layer.extended ? 0 : 1); --r) {
    std::vector<std::string> row;
    for (int i1 = n - r; i1 >= 1; --i1) {
      if (layer.entries.count({i1, i1 + r}) != 0) {
        row.push_back(to_string(layer.at(i1, i1 + r)));
      }
    }
    if (!row.empty()) {
      rows.push_back(std::move(row));
    }
  }
  return format_rows(rows);
}

std::string format_reduced_text(const ReducedLayer& layer, int l) {
  std::vector<std::vector<std::string>> rows;
  for (int r = 1; r <= l; ++r) {
    std::vector<std::string> row;
    for (int c = 1; c <= r; ++c) {
      auto it = layer.find({r, c});
      row.push_back(to_string(it == layer.end() ? Rational(0) : it->second));
    }
    rows.push_back(std::move(row));
  }
  return format_rows(rows);
}

}  // namespace stabenv
