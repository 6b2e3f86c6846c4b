#include "stabenv/geometry.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace stabenv {

namespace {

void check_nk(int n, int k) {
  if (n < 1 || k < 1 || k >= n) {
    throw std::invalid_argument("need 0 < k < n, got n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string clean;
  for (char ch : text) {
    clean += (ch == ',' || ch == ' ' || ch == '{' || ch == '}' || ch == '(' || ch == ')') ? ' ' : ch;
  }
  std::istringstream in(clean);
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) {
      throw std::invalid_argument("bad integer '" + tok + "'");
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::string a_name(int i) { return "a" + std::to_string(i); }

VarSetPtr equivariant_vars(int n) {
  static std::mutex mutex;
  static std::map<int, VarSetPtr> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) {
      names.push_back(a_name(i));
    }
    names.emplace_back(kHbar);
    slot = make_varset(std::move(names));
  }
  return slot;
}

// ---------------------------------------------------------------------------
// Fixed points

int FixedPoint::weight() const { return std::accumulate(indices.begin(), indices.end(), 0); }

bool FixedPoint::contains(int i) const {
  return std::binary_search(indices.begin(), indices.end(), i);
}

std::vector<int> FixedPoint::complement() const {
  std::vector<int> out;
  for (int v = 1; v <= n; ++v) {
    if (!contains(v)) {
      out.push_back(v);
    }
  }
  return out;
}

std::string FixedPoint::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < indices.size(); ++r) {
    out += (r ? "," : "") + std::to_string(indices[r]);
  }
  return out;
}

std::string FixedPoint::label() const {
  if (n > 9) {
    return "<" + to_string() + ">";
  }
  std::string out = "<";
  for (int i : indices) {
    out += std::to_string(i);
  }
  return out + ">";
}

FixedPoint make_fixed_point(int n, int k, std::vector<int> indices) {
  check_nk(n, k);
  if (static_cast<int>(indices.size()) != k) {
    throw std::invalid_argument("fixed point needs exactly k indices");
  }
  for (std::size_t r = 0; r < indices.size(); ++r) {
    if (indices[r] < 1 || indices[r] > n || (r > 0 && indices[r] <= indices[r - 1])) {
      throw std::invalid_argument("fixed point indices must be strictly increasing in 1..n");
    }
  }
  return FixedPoint{n, k, std::move(indices)};
}

FixedPoint parse_fixed_point(int n, int k, const std::string& text) {
  std::vector<int> v = parse_int_list(text);
  if (v.size() == 1 && k > 1 && n <= 9 && text.find(',') == std::string::npos) {
    // Compact form "23".
    std::string digits = std::to_string(v[0]);
    v.clear();
    for (char ch : digits) {
      v.push_back(ch - '0');
    }
  }
  std::sort(v.begin(), v.end());
  return make_fixed_point(n, k, std::move(v));
}

std::vector<FixedPoint> enumerate_fixed_points(int n, int k) {
  check_nk(n, k);
  std::vector<FixedPoint> out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 1);
  while (true) {
    out.push_back(FixedPoint{n, k, idx});
    int r = k - 1;
    while (r >= 0 && idx[static_cast<std::size_t>(r)] == n - k + r + 1) {
      --r;
    }
    if (r < 0) {
      break;
    }
    ++idx[static_cast<std::size_t>(r)];
    for (int t = r + 1; t < k; ++t) {
      idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Chambers

Chamber Chamber::identity(int n) {
  Chamber c;
  c.perm.resize(static_cast<std::size_t>(n));
  std::iota(c.perm.begin(), c.perm.end(), 1);
  return c;
}

Chamber Chamber::inverse() const {
  Chamber c;
  c.perm.resize(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    c.perm[static_cast<std::size_t>(perm[i] - 1)] = static_cast<int>(i + 1);
  }
  return c;
}

bool Chamber::is_identity() const {
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] != static_cast<int>(i + 1)) {
      return false;
    }
  }
  return true;
}

std::string Chamber::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    out += (i ? "," : "") + std::to_string(perm[i]);
  }
  return out;
}

Chamber parse_chamber(int n, const std::string& text) {
  std::vector<int> v = parse_int_list(text);
  if (v.size() == 1 && n > 1 && n <= 9) {
    std::string digits = std::to_string(v[0]);
    v.clear();
    for (char ch : digits) {
      v.push_back(ch - '0');
    }
  }
  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expect(static_cast<std::size_t>(n));
  std::iota(expect.begin(), expect.end(), 1);
  if (sorted != expect) {
    throw std::invalid_argument("'" + text + "' is not a permutation of 1.." + std::to_string(n));
  }
  return Chamber{std::move(v)};
}

FixedPoint apply(const Chamber& tau, const FixedPoint& p) {
  std::vector<int> out;
  for (int i : p.indices) {
    out.push_back(tau(i));
  }
  std::sort(out.begin(), out.end());
  return FixedPoint{p.n, p.k, std::move(out)};
}

Bindings relabel_bindings(const Chamber& tau, const VarSetPtr& vars) {
  Bindings b;
  for (int i = 1; i <= tau.n(); ++i) {
    b.emplace(a_name(i), MultiPoly::variable(vars, a_name(tau(i))));
  }
  return b;
}

MultiPoly apply(const Chamber& tau, const MultiPoly& poly) {
  if (tau.is_identity()) {
    return poly;
  }
  return substitute(poly, relabel_bindings(tau, poly.vars()), poly.vars());
}

// ---------------------------------------------------------------------------
// Weights and Euler classes

MultiPoly weight_form(int n, int x, int y, int shift) {
  const VarSetPtr& vars = equivariant_vars(n);
  std::vector<Term> terms;
  Monomial mx;
  mx.set(static_cast<std::size_t>(x - 1), 1);
  Monomial my;
  my.set(static_cast<std::size_t>(y - 1), 1);
  terms.push_back({mx, Rational(1)});
  terms.push_back({my, Rational(-1)});
  if (shift != 0) {
    Monomial mh;
    mh.set(static_cast<std::size_t>(n), 1);
    terms.push_back({mh, Rational(shift)});
  }
  return MultiPoly::from_terms(vars, std::move(terms));
}

std::vector<MultiPoly> tangent_weights(const FixedPoint& p) {
  std::vector<MultiPoly> out;
  for (int v : p.complement()) {
    for (int s : p.indices) {
      out.push_back(weight_form(p.n, v, s, 0));
      out.push_back(weight_form(p.n, s, v, 1));
    }
  }
  return out;
}

namespace {

MultiPoly product(const std::vector<MultiPoly>& factors, const VarSetPtr& vars) {
  MultiPoly out = MultiPoly::constant(vars, Rational(1));
  for (const auto& f : factors) {
    out *= f;
  }
  return out;
}

std::vector<MultiPoly> half_weights(const FixedPoint& p, const Chamber& c, bool repelling) {
  Chamber inv = c.inverse();
  FixedPoint base = c.is_identity() ? p : apply(inv, p);
  std::vector<MultiPoly> out;
  for (int s : base.indices) {
    for (int q : base.complement()) {
      bool below = q < s;
      if (below == repelling) {
        out.push_back(weight_form(p.n, q, s, 0));
      } else {
        out.push_back(weight_form(p.n, s, q, 1));
      }
    }
  }
  if (!c.is_identity()) {
    for (auto& w : out) {
      w = apply(c, w);
    }
  }
  return out;
}

}  // namespace

MultiPoly tangent_euler_class(const FixedPoint& p) {
  return product(tangent_weights(p), equivariant_vars(p.n));
}

std::vector<MultiPoly> repelling_weights(const FixedPoint& p, const Chamber& c) {
  return half_weights(p, c, true);
}

MultiPoly repelling_euler_class(const FixedPoint& p, const Chamber& c) {
  return product(half_weights(p, c, true), equivariant_vars(p.n));
}

MultiPoly attracting_euler_class(const FixedPoint& p, const Chamber& c) {
  return product(half_weights(p, c, false), equivariant_vars(p.n));
}

bool attracting_leq(const FixedPoint& lhs, const FixedPoint& rhs) {
  if (lhs.n != rhs.n || lhs.k != rhs.k) {
    throw std::invalid_argument("fixed points of different Grassmannians");
  }
  for (std::size_t r = 0; r < lhs.indices.size(); ++r) {
    if (lhs.indices[r] > rhs.indices[r]) {
      return false;
    }
  }
  return true;
}

bool attracting_leq(const FixedPoint& lhs, const FixedPoint& rhs, const Chamber& tau) {
  if (tau.is_identity()) {
    return attracting_leq(lhs, rhs);
  }
  Chamber inv = tau.inverse();
  return attracting_leq(apply(inv, lhs), apply(inv, rhs));
}

// ---------------------------------------------------------------------------
// Moment graph

std::size_t MomentGraph::degree(const FixedPoint& p) const {
  return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [&](const MomentEdge& e) {
    return e.lower == p || e.upper == p;
  }));
}

MomentGraph build_moment_graph(int n, int k) {
  MomentGraph g{n, k, enumerate_fixed_points(n, k), {}};
  for (const auto& p : g.vertices) {
    for (int s : p.indices) {
      for (int q : p.complement()) {
        if (q < s) {
          continue;  // each edge is emitted from its lower end
        }
        std::vector<int> up = p.indices;
        std::replace(up.begin(), up.end(), s, q);
        std::sort(up.begin(), up.end());
        MomentEdge e;
        e.lower = p;
        e.upper = FixedPoint{n, k, std::move(up)};
        e.s = s;
        e.q = q;
        e.zero_section = weight_form(n, q, s, 0);
        e.cotangent = weight_form(n, s, q, 1);
        e.attracting = q > s;
        g.edges.push_back(std::move(e));
      }
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// Partitions

int BoxPartition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int BoxPartition::part(int row) const {
  return row >= 1 && row <= static_cast<int>(parts.size()) ? parts[static_cast<std::size_t>(row - 1)] : 0;
}

bool BoxPartition::contains(int row, int col) const { return col >= 1 && col <= part(row); }

BoxPartition BoxPartition::conjugate() const {
  std::vector<int> t;
  for (int c = 1; c <= k; ++c) {
    int len = 0;
    while (len < static_cast<int>(parts.size()) && parts[static_cast<std::size_t>(len)] >= c) {
      ++len;
    }
    if (len > 0) {
      t.push_back(len);
    }
  }
  return BoxPartition{n, n - k, std::move(t)};
}

BoxPartition BoxPartition::complement() const {
  std::vector<int> c;
  for (int r = 1; r <= rows(); ++r) {
    int v = k - part(rows() + 1 - r);
    if (v > 0) {
      c.push_back(v);
    }
  }
  return BoxPartition{n, k, std::move(c)};
}

std::string BoxPartition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out += (i ? "," : "") + std::to_string(parts[i]);
  }
  return out + ")";
}

BoxPartition make_partition(int n, int k, std::vector<int> parts) {
  check_nk(n, k);
  while (!parts.empty() && parts.back() == 0) {
    parts.pop_back();
  }
  if (static_cast<int>(parts.size()) > n - k) {
    throw std::invalid_argument("partition has more than n-k parts");
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0 || parts[i] > k || (i > 0 && parts[i] > parts[i - 1])) {
      throw std::invalid_argument("partition parts must be weakly decreasing in 0..k");
    }
  }
  return BoxPartition{n, k, std::move(parts)};
}

BoxPartition parse_partition(int n, int k, const std::string& text) {
  return make_partition(n, k, parse_int_list(text));
}

std::vector<BoxPartition> enumerate_partitions(int n, int k) {
  check_nk(n, k);
  std::vector<BoxPartition> out;
  std::vector<int> cur;
  // Depth-first over rows, parts bounded by the previous one.
  auto rec = [&](auto&& self, int row, int bound) -> void {
    if (row > n - k) {
      out.push_back(make_partition(n, k, cur));
      return;
    }
    for (int v = 0; v <= bound; ++v) {
      cur.push_back(v);
      self(self, row + 1, v);
      cur.pop_back();
    }
  };
  rec(rec, 1, k);
  std::sort(out.begin(), out.end(), [](const BoxPartition& l, const BoxPartition& r) {
    if (l.size() != r.size()) {
      return l.size() < r.size();
    }
    return l.parts > r.parts;
  });
  return out;
}

FixedPoint omega(const BoxPartition& lam) {
  BoxPartition t = lam.conjugate();
  std::vector<int> idx;
  for (int c = 1; c <= lam.k; ++c) {
    idx.push_back(t.part(c) + lam.k + 1 - c);
  }
  std::sort(idx.begin(), idx.end());
  return make_fixed_point(lam.n, lam.k, std::move(idx));
}

BoxPartition omega_inverse(const FixedPoint& p) {
  std::vector<int> t;
  for (int c = 1; c <= p.k; ++c) {
    t.push_back(p.indices[static_cast<std::size_t>(p.k - c)] - (p.k + 1 - c));
  }
  BoxPartition conj = make_partition(p.n, p.n - p.k, std::move(t));
  return conj.conjugate();
}

}  // namespace stabenv
