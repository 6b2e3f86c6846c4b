// Command-line front end: integrals, tables, simplices, path sums and
// verification suites. Exit codes: 0 success, 2 usage, 3 theorem-level check
// failed, 4 conjecture-level check failed, 5 internal invariant violated.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "stabenv/closedform.hpp"
#include "stabenv/errors.hpp"
#include "stabenv/parse.hpp"
#include "stabenv/paths.hpp"
#include "stabenv/simplex.hpp"

using namespace stabenv;
using json = nlohmann::ordered_json;

namespace {

constexpr int kUsage = 2;
constexpr int kTheoremFailed = 3;
constexpr int kConjectureFailed = 4;
constexpr int kInternal = 5;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { text, json, csv };

struct Report {
  std::string command;
  json params = json::object();
  json results = json::array();
  json outcomes = json::array();
  std::ostringstream text;
  std::ostringstream csv;
  bool has_csv = false;
  int exit_code = 0;

  void add_outcome(const CheckOutcome& o, bool conjecture) {
    json j{{"name", o.name}, {"status", to_string(o.status)}, {"cases", o.cases}};
    if (!o.detail.empty()) {
      j["detail"] = o.detail;
    }
    if (!o.failures.empty()) {
      j["failures"] = o.failures;
    }
    outcomes.push_back(j);
    text << to_string(o.status) << "  " << o.name << "  (" << o.cases
         << " cases)\n";
    for (const auto& f : o.failures) {
      text << "    " << f << "\n";
    }
    if (!o.ok()) {
      int code = conjecture ? kConjectureFailed : kTheoremFailed;
      if (exit_code == 0 || code == kTheoremFailed) {
        exit_code = code;
      }
    }
  }
};

std::string str(const Rational& q) { return to_string(q); }

json point_json(const FixedPoint& p) { return json{{"point", p.indices}, {"label", p.label()}}; }

Rational integral_by(const FixedPoint& p, const std::string& method) {
  if (method == "z") {
    return integral_via_z_limit(p).value;
  }
  if (method == "full") {
    return integral_full_multivariate(p).value;
  }
  if (method == "closed") {
    return closed_form_integral(p).value;
  }
  if (method == "paths") {
    if (p.k * (p.n - p.k) > kPathBoxLimit) {
      throw CostLimitExceeded("path sums are limited to k(n-k) <= " + std::to_string(kPathBoxLimit));
    }
    return path_sum_limit(omega_inverse(p)).value;
  }
  throw UsageError("unknown method " + method);
}

void check_nk(int n, int k) {
  if (n < 1 || k < 1 || k >= n || n > 20) {
    throw UsageError("need 1 <= k < n <= 20");
  }
}

// Localization sum with the denominator left as a product of linear factors.
FactoredFraction factored_sum(const FixedPoint& p, const Chamber& c) {
  FactoredFraction total;
  bool first = true;
  for (const auto& j : enumerate_fixed_points(p.n, p.k)) {
    MultiPoly num = restriction(p, j, c);
    if (num.is_zero()) {
      continue;
    }
    FactoredFraction term = FactoredFraction::from_products(num.vars(), {num}, tangent_weights(j));
    if (first) {
      total = term;
      first = false;
    } else {
      total += term;
    }
  }
  return total;
}

std::string factored_text(const FactoredFraction& f) {
  std::string den;
  for (const auto& fac : f.factors()) {
    den += "(" + fac.poly.to_string() + ")";
    if (fac.mult > 1) {
      den += "^" + std::to_string(fac.mult);
    }
  }
  std::string num = "(" + f.num().to_string() + ")";
  return den.empty() ? num : num + "/" + den;
}

// ---- commands --------------------------------------------------------------

void cmd_integral(Report& r, int n, int k, const std::string& point, const std::string& method, bool show_sum,
                  const std::string& chamber) {
  check_nk(n, k);
  FixedPoint p = parse_fixed_point(n, k, point);
  r.params = {{"n", n}, {"k", k}, {"point", p.indices}, {"method", method}};
  std::vector<std::string> methods;
  if (method == "all") {
    methods = {"z", "closed"};
    if (full_multivariate_cost(n, k) <= full_multivariate_cost_limit()) {
      methods.emplace_back("full");
    }
    if (k * (n - k) <= kPathBoxLimit) {
      methods.emplace_back("paths");
    }
  } else {
    methods = {method};
  }
  std::optional<Rational> first;
  bool agree = true;
  for (const auto& m : methods) {
    Rational v = integral_by(p, m);
    r.results.push_back(json{{"point", p.indices}, {"label", p.label()}, {"method", m}, {"value", str(v)}});
    r.text << p.label() << " " << m << " " << str(v) << "\n";
    if (first && *first != v) {
      agree = false;
    }
    if (!first) {
      first = v;
    }
  }
  if (methods.size() > 1) {
    r.text << (agree ? "all methods agree" : "METHODS DISAGREE") << "\n";
    r.params["agree"] = agree;
    if (!agree) {
      r.exit_code = kInternal;
    }
  }
  if (show_sum) {
    Chamber c = chamber.empty() ? Chamber::identity(n) : parse_chamber(n, chamber);
    RationalFunction s = localization_sum(p, c).value;
    FactoredFraction f = factored_sum(p, c);
    if (!(f.to_rational_function() == s)) {
      throw IndeterminateInternal("factored and canonical localization sums differ at " + p.label());
    }
    r.results.push_back(json{{"label", p.label()},
                             {"chamber", c.to_string()},
                             {"sum", s.to_string()},
                             {"factored", factored_text(f)}});
    r.text << "sum " << factored_text(f) << "\n";
  }
}

void cmd_table(Report& r, int n, int k, const std::string& method) {
  check_nk(n, k);
  r.params = {{"n", n}, {"k", k}, {"method", method}};
  std::map<FixedPoint, Rational> values;
  for (const auto& p : enumerate_fixed_points(n, k)) {
    values.emplace(p, integral_by(p, method));
  }
  r.has_csv = true;
  r.csv << "point,value\n";
  for (const auto& [p, v] : values) {
    json j = point_json(p);
    j["value"] = str(v);
    r.results.push_back(j);
    r.csv << "\"" << p.to_string() << "\"," << str(v) << "\n";
  }
  if (k == 1) {
    std::string sep;
    for (const auto& [p, v] : values) {
      r.text << sep << str(v);
      sep = " ";
    }
    r.text << "\n";
  } else if (k == 2) {
    SimplexLayer layer;
    layer.n = n;
    for (const auto& [p, v] : values) {
      layer.entries[{p.indices[0], p.indices[1]}] = v;
    }
    r.text << format_layer_text(layer);
  } else {
    for (const auto& [p, v] : values) {
      r.text << p.label() << " " << str(v) << "\n";
    }
  }
}

void cmd_simplex(Report& r, int n_max, int k, bool reduced, bool extended) {
  if (k < 1 || n_max < k + 1 || n_max > 20) {
    throw UsageError("need k >= 1 and k < n_max <= 20");
  }
  if ((reduced || extended) && k != 2) {
    throw UsageError("--reduced and --extended apply to k = 2");
  }
  if (reduced && extended) {
    throw UsageError("--reduced and --extended are exclusive");
  }
  r.params = {{"n_max", n_max}, {"k", k}, {"reduced", reduced}, {"extended", extended}};
  r.has_csv = true;
  if (reduced) {
    if (n_max < 3) {
      throw UsageError("the reduced simplex starts at n = 3");
    }
    r.csv << "layer,row,diagonal,value\n";
    for (int l = 1; l <= n_max - 2; ++l) {
      ReducedLayer layer = reduced_layer(l);
      json entries = json::array();
      for (const auto& [key, v] : layer) {
        entries.push_back(json{{"row", key.first}, {"diagonal", key.second}, {"value", str(v)}});
        r.csv << l << "," << key.first << "," << key.second << "," << str(v) << "\n";
      }
      r.results.push_back(json{{"layer", l}, {"n", l + 2}, {"entries", entries}});
      r.text << "l=" << l << "\n" << format_reduced_text(layer, l);
    }
    return;
  }
  if (k == 2) {
    r.csv << "n,i1,i2,value\n";
    for (int n = 2; n <= n_max; ++n) {
      SimplexLayer layer = extended ? build_extended_layer(n) : build_layer(n);
      json entries = json::array();
      for (const auto& [key, v] : layer.entries) {
        entries.push_back(json{{"i1", key.first}, {"i2", key.second}, {"value", str(v)}});
        r.csv << n << "," << key.first << "," << key.second << "," << str(v) << "\n";
      }
      r.results.push_back(json{{"n", n}, {"entries", entries}});
      r.text << "n=" << n << "\n" << format_layer_text(layer);
    }
    return;
  }
  r.csv << "n,point,value\n";
  for (int n = k + 1; n <= n_max; ++n) {
    json entries = json::array();
    r.text << "n=" << n << "\n";
    for (const auto& [p, v] : build_layer_k(n, k)) {
      json j = point_json(p);
      j["value"] = str(v);
      entries.push_back(j);
      r.csv << n << ",\"" << p.to_string() << "\"," << str(v) << "\n";
      r.text << p.label() << " " << str(v) << "\n";
    }
    r.results.push_back(json{{"n", n}, {"entries", entries}});
  }
}

void cmd_gf_coeff(Report& r, int n, int i1, int i2, std::optional<int> order) {
  int ord = order.value_or(3 * n + 1);
  r.params = {{"n", n}, {"i1", i1}, {"i2", i2}, {"order", ord}};
  Rational v = generating_function_coeff(n, i1, i2, ord);
  r.results.push_back(json{{"value", str(v)}});
  r.text << str(v) << "\n";
}

std::string path_text(const BoxPath& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.boxes.size(); ++i) {
    out += (i ? ", (" : "(") + std::to_string(p.boxes[i].first) + ", " + std::to_string(p.boxes[i].second) + ")";
  }
  return out + "]";
}

void cmd_paths(Report& r, int n, int k, const std::string& partition, bool list, bool sum, bool verify44,
               bool verify45) {
  check_nk(n, k);
  if (k * (n - k) > kPathBoxLimit) {
    throw CostLimitExceeded("path sums are limited to k(n-k) <= " + std::to_string(kPathBoxLimit));
  }
  BoxPartition lam = parse_partition(n, k, partition);
  FixedPoint p = omega(lam);
  r.params = {{"n", n}, {"k", k}, {"partition", lam.parts}, {"omega", p.indices}};
  if (list) {
    auto paths = enumerate_paths(lam);
    for (const auto& path : paths) {
      r.text << path_text(path) << "\n";
      json boxes = json::array();
      for (const auto& b : path.boxes) {
        boxes.push_back(json::array({b.first, b.second}));
      }
      r.results.push_back(json{{"path", boxes}});
    }
    r.text << paths.size() << " paths\n";
  }
  if (verify44 || verify45) {
    std::vector<std::string> failures44;
    std::vector<std::string> failures45;
    RationalFunction v = path_sum(lam);
    if (verify44) {
      RationalFunction loc = localization_sum(p, Chamber::identity(n)).value;
      if (!(v == loc)) {
        failures44.push_back("V" + lam.to_string() + " != localization sum of " + p.label());
      }
      r.add_outcome(make_outcome("path sum = localization sum " + lam.to_string(), true, failures44, 1), true);
    }
    if (verify45) {
      if (!(v == alpha(path_sum(lam.complement()), n))) {
        failures45.push_back("V" + lam.to_string() + " != alpha(V" + lam.complement().to_string() + ")");
      }
      r.add_outcome(make_outcome("path sum duality " + lam.to_string(), true, failures45, 1), true);
    }
  }
  if (sum || (!list && !verify44 && !verify45)) {
    RationalFunction v = path_sum(lam);
    Rational lim = path_sum_limit(lam).value;
    r.results.push_back(json{{"sum", v.to_string()}, {"limit", str(lim)}});
    r.text << "V" << lam.to_string() << " = " << v.to_string() << "\n";
    r.text << "limit " << str(lim) << "\n";
  }
}

void cmd_stab_matrix(Report& r, int n, int k, const std::string& chamber) {
  check_nk(n, k);
  Chamber c = chamber.empty() ? Chamber::identity(n) : parse_chamber(n, chamber);
  r.params = {{"n", n}, {"k", k}, {"chamber", c.to_string()}};
  auto points = enumerate_fixed_points(n, k);
  for (const auto& i : points) {
    StabClass s = stab_class(i, c);
    json row = json::array();
    for (const auto& j : points) {
      const MultiPoly& v = s.at(j);
      row.push_back(v.to_string());
      r.text << "stab" << i.label() << "|" << j.label() << " = " << v.to_string() << "\n";
    }
    r.results.push_back(json{{"label", i.label()}, {"restrictions", row}});
  }
}

void cmd_moment_graph(Report& r, int n, int k) {
  check_nk(n, k);
  r.params = {{"n", n}, {"k", k}};
  MomentGraph g = build_moment_graph(n, k);
  for (const auto& e : g.edges) {
    r.results.push_back(json{{"lower", e.lower.label()},
                             {"upper", e.upper.label()},
                             {"zero_section", e.zero_section.to_string()},
                             {"cotangent", e.cotangent.to_string()},
                             {"attracting", e.attracting}});
    r.text << e.lower.label() << " -- " << e.upper.label() << "  " << e.zero_section.to_string() << "  |  "
           << e.cotangent.to_string() << (e.attracting ? "  attracting" : "") << "\n";
  }
  r.text << g.vertices.size() << " vertices, " << g.edges.size() << " edges\n";
}

void verify_suite(Report& r, const std::string& suite, int n, int k, int n_max, unsigned seed) {
  auto need_nk = [&] {
    check_nk(n, k);
    r.params["n"] = n;
    r.params["k"] = k;
  };
  r.params["suite"] = suite;
  if (suite == "axioms" || suite == "gkm") {
    need_nk();
    Chamber id = Chamber::identity(n);
    MomentGraph g = build_moment_graph(n, k);
    for (const auto& p : enumerate_fixed_points(n, k)) {
      StabClass s = stab_class(p, id);
      r.add_outcome(suite == "axioms" ? axiom_check(s, id) : gkm_check(s, g), false);
    }
  } else if (suite == "chamber") {
    need_nk();
    std::mt19937_64 rng(seed);
    r.params["seed"] = seed;
    for (int t = 0; t < 10; ++t) {
      Chamber tau = Chamber::identity(n);
      std::shuffle(tau.perm.begin(), tau.perm.end(), rng);
      std::vector<std::string> failures;
      std::size_t cases = 0;
      for (const auto& p : enumerate_fixed_points(n, k)) {
        CheckOutcome o = chamber_covariance_check(p, tau);
        ++cases;
        failures.insert(failures.end(), o.failures.begin(), o.failures.end());
      }
      r.add_outcome(make_outcome("chamber covariance tau=" + tau.to_string(), false, failures, cases), false);
    }
  } else if (suite == "vandermonde" || suite == "appendix-a") {
    need_nk();
    for (const auto& p : enumerate_fixed_points(n, k)) {
      r.add_outcome(vandermonde_divisibility_check(p), false);
    }
  } else if (suite == "integrality") {
    need_nk();
    std::vector<std::string> failures;
    std::size_t cases = 0;
    for (const auto& p : enumerate_fixed_points(n, k)) {
      Rational z = integral_via_z_limit(p).value;
      Rational c = closed_form_integral(p).value;
      ++cases;
      if (z != c) {
        failures.push_back(p.label() + ": z-limit " + str(z) + " vs closed form " + str(c));
      }
    }
    r.add_outcome(make_outcome("integrality and closed form Gr(" + std::to_string(k) + "," + std::to_string(n) + ")",
                               false, failures, cases),
                  false);
  } else if (suite == "simplex") {
    r.params["n_max"] = n_max;
    r.add_outcome(four_neighbor_theorem_check(3, n_max), false);
    r.add_outcome(extended_recurrence_check(3, n_max), false);
    r.add_outcome(divisibility_check(n_max), true);
    r.add_outcome(reduced_recurrence_check(n_max), true);
  } else if (suite == "gf") {
    r.params["n_max"] = n_max;
    GeneratingFunctions gf = generating_functions(3 * n_max + 1);
    std::vector<std::string> failures;
    std::size_t cases = 0;
    for (int m = 2; m <= n_max; ++m) {
      for (const auto& [key, v] : build_layer(m).entries) {
        ++cases;
        Rational c = generating_function_coeff(gf, m, key.first, key.second);
        if (c != v) {
          failures.push_back("<" + std::to_string(key.first) + "," + std::to_string(key.second) + ">_" +
                             std::to_string(m) + ": F gives " + str(c) + ", simplex " + str(v));
        }
      }
    }
    r.add_outcome(make_outcome("F coefficients n<=" + std::to_string(n_max), true, failures, cases), true);
  } else if (suite == "paths") {
    need_nk();
    r.add_outcome(conjecture_44_check(n, k), true);
    r.add_outcome(conjecture_45_check(n, k), true);
  } else if (suite == "all") {
    need_nk();
    for (const char* s : {"axioms", "gkm", "chamber", "vandermonde", "integrality", "simplex", "gf"}) {
      verify_suite(r, s, n, k, n_max, seed);
    }
    if (k * (n - k) <= kPathBoxLimit) {
      verify_suite(r, "paths", n, k, n_max, seed);
    }
    r.params["suite"] = suite;
  } else {
    throw UsageError("unknown suite " + suite +
                     " (axioms, gkm, chamber, vandermonde, integrality, simplex, gf, paths, all)");
  }
}

// ---- output ----------------------------------------------------------------

void emit(const Report& r, Format format, double runtime_ms) {
  if (format == Format::json) {
    json out{{"schema", 1}, {"command", r.command}, {"params", r.params}, {"results", r.results}};
    if (!r.outcomes.empty()) {
      out["outcomes"] = r.outcomes;
    }
    out["exit_code"] = r.exit_code;
    out["runtime_ms"] = runtime_ms;
    std::cout << out.dump(2) << "\n";
  } else if (format == Format::csv && r.has_csv) {
    std::cout << r.csv.str();
  } else {
    std::cout << r.text.str();
  }
}

int error_exit(const std::string& kind, const std::string& what, int code) {
  std::cerr << "stabenv: " << kind << ": " << what << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integrals of stable envelopes on T*Gr(k,n)"};
  app.require_subcommand(1);
  app.fallthrough();
  Format format = Format::text;
  int jobs = 0;
  std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
  app.add_option("--format", format, "text, json or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--jobs", jobs, "worker threads (default: all cores)")->check(CLI::NonNegativeNumber);

  int n = 0;
  int k = 0;
  std::string point;
  std::string method = "z";
  std::string chamber;
  bool show_sum = false;
  auto* integral = app.add_subcommand("integral", "h^{k(n-k)} times the integral of stab(p_I)");
  integral->add_option("n", n)->required();
  integral->add_option("k", k)->required();
  integral->add_option("--point", point, "I, e.g. 2,3")->required();
  integral->add_option("--method", method, "z, full, closed, paths or all")
      ->check(CLI::IsMember({"z", "full", "closed", "paths", "all"}));
  integral->add_flag("--show-sum", show_sum, "also print the localization sum");
  integral->add_option("--chamber", chamber, "permutation for --sum, e.g. 4321");

  auto* table = app.add_subcommand("table", "integrals for every fixed point of T*Gr(k,n)");
  table->add_option("n", n)->required();
  table->add_option("k", k)->required();
  table->add_option("--method", method, "z, full, closed or paths")
      ->check(CLI::IsMember({"z", "full", "closed", "paths"}));

  int n_max = 0;
  int simplex_k = 2;
  bool reduced = false;
  bool extended = false;
  auto* simplex = app.add_subcommand("simplex", "layers of the Gr_k simplex up to n_max");
  simplex->add_option("n_max", n_max)->required();
  simplex->add_option("--k", simplex_k);
  simplex->add_flag("--reduced", reduced);
  simplex->add_flag("--extended", extended);
  auto* reduced_simplex = app.add_subcommand("reduced-simplex", "same as simplex --reduced");
  reduced_simplex->add_option("n_max", n_max)->required();

  int i1 = 0;
  int i2 = 0;
  std::optional<int> order;
  auto* gf = app.add_subcommand("gf-coeff", "coefficient of x^{n-1} y^{n-(i2-i1)} z^{i1} in F");
  gf->add_option("n", n)->required();
  gf->add_option("i1", i1)->required();
  gf->add_option("i2", i2)->required();
  gf->add_option("--order", order, "truncation order (default 3n+1)");

  std::string partition;
  bool list = false;
  bool sum = false;
  bool v44 = false;
  bool v45 = false;
  auto* paths = app.add_subcommand("paths", "paths to a partition and the sum V");
  paths->add_option("n", n)->required();
  paths->add_option("k", k)->required();
  paths->add_option("--partition", partition, "e.g. 2,1 (empty for the empty partition)")->required();
  paths->add_flag("--list", list);
  paths->add_flag("--sum", sum);
  paths->add_flag("--verify44", v44);
  paths->add_flag("--verify45", v45);

  auto* stab = app.add_subcommand("stab-matrix", "restrictions stab(p_I)|p_J");
  stab->add_option("n", n)->required();
  stab->add_option("k", k)->required();
  stab->add_option("--chamber", chamber);

  auto* graph = app.add_subcommand("moment-graph", "edges and weights of the moment graph");
  graph->add_option("n", n)->required();
  graph->add_option("k", k)->required();

  std::string suite;
  unsigned seed = 1;
  n_max = 0;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "axioms, gkm, chamber, vandermonde, integrality, simplex, gf, paths, all")
      ->required();
  verify->add_option("n", n);
  verify->add_option("k", k);
  verify->add_option("--n-max", n_max);
  verify->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }
  if (jobs > 0) {
    set_max_threads(jobs);
  }

  Report r;
  auto start = std::chrono::steady_clock::now();
  try {
    if (integral->parsed()) {
      r.command = "integral";
      cmd_integral(r, n, k, point, method, show_sum, chamber);
    } else if (table->parsed()) {
      r.command = "table";
      cmd_table(r, n, k, method);
    } else if (simplex->parsed()) {
      r.command = "simplex";
      cmd_simplex(r, n_max, simplex_k, reduced, extended);
    } else if (reduced_simplex->parsed()) {
      r.command = "reduced-simplex";
      cmd_simplex(r, n_max, 2, true, false);
    } else if (gf->parsed()) {
      r.command = "gf-coeff";
      cmd_gf_coeff(r, n, i1, i2, order);
    } else if (paths->parsed()) {
      r.command = "paths";
      cmd_paths(r, n, k, partition, list, sum, v44, v45);
    } else if (stab->parsed()) {
      r.command = "stab-matrix";
      cmd_stab_matrix(r, n, k, chamber);
    } else if (graph->parsed()) {
      r.command = "moment-graph";
      cmd_moment_graph(r, n, k);
    } else if (verify->parsed()) {
      r.command = "verify";
      verify_suite(r, suite, n, k, n_max > 0 ? n_max : 8, seed);
    }
  } catch (const UsageError& e) {
    return error_exit("usage", e.what(), kUsage);
  } catch (const ParseError& e) {
    return error_exit("usage", e.what(), kUsage);
  } catch (const std::invalid_argument& e) {
    return error_exit("usage", e.what(), kUsage);
  } catch (const CostLimitExceeded& e) {
    return error_exit("cost limit", e.what(), kUsage);
  } catch (const InsufficientOrder& e) {
    return error_exit("usage", e.what(), kUsage);
  } catch (const AlgebraError& e) {
    return error_exit("invariant violated", e.what(), kInternal);
  } catch (const std::exception& e) {
    return error_exit("internal error", e.what(), kInternal);
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  emit(r, format, ms);
  return r.exit_code;
}
