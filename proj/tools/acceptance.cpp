// Acceptance run: one PASS/FAIL line per criterion. A criterion passes when
// its exact check holds and it finishes inside its time budget. Exit status
// is 0 iff the failing set is exactly kKnownUnattainable.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include "CLI11.hpp"
#include "stabenv/closedform.hpp"
#include "stabenv/errors.hpp"
#include "stabenv/parse.hpp"
#include "stabenv/paths.hpp"
#include "stabenv/simplex.hpp"

using namespace stabenv;
using Clock = std::chrono::steady_clock;

namespace {

// Criteria expected to fail; see the README for the analysis.
const std::set<int> kKnownUnattainable{1, 12};

struct Result {
  bool ok = true;
  std::vector<std::string> notes;

  void fail(std::string why) {
    ok = false;
    notes.push_back(std::move(why));
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) {
      fail(why);
    }
  }
  void require(const CheckOutcome& o) {
    if (!o.ok()) {
      std::string why = o.name + ": " + to_string(o.status);
      if (!o.failures.empty()) {
        why += " (" + o.failures.front() + (o.failures.size() > 1 ? ", ..." : "") + ")";
      }
      fail(why);
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_s;
  std::function<void(Result&, Clock::time_point deadline)> run;
};

std::string qstr(const Rational& q) { return to_string(q); }

// Rows of a k = 2 layer from the top, left to right.
std::vector<std::vector<Rational>> layer_rows(const SimplexLayer& layer) {
  std::vector<std::vector<Rational>> out;
  for (int r = layer.n - 1; r >= 1; --r) {
    std::vector<Rational> row;
    for (int i1 = layer.n - r; i1 >= 1; --i1) {
      row.push_back(layer.at(i1, i1 + r));
    }
    out.push_back(row);
  }
  return out;
}

std::vector<std::vector<Rational>> rows_of(std::initializer_list<std::initializer_list<int>> init) {
  std::vector<std::vector<Rational>> out;
  for (const auto& row : init) {
    out.emplace_back(row.begin(), row.end());
  }
  return out;
}

MultiPoly random_poly(std::mt19937_64& rng, const VarSetPtr& vars, int max_terms, int max_degree) {
  std::uniform_int_distribution<int> count(0, max_terms);
  std::uniform_int_distribution<int> exp(0, max_degree);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  std::vector<Term> terms;
  int n = count(rng);
  for (int i = 0; i < n; ++i) {
    Monomial m;
    for (std::size_t v = 0; v < vars->size(); ++v) {
      m.set(v, static_cast<unsigned>(exp(rng)));
    }
    Rational c(num(rng), den(rng));
    c.canonicalize();
    terms.push_back({m, c});
  }
  return MultiPoly::from_terms(vars, std::move(terms));
}

// Integrals from criterion 4, reused by criterion 5.
std::map<std::pair<FixedPoint, std::string>, Rational> g_values;
std::vector<std::string> g_value_errors;

void c1(Result& r, Clock::time_point) {
  const char* const printed[4] = {
      "-1/((-h+a1-a2)*(-h+a1-a3)*(-h+a1-a4))",
      "(3*h^2-3*h*a1-a1^2-h*a2+2*h*a3-a1*a3+2*h*a4-a1*a4+a3*a4)/"
      "((h+a2-a1)*(h+a3-a1)*(h+a3-a2)*(h+a4-a3)*(h+a4-a2))",
      "(3*h^2-2*h*a1-2*h*a2+a1*a2+h*a3+3*h*a4-a1*a4-a2*a4+a4^2)/"
      "((h+a3-a1)*(h+a3-a2)*(h+a4-a1)*(h+a4-a2)*(h+a4-a3))",
      "1/((h-a1+a4)*(h+a4-a2)*(h+a4-a3))",
  };
  const int limits[4] = {1, 3, 3, 1};
  for (int i = 1; i <= 4; ++i) {
    LocalizationSum s = localization_sum(make_fixed_point(4, 1, {i}), Chamber::identity(4));
    RationalFunction display = parse_rational_function(printed[i - 1], equivariant_vars(4));
    r.expect(s.value.to_string() == display.to_string(),
             "p" + std::to_string(i) + ": canonical forms differ; numerators " + s.value.num().to_string() +
                 " (computed) and " + display.num().to_string() + " (display)");
    Rational lim = integral_from_sum(s).value;
    r.expect(lim == limits[i - 1], "p" + std::to_string(i) + " limit " + qstr(lim));
  }
}

void c2(Result& r, Clock::time_point) {
  for (int n = 2; n <= 8; ++n) {
    for (int i = 1; i <= n; ++i) {
      FixedPoint p = make_fixed_point(n, 1, {i});
      Rational want(binomial(n - 1, i - 1));
      Rational z = integral_via_z_limit(p).value;
      Rational c = closed_form_integral(p).value;
      r.expect(z == want && c == want, "Gr(1," + std::to_string(n) + ") " + p.label() + ": z " + qstr(z) +
                                           ", closed " + qstr(c) + ", want " + qstr(want));
    }
  }
}

void c3(Result& r, Clock::time_point) {
  const std::map<int, std::vector<std::vector<Rational>>> expected{
      {4, rows_of({{2}, {3, 3}, {1, 2, 1}})},
      {5, rows_of({{2}, {5, 5}, {4, 10, 4}, {1, 4, 4, 1}})},
  };
  for (const auto& [n, rows] : expected) {
    SimplexLayer layer;
    layer.n = n;
    for (const auto& p : enumerate_fixed_points(n, 2)) {
      layer.entries[{p.indices[0], p.indices[1]}] = integral_via_z_limit(p).value;
    }
    r.expect(layer_rows(layer) == rows, "Gr(2," + std::to_string(n) + ") triangle:\n" + format_layer_text(layer));
  }
}

void c4(Result& r, Clock::time_point) {
  auto record = [&](const FixedPoint& p, const std::string& method, const std::function<Rational()>& f) {
    try {
      g_values[{p, method}] = f();
    } catch (const AlgebraError& e) {
      g_value_errors.push_back(p.label() + " by " + method + ": " + e.what());
      r.fail(g_value_errors.back());
    }
  };
  for (int k = 1; k <= 3; ++k) {
    for (int n = k + 1; n <= 6; ++n) {
      for (const auto& p : enumerate_fixed_points(n, k)) {
        record(p, "z", [&] { return integral_via_z_limit(p).value; });
        record(p, "closed", [&] { return closed_form_integral(p).value; });
        if (k <= 2) {
          record(p, "paths", [&] { return path_sum_limit(omega_inverse(p)).value; });
        }
        auto z = g_values.find({p, "z"});
        for (const char* m : {"closed", "paths"}) {
          auto other = g_values.find({p, m});
          if (z != g_values.end() && other != g_values.end() && z->second != other->second) {
            r.fail("Gr(" + std::to_string(k) + "," + std::to_string(n) + ") " + p.label() + ": z " +
                   qstr(z->second) + " vs " + m + " " + qstr(other->second));
          }
        }
      }
    }
  }
}

void c5(Result& r, Clock::time_point) {
  r.expect(!g_values.empty(), "no integrals recorded by criterion 4");
  for (const auto& e : g_value_errors) {
    r.fail(e);
  }
  for (const auto& [key, v] : g_values) {
    r.expect(is_integer(v), key.first.label() + " by " + key.second + " is " + qstr(v));
  }
}

void c6(Result& r, Clock::time_point) {
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k <= std::min(2, n - 1); ++k) {
      Chamber id = Chamber::identity(n);
      MomentGraph g = build_moment_graph(n, k);
      for (const auto& p : enumerate_fixed_points(n, k)) {
        StabClass s = stab_class(p, id);
        r.require(axiom_check(s, id));
        r.require(gkm_check(s, g));
      }
    }
  }
  const char* const matrix[4][4] = {
      {"(a1-a2+h)*(a1-a3+h)*(a1-a4+h)", "h*(a2-a3+h)*(a2-a4+h)", "h*(a3-a2+h)*(a3-a4+h)",
       "h*(a4-a2+h)*(a4-a3+h)"},
      {"0", "(a1-a2)*(a2-a3+h)*(a2-a4+h)", "h*(a1-a3)*(a3-a4+h)", "h*(a1-a4)*(a4-a3+h)"},
      {"0", "0", "(a1-a3)*(a2-a3)*(a3-a4+h)", "h*(a1-a4)*(a2-a4)"},
      {"0", "0", "0", "(a1-a4)*(a2-a4)*(a3-a4)"},
  };
  Chamber id = Chamber::identity(4);
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      MultiPoly got = restriction(make_fixed_point(4, 1, {i}), make_fixed_point(4, 1, {j}), id);
      MultiPoly want = parse_poly(matrix[i - 1][j - 1], equivariant_vars(4));
      r.expect(got == want, "T*P3 entry (" + std::to_string(i) + "," + std::to_string(j) + ") is " + got.to_string());
    }
  }
}

void c7(Result& r, Clock::time_point) {
  std::mt19937_64 rng(20240601);
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k <= std::min(2, n - 1); ++k) {
      for (int t = 0; t < 10; ++t) {
        Chamber tau = Chamber::identity(n);
        std::shuffle(tau.perm.begin(), tau.perm.end(), rng);
        for (const auto& p : enumerate_fixed_points(n, k)) {
          r.require(chamber_covariance_check(p, tau));
        }
      }
    }
  }
}

void c8(Result& r, Clock::time_point) {
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k <= std::min(2, n - 1); ++k) {
      for (const auto& p : enumerate_fixed_points(n, k)) {
        r.require(vandermonde_divisibility_check(p));
      }
    }
  }
}

void c9(Result& r, Clock::time_point) {
  r.require(four_neighbor_theorem_check(3, 10));
  r.require(extended_recurrence_check(3, 10));
  SimplexLayer ext = build_extended_layer(4);
  std::vector<Rational> bottom;
  for (int i = 4; i >= 1; --i) {
    bottom.push_back(ext.at(i, i));
  }
  std::vector<Rational> want{0, -2, -2, 0};
  r.expect(bottom == want, "extended row of layer 4 differs");
}

void c10(Result& r, Clock::time_point) {
  CheckOutcome div = divisibility_check(12);
  CheckOutcome rec = reduced_recurrence_check(12);
  r.require(div);
  r.require(rec);
  r.expect(div.status == Status::conjecture_supported && rec.status == Status::conjecture_supported,
           "outcomes not labeled conjecture-supported");
  const std::map<int, const char*> printed{
      {3, "1"},
      {4, "a+b+c"},
      {5, "a^2+2*a*b+3*a*c+b^2+2*b*c+c^2"},
      {6, "a^3+3*a^2*b+3*a*b^2+b^3+6*a^2*c+8*a*b*c+3*b^2*c+6*a*c^2+3*b*c^2+c^3"},
  };
  for (const auto& [n, text] : printed) {
    MultiPoly got = reduce_layer(layer_to_polynomial(build_layer(n)));
    r.expect(got == parse_poly(text, abc_vars()), "reduced layer " + std::to_string(n) + " is " + got.to_string());
  }
}

void c11(Result& r, Clock::time_point) {
  GeneratingFunctions gf = generating_functions(30);
  for (int n = 2; n <= 8; ++n) {
    for (const auto& [key, v] : build_layer(n).entries) {
      Rational c = generating_function_coeff(gf, n, key.first, key.second);
      r.expect(c == v, "F coefficient for <" + std::to_string(key.first) + "," + std::to_string(key.second) + ">_" +
                           std::to_string(n) + " is " + qstr(c) + ", simplex has " + qstr(v));
    }
  }
  for (int l = 1; l <= 8; ++l) {
    for (int c = 1; c <= l; ++c) {
      Monomial m;
      m.set(0, static_cast<unsigned>(l));
      m.set(1, static_cast<unsigned>(l));
      m.set(2, static_cast<unsigned>(c));
      r.expect(gf.b.coefficient(m) == Rational(narayana(l, c)),
               "B coefficient x^" + std::to_string(l) + " y^" + std::to_string(l) + " z^" + std::to_string(c));
    }
  }
}

// Both path checks for one Gr(k, n); failure notes go to stdout.
int paths_case(int n, int k) {
  bool ok = true;
  for (const CheckOutcome& o : {conjecture_44_check(n, k, 8), conjecture_45_check(n, k, 8)}) {
    if (!o.ok()) {
      ok = false;
      std::cout << o.name << ": " << to_string(o.status) << "\n";
      for (const auto& f : o.failures) {
        std::cout << "  " << f << "\n";
      }
    }
  }
  return ok ? 0 : 1;
}

std::string g_self;

// Runs paths_case in a fresh process so that it can be stopped at the
// deadline. Returns false with a note on failure or timeout.
bool run_paths_case(int n, int k, Clock::time_point deadline, std::string& note) {
  int fds[2];
  if (pipe(fds) != 0) {
    note = "pipe failed";
    return false;
  }
  pid_t pid = fork();
  if (pid == 0) {
    dup2(fds[1], STDOUT_FILENO);
    close(fds[0]);
    close(fds[1]);
    std::string ns = std::to_string(n);
    std::string ks = std::to_string(k);
    execl(g_self.c_str(), g_self.c_str(), "--paths-case", ns.c_str(), ks.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(fds[1]);
  std::string out;
  char buf[4096];
  bool timed_out = false;
  while (true) {
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now()).count();
    if (left <= 0) {
      timed_out = true;
      break;
    }
    pollfd pfd{fds[0], POLLIN, 0};
    int ready = poll(&pfd, 1, static_cast<int>(std::min<long long>(left, 1000)));
    if (ready > 0) {
      ssize_t got = read(fds[0], buf, sizeof buf);
      if (got <= 0) {
        break;
      }
      out.append(buf, static_cast<std::size_t>(got));
    }
  }
  close(fds[0]);
  if (timed_out) {
    kill(pid, SIGKILL);
  }
  int status = 0;
  waitpid(pid, &status, 0);
  std::string name = "Gr(" + std::to_string(k) + "," + std::to_string(n) + ")";
  if (timed_out) {
    note = name + " not finished within the budget";
    return false;
  }
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
    note = name + ": " + (out.empty() ? "check process failed" : out);
    return false;
  }
  return true;
}

void c12(Result& r, Clock::time_point deadline) {
  const VarSetPtr& v4 = equivariant_vars(4);
  BoxPartition one = make_partition(4, 2, {1});
  RationalFunction printed = parse_rational_function(
      "(3*h^2-2*h*a1-h*a2+a1*a2+h*a3-a2*a3+2*h*a4-a1*a4+a3*a4)/"
      "((h+a2-a1)*(h+a3-a1)*(h+a4-a1)*(h+a3-a2)*(h+a4-a2)*(h+a4-a3))",
      v4);
  r.expect(path_sum(one) == printed, "V((1)) on Gr(2,4) differs from the display");
  std::vector<MultiPoly> factors = path_weights(BoxPath{{{1, 1}, {2, 1}, {1, 2}, {2, 2}}}, 4, 2);
  std::vector<MultiPoly> want;
  for (const char* f : {"h+a3-a2", "h-a2+a4", "h-a1+a4", "2*h-a2-a1+a3+a4"}) {
    want.push_back(parse_poly(f, v4));
  }
  r.expect(factors == want, "single-path factor list differs");

  // Cheapest first, so a budget overrun leaves only the largest unchecked.
  std::vector<std::pair<int, int>> cases;
  for (int n = 2; n <= 9; ++n) {
    for (int k = 1; k < n; ++k) {
      if (k * (n - k) <= 8) {
        cases.emplace_back(n, k);
      }
    }
  }
  std::stable_sort(cases.begin(), cases.end(), [](auto a, auto b) {
    return std::pair(a.first, std::max(a.second, a.first - a.second)) <
           std::pair(b.first, std::max(b.second, b.first - b.second));
  });
  std::vector<std::string> skipped;
  for (const auto& [n, k] : cases) {
    std::string name = "Gr(" + std::to_string(k) + "," + std::to_string(n) + ")";
    if (Clock::now() >= deadline) {
      skipped.push_back(name);
      continue;
    }
    std::string note;
    if (!run_paths_case(n, k, deadline, note)) {
      r.fail(note);
    }
  }
  if (!skipped.empty()) {
    std::string list;
    for (const auto& s : skipped) {
      list += (list.empty() ? "" : " ") + s;
    }
    r.fail("not started within the budget: " + list);
  }
}

void c13(Result& r, Clock::time_point) {
  std::mt19937_64 rng(7);
  VarSetPtr vars = make_varset({"a1", "a2", "h"});
  for (int trial = 0; trial < 200; ++trial) {
    MultiPoly p = random_poly(rng, vars, 5, 2);
    MultiPoly q = random_poly(rng, vars, 4, 2);
    if (q.is_zero()) {
      continue;
    }
    r.expect(exact_divide(p * q, q) == p, "exact_divide round trip failed");
    if (trial < 50) {
      MultiPoly den = q * (random_poly(rng, vars, 3, 1) + MultiPoly::constant(vars, Rational(1)));
      if (!den.is_zero()) {
        RationalFunction f(p * q, den);
        r.expect(canonicalize(f) == f && canonicalize(canonicalize(f)).to_string() == f.to_string(),
                 "canonical form not idempotent");
      }
    }
  }
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k < n; ++k) {
      std::set<FixedPoint> image;
      auto parts = enumerate_partitions(n, k);
      for (const auto& lam : parts) {
        FixedPoint p = omega(lam);
        image.insert(p);
        r.expect(omega_inverse(p) == lam, "Omega inverse fails at " + lam.to_string());
      }
      r.expect(image.size() == enumerate_fixed_points(n, k).size() && image.size() == parts.size(),
               "Omega is not onto for Gr(" + std::to_string(k) + "," + std::to_string(n) + ")");
    }
  }
  for (int n = 2; n <= 10; ++n) {
    for (int k = 1; k < n; ++k) {
      if (k * (n - k) > 9) {
        continue;
      }
      for (const auto& lam : enumerate_partitions(n, k)) {
        auto paths = enumerate_paths(lam);
        std::set<BoxPath> distinct(paths.begin(), paths.end());
        r.expect(Integer(static_cast<long>(paths.size())) == path_count(lam) && distinct.size() == paths.size(),
                 "path count identity fails at " + lam.to_string());
      }
    }
  }
  r.expect(alpha_termwise_failures(make_partition(4, 2, {1})) > 0, "alpha holds term by term for Gr(2,4), (1)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> only;
  bool no_budget = false;
  int jobs = 0;
  std::vector<int> paths_args;
  app.add_option("--only", only, "run these criteria only");
  app.add_flag("--no-budget", no_budget, "run every case to completion regardless of time budgets");
  app.add_option("--jobs", jobs, "worker threads");
  app.add_option("--paths-case", paths_args, "internal: path checks for n k")->expected(2)->group("");
  CLI11_PARSE(app, argc, argv);
  if (jobs > 0) {
    set_max_threads(jobs);
  }
  if (!paths_args.empty()) {
    return paths_case(paths_args[0], paths_args[1]);
  }
  g_self = std::filesystem::read_symlink("/proc/self/exe").string();

  const std::vector<Criterion> criteria{
      {1, "T*P3 localization sums and limits (1,3,3,1)", 1, c1},
      {2, "k=1 integrals are C(n-1,i-1), n<=8, z-limit and closed form", 5, c2},
      {3, "Gr(2,4) and Gr(2,5) triangles", 10, c3},
      {4, "z-limit = closed form = path limit (k<=2), z = closed (k=3), n<=6", 180, c4},
      {5, "integrality of every integral in criterion 4", 1, c5},
      {6, "axioms and GKM, n<=5, k<=2; T*P3 restriction matrix", 30, c6},
      {7, "chamber covariance, 10 random chambers per Gr(k,n), n<=5, k<=2", 60, c7},
      {8, "Vandermonde divisibility, n<=5, k<=2", 120, c8},
      {9, "four-neighbor recurrence with exception and extended, 3<=n<=10", 30, c9},
      {10, "a+2b+c divisibility and reduced recurrence, n<=12; reduced layers 3..6", 30, c10},
      {11, "F coefficients at order 30, n<=8; Narayana entries of B", 60, c11},
      {12, "path sum = localization and duality, k(n-k)<=8; V((1)) on Gr(2,4)", 120, c12},
      {13, "property suites", 120, c13},
  };

  std::set<int> failed;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) {
      continue;
    }
    Result r;
    auto start = Clock::now();
    auto deadline = no_budget ? Clock::time_point::max()
                              : start + std::chrono::duration_cast<Clock::duration>(
                                            std::chrono::duration<double>(c.budget_s));
    try {
      c.run(r, deadline);
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs > c.budget_s) {
      std::ostringstream why;
      why << "took " << secs << " s, budget " << c.budget_s << " s";
      r.fail(why.str());
    }
    if (!r.ok) {
      failed.insert(c.id);
    }
    bool known = kKnownUnattainable.count(c.id) > 0;
    std::cout << (r.ok ? "PASS" : "FAIL") << " " << c.id << ": " << c.title << " ("
              << static_cast<long>(secs * 1000) << " ms)" << (!r.ok && known ? " [known]" : "") << "\n";
    for (const auto& note : r.notes) {
      std::cout << "    " << note << "\n";
    }
    std::cout.flush();
  }
  std::set<int> expected;
  for (int id : kKnownUnattainable) {
    if (only.empty() || std::find(only.begin(), only.end(), id) != only.end()) {
      expected.insert(id);
    }
  }
  bool as_expected = failed == expected;
  std::cout << (as_expected ? "acceptance: failures match the known-unattainable set"
                            : "acceptance: UNEXPECTED result")
            << "\n";
  return as_expected ? 0 : 1;
}
