// Acceptance criteria AC1-AC8. One line per criterion; exit 1 if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "hyperorder/closedform.hpp"
#include "hyperorder/families.hpp"
#include "hyperorder/gosper.hpp"
#include "hyperorder/graphs.hpp"
#include "hyperorder/hypergeom.hpp"
#include "process.hpp"
#include "support.hpp"

using namespace hyperorder;
using testsupport::q;

namespace {

// All comparisons are exact equality of rationals; there is no numeric tolerance.
constexpr double kTheorem1BudgetSeconds = 30.0;
constexpr double kTheorem2BudgetSeconds = 30.0;
constexpr double kDpBudgetSeconds = 10.0;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << " s";
  return os.str();
}

Outcome ac1() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (std::int64_t n = 3; n <= 300 && o.ok; ++n) {
    if (lhs_theorem1(n) != rhs_theorem1(n)) o.fail("n=" + std::to_string(n));
  }
  const double t = seconds_since(start);
  if (o.ok && t > kTheorem1BudgetSeconds) o.fail("took " + fmt_seconds(t));
  if (o.ok) o.detail = "3<=n<=300 exact, " + fmt_seconds(t);
  return o;
}

Outcome ac2() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (std::int64_t m = 1; m <= 40; ++m) {
    for (std::int64_t n = 2; n <= 40; ++n) {
      if (lhs_theorem2(m, n) != rhs_theorem2(m, n)) o.fail("m=" + std::to_string(m) + ",n=" + std::to_string(n));
    }
  }
  if (rhs_theorem2(3, 2) != q(1)) o.fail("(3,2) is not 1");
  const double t = seconds_since(start);
  if (o.ok && t > kTheorem2BudgetSeconds) o.fail("took " + fmt_seconds(t));
  if (o.ok) o.detail = "1<=m<=40, 2<=n<=40 exact incl. (3,2) -> 1, " + fmt_seconds(t);
  return o;
}

Outcome ac3() {
  Outcome o;
  for (std::int64_t n = 3; n <= 6; ++n) {
    const auto start = std::chrono::steady_clock::now();
    const Graph g = line_graph(complete_3uniform(n));
    const BigInt count = count_successive_orderings(g);
    const double t = seconds_since(start);
    const Rational p(count, factorial(static_cast<unsigned>(g.vertex_count)));
    if (p != rhs_theorem1(n)) o.fail("K_" + std::to_string(n) + "^(3)");
    if (n == 6) {
      if (p != q(18, 19) || count != BigInt("2304854534062080000")) o.fail("n=6 value");
      if (t > kDpBudgetSeconds) o.fail("n=6 DP took " + fmt_seconds(t));
    }
  }
  int instances = 0;
  for (std::int64_t m = 1; m <= 20; ++m) {
    for (std::int64_t n = 2; m * n * (n - 1) / 2 <= 20; ++n) {
      ++instances;
      if (successive_probability(line_graph(complete_bipartite_12(m, n))) != rhs_theorem2(m, n)) {
        o.fail("K_{" + std::to_string(m) + "," + std::to_string(n) + "}");
      }
    }
  }
  if (successive_probability(line_graph(complete_bipartite_12(3, 4))) != q(7, 8)) o.fail("(3,4) != 7/8");
  if (successive_probability(line_graph(complete_bipartite_12(2, 5))) != q(14, 17)) o.fail("(2,5) != 14/17");
  if (o.ok) o.detail = "K_n^(3) n=3..6 and " + std::to_string(instances) + " K_{m,n}^(1,2) instances";
  return o;
}

void check_family(Outcome& o, const FamilyInstance& inst, const std::string& label) {
  const HTerm term = family_term(inst);
  const auto found = gosper_find(term_ratio(term));
  if (!found) return o.fail(label + ": gosper_find failed");
  const Certificate cert = family_certificate(inst, *found);
  const Certificate printed = family_certificate(inst, printed_certificate(inst));
  if (!verify_certificate(cert).ok) return o.fail(label + ": found R rejected");
  if (!verify_certificate(printed).ok) return o.fail(label + ": printed R rejected");
  const auto last = static_cast<std::int64_t>(cert.last);
  const QuadExt tele = telescoped_sum(cert, 0, last);
  const QuadExt expected(family_closed_form(inst));
  if (tele != expected) return o.fail(label + ": telescoped sum " + tele.to_string());
  if (telescoped_sum(printed, 0, last) != expected) return o.fail(label + ": printed telescoped sum");
  if (eval_3f2(term) != expected) return o.fail(label + ": direct sum");
}

Outcome ac4() {
  Outcome o;
  int count = 0;
  for (std::int64_t n = 3; n <= 60; ++n, ++count) check_family(o, theorem1_family(n), "n=" + std::to_string(n));
  for (std::int64_t m = 1; m <= 20; ++m) {
    for (std::int64_t n = 2; n <= 20; ++n, ++count) {
      check_family(o, {Family::t2, m, n}, "m=" + std::to_string(m) + ",n=" + std::to_string(n));
    }
  }
  if (o.ok) o.detail = std::to_string(count) + " instances, found and printed certificates verified";
  return o;
}

Outcome ac5() {
  Outcome o;
  auto gen = testsupport::rng(500);
  std::uniform_int_distribution<std::size_t> order(0, 8);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = order(gen);
    QuadExt d(testsupport::random_rational(gen));
    QuadExt e(testsupport::random_rational(gen));
    if (i % 2) {
      d = QuadExt(testsupport::random_rational(gen), testsupport::random_fraction(gen, 3, 10),
                  testsupport::random_disc(gen));
      e = d.conj();
    }
    const auto pp = phi_psi(n, QuadExt(testsupport::random_rational(gen)),
                            QuadExt(testsupport::random_rational(gen)), d, e);
    if (pp.phi != pp.psi) o.fail("Phi != Psi at sample " + std::to_string(i));
  }
  std::uniform_int_distribution<long> positive(1, 8);
  for (int i = 0; i < 200; ++i) {
    const long n = positive(gen);
    const QuadExt a(testsupport::random_fraction(gen, 7));
    QuadExt d(testsupport::random_fraction(gen, 11));
    QuadExt e(testsupport::random_fraction(gen, 13));
    if (i % 2) {
      d = QuadExt(testsupport::random_fraction(gen, 11), testsupport::random_fraction(gen, 3, 10),
                  testsupport::random_disc(gen));
      e = d.conj();
    }
    const QuadExt big_n(n);
    const QuadExt c = -a + big_n + d + e - QuadExt(1);
    const QuadExt lhs = eval_3f2(HTerm({QuadExt(-n), a, c}, {d, e}));
    const QuadExt step = (-a + big_n + d - QuadExt(1)) * (-a + big_n + e - QuadExt(1)) / (d * e) *
                         eval_3f2(HTerm({QuadExt(1 - n), a + QuadExt(1), c}, {d + QuadExt(1), e + QuadExt(1)}));
    const auto un = static_cast<std::size_t>(n);
    const QuadExt hill = rising_factorial(d - a, un) * rising_factorial(e - a, un) /
                         (rising_factorial(d, un) * rising_factorial(e, un));
    if (lhs != step) o.fail("one-step identity at sample " + std::to_string(i));
    if (lhs != hill) o.fail("closed-form identity at sample " + std::to_string(i));
  }
  auto check_report = [&](const VerifyReport& r) {
    if (!r.passed()) o.fail(r.instance() + " stage " + r.first_failure()->name + ": " + r.first_failure()->detail);
  };
  for (std::int64_t n = 3; n <= 60; ++n) check_report(pipeline_theorem1(n));
  for (std::int64_t m = 1; m <= 20; ++m)
    for (std::int64_t n = 2; n <= 20; ++n) check_report(pipeline_theorem2(m, n));
  if (o.ok) o.detail = "500 Phi/Psi, 200 one-step + closed-form sets, pipelines n<=60 and m,n<=20";
  return o;
}

Outcome ac6() {
  Outcome o;
  for (std::int64_t m = 1; m <= 50; ++m)
    for (std::int64_t n = 2; n <= 50; ++n)
      if (!lemma_checks(m, n)) o.fail("m=" + std::to_string(m) + ",n=" + std::to_string(n));
  if (o.ok) o.detail = "1<=m<=50, 2<=n<=50";
  return o;
}

Outcome ac7() {
  Outcome o;
  std::size_t checks = 0;
  auto absorb = [&](const std::vector<IdentityCheck>& list, const std::string& where) {
    for (const auto& c : list) {
      ++checks;
      if (!c.ok) o.fail(where + " " + c.name + " " + c.detail);
    }
  };
  for (std::int64_t n = 3; n <= 300; ++n) {
    absorb(theorem1_coefficient_checks(n), "n=" + std::to_string(n));
    absorb(theorem1_product_checks(n), "n=" + std::to_string(n));
  }
  for (std::int64_t m = 1; m <= 40; ++m)
    for (std::int64_t n = 2; n <= 40; n += 2)
      absorb(theorem2_identity_checks(m, n), "m=" + std::to_string(m) + ",n=" + std::to_string(n));
  if (o.ok) o.detail = std::to_string(checks) + " identity checks over n<=300 and m<=40, even n<=40";
  return o;
}

Outcome ac8() {
  Outcome o;
  struct Case {
    std::string args;
    int exit_code;
    std::vector<std::string> needles;
  };
  const std::vector<Case> cases = {
      {"verify --theorem 1 --n 3..300", 0, {"PASS n=3 ", "PASS n=300 "}},
      {"verify --theorem 2 --m 1..40 --n 2..40", 0, {"PASS m=1,n=2 ", "PASS m=40,n=40 "}},
      {"verify --theorem 1 --n 2..2", 2, {}},
      {"count --family k3 --n 6 --method both", 0, {"18/19", "2304854534062080000", "\nmatch\n"}},
      {"count --family k12 --m 3 --n 4 --method both", 0, {"7/8", "\nmatch\n"}},
      {"count --family k3 --n 7 --method brute", 2, {"capacity error", "35 vertices"}},
      {"gosper --family t1 --n 6", 0, {"R(k) = -(3*k^2 - k + 6)/(4*(k + 1))", "closed form = 3/2"}},
      {"gosper --ratio \"1\"", 0, {"R(k) = k\n"}},
      {"gosper --ratio \"k/(k+1)\"", 0, {"not summable\n"}},
  };
  for (const auto& c : cases) {
    const auto first = testsupport::run_cli(c.args);
    const auto second = testsupport::run_cli(c.args);
    if (first.exit_code != c.exit_code) o.fail("'" + c.args + "' exited " + std::to_string(first.exit_code));
    if (first.out != second.out || first.exit_code != second.exit_code) o.fail("'" + c.args + "' not byte-stable");
    for (const auto& needle : c.needles) {
      if (first.out.find(needle) == std::string::npos) o.fail("'" + c.args + "' lacks '" + needle + "'");
    }
    if (c.args.rfind("verify --theorem 1 --n 3..300", 0) == 0) {
      std::size_t lines = 0;
      for (std::size_t pos = 0; (pos = first.out.find("PASS ", pos)) != std::string::npos; ++pos) ++lines;
      if (lines != 298) o.fail("expected 298 pass lines, got " + std::to_string(lines));
    }
  }
  // The printed t1 certificate at n = 6, in the unreduced form.
  if (RatFunc::parse("-(9k^2-3k+18)/(12(k+1))") != printed_certificate({Family::t1, 0, 6})) {
    o.fail("t1 n=6 certificate differs from -(9k^2-3k+18)/(12(k+1))");
  }
  if (o.ok) o.detail = std::to_string(cases.size()) + " invocations, exit codes and output stable over two runs";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 theorem 1 equality", ac1},       {"AC2 theorem 2 equality", ac2},
      {"AC3 combinatorial oracle", ac3},     {"AC4 gosper closed forms", ac4},
      {"AC5 sheppard suite", ac5},           {"AC6 lemma checks", ac6},
      {"AC7 identity microsuite", ac7},      {"AC8 cli contract", ac8},
  };
  bool all = true;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all = all && o.ok;
    std::cout << (o.ok ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
