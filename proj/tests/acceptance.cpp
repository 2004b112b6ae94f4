// Acceptance gate: every release-blocking property on one line each, with
// wall-clock limits where the property includes one.  Exits nonzero if any
// line fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "alterna/alpha.hpp"
#include "alterna/verify.hpp"

using namespace alterna;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void line(int idx, const std::string& what, bool ok, double secs,
          double limit) {
  bool pass = ok && (limit <= 0 || secs < limit);
  if (!pass) ++failures;
  if (limit > 0)
    std::printf("%s  criterion %d: %s (%.2fs, limit %.0fs)\n",
                pass ? "PASS" : "FAIL", idx, what.c_str(), secs, limit);
  else
    std::printf("%s  criterion %d: %s (%.2fs)\n", pass ? "PASS" : "FAIL", idx,
                what.c_str(), secs);
}

bool guarded(const std::function<bool()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    std::printf("  exception: %s\n", e.what());
    return false;
  }
}

bool checks_pass(const SuiteReport& rep, const std::string& must_contain,
                 bool invert = false) {
  for (const auto& c : rep.checks) {
    bool hit = c.name.find(must_contain) != std::string::npos;
    if (invert ? !hit : hit)
      if (!c.pass) return false;
  }
  return true;
}

LaurentPoly b0(int e = 1) { return LaurentPoly::var("b0", e); }
LaurentPoly b1(int e = 1) { return LaurentPoly::var("b1", e); }

bool printed_tables_match() {
  std::map<int, std::map<int, LaurentPoly>> expect;
  expect[2] = {{2, LaurentPoly(1)}};
  expect[3] = {{3, LaurentPoly(1)}, {1, b0(2)}};
  expect[4] = {{4, LaurentPoly(1)}, {2, LaurentPoly(2) * b0() * b1()}};
  expect[5] = {{5, LaurentPoly(1)},
               {3, LaurentPoly(3) * b0(2)},
               {1, b0(4) + b0(2)}};
  expect[6] = {{6, LaurentPoly(1)},
               {4, LaurentPoly(4) * b0() * b1()},
               {2, LaurentPoly(3) * b0(2) * b1(2) + b0(2) + b1(2)}};

  // The computed vectors carry explicit zeros at the parity-vanishing k.
  for (auto& [m, table] : expect)
    for (int k = 1; k <= m; ++k) table[k];

  for (const auto& [m, table] : expect)
    if (a_vector(m, m % 2 == 1).a != table) return false;

  // The one-parameter vectors must agree with the identified two-parameter
  // ones on the same range, and reproduce the directly printed m=5 line.
  for (int m = 2; m <= 6; ++m)
    if (a_one_param(m).a != a_vector(m, true).a) return false;
  return a_one_param(5).a == expect[5];
}

}  // namespace

int main() {
  auto timed = [](const std::function<bool()>& body, double& secs) {
    auto t0 = Clock::now();
    bool ok = guarded(body);
    secs = std::chrono::duration<double>(Clock::now() - t0).count();
    return ok;
  };

  double secs = 0;
  bool ok = timed(printed_tables_match, secs);
  line(1, "coefficient vectors match the printed tables, m=2..6", ok, secs,
       1);

  ok = timed(
      [] {
        return gen_check_C(12).ok && gen_check_D(30).ok &&
               closed_form_check(30).ok;
      },
      secs);
  line(2, "recursions match their generating functions", ok, secs, 30);

  ok = timed(
      [] {
        for (int m = 2; m <= 20; ++m)
          if (a_one_param(m).a != a_vector(m, true).a) return false;
        return true;
      },
      secs);
  line(3, "one-parameter vectors equal identified two-parameter ones, m<=20",
       ok, secs, 10);

  SuiteReport dih;
  bool dih_ran = timed(
      [&] {
        dih = dihedral_suite(12);
        return true;
      },
      secs);
  line(4, "braid difference expansion has only odd, antisymmetric terms, m<=12",
       dih_ran && checks_pass(dih, "expansion"), secs, 60);
  line(5, "defining-relation residual is exactly zero, m=2..12, both modes",
       dih_ran && checks_pass(dih, "residual"), secs, 0);

  ok = timed(
      [] { return group_presentations_suite(default_corpus(), 50000).all_pass(); },
      secs);
  line(6, "group presentations hold in models with index-two orders", ok,
       secs, 60);

  SuiteReport brd;
  bool brd_ran = timed(
      [&] {
        brd = braid_presentations_suite();
        return true;
      },
      secs);
  line(7, "braid presentations hold in the free-group action and generate",
       brd_ran && checks_pass(brd, "quotient", true), secs, 30);

  ok = timed([] { return rs_suite(default_corpus()).all_pass(); }, secs);
  line(8, "kernel rewriting reproduces the emitted presentations", ok, secs,
       10);

  bool quotients = brd_ran && checks_pass(brd, "quotient");
  ok = timed([] { return remark_iv_suite().all_pass(); }, secs);
  line(9, "quotient reductions and the index-two counterexample", ok && quotients,
       secs, 5);

  if (failures == 0)
    std::printf("acceptance: all 9 criteria passed\n");
  else
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
