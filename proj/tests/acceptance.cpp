// Acceptance checks: prints one PASS/FAIL line per criterion, exits nonzero
// if any fails. All comparisons are exact.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "akschur/schur.hpp"
#include "akschur/sweep.hpp"

using namespace akschur;

namespace {

struct Result {
  bool ok;
  std::string detail;
};

// q^{-n(λ)} Π [h]_q with hooks counted cell by cell in the diagram.
LaurentPoly hook_oracle(const Partition& lambda) {
  const auto& p = lambda.parts();
  long long n = 0;
  for (std::size_t i = 0; i < p.size(); ++i) n += static_cast<long long>(i) * p[i];
  LaurentPoly out = LaurentPoly::monomial(1, MonomialKey(static_cast<int>(-n), {0}));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j) {
      int arm = p[i] - j - 1, leg = 0;
      for (std::size_t k = i + 1; k < p.size() && p[k] > j; ++k) ++leg;
      LaurentPoly qint(1);
      for (int e = 0; e <= arm + leg; ++e) qint += LaurentPoly::monomial(1, MonomialKey(e, {0}));
      out *= qint;
    }
  return out;
}

const std::vector<std::pair<int, int>> kMainSweep{{1, 5}, {2, 5}, {3, 5}, {4, 3}};

Result cross_formula() {
  std::ostringstream os;
  bool ok = true;
  for (auto [d, r_max] : kMainSweep) {
    VerifySummary s = verify_sweep(d, r_max, {Formula::cf, Formula::mathas, Formula::gim}, default_jobs());
    std::size_t n = 0;
    for (const auto& l : s.levels) n += l.count;
    ok = ok && s.all_agree();
    os << "d=" << d << ",r<=" << r_max << ":" << n << (s.all_agree() ? " " : " MISMATCH ");
  }
  return {ok, os.str()};
}

Result hook_reduction() {
  std::size_t n = 0, bad = 0;
  for (int r = 0; r <= 8; ++r)
    for (const auto& p : enumerate_partitions(r)) {
      ++n;
      if (expand_factored(schur_factored(MultiPartition({p}))) != hook_oracle(p)) ++bad;
    }
  return {bad == 0, std::to_string(n) + " partitions, " + std::to_string(bad) + " mismatches"};
}

Result from_summary(const IdentitySummary& s) {
  std::string d = std::to_string(s.cases) + " cases";
  if (!s.passed()) d += ", first failure " + s.first_failure;
  return {s.passed(), d};
}

Result gim_shift() {
  std::size_t n = 0, bad = 0;
  for (int r = 0; r <= 4; ++r)
    for (const auto& l : enumerate_multipartitions(2, r)) {
      const int L0 = l.length();
      const RationalFn base = schur_gim(l, std::max(L0, 1));
      for (int L = std::max(L0, 1); L <= L0 + 3; ++L) {
        ++n;
        if (!rf_equal(base, schur_gim(l, L))) ++bad;
      }
    }
  return {bad == 0, std::to_string(n) + " (lambda, L) pairs, " + std::to_string(bad) + " mismatches"};
}

Result semisimplicity() {
  std::mt19937 rng(20261015);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  auto nonzero = [&] {
    int a = 0;
    while (a == 0) a = num(rng);
    return Rational(a, den(rng));
  };
  std::size_t random_cases = 0, designed = 0, non_ss = 0, bad = 0;
  auto check = [&](int d, int r, const ParamSpec& spec) {
    const bool ss = semisimple_at(d, r, spec).semisimple;
    const bool p_nonzero = evaluate(semisimplicity_poly(d, r), spec) != 0;
    if (ss != p_nonzero) ++bad;
    if (!ss) ++non_ss;
  };
  for (int d = 1; d <= 2; ++d)
    for (int r = 1; r <= 4; ++r) {
      for (int i = 0; i < 25; ++i, ++random_cases) {
        std::vector<Rational> Qs;
        for (int s = 0; s < d; ++s) Qs.push_back(nonzero());
        check(d, r, ParamSpec(nonzero(), Qs));
      }
      // q = −1 and q = 1
      for (int qv : {-1, 1}) {
        std::vector<Rational> Qs;
        for (int s = 0; s < d; ++s) Qs.push_back(Rational(2 + 3 * s));
        check(d, r, ParamSpec(qv, Qs));
        ++designed;
      }
      if (d == 2) {
        for (Rational Qv : {Rational(1), Rational(-5, 3)}) {
          check(d, r, ParamSpec(nonzero(), {Qv, Qv}));
          ++designed;
        }
        // Q_1 = q^k Q_0 for |k| ≤ r; |k| = r lies outside the critical range.
        for (Rational qv : {Rational(2), Rational(-1, 3), Rational(-1)})
          for (int k = -r; k <= r; ++k) {
            Rational Q0 = nonzero();
            check(d, r, ParamSpec(qv, {Q0, rational_pow(qv, k) * Q0}));
            check(d, r, ParamSpec(qv, {rational_pow(qv, k) * Q0, Q0}));
            designed += 2;
          }
      }
    }
  std::ostringstream os;
  os << random_cases << " random + " << designed << " designed specs, " << non_ss
     << " not semisimple, " << bad << " inconsistencies";
  return {bad == 0 && random_cases >= 100 && non_ss > 0, os.str()};
}

Result structural() {
  std::size_t n = 0, bad = 0;
  for (auto [d, r_max] : kMainSweep)
    for (int r = 0; r <= r_max; ++r)
      for (const auto& l : enumerate_multipartitions(d, r)) {
        ++n;
        if (!factored_invariants_hold(l, schur_factored(l))) ++bad;
      }
  return {bad == 0, std::to_string(n) + " multipartitions, " + std::to_string(bad) + " violations"};
}

Result capture(const std::string& args, std::string& out) {
  std::string cmd = std::string(AKSCHUR_CLI) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {false, "cannot start " + cmd};
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int raw = pclose(pipe);
  const bool ok = WIFEXITED(raw) && WEXITSTATUS(raw) == 0;
  return {ok, ok ? "" : "exit status " + std::to_string(raw) + " from " + cmd};
}

Result determinism() {
  std::string a, b;
  Result ra = capture("verify --d 3 --r-max 5 --json --jobs 1", a);
  if (!ra.ok) return ra;
  Result rb = capture("verify --d 3 --r-max 5 --json --jobs 8", b);
  if (!rb.ok) return rb;
  return {a == b && !a.empty(), std::to_string(a.size()) + " bytes, " + (a == b ? "identical" : "DIFFERENT")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"cross-formula agreement", cross_formula},
      {"d=1 hook reduction, r<=8", hook_reduction},
      {"conjugate/content identity, |lambda|<=8", [] { return from_summary(lemma21_suite(8, default_jobs())); }},
      {"n(lambda-bar) identity, d<=3, r<=8", [] { return from_summary(lemma52_suite(3, 8, default_jobs())); }},
      {"X_st identity, d<=3, r<=6", [] { return from_summary(eq3_suite(3, 6, default_jobs())); }},
      {"symbol length shift, d=2, r<=4", gim_shift},
      {"semisimplicity consistency, d<=2, r<=4", semisimplicity},
      {"factored-form invariants", structural},
      {"verify --json identical for --jobs 1 and 8", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !r.ok;
    std::printf("%s %zu: %s (%s; %.2fs)\n", r.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), r.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
