#pragma once

// Ordered parallel sweeps over streamed enumerations: cross-formula
// verification and the identity suites. Results are reduced in enumeration
// order, so every summary is independent of the worker count.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "akschur/combinatorics.hpp"
#include "akschur/json_io.hpp"
#include "akschur/polynomial.hpp"
#include "akschur/schur.hpp"

namespace akschur {

/// SCHUR_JOBS if set to a positive integer, otherwise the hardware
/// concurrency (at least 1).
inline unsigned default_jobs() {
  if (const char* env = std::getenv("SCHUR_JOBS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// f applied to every item, results in input order.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, F&& f, unsigned jobs)
    -> std::vector<std::invoke_result_t<F&, const T&>> {
  using R = std::invoke_result_t<F&, const T&>;
  std::vector<std::optional<R>> slots(items.size());
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(std::max(1u, jobs), items.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i) slots[i].emplace(f(items[i]));
  } else {
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
          for (std::size_t i; (i = cursor.fetch_add(1)) < items.size();) {
            try {
              slots[i].emplace(f(items[i]));
            } catch (...) {
              std::lock_guard lock(failure_mutex);
              if (!failure) failure = std::current_exception();
              cursor = items.size();
            }
          }
        });
    }
    if (failure) std::rethrow_exception(failure);
  }
  std::vector<R> out;
  out.reserve(items.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

/// Pulls items from `gen` in batches, maps each batch in parallel and hands
/// the results to `sink(item, result)` in generation order. Memory stays
/// bounded by the batch size.
template <class Gen, class F, class Sink>
void stream_map(Gen& gen, F&& f, Sink&& sink, unsigned jobs, std::size_t batch = 512) {
  using T = typename std::decay_t<decltype(*gen.next())>;
  std::vector<T> buffer;
  for (;;) {
    buffer.clear();
    while (buffer.size() < batch) {
      auto item = gen.next();
      if (!item) break;
      buffer.push_back(std::move(*item));
    }
    if (buffer.empty()) return;
    auto results = parallel_map(buffer, f, jobs);
    for (std::size_t i = 0; i < buffer.size(); ++i) sink(buffer[i], results[i]);
  }
}

// ---------------------------------------------------------------------------
// Cross-formula verification

enum class Formula { cf, mathas, gim };

inline std::string to_string(Formula f) {
  switch (f) {
    case Formula::cf: return "cf";
    case Formula::mathas: return "mathas";
    case Formula::gim: return "gim";
  }
  return "?";
}

inline Formula parse_formula(const std::string& name) {
  if (name == "cf") return Formula::cf;
  if (name == "mathas") return Formula::mathas;
  if (name == "gim") return Formula::gim;
  throw std::invalid_argument("unknown formula '" + name + "'");
}

/// Structural invariants of the cancellation-free form: r·d factors, r of
/// them diagonal with hooks ≥ 1, cross hooks strictly inside (−r, r), and
/// q_exp = −n(λ̄), qm1_exp = −r.
inline bool factored_invariants_hold(const MultiPartition& lambda, const SchurFactored& sf) {
  const int r = lambda.size();
  const int d = lambda.d();
  if (static_cast<long long>(sf.factors.size()) != static_cast<long long>(r) * d) return false;
  int diagonal = 0;
  for (const auto& f : sf.factors) {
    if (f.s == f.t) {
      ++diagonal;
      if (f.h < 1) return false;
    } else if (f.h <= -r || f.h >= r) {
      return false;
    }
  }
  return diagonal == r && sf.q_exp == -n_value(bar_partition(lambda)) && sf.qm1_exp == -r &&
         sf.sign == ((static_cast<long long>(r) * (d - 1)) % 2 == 0 ? 1 : -1);
}

struct CrossCheck {
  bool agree = true;
  std::string failure;  // e.g. "cf vs gim", "cf structure", "hook"
};

/// Pairwise rf_equal between the requested formulas. When d = 1 and the
/// cancellation-free form is requested it is also compared with the
/// classical hook formula.
inline CrossCheck cross_check(const MultiPartition& lambda, const std::vector<Formula>& formulas) {
  std::vector<std::pair<Formula, RationalFn>> values;
  for (Formula f : formulas) {
    switch (f) {
      case Formula::cf: {
        SchurFactored sf = schur_factored(lambda);
        if (!factored_invariants_hold(lambda, sf)) return {false, "cf structure"};
        LaurentPoly expanded = expand_factored(sf);
        if (lambda.d() == 1 && expanded != hook_schur_element(lambda[0])) return {false, "hook"};
        values.emplace_back(f, RationalFn(std::move(expanded)));
        break;
      }
      case Formula::mathas: values.emplace_back(f, schur_mathas(lambda)); break;
      case Formula::gim: values.emplace_back(f, schur_gim(lambda)); break;
    }
  }
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (!rf_equal(values[i].second, values[j].second))
        return {false, to_string(values[i].first) + " vs " + to_string(values[j].first)};
  return {};
}

struct VerifyLevel {
  int r = 0;
  std::size_t count = 0;
  std::size_t agree = 0;
  std::optional<MultiPartition> first_mismatch;
  std::string mismatch;
};

struct VerifySummary {
  int d = 1;
  int r_max = 0;
  std::vector<Formula> formulas;
  std::vector<VerifyLevel> levels;

  bool all_agree() const {
    return std::all_of(levels.begin(), levels.end(),
                       [](const VerifyLevel& l) { return l.agree == l.count; });
  }
};

inline VerifySummary verify_sweep(int d, int r_max, std::vector<Formula> formulas, unsigned jobs) {
  VerifySummary out{d, r_max, std::move(formulas), {}};
  for (int r = 0; r <= r_max; ++r) {
    VerifyLevel level{r};
    MultiPartitionGenerator gen(d, r);
    stream_map(
        gen, [&](const MultiPartition& l) { return cross_check(l, out.formulas); },
        [&](const MultiPartition& l, const CrossCheck& c) {
          ++level.count;
          if (c.agree) {
            ++level.agree;
          } else if (!level.first_mismatch) {
            level.first_mismatch = l;
            level.mismatch = c.failure;
          }
        },
        jobs);
    out.levels.push_back(std::move(level));
  }
  return out;
}

inline json to_json(const VerifySummary& s) {
  json formulas = json::array();
  for (Formula f : s.formulas) formulas.push_back(to_string(f));
  json levels = json::array();
  for (const auto& l : s.levels) {
    json item{{"r", l.r}, {"count", l.count}, {"agree", l.agree}};
    if (l.first_mismatch) {
      item["first_mismatch"] = to_json(*l.first_mismatch);
      item["failure"] = l.mismatch;
    }
    levels.push_back(std::move(item));
  }
  return json{{"command", "verify"}, {"d", s.d},           {"r_max", s.r_max},
              {"formulas", formulas}, {"levels", levels}, {"all_agree", s.all_agree()}};
}

// ---------------------------------------------------------------------------
// Identity suites

struct IdentitySummary {
  std::string suite;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

template <class Item, class Check, class Describe>
void reduce_checks(IdentitySummary& summary, std::vector<Item> items, Check&& check,
                   Describe&& describe, unsigned jobs) {
  auto results = parallel_map(items, check, jobs);
  for (std::size_t i = 0; i < items.size(); ++i) {
    ++summary.cases;
    if (!results[i]) {
      if (summary.failures++ == 0) summary.first_failure = describe(items[i]);
    }
  }
}

inline std::string describe(const MultiPartition& l) {
  std::ostringstream os;
  os << l;
  return os.str();
}

/// Rim-content identity between λ and λ' for every nonempty |λ| ≤ max_size
/// and every 1 ≤ k ≤ λ_1.
inline IdentitySummary lemma21_suite(int max_size, unsigned jobs) {
  IdentitySummary out{"lemma21"};
  for (int m = 1; m <= max_size; ++m) {
    std::vector<std::pair<Partition, int>> items;
    for (const auto& p : enumerate_partitions(m))
      for (int k = 1; k <= p.first(); ++k) items.emplace_back(p, k);
    reduce_checks(
        out, std::move(items),
        [](const std::pair<Partition, int>& c) { return lemma_conj_cont_check(c.first, c.second); },
        [](const std::pair<Partition, int>& c) {
          std::ostringstream os;
          os << c.first << " k=" << c.second;
          return os.str();
        },
        jobs);
  }
  return out;
}

/// n(λ̄) decomposition over P(d', r) for 1 ≤ d' ≤ d_max, r ≤ r_max.
inline IdentitySummary lemma52_suite(int d_max, int r_max, unsigned jobs) {
  IdentitySummary out{"lemma52"};
  for (int d = 1; d <= d_max; ++d)
    for (int r = 0; r <= r_max; ++r)
      reduce_checks(
          out, enumerate_multipartitions(d, r),
          [](const MultiPartition& l) { return lemma_nbar_check(l); },
          [](const MultiPartition& l) { return describe(l); }, jobs);
  return out;
}

struct PairCase {
  MultiPartition lambda;
  int s;
  int t;
};

inline std::vector<PairCase> pair_cases(int d_max, int r_max) {
  std::vector<PairCase> out;
  for (int d = 2; d <= d_max; ++d)
    for (int r = 0; r <= r_max; ++r)
      for (auto& l : enumerate_multipartitions(d, r))
        for (int s = 0; s < d; ++s)
          for (int t = s + 1; t < d; ++t) out.push_back({l, s, t});
  return out;
}

inline std::string describe(const PairCase& c) {
  std::ostringstream os;
  os << c.lambda << " s=" << c.s << " t=" << c.t;
  return os.str();
}

/// X_st from the hook-quotient product equals its closed generalized-hook
/// form, for every λ ∈ P(d', r), 2 ≤ d' ≤ d_max, r ≤ r_max, and s < t.
inline IdentitySummary eq3_suite(int d_max, int r_max, unsigned jobs) {
  IdentitySummary out{"eq3"};
  reduce_checks(
      out, pair_cases(d_max, r_max),
      [](const PairCase& c) {
        return rf_equal(x_st_mathas(c.lambda, c.s, c.t), x_st_closed(c.lambda, c.s, c.t));
      },
      [](const PairCase& c) { return describe(c); }, jobs);
  return out;
}

inline MultiPartition swap_components(const MultiPartition& lambda, int s, int t) {
  std::vector<Partition> comps = lambda.components();
  std::swap(comps.at(static_cast<std::size_t>(s)), comps.at(static_cast<std::size_t>(t)));
  return MultiPartition(std::move(comps));
}

/// X_st(λ) with Q_s and Q_t exchanged equals X_st of λ with λ^(s) and λ^(t)
/// exchanged.
inline bool exchange_symmetry_check(const MultiPartition& lambda, int s, int t) {
  RationalFn a = x_st_mathas(lambda, s, t);
  RationalFn swapped(swap_Q(a.num(), s, t), swap_Q(a.den(), s, t));
  return rf_equal(swapped, x_st_mathas(swap_components(lambda, s, t), s, t));
}

inline IdentitySummary exchange_suite(int d_max, int r_max, unsigned jobs) {
  IdentitySummary out{"exchange"};
  reduce_checks(
      out, pair_cases(d_max, r_max),
      [](const PairCase& c) { return exchange_symmetry_check(c.lambda, c.s, c.t); },
      [](const PairCase& c) { return describe(c); }, jobs);
  return out;
}

inline json to_json(const IdentitySummary& s) {
  json out{{"suite", s.suite}, {"cases", s.cases}, {"failures", s.failures},
           {"passed", s.passed()}};
  if (!s.passed()) out["first_failure"] = s.first_failure;
  return out;
}

}  // namespace akschur
