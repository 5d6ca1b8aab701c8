#pragma once

// Subcommand bodies behind the `akschur` executable. Each takes parsed
// options and output streams and returns the process exit code:
// 0 success/agreement, 1 mathematical disagreement, 2 usage or input error.

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "akschur/combinatorics.hpp"
#include "akschur/json_io.hpp"
#include "akschur/polynomial.hpp"
#include "akschur/schur.hpp"
#include "akschur/sweep.hpp"

namespace akschur::cli {

enum ExitCode : int { kOk = 0, kDisagreement = 1, kUsage = 2 };

/// Raised for invalid user input; mapped to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) out.push_back(item);
  if (!text.empty() && text.back() == ',') out.emplace_back();
  return out;
}

/// Builds a specialization from the --q / --Q flags. Q defaults to all ones
/// and q to 1; Q, when given, must have exactly d entries.
inline ParamSpec make_spec(int d, const std::optional<std::string>& q,
                           const std::optional<std::string>& Q) {
  try {
    Rational qv = q ? parse_rational(*q) : Rational(1);
    std::vector<Rational> Qv(static_cast<std::size_t>(d), Rational(1));
    if (Q) {
      auto items = split_list(*Q);
      if (static_cast<int>(items.size()) != d)
        throw UsageError("--Q needs exactly " + std::to_string(d) + " values");
      for (std::size_t i = 0; i < items.size(); ++i) Qv[i] = parse_rational(items[i]);
    }
    return ParamSpec(std::move(qv), std::move(Qv));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

inline std::string spec_string(const ParamSpec& spec) {
  std::string out = "q=" + to_string(spec.q()) + ", Q=(";
  for (int s = 0; s < spec.arity(); ++s) out += (s ? "," : "") + to_string(spec.Q(s));
  return out + ")";
}

inline json to_json(const ParamSpec& spec) {
  json Q = json::array();
  for (const auto& v : spec.Q()) Q.push_back(akschur::to_json(v));
  return json{{"q", akschur::to_json(spec.q())}, {"Q", Q}};
}

inline std::string render(const MultiPartition& lambda) { return describe(lambda); }

inline std::string render_factors(const std::vector<SchurFactor>& fs) {
  if (fs.empty()) return "none";
  std::string out;
  for (const auto& f : fs)
    out += (out.empty() ? "" : ", ") + std::string("(h=") + std::to_string(f.h) +
           ",s=" + std::to_string(f.s) + ",t=" + std::to_string(f.t) + ")";
  return out;
}

// ---------------------------------------------------------------------------

enum class Format { factored, expanded, both };

inline Format parse_format(const std::string& name) {
  if (name == "factored") return Format::factored;
  if (name == "expanded") return Format::expanded;
  if (name == "both") return Format::both;
  throw UsageError("unknown format '" + name + "'");
}

struct ComputeOptions {
  std::string lambda_json;
  Format format = Format::both;
  std::optional<std::string> q;
  std::optional<std::string> Q;
  bool json = false;
};

inline int cmd_compute(const ComputeOptions& opt, std::ostream& out) {
  MultiPartition lambda = MultiPartition::empty(1);
  try {
    lambda = parse_multipartition(opt.lambda_json);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::optional<ParamSpec> spec;
  if (opt.q || opt.Q) spec = make_spec(lambda.d(), opt.q, opt.Q);

  SchurFactored sf = schur_factored(lambda);
  const bool want_factored = opt.format != Format::expanded;
  const bool want_expanded = opt.format != Format::factored;

  if (opt.json) {
    json doc{{"command", "compute"}, {"lambda", to_json(lambda)}};
    if (want_factored) doc["factored"] = to_json(sf);
    if (want_expanded) doc["expanded"] = to_json(expand_factored(sf));
    if (spec) {
      doc["spec"] = to_json(*spec);
      doc["report"] = to_json(vanishing_report(sf, *spec));
    }
    out << doc.dump(2) << '\n';
    return kOk;
  }

  if (opt.format == Format::both) {
    out << "factored: " << to_string(sf) << '\n';
    out << "expanded: " << to_string(expand_factored(sf)) << '\n';
  } else if (want_factored) {
    out << to_string(sf) << '\n';
  } else {
    out << to_string(expand_factored(sf)) << '\n';
  }
  if (spec) {
    VanishingReport rep = vanishing_report(sf, *spec);
    out << "at " << spec_string(*spec) << ": value " << to_string(rep.value) << '\n';
    out << "vanishing factors: " << render_factors(rep.vanishing_factors) << '\n';
    out << "irreducible: " << (rep.irreducible ? "yes" : "no") << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct EnumerateOptions {
  int d = 1;
  int r = 0;
  bool json = false;
};

inline int cmd_enumerate(const EnumerateOptions& opt, std::ostream& out) {
  if (opt.d < 1 || opt.r < 0) throw UsageError("need d >= 1 and r >= 0");
  MultiPartitionGenerator gen(opt.d, opt.r);
  if (opt.json) {
    json all = json::array();
    while (auto l = gen.next()) all.push_back(to_json(*l));
    out << json{{"command", "enumerate"}, {"d", opt.d}, {"r", opt.r}, {"count", all.size()},
                {"multipartitions", all}}
               .dump(2)
        << '\n';
    return kOk;
  }
  std::size_t count = 0;
  while (auto l = gen.next()) {
    out << render(*l) << '\n';
    ++count;
  }
  out << count << " multipartitions\n";
  return kOk;
}

// ---------------------------------------------------------------------------

struct VerifyOptions {
  int d = 1;
  int r_max = 0;
  std::string formulas = "cf,mathas,gim";
  unsigned jobs = 1;
  bool json = false;
};

inline int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
  if (opt.d < 1) throw UsageError("--d must be at least 1");
  if (opt.r_max < 0) throw UsageError("--r-max must be non-negative");
  std::vector<Formula> formulas;
  try {
    for (const auto& name : split_list(opt.formulas)) formulas.push_back(parse_formula(name));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (formulas.empty()) throw UsageError("no formulas selected");

  VerifySummary summary = verify_sweep(opt.d, opt.r_max, formulas, opt.jobs);
  if (opt.json) {
    out << to_json(summary).dump(2) << '\n';
    return summary.all_agree() ? kOk : kDisagreement;
  }
  std::string names;
  for (Formula f : formulas) names += (names.empty() ? "" : ", ") + to_string(f);
  out << "formulas: " << names << (opt.d == 1 ? " (cf also against the hook formula)" : "")
      << '\n';
  std::string counts;
  for (const auto& level : summary.levels) {
    out << "r=" << level.r << ": " << level.agree << "/" << level.count << " agree";
    if (level.first_mismatch)
      out << "; first mismatch " << render(*level.first_mismatch) << " (" << level.mismatch << ")";
    out << '\n';
    counts += (counts.empty() ? "" : "+") + std::to_string(level.count);
  }
  if (summary.all_agree()) {
    out << "all " << counts << " agree\n";
    return kOk;
  }
  out << "MISMATCH found\n";
  return kDisagreement;
}

// ---------------------------------------------------------------------------

struct SemisimpleOptions {
  int d = 1;
  int r = 1;
  std::optional<std::string> q;
  std::optional<std::string> Q;
  unsigned jobs = 1;
  bool json = false;
};

inline int cmd_semisimple(const SemisimpleOptions& opt, std::ostream& out) {
  if (opt.d < 1 || opt.r < 0) throw UsageError("need d >= 1 and r >= 0");
  ParamSpec spec = make_spec(opt.d, opt.q, opt.Q);
  Rational p_value = semisimplicity_value(opt.d, opt.r, spec);

  std::vector<std::pair<MultiPartition, VanishingReport>> rows;
  MultiPartitionGenerator gen(opt.d, opt.r);
  stream_map(
      gen, [&](const MultiPartition& l) { return vanishing_report(l, spec); },
      [&](const MultiPartition& l, const VanishingReport& rep) { rows.emplace_back(l, rep); },
      opt.jobs);

  std::optional<MultiPartition> witness;
  for (const auto& [l, rep] : rows)
    if (!rep.irreducible) {
      witness = l;
      break;
    }
  const bool semisimple = !witness;
  const bool consistent = semisimple == (p_value != 0);

  if (opt.json) {
    json table = json::array();
    for (const auto& [l, rep] : rows) {
      json row = to_json(rep);
      row["lambda"] = to_json(l);
      table.push_back(std::move(row));
    }
    json doc{{"command", "semisimple"},
             {"d", opt.d},
             {"r", opt.r},
             {"spec", to_json(spec)},
             {"P", p_value == 0 ? json("zero") : akschur::to_json(p_value)},
             {"table", table},
             {"semisimple", semisimple},
             {"consistent", consistent}};
    if (witness) doc["witness"] = to_json(*witness);
    out << doc.dump(2) << '\n';
    return consistent ? kOk : kDisagreement;
  }

  out << "at " << spec_string(spec) << '\n';
  out << "P = " << to_string(p_value) << '\n';
  for (const auto& [l, rep] : rows) {
    out << "  " << render(l) << "  value " << to_string(rep.value)
        << (rep.irreducible ? "  irreducible" : "  vanishes at " + render_factors(rep.vanishing_factors))
        << '\n';
  }
  if (semisimple)
    out << "semisimple\n";
  else
    out << "NOT semisimple; witness " << render(*witness) << '\n';
  if (!consistent) {
    out << "INCONSISTENT: Schur elements and P disagree\n";
    return kDisagreement;
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct IdentitiesOptions {
  std::string suite = "all";
  int d = 3;
  std::optional<int> r_max;
  int max_size = 8;
  unsigned jobs = 1;
  bool json = false;
};

inline int cmd_identities(const IdentitiesOptions& opt, std::ostream& out) {
  static const std::vector<std::string> kSuites{"lemma21", "lemma52", "eq3", "exchange"};
  std::vector<std::string> selected;
  if (opt.suite == "all")
    selected = kSuites;
  else if (std::find(kSuites.begin(), kSuites.end(), opt.suite) != kSuites.end())
    selected = {opt.suite};
  else
    throw UsageError("unknown suite '" + opt.suite + "'");
  if (opt.d < 1 || opt.max_size < 0 || (opt.r_max && *opt.r_max < 0))
    throw UsageError("bounds must be non-negative and d >= 1");

  std::vector<IdentitySummary> results;
  for (const auto& name : selected) {
    if (name == "lemma21") results.push_back(lemma21_suite(opt.max_size, opt.jobs));
    if (name == "lemma52") results.push_back(lemma52_suite(opt.d, opt.r_max.value_or(8), opt.jobs));
    if (name == "eq3") results.push_back(eq3_suite(opt.d, opt.r_max.value_or(6), opt.jobs));
    if (name == "exchange")
      results.push_back(exchange_suite(opt.d, opt.r_max.value_or(5), opt.jobs));
  }
  bool ok = std::all_of(results.begin(), results.end(),
                        [](const IdentitySummary& s) { return s.passed(); });
  if (opt.json) {
    json arr = json::array();
    for (const auto& s : results) arr.push_back(to_json(s));
    out << json{{"command", "identities"}, {"suites", arr}, {"passed", ok}}.dump(2) << '\n';
  } else {
    for (const auto& s : results) {
      out << s.suite << ": " << (s.passed() ? "pass" : "FAIL") << " (" << s.cases << " cases";
      if (!s.passed()) out << ", " << s.failures << " failures, first " << s.first_failure;
      out << ")\n";
    }
  }
  return ok ? kOk : kDisagreement;
}

}  // namespace akschur::cli
