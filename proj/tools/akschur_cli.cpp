// akschur: Schur elements of Ariki-Koike algebras from the command line.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "akschur/commands.hpp"

namespace {

using namespace akschur::cli;

void add_spec_flags(CLI::App* cmd, std::optional<std::string>& q, std::optional<std::string>& Q) {
  cmd->add_option("--q", q, "value of q: integer or p/q");
  cmd->add_option("--Q", Q, "comma-separated values of Q_0..Q_{d-1}: integers or p/q");
}

void add_jobs_flag(CLI::App* cmd, unsigned& jobs) {
  cmd->add_option("--jobs", jobs, "worker threads (default: SCHUR_JOBS or all cores)")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur elements of Ariki-Koike algebras: compute, cross-verify, analyze"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  const unsigned jobs_default = akschur::default_jobs();

  ComputeOptions compute;
  std::string format = "both";
  auto* c = app.add_subcommand("compute", "Schur element of one multipartition");
  c->add_option("--lambda", compute.lambda_json, "multipartition as JSON, e.g. '[[4,1],[],[2,1]]'")
      ->required();
  c->add_option("--format", format, "factored | expanded | both")
      ->check(CLI::IsMember({"factored", "expanded", "both"}));
  add_spec_flags(c, compute.q, compute.Q);
  c->add_flag("--json", json, "machine-readable output");

  EnumerateOptions enumerate;
  auto* e = app.add_subcommand("enumerate", "list the d-partitions of r");
  e->add_option("--d", enumerate.d, "number of components")->required()->check(CLI::PositiveNumber);
  e->add_option("--r", enumerate.r, "size")->required()->check(CLI::NonNegativeNumber);
  e->add_flag("--json", json, "machine-readable output");

  VerifyOptions verify;
  verify.jobs = jobs_default;
  auto* v = app.add_subcommand("verify", "cross-check the Schur element formulas over P(d, r), r <= r-max");
  v->add_option("--d", verify.d, "number of components")->required()->check(CLI::PositiveNumber);
  v->add_option("--r-max", verify.r_max, "largest size")->required()->check(CLI::NonNegativeNumber);
  v->add_option("--formulas", verify.formulas, "comma-separated subset of cf,mathas,gim");
  add_jobs_flag(v, verify.jobs);
  v->add_flag("--json", json, "machine-readable output");

  SemisimpleOptions semisimple;
  semisimple.jobs = jobs_default;
  auto* s = app.add_subcommand("semisimple", "semisimplicity and irreducibility at a specialization");
  s->add_option("--d", semisimple.d, "number of components")->required()->check(CLI::PositiveNumber);
  s->add_option("--r", semisimple.r, "size")->required()->check(CLI::NonNegativeNumber);
  add_spec_flags(s, semisimple.q, semisimple.Q);
  add_jobs_flag(s, semisimple.jobs);
  s->add_flag("--json", json, "machine-readable output");

  IdentitiesOptions identities;
  identities.jobs = jobs_default;
  auto* i = app.add_subcommand("identities", "run the combinatorial and X_st identity sweeps");
  i->add_option("--suite", identities.suite, "lemma21 | lemma52 | eq3 | exchange | all")
      ->check(CLI::IsMember({"lemma21", "lemma52", "eq3", "exchange", "all"}));
  i->add_option("--d", identities.d, "largest number of components (default 3)")
      ->check(CLI::PositiveNumber);
  i->add_option("--r-max", identities.r_max, "largest multipartition size")
      ->check(CLI::NonNegativeNumber);
  i->add_option("--max-size", identities.max_size, "largest partition size for lemma21 (default 8)")
      ->check(CLI::NonNegativeNumber);
  add_jobs_flag(i, identities.jobs);
  i->add_flag("--json", json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::CallForAllHelp& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kUsage;
  }

  try {
    if (*c) {
      compute.format = parse_format(format);
      compute.json = json;
      return cmd_compute(compute, std::cout);
    }
    if (*e) {
      enumerate.json = json;
      return cmd_enumerate(enumerate, std::cout);
    }
    if (*v) {
      verify.json = json;
      return cmd_verify(verify, std::cout);
    }
    if (*s) {
      semisimple.json = json;
      return cmd_semisimple(semisimple, std::cout);
    }
    if (*i) {
      identities.json = json;
      return cmd_identities(identities, std::cout);
    }
  } catch (const UsageError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
