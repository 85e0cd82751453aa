#include <doctest.h>

#include "mls/harness.hpp"
#include "mls/trace_io.hpp"

using namespace mls;

TEST_CASE("evaluate the two-list illustration instance") {
  const Instance instance = build_instance(2, {{1, 1, 1}, {2, 2, 2}});
  const EvaluationReport report = evaluate(instance);

  CHECK(report.m == 2);
  CHECK(report.k == 2);
  CHECK(report.n == 6);
  REQUIRE(report.opt.has_value());
  CHECK(*report.opt == 5);
  CHECK(report.ljllm.makespan == 5);
  CHECK(*report.ljllm.ratio == Rational(1, 1));
  CHECK(*report.ljllm.ratio <= Rational(3, 2));  // 2 - 1/m at m = 2
  CHECK(report.checks.schedule_valid == CheckStatus::Pass);
  CHECK(report.checks.theorem1 == CheckStatus::Pass);
  CHECK(report.checks.eq4 == CheckStatus::Pass);
  CHECK(report.checks.accounting == CheckStatus::Pass);
  CHECK(report.checks.lemma14 == CheckStatus::NotApplicable);  // k != n
  CHECK(report.checks.lemma15 == CheckStatus::NotApplicable);  // m > 1, n > m
  CHECK(report.ok());
}

TEST_CASE("evaluate flags the one-machine exactness") {
  const Instance instance = build_instance(1, {{4, 2}, {3}});
  const EvaluationReport report = evaluate(instance);
  CHECK(report.checks.lemma15 == CheckStatus::Pass);
  CHECK(*report.ljllm.ratio == Rational(1, 1));
}

TEST_CASE("evaluate applies the k=n bound") {
  GenSpec spec;
  spec.family = Family::SingleBatch;
  spec.m = 3;
  spec.n = 8;
  spec.seed = 5;
  const Instance instance = generate(spec);
  const EvaluationReport report = evaluate(instance);
  REQUIRE(report.opt.has_value());
  CHECK(report.checks.lemma14 == CheckStatus::Pass);
  CHECK(*report.ljllm.ratio <= Rational(11, 9));  // 4/3 - 1/(3m) at m = 3
  CHECK(report.checks.degeneracy == CheckStatus::Pass);
}

TEST_CASE("oracle refusals become absence reasons") {
  GenSpec spec;
  spec.family = Family::Uniform;
  spec.m = 3;
  spec.k = 2;
  spec.n = 30;
  spec.seed = 11;
  const Instance instance = generate(spec);
  const EvaluationReport report = evaluate(instance);
  CHECK_FALSE(report.opt.has_value());
  CHECK(report.opt_reason == "InstanceTooLarge");
  CHECK(report.checks.theorem1 == CheckStatus::NotApplicable);
  CHECK(report.checks.eq4 == CheckStatus::Pass);  // oracle-free checks still run
  CHECK(report.ok());
}

TEST_CASE("sweep aggregates and stays deterministic") {
  std::vector<GenSpec> specs;
  for (int m : {2, 3}) {
    GenSpec spec;
    spec.family = Family::Uniform;
    spec.m = m;
    spec.k = 2;
    spec.n_max = 10;
    spec.seed = 7;
    specs.push_back(spec);
  }

  const SweepResult first = sweep(specs, 25);
  CHECK(first.summary.instances == 50);
  CHECK(first.summary.ok());
  CHECK(first.summary.checks.at("theorem1").fail == 0);
  CHECK(first.summary.checks.at("theorem1").pass == 50);
  CHECK(first.summary.worst_ljllm_ratio.count("family=uniform m=2") == 1);

  // Same inputs, more threads: byte-identical artifacts.
  SweepOptions threaded;
  threaded.jobs = 4;
  const SweepResult second = sweep(specs, 25, threaded);
  CHECK(serialize_summary(first.summary) == serialize_summary(second.summary));
  REQUIRE(first.reports.size() == second.reports.size());
  for (std::size_t i = 0; i < first.reports.size(); ++i)
    CHECK(serialize_report(first.reports[i]) == serialize_report(second.reports[i]));
}

TEST_CASE("sweep records the adversarial worst ls ratio") {
  std::vector<GenSpec> specs;
  for (int m : {2, 3, 4}) {
    GenSpec spec;
    spec.family = Family::LsAdversarial;
    spec.m = m;
    specs.push_back(spec);
  }
  const SweepResult result = sweep(specs, 1);
  CHECK(result.summary.worst_ls_ratio.at("family=ls_adversarial m=2") == Rational(3, 2));
  CHECK(result.summary.worst_ls_ratio.at("family=ls_adversarial m=3") == Rational(5, 3));
  CHECK(result.summary.worst_ls_ratio.at("family=ls_adversarial m=4") == Rational(7, 4));
}

TEST_CASE("sweep rejects an empty spec list") {
  try {
    sweep({}, 10);
    FAIL("expected BadConfig");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BadConfig);
  }
}
