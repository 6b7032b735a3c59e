#include <doctest.h>

#include "belief/fixtures.hpp"
#include "belief/multiset_ext.hpp"
#include "helpers.hpp"

using namespace belief;
using namespace belief::test;

TEST_CASE("rng streams are deterministic and independent") {
  SplitMix64 a = SplitMix64::stream(42, 7);
  SplitMix64 b = SplitMix64::stream(42, 7);
  SplitMix64 c = SplitMix64::stream(42, 8);
  bool diverged = false;
  for (int i = 0; i < 16; ++i) {
    std::uint64_t va = a.next();
    CHECK(va == b.next());
    if (va != c.next()) diverged = true;
  }
  CHECK(diverged);
  SplitMix64 u = SplitMix64::stream(1, 0);
  for (int i = 0; i < 100; ++i) {
    Rat f = u.next_unit();
    CHECK(f >= 0);
    CHECK(f < 1);
  }
}

TEST_CASE("rng sampling matches exact weights on point masses") {
  SpacePtr ab = Space::make({"a", "b"});
  SplitMix64 rng = SplitMix64::stream(9, 0);
  Dist point = Dist::point(ab, "b");
  for (int i = 0; i < 20; ++i) CHECK(rng.sample(point) == 1);
  CHECK(rng.bernoulli(Rat(1)));
  CHECK_FALSE(rng.bernoulli(Rat(0)));
}

TEST_CASE("prog1: three successive conditions") {
  ProgSet progs = build_progs();
  DiseaseModel m = build_disease_model();
  Dist posterior = infer_enumerate(*progs.prog1);
  CHECK(posterior.weight("d") == Rat(648, 1009));
  CHECK(posterior.weight("nd") == Rat(361, 1009));
  CHECK(posterior == pearl_update_repeated(m.prior, m.test, m.data));
}

TEST_CASE("prog2: sampled target, single condition") {
  ProgSet progs = build_progs();
  DiseaseModel m = build_disease_model();
  Dist posterior = infer_enumerate(*progs.prog2);
  CHECK(posterior.weight("d") == Rat(2, 23));
  CHECK(posterior.weight("nd") == Rat(21, 23));
  Predicate soft(m.outcomes, m.target.weights());
  CHECK(posterior == pearl_update(m.prior, m.test, soft));
}

TEST_CASE("prog3: nested inference") {
  ProgSet progs = build_progs();
  DiseaseModel m = build_disease_model();
  Dist posterior = infer_enumerate(*progs.prog3);
  CHECK(posterior.weight("d") == Rat(13142, 40293));
  CHECK(posterior.weight("nd") == Rat(27151, 40293));
  CHECK(posterior == jeffrey_update(m.prior, m.test, m.target));
}

TEST_CASE("nested inference inlines to a mixture of inner posteriors") {
  ProgSet progs = build_progs();
  DiseaseModel m = build_disease_model();
  const auto& inner = std::get<InferStmt>(progs.prog3->stmts[1]).sub;
  std::vector<Rat> w(m.states->size(), Rat(0));
  for (std::size_t t = 0; t < m.target.size(); ++t) {
    Env env;
    env.vals["target"] = m.target.space()->label(t);
    Dist part = infer_enumerate(*inner, env);
    for (std::size_t i = 0; i < w.size(); ++i)
      w[i] += m.target.weight(t) * part.weight(i);
  }
  CHECK(Dist(m.states, std::move(w)) == infer_enumerate(*progs.prog3));
}

TEST_CASE("enumeration rejects programs with no accepting trace") {
  SpacePtr ab = Space::make({"a", "b"});
  Program dead;
  dead.stmts = {
      SampleStmt{"x", [ab](const Env&) { return Dist::uniform(ab); }},
      ConditionStmt{[](const Env&) { return false; }},
  };
  dead.return_space = ab;
  dead.result = [](const Env& env) { return env.val("x"); };
  CHECK_THROWS_AS(infer_enumerate(dead), ZeroValidityError);
  SamplerConfig cfg{0, 100};
  CHECK_THROWS_AS(infer_reject(dead, cfg), ZeroAcceptedError);
  try {
    infer_reject(dead, cfg);
  } catch (const ZeroAcceptedError& e) {
    CHECK(e.attempted == 100);
  }
}

TEST_CASE("let statements bind derived values") {
  SpacePtr ab = Space::make({"a", "b"});
  Program prog;
  prog.stmts = {
      SampleStmt{"x", [ab](const Env&) {
        return Dist(ab, {Rat(1, 4), Rat(3, 4)});
      }},
      LetStmt{"copy", [](const Env& env) { return env.val("x"); }},
      ConditionStmt{[](const Env& env) { return env.val("copy") == "b"; }},
  };
  prog.return_space = ab;
  prog.result = [](const Env& env) { return env.val("x"); };
  CHECK(infer_enumerate(prog) == Dist::point(ab, "b"));
}

TEST_CASE("rejection sampling is bit-identical under a fixed seed") {
  ProgSet progs = build_progs();
  SamplerConfig cfg{123, 5000};
  RejectReport a = infer_reject(*progs.prog1, cfg);
  RejectReport b = infer_reject(*progs.prog1, cfg);
  CHECK(a.counts == b.counts);
  CHECK(a.accepted == b.accepted);
  SamplerConfig other{124, 5000};
  RejectReport c = infer_reject(*progs.prog1, other);
  CHECK(a.counts != c.counts);
}

TEST_CASE("rejection sampling converges to the exact posteriors") {
  ProgSet progs = build_progs();
  SamplerConfig cfg{0, 40000};
  // prog1 keeps only ~0.6% of traces, so its posterior is the noisiest
  CHECK(total_variation(infer_reject(*progs.prog1, cfg).empirical(),
                        infer_enumerate(*progs.prog1)) < 0.1);
  CHECK(total_variation(infer_reject(*progs.prog2, cfg).empirical(),
                        infer_enumerate(*progs.prog2)) < 0.05);
  CHECK(total_variation(infer_reject(*progs.prog3, cfg).empirical(),
                        infer_enumerate(*progs.prog3)) < 0.05);
}

TEST_CASE("sample_posterior_update") {
  DiseaseModel m = build_disease_model();
  Predicate pulled = pull(m.test, point_predicate("p", m.outcomes));
  SamplerConfig cfg{0, 60000};
  RejectReport report = sample_posterior_update(m.prior, pulled, cfg);
  CHECK(report.attempted == 60000);
  CHECK(total_variation(report.empirical(), update(m.prior, pulled)) < 0.05);

  // certain predicate accepts everything
  RejectReport all = sample_posterior_update(
      m.prior, Predicate::constant(m.states, 1), SamplerConfig{0, 500});
  CHECK(all.accepted == 500);

  // impossible predicate accepts nothing
  CHECK_THROWS_AS(
      sample_posterior_update(m.prior, Predicate::constant(m.states, 0),
                              SamplerConfig{0, 500}),
      ZeroAcceptedError);
}

TEST_CASE("pearl policy simulates the single Pearl update") {
  DiseaseModel m = build_disease_model();
  SamplerConfig cfg{0, 60000};
  SimReport report = simulate_pearl_policy(m.prior, m.test, m.target, cfg);
  CHECK(report.attempted == 60000);
  Predicate soft(m.outcomes, m.target.weights());
  CHECK(total_variation(report.empirical_x(),
                        pearl_update(m.prior, m.test, soft)) < 0.05);
}

TEST_CASE("jeffrey policy simulates the Jeffrey update") {
  DiseaseModel m = build_disease_model();
  SamplerConfig cfg{0, 20000};
  SimReport report = simulate_jeffrey_policy(m.prior, m.test, m.target, cfg);
  CHECK(report.accepted == 20000);
  CHECK(total_variation(report.empirical_x(),
                        jeffrey_update(m.prior, m.test, m.target)) < 0.05);
  // admitted outcomes follow the target
  CHECK(total_variation(report.empirical_y(), m.target) < 0.05);
}

TEST_CASE("jeffrey policy with a point target matches the dagger row") {
  DiseaseModel m = build_disease_model();
  SamplerConfig cfg{0, 20000};
  SimReport report = simulate_jeffrey_policy(
      m.prior, m.test, Dist::point(m.outcomes, "n"), cfg);
  CHECK(total_variation(report.empirical_x(),
                        dagger_row(m.test, m.prior, "n")) < 0.05);
}

TEST_CASE("jeffrey policy on the club model hits the target rate") {
  ClubModel club = build_club_model();
  SamplerConfig cfg{0, 50000};
  SimReport report =
      simulate_jeffrey_policy(club.prior, club.door, club.target, cfg);
  double rock = rat_to_double(report.empirical_x().weight("rock"));
  CHECK(rock == doctest::Approx(0.75).epsilon(0.02));
  // identity channel: admitted preferences follow the target exactly in law
  CHECK(total_variation(report.empirical_x(), club.target) < 0.02);
}

TEST_CASE("deterministic target cycles") {
  DiseaseModel m = build_disease_model();
  TargetPolicy cycle{std::vector<std::string>{"p", "p", "n"}};
  SamplerConfig cfg{0, 300};
  SimReport report =
      simulate_jeffrey_policy(m.prior, m.test, m.target, cfg, cycle);
  // every admission meets the cycled target, so y frequencies are exact
  CHECK(report.y_counts[m.outcomes->index_of("p")] == 200);
  CHECK(report.y_counts[m.outcomes->index_of("n")] == 100);
  CHECK_THROWS_AS(
      simulate_jeffrey_policy(m.prior, m.test, m.target, cfg,
                              TargetPolicy{std::vector<std::string>{}}),
      DomainError);
}

TEST_CASE("jeffrey policy rejects unreachable targets") {
  SpacePtr s2 = Space::make({"a", "b"});
  Channel c(s2, s2, {Dist::point(s2, "a"), Dist::point(s2, "a")});
  CHECK_THROWS_AS(
      simulate_jeffrey_policy(Dist::uniform(s2), c, Dist::point(s2, "b"),
                              SamplerConfig{0, 10}),
      ZeroValidityError);
}
