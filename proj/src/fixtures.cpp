#include "belief/fixtures.hpp"

namespace belief {

DiseaseModel build_disease_model() {
  SpacePtr states = Space::make({"d", "nd"});
  SpacePtr outcomes = Space::make({"p", "n"});
  Dist prior(states, {Rat(1, 20), Rat(19, 20)});
  Channel test(states, outcomes,
               {Dist(outcomes, {Rat(9, 10), Rat(1, 10)}),
                Dist(outcomes, {Rat(1, 20), Rat(19, 20)})});
  Multiset data(outcomes, {2, 1});
  Dist target = flrn(data);
  return DiseaseModel{states, outcomes, std::move(prior), std::move(test),
                      std::move(data), std::move(target)};
}

ClubModel build_club_model() {
  SpacePtr prefs = Space::make({"rock", "pop"});
  Dist prior = Dist::uniform(prefs);
  Channel door = Channel::identity(prefs);
  Dist target(prefs, {Rat(3, 4), Rat(1, 4)});
  return ClubModel{prefs, std::move(prior), std::move(door),
                   std::move(target)};
}

ProgSet build_progs() {
  DiseaseModel m = build_disease_model();
  const Dist prior = m.prior;
  const Channel test = m.test;
  const Dist target = m.target;
  const SpacePtr states = m.states;

  auto sample_prior = [prior](const Env&) { return prior; };
  auto sample_test = [test](const Env& env) { return test.row(env.val("dis")); };
  auto return_dis = [](const Env& env) { return env.val("dis"); };

  auto prog1 = std::make_shared<Program>();
  prog1->stmts = {
      SampleStmt{"dis", sample_prior},
      SampleStmt{"t1", sample_test},
      ConditionStmt{[](const Env& env) { return env.val("t1") == "p"; }},
      SampleStmt{"t2", sample_test},
      ConditionStmt{[](const Env& env) { return env.val("t2") == "p"; }},
      SampleStmt{"t3", sample_test},
      ConditionStmt{[](const Env& env) { return env.val("t3") == "n"; }},
  };
  prog1->return_space = states;
  prog1->result = return_dis;

  auto prog2 = std::make_shared<Program>();
  prog2->stmts = {
      SampleStmt{"target", [target](const Env&) { return target; }},
      SampleStmt{"dis", sample_prior},
      SampleStmt{"y", sample_test},
      ConditionStmt{
          [](const Env& env) { return env.val("y") == env.val("target"); }},
  };
  prog2->return_space = states;
  prog2->result = return_dis;

  // The inner program of prog3: condition on the enclosing target.
  auto inner = std::make_shared<Program>();
  inner->stmts = {
      SampleStmt{"dis", sample_prior},
      SampleStmt{"y", sample_test},
      ConditionStmt{
          [](const Env& env) { return env.val("y") == env.val("target"); }},
  };
  inner->return_space = states;
  inner->result = return_dis;

  auto prog3 = std::make_shared<Program>();
  prog3->stmts = {
      SampleStmt{"target", [target](const Env&) { return target; }},
      InferStmt{"posterior", inner},
      SampleStmt{"dis",
                 [](const Env& env) { return env.dist("posterior"); }},
  };
  prog3->return_space = states;
  prog3->result = return_dis;

  return ProgSet{prog1, prog2, prog3};
}

}  // namespace belief
