#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "belief/channel.hpp"
#include "belief/rng.hpp"

namespace belief {

struct Program;
using ProgramPtr = std::shared_ptr<const Program>;

// Bound values (labels) and bound posterior distributions, visible to the
// expressions of later statements.
struct Env {
  std::map<std::string, std::string> vals;
  std::map<std::string, Dist> dists;

  const std::string& val(const std::string& binder) const;
  const Dist& dist(const std::string& binder) const;
};

using DistExpr = std::function<Dist(const Env&)>;
using BoolExpr = std::function<bool(const Env&)>;
using ValueExpr = std::function<std::string(const Env&)>;

struct SampleStmt {
  std::string binder;
  DistExpr dist;
};

// Nested inference: binds the exact posterior of `sub` (evaluated in the
// current environment) as a first-class distribution.
struct InferStmt {
  std::string binder;
  ProgramPtr sub;
};

struct ConditionStmt {
  BoolExpr pred;
};

struct LetStmt {
  std::string binder;
  ValueExpr expr;
};

using Stmt = std::variant<SampleStmt, InferStmt, ConditionStmt, LetStmt>;

struct Program {
  std::vector<Stmt> stmts;
  SpacePtr return_space;
  ValueExpr result;
};

// One sampled execution: the random choices made, their probabilities, and
// whether every condition held.
struct Trace {
  struct Step {
    std::string binder;
    std::string value;
    Rat probability;
  };
  std::vector<Step> steps;
  bool accepted = false;
  std::optional<std::string> result;

  Rat weight() const;  // product of step probabilities
};

struct SamplerConfig {
  std::uint64_t seed = 0;
  std::uint64_t sample_count = 100000;
};

// Empirical result of a rejection run. Frequencies are exact fractions
// accepted-count / accepted-total.
struct RejectReport {
  SpacePtr space;
  std::vector<std::uint64_t> counts;
  std::uint64_t accepted = 0;
  std::uint64_t attempted = 0;
  std::uint64_t seed = 0;

  Dist empirical() const;
};

// Exact posterior over return values by exhaustive trace enumeration.
// Nested Infer statements are resolved recursively. Throws
// ZeroValidityError when every trace is rejected.
Dist infer_enumerate(const Program& prog);
Dist infer_enumerate(const Program& prog, const Env& env);

// Rejection sampling: cfg.sample_count attempted traces, each on its own
// deterministic stream. Nested Infer statements are resolved by exact
// enumeration inside each trace. Throws ZeroAcceptedError when nothing is
// accepted.
RejectReport infer_reject(const Program& prog, const SamplerConfig& cfg);

// Rejection sampler for omega|_p: draw x from omega, accept with
// probability p(x).
RejectReport sample_posterior_update(const Dist& omega, const Predicate& p,
                                     const SamplerConfig& cfg);

// How ticker policies pick the next target: drawn from tau, or cycling
// deterministically through a fixed sequence of outcome labels.
struct TargetPolicy {
  std::optional<std::vector<std::string>> cycle;  // empty => random from tau
};

// Empirical distributions of accepted x values (and accepted y values,
// i.e. the targets met).
struct SimReport {
  SpacePtr x_space;
  std::vector<std::uint64_t> x_counts;
  SpacePtr y_space;
  std::vector<std::uint64_t> y_counts;
  std::uint64_t accepted = 0;
  std::uint64_t attempted = 0;
  std::uint64_t seed = 0;

  Dist empirical_x() const;
  Dist empirical_y() const;
};

// Single Pearl policy: a fresh target before every attempt. Runs
// cfg.sample_count attempts.
SimReport simulate_pearl_policy(const Dist& omega, const Channel& c,
                                const Dist& tau, const SamplerConfig& cfg,
                                const TargetPolicy& targets = {});

// Jeffrey policy: the target is redrawn only after an admission; the first
// target is drawn before the loop. Runs until cfg.sample_count admissions.
SimReport simulate_jeffrey_policy(const Dist& omega, const Channel& c,
                                  const Dist& tau, const SamplerConfig& cfg,
                                  const TargetPolicy& targets = {});

}  // namespace belief
