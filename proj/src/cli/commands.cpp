#include "cli/commands.hpp"

#include <chrono>
#include <cstdlib>

#include "belief/fixtures.hpp"

namespace belief::cli {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

void add_dist(RunReport& r, const std::string& prefix, const Dist& d) {
  for (std::size_t i = 0; i < d.size(); ++i)
    r.exact.emplace_back(prefix + "[" + d.space()->label(i) + "]",
                         d.weight(i));
}

// The evidence distribution read as a soft predicate q = sum_y tau(y)*1_y.
Predicate target_as_predicate(const Dist& tau) {
  return Predicate(tau.space(), tau.weights());
}

nlohmann::json sampler_json(const SpacePtr& space,
                            const std::vector<std::uint64_t>& counts,
                            std::uint64_t accepted, std::uint64_t attempted,
                            std::uint64_t seed) {
  nlohmann::json freq = nlohmann::json::object();
  for (std::size_t i = 0; i < counts.size(); ++i)
    freq[space->label(i)] = counts[i];
  return nlohmann::json{{"accepted", accepted},
                        {"attempted", attempted},
                        {"frequencies", freq},
                        {"seed", seed}};
}

// Expands a data multiset into a conditioned sampling program, one
// condition per data point (the prog1 pattern).
ProgramPtr repeated_pearl_program(const ModelFile& model,
                                  const Multiset& data) {
  auto prog = std::make_shared<Program>();
  const Dist prior = model.prior;
  const Channel c = model.channel;
  prog->stmts.push_back(SampleStmt{"x", [prior](const Env&) { return prior; }});
  std::size_t step = 0;
  for (std::size_t y = 0; y < data.space()->size(); ++y) {
    std::string outcome = data.space()->label(y);
    for (std::uint64_t n = 0; n < data.count(y); ++n) {
      std::string binder = "y" + std::to_string(step++);
      prog->stmts.push_back(SampleStmt{
          binder, [c](const Env& env) { return c.row(env.val("x")); }});
      prog->stmts.push_back(ConditionStmt{[binder, outcome](const Env& env) {
        return env.val(binder) == outcome;
      }});
    }
  }
  prog->return_space = model.states;
  prog->result = [](const Env& env) { return env.val("x"); };
  return prog;
}

Dist random_full_support_dist(const SpacePtr& space, SplitMix64& rng) {
  std::vector<Rat> w(space->size());
  Rat total = 0;
  for (auto& v : w) {
    v = Rat(1 + rng.next() % 1000);
    total += v;
  }
  for (auto& v : w) v /= total;
  return Dist(space, std::move(w));
}

}  // namespace

EnumCaps caps_from_env() {
  EnumCaps caps;
  if (const char* env = std::getenv("BELIEF_ENUM_CAP")) {
    std::uint64_t cap = std::strtoull(env, nullptr, 10);
    if (cap > 0) {
      caps.multiset_cap = cap;
      caps.tuple_cap = cap;
    }
  }
  return caps;
}

RunReport cmd_update(const ModelFile& model, const std::string& rule,
                     const std::string& method, std::uint64_t samples,
                     std::uint64_t seed) {
  auto start = Clock::now();
  RunReport r;
  r.command = "update --rule " + rule + " --method " + method;
  if (method != "exact" && method != "reject")
    throw DomainError("unknown method '" + method + "'");
  SamplerConfig cfg{seed, samples};

  if (rule == "pearl-repeated") {
    Multiset data = model.require_data();
    if (method == "exact") {
      add_dist(r, "posterior",
               pearl_update_repeated(model.prior, model.channel, data));
    } else {
      RejectReport rep = infer_reject(*repeated_pearl_program(model, data), cfg);
      add_dist(r, "posterior", rep.empirical());
      r.sampler = sampler_json(rep.space, rep.counts, rep.accepted,
                               rep.attempted, rep.seed);
    }
  } else if (rule == "pearl-single") {
    Predicate q = target_as_predicate(model.effective_target());
    if (method == "exact") {
      add_dist(r, "posterior", pearl_update(model.prior, model.channel, q));
    } else {
      RejectReport rep =
          sample_posterior_update(model.prior, pull(model.channel, q), cfg);
      add_dist(r, "posterior", rep.empirical());
      r.sampler = sampler_json(rep.space, rep.counts, rep.accepted,
                               rep.attempted, rep.seed);
    }
  } else if (rule == "jeffrey") {
    Dist tau = model.effective_target();
    if (method == "exact") {
      add_dist(r, "posterior", jeffrey_update(model.prior, model.channel, tau));
    } else {
      SimReport rep = simulate_jeffrey_policy(model.prior, model.channel, tau, cfg);
      add_dist(r, "posterior", rep.empirical_x());
      r.sampler = sampler_json(rep.x_space, rep.x_counts, rep.accepted,
                               rep.attempted, rep.seed);
    }
  } else {
    throw DomainError("unknown rule '" + rule + "'");
  }
  if (method == "reject") {
    r.info.emplace_back("seed", std::to_string(seed));
    r.info.emplace_back("samples", std::to_string(samples));
  }
  r.elapsed_ms = ms_since(start);
  return r;
}

RunReport cmd_likelihood(const ModelFile& model, const std::string& kind) {
  auto start = Clock::now();
  RunReport r;
  r.command = "likelihood --kind " + kind;
  Multiset data = model.require_data();
  if (kind == "jeffrey")
    r.exact.emplace_back("likelihood",
                         jeffrey_likelihood(model.prior, model.channel, data));
  else if (kind == "pearl")
    r.exact.emplace_back("likelihood",
                         pearl_likelihood(model.prior, model.channel, data));
  else
    throw DomainError("unknown likelihood kind '" + kind + "'");
  r.elapsed_ms = ms_since(start);
  return r;
}

RunReport cmd_check(const ModelFile& model, const std::string& theorem,
                    std::optional<std::uint64_t> k_opt, const EnumCaps& caps) {
  auto start = Clock::now();
  RunReport r;
  r.command = "check --theorem " + theorem;
  const Dist& omega = model.prior;
  const Channel& c = model.channel;

  if (theorem == "validity-increase") {
    Predicate q = target_as_predicate(model.effective_target());
    Dist posterior = pearl_update(omega, c, q);
    Rat before = validity(push(c, omega), q);
    Rat after = validity(push(c, posterior), q);
    r.exact.emplace_back("validity_before", before);
    r.exact.emplace_back("validity_after", after);
    r.checks.emplace_back("validity_increase", after >= before);
  } else if (theorem == "kl-decrease") {
    Dist tau = model.effective_target();
    Dist posterior = jeffrey_update(omega, c, tau);
    double before = kl_divergence(tau, push(c, omega));
    double after = kl_divergence(tau, push(c, posterior));
    r.floats.emplace_back("kl_before", before);
    r.floats.emplace_back("kl_after", after);
    r.checks.emplace_back("kl_decrease", after <= before + 1e-9);
  } else if (theorem == "thm83") {
    Multiset data = model.require_data();
    if (k_opt && *k_opt != data.total())
      throw DomainError("thm83 uses K = ||data|| = " +
                        std::to_string(data.total()));
    MultisetSpace mx(model.states, data.total(), caps);
    Dist sigma = multinomial_update(omega, c, data, caps);
    Dist lhs = flrn_push(mx, sigma);
    Dist rhs = jeffrey_update(omega, c, flrn(data));
    add_dist(r, "flrn_multinomial_update", lhs);
    add_dist(r, "jeffrey_update", rhs);
    r.checks.emplace_back("thm83_equality", lhs == rhs);
  } else if (theorem == "prop82") {
    std::uint64_t k = k_opt ? *k_opt : model.require_data().total();
    r.checks.emplace_back("dagger_commutation",
                          dagger_commutation_check(c, omega, k, caps));
  } else if (theorem == "thm85") {
    Multiset data = model.require_data();
    MultisetSpace mx(model.states, data.total(), caps);
    Dist sigma = multinomial_update(omega, c, data, caps);
    Dist fit = variational_fit(mx, sigma);
    add_dist(r, "variational_fit", fit);
    double best = kl_divergence(sigma, multinomial(mx, fit));
    r.floats.emplace_back("kl_at_fit", best);
    bool minimal = true;
    SplitMix64 rng(0);
    for (int i = 0; i < 200; ++i) {
      Dist challenger = random_full_support_dist(model.states, rng);
      if (best > kl_divergence(sigma, multinomial(mx, challenger)) + 1e-9) {
        minimal = false;
        break;
      }
    }
    r.checks.emplace_back("thm85_minimality", minimal);
  } else if (theorem == "lemma41") {
    Predicate q = target_as_predicate(model.effective_target());
    Predicate pulled = pull(c, q);
    r.checks.emplace_back("transformation",
                          validity(push(c, omega), q) == validity(omega, pulled));
    Predicate p1 = pull(c, point_predicate(std::size_t{0}, model.outcomes));
    Predicate p2 = pull(c, point_predicate(std::size_t{1} % model.outcomes->size(),
                                           model.outcomes));
    r.checks.emplace_back(
        "update_composition",
        update(update(omega, p1), p2) == update(omega, conjoin(p1, p2)));
    r.checks.emplace_back("validity_increase",
                          validity(update(omega, pulled), pulled) >=
                              validity(omega, pulled));
  } else if (theorem == "lemma53") {
    Dist prediction = push(c, omega);
    Channel d = dagger(c, omega);  // Y -> X; composite d . c : X -> X
    Channel composite = compose(d, c);
    Channel lhs = dagger(composite, omega);
    Channel rhs = compose(dagger(c, omega), dagger(d, prediction));
    r.checks.emplace_back("dagger_of_composition", lhs == rhs);
    Channel tensor_lhs = dagger(tensor_channel(c, c), tensor(omega, omega));
    Channel tensor_rhs = tensor_channel(dagger(c, omega), dagger(c, omega));
    r.checks.emplace_back("dagger_of_tensor", tensor_lhs == tensor_rhs);
  } else {
    throw DomainError("unknown theorem '" + theorem + "'");
  }
  r.elapsed_ms = ms_since(start);
  return r;
}

RunReport cmd_simulate(const ModelFile& model, const std::string& policy,
                       std::uint64_t samples, std::uint64_t seed,
                       bool target_cycle) {
  auto start = Clock::now();
  RunReport r;
  r.command = "simulate --policy " + policy;
  Dist tau = model.effective_target();
  SamplerConfig cfg{seed, samples};
  TargetPolicy targets;
  if (target_cycle) {
    // Deterministic ticker: cycle through the data multiset in declared
    // outcome order.
    Multiset data = model.require_data();
    std::vector<std::string> cycle;
    for (std::size_t y = 0; y < data.space()->size(); ++y)
      for (std::uint64_t n = 0; n < data.count(y); ++n)
        cycle.push_back(data.space()->label(y));
    targets.cycle = std::move(cycle);
  }
  SimReport rep =
      policy == "pearl"
          ? simulate_pearl_policy(model.prior, model.channel, tau, cfg, targets)
          : policy == "jeffrey"
                ? simulate_jeffrey_policy(model.prior, model.channel, tau, cfg,
                                          targets)
                : throw DomainError("unknown policy '" + policy + "'");
  add_dist(r, "accepted_x", rep.empirical_x());
  if (policy == "jeffrey") add_dist(r, "accepted_y", rep.empirical_y());
  r.exact.emplace_back("acceptance_rate", Rat(rep.accepted, rep.attempted));
  r.sampler = sampler_json(rep.x_space, rep.x_counts, rep.accepted,
                           rep.attempted, rep.seed);
  r.info.emplace_back("seed", std::to_string(seed));
  r.elapsed_ms = ms_since(start);
  return r;
}

RunReport cmd_ppl(const std::string& prog, const std::string& method,
                  std::uint64_t samples, std::uint64_t seed) {
  auto start = Clock::now();
  RunReport r;
  r.command = "ppl " + prog + " --method " + method;
  SamplerConfig cfg{seed, samples};
  DiseaseModel m = build_disease_model();

  if (prog == "prog1" || prog == "prog2" || prog == "prog3") {
    ProgSet progs = build_progs();
    const Program& p = *(prog == "prog1"   ? progs.prog1
                         : prog == "prog2" ? progs.prog2
                                           : progs.prog3);
    if (method == "exact") {
      add_dist(r, "posterior", infer_enumerate(p));
    } else if (method == "reject") {
      RejectReport rep = infer_reject(p, cfg);
      add_dist(r, "posterior", rep.empirical());
      r.sampler = sampler_json(rep.space, rep.counts, rep.accepted,
                               rep.attempted, rep.seed);
    } else {
      throw DomainError("unknown method '" + method + "'");
    }
  } else if (prog == "ticker-pearl" || prog == "ticker-jeffrey") {
    if (method == "exact") {
      Dist posterior =
          prog == "ticker-pearl"
              ? pearl_update(m.prior, m.test, target_as_predicate(m.target))
              : jeffrey_update(m.prior, m.test, m.target);
      add_dist(r, "posterior", posterior);
    } else if (method == "reject") {
      SimReport rep = prog == "ticker-pearl"
                          ? simulate_pearl_policy(m.prior, m.test, m.target, cfg)
                          : simulate_jeffrey_policy(m.prior, m.test, m.target,
                                                    cfg);
      add_dist(r, "posterior", rep.empirical_x());
      r.sampler = sampler_json(rep.x_space, rep.x_counts, rep.accepted,
                               rep.attempted, rep.seed);
    } else {
      throw DomainError("unknown method '" + method + "'");
    }
  } else {
    throw DomainError("unknown program '" + prog + "'");
  }
  if (method == "reject") {
    r.info.emplace_back("seed", std::to_string(seed));
    r.info.emplace_back("samples", std::to_string(samples));
  }
  r.elapsed_ms = ms_since(start);
  return r;
}

}  // namespace belief::cli
