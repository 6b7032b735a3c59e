#include "belief/ppl.hpp"

namespace belief {

const std::string& Env::val(const std::string& binder) const {
  auto it = vals.find(binder);
  if (it == vals.end())
    throw DomainError("unbound value binder '" + binder + "'");
  return it->second;
}

const Dist& Env::dist(const std::string& binder) const {
  auto it = dists.find(binder);
  if (it == dists.end())
    throw DomainError("unbound distribution binder '" + binder + "'");
  return it->second;
}

Rat Trace::weight() const {
  Rat w = 1;
  for (const auto& s : steps) w *= s.probability;
  return w;
}

Dist RejectReport::empirical() const {
  if (accepted == 0)
    throw ZeroAcceptedError("no accepted samples", attempted);
  std::vector<Rat> w(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i)
    w[i] = Rat(counts[i], accepted);
  return Dist(space, std::move(w));
}

namespace {

void enumerate_rec(const Program& prog, std::size_t idx, Env env, Rat weight,
                   std::vector<Rat>& out) {
  for (; idx < prog.stmts.size(); ++idx) {
    const Stmt& stmt = prog.stmts[idx];
    if (const auto* s = std::get_if<SampleStmt>(&stmt)) {
      Dist d = s->dist(env);
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (d.weight(i) == 0) continue;
        Env branch = env;
        branch.vals[s->binder] = d.space()->label(i);
        enumerate_rec(prog, idx + 1, std::move(branch), weight * d.weight(i),
                      out);
      }
      return;
    } else if (const auto* inf = std::get_if<InferStmt>(&stmt)) {
      env.dists.insert_or_assign(inf->binder,
                                 infer_enumerate(*inf->sub, env));
    } else if (const auto* c = std::get_if<ConditionStmt>(&stmt)) {
      if (!c->pred(env)) return;
    } else if (const auto* l = std::get_if<LetStmt>(&stmt)) {
      env.vals[l->binder] = l->expr(env);
    }
  }
  out[prog.return_space->index_of(prog.result(env))] += weight;
}

}  // namespace

Dist infer_enumerate(const Program& prog, const Env& env) {
  std::vector<Rat> out(prog.return_space->size(), Rat(0));
  enumerate_rec(prog, 0, env, Rat(1), out);
  Rat total = 0;
  for (const Rat& w : out) total += w;
  if (total == 0)
    throw ZeroValidityError("infer_enumerate: every trace was rejected");
  for (Rat& w : out) w /= total;
  return Dist(prog.return_space, std::move(out));
}

Dist infer_enumerate(const Program& prog) {
  return infer_enumerate(prog, Env{});
}

namespace {

// Memo for nested posteriors inside a rejection run, keyed by the
// subprogram and the bound values it can see.
struct InferCache {
  std::map<std::pair<const Program*, std::string>, Dist> entries;

  const Dist& posterior(const Program& sub, const Env& env) {
    std::string key;
    for (const auto& [k, v] : env.vals) key += k + "=" + v + ";";
    auto it = entries.find({&sub, key});
    if (it == entries.end())
      it = entries.emplace(std::make_pair(&sub, key),
                           infer_enumerate(sub, env))
               .first;
    return it->second;
  }
};

Trace run_trace(const Program& prog, SplitMix64& rng, InferCache& cache) {
  Trace trace;
  Env env;
  for (const Stmt& stmt : prog.stmts) {
    if (const auto* s = std::get_if<SampleStmt>(&stmt)) {
      Dist d = s->dist(env);
      std::size_t i = rng.sample(d);
      env.vals[s->binder] = d.space()->label(i);
      trace.steps.push_back({s->binder, d.space()->label(i), d.weight(i)});
    } else if (const auto* inf = std::get_if<InferStmt>(&stmt)) {
      env.dists.insert_or_assign(inf->binder, cache.posterior(*inf->sub, env));
    } else if (const auto* c = std::get_if<ConditionStmt>(&stmt)) {
      if (!c->pred(env)) return trace;  // rejected
    } else if (const auto* l = std::get_if<LetStmt>(&stmt)) {
      env.vals[l->binder] = l->expr(env);
    }
  }
  trace.accepted = true;
  trace.result = prog.result(env);
  return trace;
}

}  // namespace

RejectReport infer_reject(const Program& prog, const SamplerConfig& cfg) {
  RejectReport report;
  report.space = prog.return_space;
  report.counts.assign(prog.return_space->size(), 0);
  report.seed = cfg.seed;
  report.attempted = cfg.sample_count;
  InferCache cache;
  for (std::uint64_t i = 0; i < cfg.sample_count; ++i) {
    SplitMix64 rng = SplitMix64::stream(cfg.seed, i);
    Trace t = run_trace(prog, rng, cache);
    if (!t.accepted) continue;
    ++report.accepted;
    ++report.counts[prog.return_space->index_of(*t.result)];
  }
  if (report.accepted == 0)
    throw ZeroAcceptedError("infer_reject: no trace satisfied the conditions",
                            report.attempted);
  return report;
}

RejectReport sample_posterior_update(const Dist& omega, const Predicate& p,
                                     const SamplerConfig& cfg) {
  require_same_space(omega.space(), p.space(), "sample_posterior_update");
  RejectReport report;
  report.space = omega.space();
  report.counts.assign(omega.size(), 0);
  report.seed = cfg.seed;
  report.attempted = cfg.sample_count;
  for (std::uint64_t i = 0; i < cfg.sample_count; ++i) {
    SplitMix64 rng = SplitMix64::stream(cfg.seed, i);
    std::size_t x = rng.sample(omega);
    if (rng.bernoulli(p.value(x))) {
      ++report.accepted;
      ++report.counts[x];
    }
  }
  if (report.accepted == 0)
    throw ZeroAcceptedError("sample_posterior_update: nothing accepted",
                            report.attempted);
  return report;
}

Dist SimReport::empirical_x() const {
  if (accepted == 0) throw ZeroAcceptedError("no admissions", attempted);
  std::vector<Rat> w(x_counts.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = Rat(x_counts[i], accepted);
  return Dist(x_space, std::move(w));
}

Dist SimReport::empirical_y() const {
  if (accepted == 0) throw ZeroAcceptedError("no admissions", attempted);
  std::vector<Rat> w(y_counts.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = Rat(y_counts[i], accepted);
  return Dist(y_space, std::move(w));
}

namespace {

class TargetSource {
 public:
  TargetSource(const Dist& tau, const TargetPolicy& policy)
      : tau_(tau) {
    if (policy.cycle) {
      for (const auto& label : *policy.cycle)
        cycle_.push_back(tau.space()->index_of(label));
      if (cycle_.empty())
        throw DomainError("target cycle must be non-empty");
    }
  }

  std::size_t next(SplitMix64& rng) {
    if (cycle_.empty()) return rng.sample(tau_);
    return cycle_[pos_++ % cycle_.size()];
  }

 private:
  const Dist& tau_;
  std::vector<std::size_t> cycle_;
  std::size_t pos_ = 0;
};

}  // namespace

SimReport simulate_pearl_policy(const Dist& omega, const Channel& c,
                                const Dist& tau, const SamplerConfig& cfg,
                                const TargetPolicy& targets) {
  require_same_space(omega.space(), c.domain(), "simulate_pearl_policy");
  require_same_space(tau.space(), c.codomain(), "simulate_pearl_policy");
  SimReport report;
  report.x_space = c.domain();
  report.y_space = c.codomain();
  report.x_counts.assign(c.domain()->size(), 0);
  report.y_counts.assign(c.codomain()->size(), 0);
  report.seed = cfg.seed;
  report.attempted = cfg.sample_count;
  TargetSource source(tau, targets);
  for (std::uint64_t i = 0; i < cfg.sample_count; ++i) {
    SplitMix64 rng = SplitMix64::stream(cfg.seed, i);
    std::size_t x = rng.sample(omega);
    std::size_t y = rng.sample(c.row(x));
    std::size_t target = source.next(rng);
    if (y == target) {
      ++report.accepted;
      ++report.x_counts[x];
      ++report.y_counts[y];
    }
  }
  if (report.accepted == 0)
    throw ZeroAcceptedError("simulate_pearl_policy: nothing admitted",
                            report.attempted);
  return report;
}

SimReport simulate_jeffrey_policy(const Dist& omega, const Channel& c,
                                  const Dist& tau, const SamplerConfig& cfg,
                                  const TargetPolicy& targets) {
  require_same_space(omega.space(), c.domain(), "simulate_jeffrey_policy");
  require_same_space(tau.space(), c.codomain(), "simulate_jeffrey_policy");
  Dist prediction = push(c, omega);
  for (std::size_t y = 0; y < tau.size(); ++y)
    if (tau.weight(y) > 0 && prediction.weight(y) == 0)
      throw ZeroValidityError(
          "simulate_jeffrey_policy: target outside the prediction's support");
  SimReport report;
  report.x_space = c.domain();
  report.y_space = c.codomain();
  report.x_counts.assign(c.domain()->size(), 0);
  report.y_counts.assign(c.codomain()->size(), 0);
  report.seed = cfg.seed;
  // Sequential by nature: the target is state carried across attempts.
  SplitMix64 rng = SplitMix64::stream(cfg.seed, 0);
  TargetSource source(tau, targets);
  std::size_t target = source.next(rng);
  const std::uint64_t attempt_cap =
      cfg.sample_count > 100000 ? cfg.sample_count * 1000 : 100000000ULL;
  while (report.accepted < cfg.sample_count &&
         report.attempted < attempt_cap) {
    ++report.attempted;
    std::size_t x = rng.sample(omega);
    std::size_t y = rng.sample(c.row(x));
    if (y == target) {
      ++report.accepted;
      ++report.x_counts[x];
      ++report.y_counts[y];
      target = source.next(rng);
    }
  }
  if (report.accepted == 0)
    throw ZeroAcceptedError("simulate_jeffrey_policy: nothing admitted",
                            report.attempted);
  return report;
}

}  // namespace belief
