#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli/commands.hpp"

namespace {

using namespace belief;
using namespace belief::cli;

int emit(const RunReport& report, const std::string& format) {
  if (format == "json")
    std::cout << report_to_json(report).dump(2) << "\n";
  else
    std::cout << report_to_table(report);
  return report.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and sampled belief updates for finite discrete models"};
  app.require_subcommand(1);

  std::string model_path;
  std::string format = "table";
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* sub, bool needs_model) {
    if (needs_model)
      sub->add_option("--model", model_path, "model JSON file")->required();
    sub->add_option("--format", format, "table|json")
        ->check(CLI::IsMember({"table", "json"}));
  };

  auto* update = app.add_subcommand("update", "posterior over states");
  std::string rule, method = "exact";
  add_common(update, true);
  update->add_option("--rule", rule, "pearl-repeated|pearl-single|jeffrey")
      ->required()
      ->check(CLI::IsMember({"pearl-repeated", "pearl-single", "jeffrey"}));
  update->add_option("--method", method, "exact|reject")
      ->check(CLI::IsMember({"exact", "reject"}));
  update->add_option("--samples", samples, "attempted traces");
  update->add_option("--seed", seed, "sampler seed");

  auto* likelihood = app.add_subcommand("likelihood", "data likelihood");
  std::string kind;
  add_common(likelihood, true);
  likelihood->add_option("--kind", kind, "pearl|jeffrey")
      ->required()
      ->check(CLI::IsMember({"pearl", "jeffrey"}));

  auto* check = app.add_subcommand("check", "verify a theorem on the model");
  std::string theorem;
  std::uint64_t k_value = 0;
  bool k_given = false;
  add_common(check, true);
  check->add_option("--theorem", theorem,
                    "validity-increase|kl-decrease|thm83|prop82|thm85|"
                    "lemma41|lemma53")
      ->required();
  check->add_option("--K", k_value, "draw size (default ||data||)")
      ->each([&](const std::string&) { k_given = true; });

  auto* simulate = app.add_subcommand("simulate", "run a ticker policy");
  std::string policy;
  bool cycle = false;
  add_common(simulate, true);
  simulate->add_option("--policy", policy, "pearl|jeffrey")
      ->required()
      ->check(CLI::IsMember({"pearl", "jeffrey"}));
  simulate->add_option("--samples", samples,
                       "attempts (pearl) / admissions (jeffrey)");
  simulate->add_option("--seed", seed, "sampler seed");
  simulate->add_flag("--cycle-targets", cycle,
                     "cycle deterministically through the data");

  auto* ppl = app.add_subcommand("ppl", "run a named program fixture");
  std::string prog;
  add_common(ppl, false);
  ppl->add_option("prog", prog,
                  "prog1|prog2|prog3|ticker-pearl|ticker-jeffrey")
      ->required();
  std::string ppl_method = "exact";
  ppl->add_option("--method", ppl_method, "exact|reject")
      ->check(CLI::IsMember({"exact", "reject"}));
  ppl->add_option("--samples", samples, "attempted traces");
  ppl->add_option("--seed", seed, "sampler seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // bad flags and values are validation errors: exit 2 (help stays 0)
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (update->parsed())
      return emit(cmd_update(load_model(model_path), rule, method, samples,
                             seed),
                  format);
    if (likelihood->parsed())
      return emit(cmd_likelihood(load_model(model_path), kind), format);
    if (check->parsed())
      return emit(cmd_check(load_model(model_path), theorem,
                            k_given ? std::optional<std::uint64_t>(k_value)
                                    : std::nullopt,
                            caps_from_env()),
                  format);
    if (simulate->parsed())
      return emit(cmd_simulate(load_model(model_path), policy, samples, seed,
                               cycle),
                  format);
    if (ppl->parsed())
      return emit(cmd_ppl(prog, ppl_method, samples, seed), format);
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const BeliefError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
