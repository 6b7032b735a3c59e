#pragma once

#include <optional>

#include "belief/multiset_ext.hpp"
#include "belief/ppl.hpp"
#include "cli/model_file.hpp"
#include "cli/report.hpp"

namespace belief::cli {

// Reads BELIEF_ENUM_CAP (a single size) into both enumeration caps.
EnumCaps caps_from_env();

// Posterior over states. rule: pearl-repeated | pearl-single | jeffrey;
// method: exact | reject.
RunReport cmd_update(const ModelFile& model, const std::string& rule,
                     const std::string& method, std::uint64_t samples,
                     std::uint64_t seed);

// kind: pearl | jeffrey.
RunReport cmd_likelihood(const ModelFile& model, const std::string& kind);

// theorem: validity-increase | kl-decrease | thm83 | prop82 | thm85 |
// lemma41 | lemma53. K defaults to ||data||.
RunReport cmd_check(const ModelFile& model, const std::string& theorem,
                    std::optional<std::uint64_t> k, const EnumCaps& caps);

// policy: pearl | jeffrey. target_cycle switches the ticker to the
// deterministic sequential mode.
RunReport cmd_simulate(const ModelFile& model, const std::string& policy,
                       std::uint64_t samples, std::uint64_t seed,
                       bool target_cycle);

// prog: prog1 | prog2 | prog3 | ticker-pearl | ticker-jeffrey.
RunReport cmd_ppl(const std::string& prog, const std::string& method,
                  std::uint64_t samples, std::uint64_t seed);

}  // namespace belief::cli
