#pragma once

#include <optional>
#include <string>

#include "belief/channel.hpp"

#include <json.hpp>

namespace belief::cli {

// A statistical model as loaded from JSON: states, outcomes, an exact
// rational prior and channel, and optionally a data multiset and a target
// distribution over outcomes. Probabilities must be rational strings;
// decimal floats are rejected.
struct ModelFile {
  SpacePtr states;
  SpacePtr outcomes;
  Dist prior;
  Channel channel;
  std::optional<Multiset> data;
  std::optional<Dist> target;

  // Target distribution, defaulting to flrn(data). Throws ValidationError
  // when neither is present.
  Dist effective_target() const;
  Multiset require_data() const;
};

ModelFile model_from_json(const nlohmann::json& j);
ModelFile load_model(const std::string& path);

}  // namespace belief::cli
