#include "cli/model_file.hpp"

#include <fstream>

namespace belief::cli {

namespace {

using nlohmann::json;

SpacePtr parse_space(const json& j, const std::string& field) {
  if (!j.contains(field)) throw ValidationError(field, "missing");
  const json& arr = j.at(field);
  if (!arr.is_array() || arr.empty())
    throw ValidationError(field, "must be a non-empty array of labels");
  std::vector<std::string> labels;
  for (const auto& e : arr) {
    if (!e.is_string())
      throw ValidationError(field, "labels must be strings");
    labels.push_back(e.get<std::string>());
  }
  try {
    return Space::make(std::move(labels));
  } catch (const DomainError& e) {
    throw ValidationError(field, e.what());
  }
}

Rat parse_rat(const json& v, const std::string& field) {
  if (!v.is_string())
    throw ValidationError(field,
                          "probabilities must be rational strings like "
                          "\"1/20\"; decimal floats are rejected");
  try {
    return rat_from_string(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ValidationError(field, e.what());
  }
}

std::vector<Rat> parse_weights(const json& obj, const SpacePtr& space,
                               const std::string& field) {
  if (!obj.is_object())
    throw ValidationError(field, "must be an object keyed by label");
  std::vector<Rat> w(space->size(), Rat(0));
  for (const auto& [key, value] : obj.items()) {
    if (!space->contains(key))
      throw ValidationError(field, "unknown label '" + key + "'");
    w[space->index_of(key)] = parse_rat(value, field + "." + key);
  }
  return w;
}

Dist parse_dist(const json& obj, const SpacePtr& space,
                const std::string& field) {
  std::vector<Rat> w = parse_weights(obj, space, field);
  try {
    return Dist(space, std::move(w));
  } catch (const DomainError& e) {
    throw ValidationError(field, e.what());
  }
}

}  // namespace

Dist ModelFile::effective_target() const {
  if (target) return *target;
  if (data) return flrn(*data);
  throw ValidationError("target", "neither target nor data present");
}

Multiset ModelFile::require_data() const {
  if (!data) throw ValidationError("data", "missing");
  return *data;
}

ModelFile model_from_json(const nlohmann::json& j) {
  SpacePtr states = parse_space(j, "states");
  SpacePtr outcomes = parse_space(j, "outcomes");

  if (!j.contains("prior")) throw ValidationError("prior", "missing");
  Dist prior = parse_dist(j.at("prior"), states, "prior");

  if (!j.contains("channel")) throw ValidationError("channel", "missing");
  const auto& ch = j.at("channel");
  if (!ch.is_object())
    throw ValidationError("channel", "must be an object keyed by state label");
  std::vector<std::optional<Dist>> rows(states->size());
  for (const auto& [key, value] : ch.items()) {
    if (!states->contains(key))
      throw ValidationError("channel", "unknown state label '" + key + "'");
    rows[states->index_of(key)] =
        parse_dist(value, outcomes, "channel." + key);
  }
  std::vector<Dist> dense;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i])
      throw ValidationError("channel",
                            "missing row for state '" + states->label(i) + "'");
    dense.push_back(std::move(*rows[i]));
  }
  Channel channel(states, outcomes, std::move(dense));

  std::optional<Multiset> data;
  if (j.contains("data")) {
    const auto& d = j.at("data");
    if (!d.is_object())
      throw ValidationError("data", "must be an object of label -> count");
    std::vector<std::uint64_t> counts(outcomes->size(), 0);
    for (const auto& [key, value] : d.items()) {
      if (!outcomes->contains(key))
        throw ValidationError("data", "unknown outcome label '" + key + "'");
      if (!value.is_number_unsigned())
        throw ValidationError("data." + key, "counts must be naturals");
      counts[outcomes->index_of(key)] = value.get<std::uint64_t>();
    }
    data = Multiset(outcomes, std::move(counts));
  }

  std::optional<Dist> target;
  if (j.contains("target"))
    target = parse_dist(j.at("target"), outcomes, "target");

  return ModelFile{std::move(states), std::move(outcomes), std::move(prior),
                   std::move(channel), std::move(data), std::move(target)};
}

ModelFile load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("model", "cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("model", std::string("invalid JSON: ") + e.what());
  }
  return model_from_json(j);
}

}  // namespace belief::cli
