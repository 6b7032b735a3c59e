#include "belief/space.hpp"

namespace belief {

Space::Space(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw DomainError("value space must be non-empty");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second)
      throw DomainError("duplicate label in value space: '" + labels_[i] + "'");
  }
}

std::size_t Space::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end())
    throw DomainError("unknown value '" + label + "'");
  return it->second;
}

SpacePtr product_space(const SpacePtr& a, const SpacePtr& b) {
  std::vector<std::string> labels;
  labels.reserve(a->size() * b->size());
  for (const auto& x : a->labels())
    for (const auto& y : b->labels()) labels.push_back("(" + x + "," + y + ")");
  return Space::make(std::move(labels));
}

}  // namespace belief
