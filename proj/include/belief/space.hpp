#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "belief/errors.hpp"

namespace belief {

class Space;
using SpacePtr = std::shared_ptr<const Space>;

// An explicit finite ordered set of value labels. Iteration order is always
// the declared order.
class Space {
 public:
  explicit Space(std::vector<std::string> labels);

  static SpacePtr make(std::vector<std::string> labels) {
    return std::make_shared<Space>(std::move(labels));
  }

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  bool contains(const std::string& label) const {
    return index_.count(label) != 0;
  }

  // Index of a label; throws DomainError for unknown labels.
  std::size_t index_of(const std::string& label) const;

  bool operator==(const Space& other) const { return labels_ == other.labels_; }
  bool operator!=(const Space& other) const { return !(*this == other); }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

inline bool same_space(const SpacePtr& a, const SpacePtr& b) {
  return a == b || *a == *b;
}

inline void require_same_space(const SpacePtr& a, const SpacePtr& b,
                               const char* what) {
  if (!same_space(a, b))
    throw DomainError(std::string(what) + ": value space mismatch");
}

// Product space X x Y with labels "(x,y)", ordered lexicographically in the
// declared orders (x-major).
SpacePtr product_space(const SpacePtr& a, const SpacePtr& b);

}  // namespace belief
