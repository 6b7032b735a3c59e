#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "belief/channel.hpp"
#include "belief/rng.hpp"

namespace belief::test {

inline SpacePtr small_space(std::size_t n, const std::string& prefix = "v") {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    labels.push_back(prefix + std::to_string(i));
  return Space::make(std::move(labels));
}

// Full-support distribution with small random rational weights.
inline Dist random_dist(const SpacePtr& space, SplitMix64& rng) {
  std::vector<Rat> w(space->size());
  Rat total = 0;
  for (auto& v : w) {
    v = Rat(1 + rng.next() % 9);
    total += v;
  }
  for (auto& v : w) v /= total;
  return Dist(space, std::move(w));
}

inline Channel random_channel(const SpacePtr& dom, const SpacePtr& cod,
                              SplitMix64& rng) {
  std::vector<Dist> rows;
  for (std::size_t i = 0; i < dom->size(); ++i)
    rows.push_back(random_dist(cod, rng));
  return Channel(dom, cod, std::move(rows));
}

// Predicate with entries k/8, k in 0..8; `positive` forces k >= 1.
inline Predicate random_predicate(const SpacePtr& space, SplitMix64& rng,
                                  bool positive = false) {
  std::vector<Rat> v(space->size());
  for (auto& e : v) {
    std::uint64_t k = rng.next() % 9;
    if (positive && k == 0) k = 1;
    e = Rat(k, 8);
  }
  return Predicate(space, std::move(v));
}

inline Multiset random_multiset(const SpacePtr& space, std::uint64_t size,
                                SplitMix64& rng) {
  std::vector<std::uint64_t> counts(space->size(), 0);
  for (std::uint64_t i = 0; i < size; ++i) ++counts[rng.next() % space->size()];
  return Multiset(space, std::move(counts));
}

inline double total_variation(const Dist& a, const Dist& b) {
  double tv = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    tv += std::abs(rat_to_double(a.weight(i)) - rat_to_double(b.weight(i)));
  return tv / 2.0;
}

}  // namespace belief::test
