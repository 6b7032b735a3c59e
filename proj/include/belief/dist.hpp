#pragma once

#include <cstdint>
#include <vector>

#include "belief/rational.hpp"
#include "belief/space.hpp"

namespace belief {

class Dist;
class Multiset;
class Predicate;

// A finite-support distribution with exact rational weights summing to 1.
class Dist {
 public:
  // Validates: weights aligned with the space, all >= 0, sum exactly 1,
  // non-empty support.
  Dist(SpacePtr space, std::vector<Rat> weights);

  static Dist point(const SpacePtr& space, std::size_t index);
  static Dist point(const SpacePtr& space, const std::string& label);
  static Dist uniform(const SpacePtr& space);

  const SpacePtr& space() const { return space_; }
  std::size_t size() const { return weights_.size(); }
  const Rat& weight(std::size_t i) const { return weights_[i]; }
  const Rat& weight(const std::string& label) const {
    return weights_[space_->index_of(label)];
  }
  const std::vector<Rat>& weights() const { return weights_; }

  std::vector<std::size_t> support() const;

  bool operator==(const Dist& other) const;
  bool operator!=(const Dist& other) const { return !(*this == other); }

 private:
  SpacePtr space_;
  std::vector<Rat> weights_;
};

// A finite multiset: natural multiplicities over a declared space.
class Multiset {
 public:
  Multiset(SpacePtr space, std::vector<std::uint64_t> counts);

  static Multiset empty(const SpacePtr& space);

  const SpacePtr& space() const { return space_; }
  std::uint64_t count(std::size_t i) const { return counts_[i]; }
  std::uint64_t count(const std::string& label) const {
    return counts_[space_->index_of(label)];
  }
  const std::vector<std::uint64_t>& counts() const { return counts_; }

  std::uint64_t total() const;  // ||phi||

  bool operator==(const Multiset& other) const;
  bool operator!=(const Multiset& other) const { return !(*this == other); }

 private:
  SpacePtr space_;
  std::vector<std::uint64_t> counts_;
};

// A fuzzy predicate: each entry in [0,1].
class Predicate {
 public:
  Predicate(SpacePtr space, std::vector<Rat> values);

  static Predicate constant(const SpacePtr& space, const Rat& value);

  const SpacePtr& space() const { return space_; }
  const Rat& value(std::size_t i) const { return values_[i]; }
  const Rat& value(const std::string& label) const {
    return values_[space_->index_of(label)];
  }
  const std::vector<Rat>& values() const { return values_; }

  bool operator==(const Predicate& other) const;
  bool operator!=(const Predicate& other) const { return !(*this == other); }

 private:
  SpacePtr space_;
  std::vector<Rat> values_;
};

// 1 at x, 0 elsewhere.
Predicate point_predicate(const std::string& label, const SpacePtr& space);
Predicate point_predicate(std::size_t index, const SpacePtr& space);

// Pointwise product of two predicates on the same space.
Predicate conjoin(const Predicate& p1, const Predicate& p2);

// Pointwise n-th power; p^0 is the constant-1 predicate.
Predicate predicate_pow(const Predicate& p, std::uint64_t n);

// Validity (expected value) of p under omega: sum_x omega(x) * p(x).
Rat validity(const Dist& omega, const Predicate& p);

// Conditioning: omega|_p. Throws ZeroValidityError when validity is 0.
Dist update(const Dist& omega, const Predicate& p);

// Frequentist learning: normalise counts into a distribution.
Dist flrn(const Multiset& phi);

// Accumulate a sequence of labels into a multiset over `space`.
Multiset acc(const std::vector<std::string>& labels, const SpacePtr& space);
Multiset acc_indices(const std::vector<std::size_t>& indices,
                     const SpacePtr& space);

// Multinomial coefficient ||phi||! / prod_x phi(x)!.
Int coef(const Multiset& phi);

// Product distribution over product_space(omega.space, rho.space).
Dist tensor(const Dist& omega, const Dist& rho);

// Kullback-Leibler divergence in double precision, with 0*ln(0/r) = 0.
// Throws InfiniteDivergenceError when omega(x) > 0 but rho(x) = 0.
double kl_divergence(const Dist& omega, const Dist& rho);

}  // namespace belief
