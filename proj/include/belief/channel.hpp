#pragma once

#include <vector>

#include "belief/dist.hpp"

namespace belief {

// A channel X -> D(Y): one distribution over the codomain per domain value.
class Channel {
 public:
  Channel(SpacePtr domain, SpacePtr codomain, std::vector<Dist> rows);

  static Channel identity(const SpacePtr& space);

  const SpacePtr& domain() const { return domain_; }
  const SpacePtr& codomain() const { return codomain_; }
  const Dist& row(std::size_t i) const { return rows_.at(i); }
  const Dist& row(const std::string& label) const {
    return rows_.at(domain_->index_of(label));
  }
  const std::vector<Dist>& rows() const { return rows_; }

  bool operator==(const Channel& other) const;
  bool operator!=(const Channel& other) const { return !(*this == other); }

 private:
  SpacePtr domain_;
  SpacePtr codomain_;
  std::vector<Dist> rows_;
};

// Pushforward (prediction): (c >> omega)(y) = sum_x omega(x) * c(x)(y).
Dist push(const Channel& c, const Dist& omega);

// Pullback predicate: (c -| q)(x) = sum_y c(x)(y) * q(y).
Predicate pull(const Channel& c, const Predicate& q);

// Sequential composition (d after c): (d . c)(x) = d >> c(x).
Channel compose(const Channel& d, const Channel& c);

// Parallel composition on product spaces: (c (x) d)(x,y) = c(x) (x) d(y).
Channel tensor_channel(const Channel& c, const Channel& d);

// K-fold tensor power of a channel; pow = 1 gives c itself.
Channel channel_pow(const Channel& c, std::uint64_t k);

// Bayesian inversion. dagger_row gives the posterior for one observation y
// and throws ZeroValidityError when (c >> omega)(y) = 0. dagger builds the
// full reversed channel and therefore requires c >> omega to have full
// support.
Dist dagger_row(const Channel& c, const Dist& omega, std::size_t y);
Dist dagger_row(const Channel& c, const Dist& omega, const std::string& y);
Channel dagger(const Channel& c, const Dist& omega);

// Pearl's update rule: omega |_{c -| q}.
Dist pearl_update(const Dist& omega, const Channel& c, const Predicate& q);

// Repeated Pearl updates, one per data point in psi, computed in closed
// form: omega(x) * prod_y c(x)(y)^psi(y), normalised. Order-independence of
// successive updates licenses the closed form.
Dist pearl_update_repeated(const Dist& omega, const Channel& c,
                           const Multiset& psi);

// Jeffrey's update rule: c^dag_omega >> tau. Requires
// support(tau) <= support(c >> omega).
Dist jeffrey_update(const Dist& omega, const Channel& c, const Dist& tau);

}  // namespace belief
