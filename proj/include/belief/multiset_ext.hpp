#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "belief/channel.hpp"

namespace belief {

// Enumeration size caps for the materialised spaces M[K](X) and X^K.
// The constructions here are intrinsically exponential; going past these
// sizes fails fast with a ResourceError instead of thrashing.
struct EnumCaps {
  std::uint64_t multiset_cap = 10000;
  std::uint64_t tuple_cap = 100000;
};

// The set M[K](X) of size-K multisets over a base space, enumerated in
// lexicographic order of count vectors under the declared base order.
// Elements get labels like "2p+1n" (non-zero counts, declared label order).
class MultisetSpace {
 public:
  MultisetSpace(SpacePtr base, std::uint64_t k, const EnumCaps& caps = {});

  const SpacePtr& base() const { return base_; }
  std::uint64_t k() const { return k_; }
  const SpacePtr& space() const { return space_; }
  std::size_t size() const { return elements_.size(); }

  const std::vector<std::uint64_t>& counts(std::size_t i) const {
    return elements_.at(i);
  }
  Multiset element(std::size_t i) const {
    return Multiset(base_, elements_.at(i));
  }
  std::size_t index_of(const Multiset& phi) const;

 private:
  SpacePtr base_;
  std::uint64_t k_;
  std::vector<std::vector<std::uint64_t>> elements_;
  std::map<std::vector<std::uint64_t>, std::size_t> index_;
  SpacePtr space_;
};

// The set X^K in lexicographic (row-major) order, labels "(x1,...,xK)".
class TupleSpace {
 public:
  TupleSpace(SpacePtr base, std::uint64_t k, const EnumCaps& caps = {});

  const SpacePtr& base() const { return base_; }
  std::uint64_t k() const { return k_; }
  const SpacePtr& space() const { return space_; }
  std::size_t size() const { return space_->size(); }

  std::vector<std::size_t> tuple(std::size_t index) const;
  std::size_t index_of(const std::vector<std::size_t>& tuple) const;

 private:
  SpacePtr base_;
  std::uint64_t k_;
  SpacePtr space_;
};

// Canonical label "2p+1n" for a multiset (non-zero counts, declared order).
std::string multiset_label(const Multiset& phi);

// Probability of drawing psi in K independent draws from omega:
// coef(psi) * prod_x omega(x)^psi(x). Pointwise; no space enumeration.
Rat multinomial_pmf(const Dist& omega, const Multiset& psi);

// The full multinomial distribution mn[K](omega) over ms.space(), where
// ms = MultisetSpace(omega.space(), K).
Dist multinomial(const MultisetSpace& ms, const Dist& omega);

// Uniform arrangement distribution over the tuples accumulating to phi.
Dist arr(const TupleSpace& ts, const Multiset& phi);

// The extended channel M[K](c) : M[K](X) -> M[K](Y), computed through the
// acc . c^K . arr route.
Channel ext_channel(const Channel& c, const MultisetSpace& dom,
                    const MultisetSpace& cod);
Channel ext_channel(const Channel& c, std::uint64_t k,
                    const EnumCaps& caps = {});

// Jeffrey likelihood of psi: mn[K](c >> omega)(psi) with K = ||psi||.
Rat jeffrey_likelihood(const Dist& omega, const Channel& c,
                       const Multiset& psi);

// Pearl likelihood of psi: sum_x omega(x) * mn[K](c(x))(psi).
Rat pearl_likelihood(const Dist& omega, const Channel& c, const Multiset& psi);

// Update of omega by the pulled point predicate 1_psi through the channel
// x |-> mn[K](c(x)). Coincides with pearl_update_repeated.
Dist pearl_multinomial_update(const Dist& omega, const Channel& c,
                              const Multiset& psi);

// sigma = mn[K](omega) |_{M[K](c) -| 1_psi}, a distribution over M[K](X).
Dist multinomial_update(const Dist& omega, const Channel& c,
                        const Multiset& psi, const EnumCaps& caps = {});

// Expected empirical frequency: (flrn >> sigma)(x) = (1/K) sum_phi
// sigma(phi) * phi(x), for sigma over ms.space().
Dist flrn_push(const MultisetSpace& ms, const Dist& sigma);

// The distribution omega minimising D_KL(sigma, mn[K](omega)); equals
// flrn_push(ms, sigma).
Dist variational_fit(const MultisetSpace& ms, const Dist& sigma);

// Verifies M[K](c^dag_omega) = (M[K](c))^dag_{mn[K](omega)} row by row,
// exactly. Requires c >> omega to have full support.
bool dagger_commutation_check(const Channel& c, const Dist& omega,
                              std::uint64_t k, const EnumCaps& caps = {});

}  // namespace belief
