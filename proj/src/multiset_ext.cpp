#include "belief/multiset_ext.hpp"

#include <algorithm>

namespace belief {

namespace {

// Stars-and-bars count C(k + n - 1, n - 1), saturating past `cap`.
std::uint64_t multiset_space_size(std::uint64_t k, std::uint64_t n,
                                  std::uint64_t cap) {
  Int c = 1;
  for (std::uint64_t i = 1; i < n; ++i) {
    c = c * (k + i) / i;
    if (c > cap + 1) return cap + 1;
  }
  return c.convert_to<std::uint64_t>();
}

void enumerate_counts(std::uint64_t remaining, std::size_t pos,
                      std::vector<std::uint64_t>& current,
                      std::vector<std::vector<std::uint64_t>>& out) {
  if (pos + 1 == current.size()) {
    current[pos] = remaining;
    out.push_back(current);
    return;
  }
  for (std::uint64_t c = 0; c <= remaining; ++c) {
    current[pos] = c;
    enumerate_counts(remaining - c, pos + 1, current, out);
  }
}

}  // namespace

std::string multiset_label(const Multiset& phi) {
  std::string label;
  for (std::size_t i = 0; i < phi.space()->size(); ++i) {
    if (phi.count(i) == 0) continue;
    if (!label.empty()) label += "+";
    label += std::to_string(phi.count(i)) + phi.space()->label(i);
  }
  return label.empty() ? "0" : label;
}

MultisetSpace::MultisetSpace(SpacePtr base, std::uint64_t k,
                             const EnumCaps& caps)
    : base_(std::move(base)), k_(k) {
  if (k_ == 0) throw DomainError("MultisetSpace requires K >= 1");
  if (multiset_space_size(k_, base_->size(), caps.multiset_cap) >
      caps.multiset_cap)
    throw ResourceError("|M[" + std::to_string(k_) + "](X)| exceeds the cap " +
                        std::to_string(caps.multiset_cap));
  std::vector<std::uint64_t> current(base_->size(), 0);
  enumerate_counts(k_, 0, current, elements_);
  std::vector<std::string> labels;
  labels.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    index_.emplace(elements_[i], i);
    labels.push_back(multiset_label(Multiset(base_, elements_[i])));
  }
  space_ = Space::make(std::move(labels));
}

std::size_t MultisetSpace::index_of(const Multiset& phi) const {
  require_same_space(phi.space(), base_, "MultisetSpace::index_of");
  auto it = index_.find(phi.counts());
  if (it == index_.end())
    throw DomainError("multiset '" + multiset_label(phi) + "' has size " +
                      std::to_string(phi.total()) + ", expected " +
                      std::to_string(k_));
  return it->second;
}

TupleSpace::TupleSpace(SpacePtr base, std::uint64_t k, const EnumCaps& caps)
    : base_(std::move(base)), k_(k) {
  if (k_ == 0) throw DomainError("TupleSpace requires K >= 1");
  Int total = 1;
  for (std::uint64_t i = 0; i < k_; ++i) {
    total *= base_->size();
    if (total > caps.tuple_cap)
      throw ResourceError("|X|^" + std::to_string(k_) + " exceeds the cap " +
                          std::to_string(caps.tuple_cap));
  }
  std::size_t n = total.convert_to<std::size_t>();
  std::vector<std::string> labels;
  labels.reserve(n);
  std::vector<std::size_t> digits(k_, 0);
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::string l = "(";
    for (std::uint64_t j = 0; j < k_; ++j) {
      if (j > 0) l += ",";
      l += base_->label(digits[j]);
    }
    l += ")";
    labels.push_back(std::move(l));
    // odometer increment, last digit fastest
    for (std::size_t j = k_; j-- > 0;) {
      if (++digits[j] < base_->size()) break;
      digits[j] = 0;
    }
  }
  space_ = Space::make(std::move(labels));
}

std::vector<std::size_t> TupleSpace::tuple(std::size_t index) const {
  std::vector<std::size_t> out(k_);
  for (std::size_t j = k_; j-- > 0;) {
    out[j] = index % base_->size();
    index /= base_->size();
  }
  return out;
}

std::size_t TupleSpace::index_of(const std::vector<std::size_t>& tuple) const {
  if (tuple.size() != k_) throw DomainError("tuple arity mismatch");
  std::size_t idx = 0;
  for (std::size_t d : tuple) {
    if (d >= base_->size()) throw DomainError("tuple digit out of range");
    idx = idx * base_->size() + d;
  }
  return idx;
}

Rat multinomial_pmf(const Dist& omega, const Multiset& psi) {
  require_same_space(omega.space(), psi.space(), "multinomial_pmf");
  if (psi.total() == 0)
    throw EmptyMultisetError("multinomial_pmf requires ||psi|| >= 1");
  Rat p(coef(psi));
  for (std::size_t i = 0; i < psi.space()->size(); ++i)
    if (psi.count(i) > 0) p *= rat_pow(omega.weight(i), psi.count(i));
  return p;
}

Dist multinomial(const MultisetSpace& ms, const Dist& omega) {
  require_same_space(omega.space(), ms.base(), "multinomial");
  std::vector<Rat> w;
  w.reserve(ms.size());
  for (std::size_t i = 0; i < ms.size(); ++i)
    w.push_back(multinomial_pmf(omega, ms.element(i)));
  return Dist(ms.space(), std::move(w));
}

Dist arr(const TupleSpace& ts, const Multiset& phi) {
  require_same_space(phi.space(), ts.base(), "arr");
  if (phi.total() != ts.k())
    throw DomainError("arr: multiset size does not match tuple arity");
  if (phi.total() == 0) throw DomainError("arr requires ||phi|| >= 1");
  Rat weight(1, coef(phi));
  std::vector<Rat> w(ts.size(), Rat(0));
  for (std::size_t idx = 0; idx < ts.size(); ++idx) {
    if (acc_indices(ts.tuple(idx), ts.base()) == phi) w[idx] = weight;
  }
  return Dist(ts.space(), std::move(w));
}

namespace {

// Row of M[K](c) at phi: push one arrangement of phi through c^K and
// accumulate. All arrangements give the same image, so one suffices.
Dist ext_row(const Channel& c, const MultisetSpace& cod, const Multiset& phi) {
  std::uint64_t k = phi.total();
  std::vector<std::size_t> xs;
  xs.reserve(k);
  for (std::size_t i = 0; i < phi.space()->size(); ++i)
    for (std::uint64_t n = 0; n < phi.count(i); ++n) xs.push_back(i);
  std::vector<Rat> w(cod.size(), Rat(0));
  std::vector<std::size_t> ys(k, 0);
  std::size_t ny = c.codomain()->size();
  while (true) {
    Rat p = 1;
    for (std::uint64_t j = 0; j < k; ++j) p *= c.row(xs[j]).weight(ys[j]);
    if (p > 0)
      w[cod.index_of(acc_indices(ys, c.codomain()))] += p;
    std::size_t j = k;
    for (; j-- > 0;) {
      if (++ys[j] < ny) break;
      ys[j] = 0;
    }
    if (j == static_cast<std::size_t>(-1)) break;
  }
  return Dist(cod.space(), std::move(w));
}

}  // namespace

Channel ext_channel(const Channel& c, const MultisetSpace& dom,
                    const MultisetSpace& cod) {
  require_same_space(dom.base(), c.domain(), "ext_channel");
  require_same_space(cod.base(), c.codomain(), "ext_channel");
  if (dom.k() != cod.k()) throw DomainError("ext_channel: K mismatch");
  std::vector<Dist> rows;
  rows.reserve(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i)
    rows.push_back(ext_row(c, cod, dom.element(i)));
  return Channel(dom.space(), cod.space(), std::move(rows));
}

Channel ext_channel(const Channel& c, std::uint64_t k, const EnumCaps& caps) {
  // Guard the y-tuple iteration with the tuple cap as well.
  TupleSpace guard(c.codomain(), k, caps);
  (void)guard;
  MultisetSpace dom(c.domain(), k, caps);
  MultisetSpace cod(c.codomain(), k, caps);
  return ext_channel(c, dom, cod);
}

Rat jeffrey_likelihood(const Dist& omega, const Channel& c,
                       const Multiset& psi) {
  return multinomial_pmf(push(c, omega), psi);
}

Rat pearl_likelihood(const Dist& omega, const Channel& c, const Multiset& psi) {
  require_same_space(omega.space(), c.domain(), "pearl_likelihood");
  require_same_space(psi.space(), c.codomain(), "pearl_likelihood");
  if (psi.total() == 0)
    throw EmptyMultisetError("pearl_likelihood requires ||psi|| >= 1");
  Rat sum = 0;
  for (std::size_t x = 0; x < omega.size(); ++x)
    sum += omega.weight(x) * multinomial_pmf(c.row(x), psi);
  return sum;
}

Dist pearl_multinomial_update(const Dist& omega, const Channel& c,
                              const Multiset& psi) {
  Rat denom = pearl_likelihood(omega, c, psi);
  if (denom == 0)
    throw ZeroValidityError(
        "pearl_multinomial_update: data multiset has Pearl likelihood 0");
  std::vector<Rat> w(omega.size());
  for (std::size_t x = 0; x < omega.size(); ++x)
    w[x] = omega.weight(x) * multinomial_pmf(c.row(x), psi) / denom;
  return Dist(omega.space(), std::move(w));
}

Dist multinomial_update(const Dist& omega, const Channel& c,
                        const Multiset& psi, const EnumCaps& caps) {
  std::uint64_t k = psi.total();
  if (k == 0)
    throw EmptyMultisetError("multinomial_update: empty data multiset");
  MultisetSpace dom(omega.space(), k, caps);
  MultisetSpace cod(c.codomain(), k, caps);
  TupleSpace guard(c.codomain(), k, caps);
  (void)guard;
  std::size_t target = cod.index_of(psi);
  Dist prior = multinomial(dom, omega);
  // (M[K](c) -| 1_psi)(phi) is the psi-entry of the row at phi.
  std::vector<Rat> pulled(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i)
    pulled[i] = ext_row(c, cod, dom.element(i)).weight(target);
  return update(prior, Predicate(dom.space(), std::move(pulled)));
}

Dist flrn_push(const MultisetSpace& ms, const Dist& sigma) {
  require_same_space(sigma.space(), ms.space(), "flrn_push");
  std::vector<Rat> w(ms.base()->size(), Rat(0));
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (sigma.weight(i) == 0) continue;
    const auto& counts = ms.counts(i);
    for (std::size_t x = 0; x < w.size(); ++x)
      w[x] += sigma.weight(i) * Rat(counts[x], ms.k());
  }
  return Dist(ms.base(), std::move(w));
}

Dist variational_fit(const MultisetSpace& ms, const Dist& sigma) {
  return flrn_push(ms, sigma);
}

bool dagger_commutation_check(const Channel& c, const Dist& omega,
                              std::uint64_t k, const EnumCaps& caps) {
  Dist prediction = push(c, omega);
  for (std::size_t y = 0; y < prediction.size(); ++y)
    if (prediction.weight(y) == 0)
      throw ZeroValidityError(
          "dagger_commutation_check requires a full-support prediction");
  Channel inv = dagger(c, omega);
  MultisetSpace mx(c.domain(), k, caps);
  MultisetSpace my(c.codomain(), k, caps);
  Channel lhs = ext_channel(inv, my, mx);
  Channel fwd = ext_channel(c, mx, my);
  Channel rhs = dagger(fwd, multinomial(mx, omega));
  return lhs == rhs;
}

}  // namespace belief
