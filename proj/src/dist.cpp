#include "belief/dist.hpp"

namespace belief {

Dist::Dist(SpacePtr space, std::vector<Rat> weights)
    : space_(std::move(space)), weights_(std::move(weights)) {
  if (weights_.size() != space_->size())
    throw DomainError("distribution weight count does not match space size");
  Rat sum = 0;
  bool has_support = false;
  for (const Rat& w : weights_) {
    if (w < 0) throw DomainError("distribution weight is negative");
    if (w > 0) has_support = true;
    sum += w;
  }
  if (sum != 1) throw DomainError("distribution weights do not sum to 1");
  if (!has_support) throw DomainError("distribution has empty support");
}

Dist Dist::point(const SpacePtr& space, std::size_t index) {
  if (index >= space->size()) throw DomainError("point index out of range");
  std::vector<Rat> w(space->size(), Rat(0));
  w[index] = 1;
  return Dist(space, std::move(w));
}

Dist Dist::point(const SpacePtr& space, const std::string& label) {
  return point(space, space->index_of(label));
}

Dist Dist::uniform(const SpacePtr& space) {
  std::vector<Rat> w(space->size(), Rat(1, space->size()));
  return Dist(space, std::move(w));
}

std::vector<std::size_t> Dist::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < weights_.size(); ++i)
    if (weights_[i] > 0) out.push_back(i);
  return out;
}

bool Dist::operator==(const Dist& other) const {
  return same_space(space_, other.space_) && weights_ == other.weights_;
}

Multiset::Multiset(SpacePtr space, std::vector<std::uint64_t> counts)
    : space_(std::move(space)), counts_(std::move(counts)) {
  if (counts_.size() != space_->size())
    throw DomainError("multiset count vector does not match space size");
}

Multiset Multiset::empty(const SpacePtr& space) {
  return Multiset(space, std::vector<std::uint64_t>(space->size(), 0));
}

std::uint64_t Multiset::total() const {
  std::uint64_t t = 0;
  for (auto c : counts_) t += c;
  return t;
}

bool Multiset::operator==(const Multiset& other) const {
  return same_space(space_, other.space_) && counts_ == other.counts_;
}

Predicate::Predicate(SpacePtr space, std::vector<Rat> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != space_->size())
    throw DomainError("predicate value count does not match space size");
  for (const Rat& v : values_)
    if (v < 0 || v > 1)
      throw DomainError("predicate value outside [0,1]");
}

Predicate Predicate::constant(const SpacePtr& space, const Rat& value) {
  return Predicate(space, std::vector<Rat>(space->size(), value));
}

bool Predicate::operator==(const Predicate& other) const {
  return same_space(space_, other.space_) && values_ == other.values_;
}

Predicate point_predicate(std::size_t index, const SpacePtr& space) {
  if (index >= space->size())
    throw DomainError("point predicate index out of range");
  std::vector<Rat> v(space->size(), Rat(0));
  v[index] = 1;
  return Predicate(space, std::move(v));
}

Predicate point_predicate(const std::string& label, const SpacePtr& space) {
  return point_predicate(space->index_of(label), space);
}

Predicate conjoin(const Predicate& p1, const Predicate& p2) {
  require_same_space(p1.space(), p2.space(), "conjoin");
  std::vector<Rat> v(p1.space()->size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = p1.value(i) * p2.value(i);
  return Predicate(p1.space(), std::move(v));
}

Predicate predicate_pow(const Predicate& p, std::uint64_t n) {
  std::vector<Rat> v(p.space()->size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = rat_pow(p.value(i), n);
  return Predicate(p.space(), std::move(v));
}

Rat validity(const Dist& omega, const Predicate& p) {
  require_same_space(omega.space(), p.space(), "validity");
  Rat sum = 0;
  for (std::size_t i = 0; i < omega.size(); ++i)
    sum += omega.weight(i) * p.value(i);
  return sum;
}

Dist update(const Dist& omega, const Predicate& p) {
  Rat v = validity(omega, p);
  if (v == 0)
    throw ZeroValidityError("update: conditioning on evidence with validity 0");
  std::vector<Rat> w(omega.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    w[i] = omega.weight(i) * p.value(i) / v;
  return Dist(omega.space(), std::move(w));
}

Dist flrn(const Multiset& phi) {
  std::uint64_t k = phi.total();
  if (k == 0) throw EmptyMultisetError("flrn of the empty multiset");
  std::vector<Rat> w(phi.space()->size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = Rat(phi.count(i), k);
  return Dist(phi.space(), std::move(w));
}

Multiset acc_indices(const std::vector<std::size_t>& indices,
                     const SpacePtr& space) {
  std::vector<std::uint64_t> counts(space->size(), 0);
  for (std::size_t i : indices) {
    if (i >= space->size()) throw DomainError("acc: index out of range");
    ++counts[i];
  }
  return Multiset(space, std::move(counts));
}

Multiset acc(const std::vector<std::string>& labels, const SpacePtr& space) {
  std::vector<std::uint64_t> counts(space->size(), 0);
  for (const auto& l : labels) ++counts[space->index_of(l)];
  return Multiset(space, std::move(counts));
}

Int coef(const Multiset& phi) {
  Int c = factorial(phi.total());
  for (auto n : phi.counts()) c /= factorial(n);
  return c;
}

Dist tensor(const Dist& omega, const Dist& rho) {
  SpacePtr prod = product_space(omega.space(), rho.space());
  std::vector<Rat> w;
  w.reserve(prod->size());
  for (std::size_t i = 0; i < omega.size(); ++i)
    for (std::size_t j = 0; j < rho.size(); ++j)
      w.push_back(omega.weight(i) * rho.weight(j));
  return Dist(std::move(prod), std::move(w));
}

double kl_divergence(const Dist& omega, const Dist& rho) {
  require_same_space(omega.space(), rho.space(), "kl_divergence");
  double sum = 0.0;
  for (std::size_t i = 0; i < omega.size(); ++i) {
    const Rat& w = omega.weight(i);
    if (w == 0) continue;  // 0 * ln(0/r) = 0
    const Rat& r = rho.weight(i);
    if (r == 0)
      throw InfiniteDivergenceError(
          "kl_divergence: support of first argument not contained in second");
    sum += rat_to_double(w) * rat_log(w / r);
  }
  return sum;
}

}  // namespace belief
