#include "belief/channel.hpp"

namespace belief {

Channel::Channel(SpacePtr domain, SpacePtr codomain, std::vector<Dist> rows)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      rows_(std::move(rows)) {
  if (rows_.size() != domain_->size())
    throw DomainError("channel row count does not match domain size");
  for (const Dist& r : rows_)
    require_same_space(r.space(), codomain_, "channel row");
}

Channel Channel::identity(const SpacePtr& space) {
  std::vector<Dist> rows;
  rows.reserve(space->size());
  for (std::size_t i = 0; i < space->size(); ++i)
    rows.push_back(Dist::point(space, i));
  return Channel(space, space, std::move(rows));
}

bool Channel::operator==(const Channel& other) const {
  return same_space(domain_, other.domain_) &&
         same_space(codomain_, other.codomain_) && rows_ == other.rows_;
}

Dist push(const Channel& c, const Dist& omega) {
  require_same_space(omega.space(), c.domain(), "push");
  std::vector<Rat> w(c.codomain()->size(), Rat(0));
  for (std::size_t x = 0; x < omega.size(); ++x) {
    if (omega.weight(x) == 0) continue;
    const Dist& row = c.row(x);
    for (std::size_t y = 0; y < w.size(); ++y)
      w[y] += omega.weight(x) * row.weight(y);
  }
  return Dist(c.codomain(), std::move(w));
}

Predicate pull(const Channel& c, const Predicate& q) {
  require_same_space(q.space(), c.codomain(), "pull");
  std::vector<Rat> v(c.domain()->size());
  for (std::size_t x = 0; x < v.size(); ++x) v[x] = validity(c.row(x), q);
  return Predicate(c.domain(), std::move(v));
}

Channel compose(const Channel& d, const Channel& c) {
  require_same_space(c.codomain(), d.domain(), "compose");
  std::vector<Dist> rows;
  rows.reserve(c.domain()->size());
  for (std::size_t x = 0; x < c.domain()->size(); ++x)
    rows.push_back(push(d, c.row(x)));
  return Channel(c.domain(), d.codomain(), std::move(rows));
}

Channel tensor_channel(const Channel& c, const Channel& d) {
  SpacePtr dom = product_space(c.domain(), d.domain());
  SpacePtr cod = product_space(c.codomain(), d.codomain());
  std::vector<Dist> rows;
  rows.reserve(dom->size());
  for (std::size_t x = 0; x < c.domain()->size(); ++x)
    for (std::size_t y = 0; y < d.domain()->size(); ++y) {
      Dist t = tensor(c.row(x), d.row(y));
      rows.emplace_back(cod, t.weights());
    }
  return Channel(std::move(dom), std::move(cod), std::move(rows));
}

Channel channel_pow(const Channel& c, std::uint64_t k) {
  if (k == 0) throw DomainError("channel_pow requires k >= 1");
  Channel acc = c;
  for (std::uint64_t i = 1; i < k; ++i) acc = tensor_channel(acc, c);
  return acc;
}

Dist dagger_row(const Channel& c, const Dist& omega, std::size_t y) {
  if (y >= c.codomain()->size())
    throw DomainError("dagger_row: observation index out of range");
  std::vector<Rat> num(omega.size());
  Rat denom = 0;
  for (std::size_t x = 0; x < omega.size(); ++x) {
    num[x] = omega.weight(x) * c.row(x).weight(y);
    denom += num[x];
  }
  if (denom == 0)
    throw ZeroValidityError("dagger_row: observation '" +
                            c.codomain()->label(y) +
                            "' has probability 0 under the prediction");
  for (Rat& n : num) n /= denom;
  return Dist(omega.space(), std::move(num));
}

Dist dagger_row(const Channel& c, const Dist& omega, const std::string& y) {
  return dagger_row(c, omega, c.codomain()->index_of(y));
}

Channel dagger(const Channel& c, const Dist& omega) {
  std::vector<Dist> rows;
  rows.reserve(c.codomain()->size());
  for (std::size_t y = 0; y < c.codomain()->size(); ++y)
    rows.push_back(dagger_row(c, omega, y));
  return Channel(c.codomain(), c.domain(), std::move(rows));
}

Dist pearl_update(const Dist& omega, const Channel& c, const Predicate& q) {
  return update(omega, pull(c, q));
}

Dist pearl_update_repeated(const Dist& omega, const Channel& c,
                           const Multiset& psi) {
  require_same_space(psi.space(), c.codomain(), "pearl_update_repeated");
  require_same_space(omega.space(), c.domain(), "pearl_update_repeated");
  if (psi.total() == 0)
    throw EmptyMultisetError("pearl_update_repeated: empty data multiset");
  std::vector<Rat> w(omega.size());
  Rat total = 0;
  for (std::size_t x = 0; x < omega.size(); ++x) {
    Rat prod = omega.weight(x);
    for (std::size_t y = 0; y < psi.space()->size(); ++y)
      if (psi.count(y) > 0)
        prod *= rat_pow(c.row(x).weight(y), psi.count(y));
    w[x] = prod;
    total += prod;
  }
  if (total == 0)
    throw ZeroValidityError(
        "pearl_update_repeated: data has probability 0 under every state");
  for (Rat& v : w) v /= total;
  return Dist(omega.space(), std::move(w));
}

Dist jeffrey_update(const Dist& omega, const Channel& c, const Dist& tau) {
  require_same_space(tau.space(), c.codomain(), "jeffrey_update");
  Dist prediction = push(c, omega);
  for (std::size_t y = 0; y < tau.size(); ++y)
    if (tau.weight(y) > 0 && prediction.weight(y) == 0)
      throw ZeroValidityError(
          "jeffrey_update: evidence puts mass on observation '" +
          tau.space()->label(y) + "' outside the prediction's support");
  std::vector<Rat> w(omega.size(), Rat(0));
  for (std::size_t y = 0; y < tau.size(); ++y) {
    if (tau.weight(y) == 0) continue;
    Dist row = dagger_row(c, omega, y);
    for (std::size_t x = 0; x < w.size(); ++x)
      w[x] += tau.weight(y) * row.weight(x);
  }
  return Dist(omega.space(), std::move(w));
}

}  // namespace belief
