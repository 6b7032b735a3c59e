#include <doctest.h>

#include "belief/channel.hpp"
#include "belief/fixtures.hpp"
#include "helpers.hpp"

using namespace belief;
using namespace belief::test;

namespace {
const SpacePtr pn = Space::make({"p", "n"});
const SpacePtr dnd = Space::make({"d", "nd"});
}  // namespace

TEST_CASE("point predicates") {
  Predicate on_p = point_predicate("p", pn);
  CHECK(on_p.value("p") == 1);
  CHECK(on_p.value("n") == 0);
  Predicate on_n = point_predicate("n", pn);
  CHECK(on_n.value("p") == 0);
  CHECK(on_n.value("n") == 1);
  Predicate on_d = point_predicate("d", dnd);
  CHECK(on_d.value("d") == 1);
  CHECK(on_d.value("nd") == 0);
  CHECK_THROWS_AS(point_predicate("x", pn), DomainError);
}

TEST_CASE("conjoin") {
  Predicate on_p = point_predicate("p", pn);
  Predicate on_n = point_predicate("n", pn);
  CHECK(conjoin(on_p, on_p) == on_p);
  Predicate zero = conjoin(on_p, on_n);
  CHECK(zero.value("p") == 0);
  CHECK(zero.value("n") == 0);
  Predicate q(pn, {Rat(1, 3), Rat(2, 5)});
  CHECK(conjoin(Predicate::constant(pn, 1), q) == q);
  CHECK_THROWS_AS(conjoin(on_p, point_predicate("d", dnd)), DomainError);
}

TEST_CASE("predicate_pow") {
  Predicate q(dnd, {Rat(9, 10), Rat(1, 20)});
  CHECK(predicate_pow(q, 1) == q);
  CHECK(predicate_pow(q, 0) == Predicate::constant(dnd, 1));
  Predicate squared = predicate_pow(q, 2);
  CHECK(squared.value("d") == Rat(81, 100));
  CHECK(squared.value("nd") == Rat(1, 400));
}

TEST_CASE("validity") {
  SpacePtr ab = Space::make({"a", "b"});
  CHECK(validity(Dist::uniform(ab), point_predicate("a", ab)) == Rat(1, 2));
  DiseaseModel m = build_disease_model();
  CHECK(validity(m.prior, pull(m.test, point_predicate("p", m.outcomes))) ==
        Rat(37, 400));
  CHECK(validity(m.prior, Predicate::constant(m.states, 1)) == 1);
}

TEST_CASE("update") {
  DiseaseModel m = build_disease_model();
  CHECK(update(m.prior, Predicate::constant(m.states, 1)) == m.prior);
  Dist posterior = update(m.prior, pull(m.test, point_predicate("p", m.outcomes)));
  CHECK(posterior.weight("d") == Rat(18, 37));
  CHECK(posterior.weight("nd") == Rat(19, 37));
  CHECK(update(m.prior, point_predicate("d", m.states)) ==
        Dist::point(m.states, "d"));
  // zero validity is a hard error
  Dist point = Dist::point(m.states, "d");
  CHECK_THROWS_AS(update(point, point_predicate("nd", m.states)),
                  ZeroValidityError);
}

TEST_CASE("flrn") {
  Multiset psi(pn, {2, 1});
  Dist tau = flrn(psi);
  CHECK(tau.weight("p") == Rat(2, 3));
  CHECK(tau.weight("n") == Rat(1, 3));
  CHECK(flrn(Multiset(pn, {1, 0})) == Dist::point(pn, "p"));
  SpacePtr abc = Space::make({"a", "b", "c"});
  Dist f = flrn(Multiset(abc, {3, 2, 1}));
  CHECK(f.weight("a") == Rat(1, 2));
  CHECK(f.weight("b") == Rat(1, 3));
  CHECK(f.weight("c") == Rat(1, 6));
  CHECK_THROWS_AS(flrn(Multiset::empty(pn)), EmptyMultisetError);
}

TEST_CASE("acc") {
  SpacePtr abc = Space::make({"a", "b", "c"});
  Multiset phi = acc({"a", "b", "a", "c", "a", "b"}, abc);
  CHECK(phi == Multiset(abc, {3, 2, 1}));
  CHECK(acc({}, abc) == Multiset::empty(abc));
  CHECK(acc({"b"}, abc) == Multiset(abc, {0, 1, 0}));
  CHECK(acc({"b"}, abc).total() == 1);
}

TEST_CASE("coef") {
  SpacePtr abc = Space::make({"a", "b", "c"});
  CHECK(coef(Multiset(abc, {5, 0, 0})) == 1);
  CHECK(coef(Multiset(abc, {3, 2, 1})) == 60);
  CHECK(coef(Multiset(pn, {2, 1})) == 3);
}

TEST_CASE("coef counts the sequences accumulating to phi") {
  // brute-force enumeration oracle, ||phi|| <= 6 on up to 3 labels
  SplitMix64 rng(11);
  for (int iter = 0; iter < 30; ++iter) {
    SpacePtr space = small_space(1 + rng.next() % 3);
    std::uint64_t k = 1 + rng.next() % 6;
    Multiset phi = random_multiset(space, k, rng);
    std::uint64_t sequences = 0;
    std::uint64_t total = 1;
    for (std::uint64_t i = 0; i < k; ++i) total *= space->size();
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<std::size_t> tuple(k);
      std::uint64_t c = code;
      for (std::uint64_t j = 0; j < k; ++j) {
        tuple[j] = c % space->size();
        c /= space->size();
      }
      if (acc_indices(tuple, space) == phi) ++sequences;
    }
    CHECK(coef(phi) == sequences);
  }
}

TEST_CASE("tensor") {
  SpacePtr ab = Space::make({"a", "b"});
  Dist pp = tensor(Dist::point(ab, "a"), Dist::point(ab, "b"));
  CHECK(pp.weight("(a,b)") == 1);
  Dist uu = tensor(Dist::uniform(ab), Dist::uniform(ab));
  for (std::size_t i = 0; i < 4; ++i) CHECK(uu.weight(i) == Rat(1, 4));
  DiseaseModel m = build_disease_model();
  Dist squared = tensor(m.prior, m.prior);
  CHECK(squared.weight("(d,d)") == Rat(1, 400));
}

TEST_CASE("kl divergence") {
  DiseaseModel m = build_disease_model();
  Dist prediction = push(m.test, m.prior);
  CHECK(kl_divergence(m.target, m.target) == doctest::Approx(0.0));
  CHECK(kl_divergence(m.target, prediction) == doctest::Approx(0.98).epsilon(0.011));
  Dist jeffrey = jeffrey_update(m.prior, m.test, m.target);
  CHECK(kl_divergence(m.target, push(m.test, jeffrey)) ==
        doctest::Approx(0.24).epsilon(0.05));
  CHECK_THROWS_AS(
      kl_divergence(Dist::uniform(pn), Dist::point(pn, "p")),
      InfiniteDivergenceError);
}

TEST_CASE("update composition and validity increase properties") {
  SplitMix64 rng(7);
  for (int iter = 0; iter < 100; ++iter) {
    SpacePtr space = small_space(2 + rng.next() % 2);
    Dist omega = random_dist(space, rng);
    Predicate p1 = random_predicate(space, rng, true);
    Predicate p2 = random_predicate(space, rng, true);
    CHECK(update(update(omega, p1), p2) == update(omega, conjoin(p1, p2)));
    CHECK(validity(update(omega, p1), p1) >= validity(omega, p1));
  }
}

TEST_CASE("flrn of acc equals the empirical frequency") {
  SplitMix64 rng(5);
  for (int iter = 0; iter < 50; ++iter) {
    SpacePtr space = small_space(1 + rng.next() % 3);
    std::size_t len = 1 + rng.next() % 8;
    std::vector<std::size_t> xs(len);
    for (auto& x : xs) x = rng.next() % space->size();
    Dist f = flrn(acc_indices(xs, space));
    for (std::size_t i = 0; i < space->size(); ++i) {
      std::uint64_t occurrences = 0;
      for (auto x : xs)
        if (x == i) ++occurrences;
      CHECK(f.weight(i) == Rat(occurrences, len));
    }
  }
}

TEST_CASE("kl non-negativity on random pairs") {
  SplitMix64 rng(13);
  for (int iter = 0; iter < 100; ++iter) {
    SpacePtr space = small_space(2 + rng.next() % 2);
    Dist a = random_dist(space, rng);
    Dist b = random_dist(space, rng);
    CHECK(kl_divergence(a, b) >= -1e-12);
    CHECK(std::abs(kl_divergence(a, a)) <= 1e-12);
  }
}

TEST_CASE("distribution invariants are enforced") {
  CHECK_THROWS_AS(Dist(pn, {Rat(1, 2), Rat(1, 3)}), DomainError);
  CHECK_THROWS_AS(Dist(pn, {Rat(3, 2), Rat(-1, 2)}), DomainError);
  CHECK_THROWS_AS(Predicate(pn, {Rat(2), Rat(0)}), DomainError);
}
