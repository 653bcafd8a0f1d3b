#include "doctest.h"
#include "oracles.hpp"
#include "whitefact/factorization.hpp"
#include "whitefact/random.hpp"

using namespace whitefact;
using oracle::k3word;

namespace {

PureSymmetricAuto conj3(const SystemRef& s, const std::string& g3) {
  return PureSymmetricAuto::from_conjugators(s, {Word(s), Word(s), k3word(s, g3)});
}

PureSymmetricAuto wh(const SystemRef& s, std::vector<std::size_t> y, FactorElement x) {
  return to_auto(s, make_whitehead(*s, std::move(y), std::move(x)));
}

bool central(const FactorSystem& s, const FactorElement& x) {
  for (const auto& g : s.factor(x.factor).elements())
    if (s.mul(g, x) != s.mul(x, g)) return false;
  return true;
}

// Outer-class key of a Whitehead automorphism with nontrivial x.
std::pair<std::vector<std::size_t>, FactorElement> outer_key(const FactorSystem& s, const WhiteheadAuto& w) {
  if (!central(s, w.x)) return {w.targets, w.x};
  std::vector<std::size_t> rest;
  for (std::size_t j = 1; j <= s.rank(); ++j)
    if (j != w.operating() && std::find(w.targets.begin(), w.targets.end(), j) == w.targets.end())
      rest.push_back(j);
  if (rest.empty()) return {{}, s.factor(1).identity()};
  return std::min(std::pair{w.targets, w.x}, std::pair{rest, s.inverse(w.x)});
}

}  // namespace

TEST_CASE("apply examples") {
  auto s = oracle::k3();
  CHECK(PureSymmetricAuto::identity(s).apply(k3word(s, "ab")) == k3word(s, "ab"));
  CHECK(conj3(s, "ba").apply(k3word(s, "c")) == k3word(s, "abcba"));
  CHECK(wh(s, {3}, {1, 1}).apply(k3word(s, "b")) == k3word(s, "b"));
  CHECK(wh(s, {3}, {1, 1}).apply(k3word(s, "c")) == k3word(s, "aca"));
}

TEST_CASE("apply is a homomorphism and matches letterwise expansion") {
  for (const auto& s : {oracle::z342(), oracle::mixed()}) {
    Rng rng(6);
    for (int t = 0; t < 200; ++t) {
      const auto psi = random_auto(s, 4, rng);
      const Word u = random_word(s, 5, rng), v = random_word(s, 5, rng);
      CHECK(psi.apply(u * v) == psi.apply(u) * psi.apply(v));
      CHECK(psi.apply(u) == oracle::apply_naive(psi, u));
      CHECK(apply(psi, u.inverse()) == psi.apply(u).inverse());
    }
  }
}

TEST_CASE("composition examples") {
  auto s = oracle::k3();
  const auto psi = conj3(s, "ba");
  CHECK(compose(psi, PureSymmetricAuto::identity(s)).apply(k3word(s, "abc")) == psi.apply(k3word(s, "abc")));
  // ({G3}, a) first, then ({G3}, b): c -> a c a -> a b c b a
  const auto both = compose(wh(s, {3}, {2, 1}), wh(s, {3}, {1, 1}));
  CHECK(both.apply(k3word(s, "c")) == k3word(s, "abcba"));
  CHECK(same_automorphism(both, psi));
}

TEST_CASE("composition order and inverse law") {
  for (const auto& s : {oracle::k3(), oracle::mixed()}) {
    Rng rng(12);
    for (int t = 0; t < 100; ++t) {
      const auto f = random_auto(s, 4, rng), g = random_auto(s, 4, rng);
      const Word w = random_word(s, 4, rng);
      CHECK(compose(f, g).apply(w) == f.apply(g.apply(w)));
      const auto inv = invert(f);
      CHECK(compose(f, inv).apply(w) == w);
      CHECK(compose(inv, f).apply(w) == w);
      CHECK(same_automorphism(compose(f, inv), PureSymmetricAuto::identity(s)));
    }
  }
}

TEST_CASE("is_inner examples") {
  auto s = oracle::k3();
  CHECK(is_inner(PureSymmetricAuto::identity(s))->empty());
  const auto ab = PureSymmetricAuto::inner(k3word(s, "ab"));
  REQUIRE(is_inner(ab));
  CHECK(*is_inner(ab) == k3word(s, "ab"));
  // The same automorphism with conjugators adjusted by factor elements.
  auto t = oracle::mixed();
  const Word h = oracle::word(t, "[[1,1],[3,4],[2,-2]]");
  std::vector<AutoPart> parts;
  const FactorElement adj[] = {{1, 2}, {2, 5}, {3, 2}};
  for (std::size_t k = 1; k <= 3; ++k)
    parts.push_back({conjugation_part(t->factor(k), t->inverse(adj[k - 1])), Word::letter(t, adj[k - 1]) * h});
  const PureSymmetricAuto adjusted(t, parts);
  REQUIRE(is_inner(adjusted));
  CHECK(*is_inner(adjusted) == h);
  CHECK(same_automorphism(adjusted, PureSymmetricAuto::inner(h)));
  CHECK_FALSE(is_inner(wh(s, {3}, {1, 1})));
}

TEST_CASE("Whitehead automorphisms") {
  auto s = oracle::z342();
  CHECK_THROWS_AS(make_whitehead(*s, {1, 2}, {1, 1}), DomainError);
  CHECK_THROWS_AS(make_whitehead(*s, {4}, {1, 1}), DomainError);
  const auto w = make_whitehead(*s, {3, 2}, {1, 1});
  CHECK(w.targets == std::vector<std::size_t>{2, 3});
  // Fixes the operating factor pointwise.
  for (std::size_t i = 1; i <= 3; ++i)
    for (const auto& x : s->factor(i).elements()) {
      if (s->is_identity(x)) continue;
      for (std::size_t j = 1; j <= 3; ++j) {
        if (j == i) continue;
        const auto a = to_auto(s, make_whitehead(*s, {j}, x));
        for (const auto& g : s->factor(i).elements())
          CHECK(a.apply(Word::letter(s, g)) == Word::letter(s, g));
        const auto inv = to_auto(s, invert(*s, make_whitehead(*s, {j}, x)));
        CHECK(same_automorphism(compose(a, inv), PureSymmetricAuto::identity(s)));
      }
    }
}

// Two distinct Whitehead automorphisms lie in the same outer class only via
// the central case: for x central in the operating factor,
// (Y, x) o iota_{x^-1} = (Y', x^-1) with Y' the remaining non-operating
// factors, and (all non-operating factors, x) is inner.
TEST_CASE("Whitehead automorphisms are unique in their outer class up to the central case") {
  for (const auto& s : {oracle::z342(), make_system({FactorGroup::cyclic(2), oracle::s3_group(),
                                                     FactorGroup::cyclic(3)})}) {
    const std::size_t n = s->rank();
    std::vector<WhiteheadAuto> all;
    for (std::size_t i = 1; i <= n; ++i)
      for (const auto& x : s->factor(i).elements()) {
        if (s->is_identity(x)) continue;
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
          std::vector<std::size_t> y;
          for (std::size_t j = 1; j <= n; ++j)
            if (mask & (1u << (j - 1))) y.push_back(j);
          if (std::find(y.begin(), y.end(), i) == y.end()) all.push_back(make_whitehead(*s, y, x));
        }
      }
    const auto candidates = enumerate_words(s, 2);
    auto inner_by_search = [&](const PureSymmetricAuto& q) {
      return std::any_of(candidates.begin(), candidates.end(), [&](const Word& h) {
        return same_automorphism(q, PureSymmetricAuto::inner(h));
      });
    };
    for (const auto& a : all)
      for (const auto& b : all) {
        const auto q = compose(to_auto(s, a), to_auto(s, invert(*s, b)));
        const bool inner = is_inner(q).has_value();
        CHECK(inner == inner_by_search(q));
        CHECK(inner == (outer_key(*s, a) == outer_key(*s, b)));
      }
  }
  auto k = oracle::k3();
  const auto q = compose(to_auto(k, make_whitehead(*k, {2}, {1, 1})), to_auto(k, make_whitehead(*k, {3}, {1, 1})));
  CHECK(same_automorphism(q, PureSymmetricAuto::inner(k3word(k, "a"))));
}

TEST_CASE("factor automorphisms") {
  auto s = oracle::mixed();
  Rng rng(2);
  for (int t = 0; t < 50; ++t) {
    const auto parts = random_factor_parts(*s, rng);
    const auto phi = PureSymmetricAuto::factor(s, parts);
    CHECK(is_factor_automorphism(phi));
    CHECK(factor_parts(phi) == parts);
  }
  CHECK_FALSE(is_factor_automorphism(PureSymmetricAuto::inner(oracle::word(s, "[[1,1]]"))));
  CHECK_THROWS_AS(factor_parts(PureSymmetricAuto::inner(oracle::word(s, "[[1,1]]"))), DomainError);
}

TEST_CASE("outer class equality") {
  auto s = oracle::mixed();
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto psi = random_auto(s, 4, rng);
    const auto h = PureSymmetricAuto::inner(random_word(s, 3, rng));
    CHECK(same_outer_class(psi, compose(psi, h)));
    CHECK(same_outer_class(psi, compose(h, psi)));
  }
  auto k = oracle::k3();
  CHECK_FALSE(same_outer_class(wh(k, {3}, {1, 1}), wh(k, {3}, {2, 1})));
}
