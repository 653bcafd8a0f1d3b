#include "doctest.h"
#include "oracles.hpp"
#include "whitefact/random.hpp"
#include "whitefact/reduction.hpp"

using namespace whitefact;
using oracle::k3alpha;
using oracle::k3word;

TEST_CASE("fold examples") {
  auto s = oracle::k3();
  const Word e(s);
  CHECK_FALSE(find_fold(AlphaLabel::base(s), e));
  const auto f1 = find_fold(k3alpha(s, {"", "", "ba"}), e);
  REQUIRE(f1);
  CHECK(f1->i == 1);
  CHECK(f1->j == 3);
  CHECK(f1->y.empty());
  CHECK(f1->z == k3word(s, "a"));
  const auto f2 = find_fold(k3alpha(s, {"", "", "b"}), e);
  REQUIRE(f2);
  CHECK(f2->i == 2);
  CHECK(f2->j == 3);
  CHECK(f2->y.empty());
  CHECK(f2->z == k3word(s, "b"));
}

TEST_CASE("reduce_step examples") {
  auto s = oracle::k3();
  const Word e(s);
  const auto [l1, m1] = reduce_step(k3alpha(s, {"", "", "ba"}), e);
  CHECK(l1 == k3alpha(s, {"", "", "b"}));
  CHECK(m1 == MoveRecord{1, 3, {1, 1}, 7, 5});
  const auto [l2, m2] = reduce_step(l1, e);
  CHECK(l2 == AlphaLabel::base(s));
  CHECK(m2 == MoveRecord{2, 3, {2, 1}, 5, 3});
  CHECK_THROWS_WITH_AS(reduce_step(AlphaLabel::base(s), e), "already base-equivalent", DomainError);
}

TEST_CASE("reduce_to_base examples") {
  auto s = oracle::k3();
  const Reduction base = reduce_to_base(AlphaLabel::base(s));
  CHECK(base.final == AlphaLabel::base(s));
  CHECK(base.moves.empty());
  const Reduction r = reduce_to_base(k3alpha(s, {"", "", "ba"}));
  CHECK(r.final == AlphaLabel::base(s));
  CHECK(r.moves.size() == 2);
  CHECK(r.path.size() == 3);
  const Reduction aaa = reduce_to_base(k3alpha(s, {"a", "a", "a"}));
  CHECK(aaa.moves.size() <= 3);
  CHECK(is_base(aaa.final));
}

TEST_CASE("non-splitting tuples are reported") {
  auto s = oracle::k3();
  const AlphaLabel bad = k3alpha(s, {"b", "a", ""});
  CHECK(volume(bad) == 7);
  CHECK_FALSE(find_fold(bad, Word(s)));
  CHECK_THROWS_AS(reduce_to_base(bad), DomainError);
  try {
    reduce_to_base(bad);
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("non-splitting input") != std::string::npos);
  }
}

TEST_CASE("fold witnesses satisfy their invariants at random basepoints") {
  for (const auto& s : {oracle::k3(), oracle::z342(), oracle::mixed()}) {
    Rng rng(31);
    const std::size_t n = s->rank();
    for (int t = 0; t < 300; ++t) {
      const AlphaLabel l = random_splitting(s, 6, rng);
      const Word x = random_word(s, 3, rng);
      const auto fold = find_fold(l, x);
      CHECK(fold.has_value() == (volume(l, x) > n));
      if (!fold) continue;
      const TreeVertex ci = TreeVertex::c(fold->i, l.slot(fold->i));
      const TreeVertex cj = TreeVertex::c(fold->j, l.slot(fold->j));
      CHECK(fold->i != fold->j);
      CHECK(lies_between(ci, TreeVertex::u(x), cj));
      CHECK(distance(TreeVertex::u(fold->y), ci) == 1);
      CHECK(distance(TreeVertex::u(fold->z), ci) == 1);
      CHECK(distance(TreeVertex::u(x), TreeVertex::u(fold->y)) + 2 ==
            distance(TreeVertex::u(x), TreeVertex::u(fold->z)));
      const Word gi = l.slot(fold->i);
      CHECK(oracle::in_factor(gi * fold->z.inverse() * fold->y * gi.inverse(), fold->i));

      const auto [next, move] = reduce_step(l, x);
      CHECK(move.vol_before == volume(l, x));
      CHECK(move.vol_after == volume(next, x));
      CHECK(move.vol_before >= move.vol_after + 2);
      CHECK((move.vol_before - move.vol_after) % 2 == 0);
      CHECK(a_equivalent(ALabel(move.i, l.slots()), ALabel(move.i, next.slots())));
      for (std::size_t k = 1; k <= n; ++k)
        if (k != move.j) CHECK(next.slot(k) == l.slot(k));
    }
  }
}

TEST_CASE("reduction terminates within the volume bound") {
  for (const auto& s : {oracle::k3(), oracle::z342(), cyclic_system({3, 4, 2, 2}), oracle::mixed()}) {
    Rng rng(41);
    const std::size_t n = s->rank();
    for (int t = 0; t < 200; ++t) {
      const AlphaLabel l = random_splitting(s, 6, rng);
      const Reduction r = reduce_to_base(l);
      CHECK(2 * r.moves.size() <= volume(l) - n);
      CHECK(is_base(r.final));
      CHECK(volume(r.final) == n);
      REQUIRE(r.path.size() == r.moves.size() + 1);
      for (std::size_t k = 0; k < r.moves.size(); ++k) {
        const MoveRecord& m = r.moves[k];
        CHECK(a_equivalent(collapses(r.path[k])[m.i - 1], collapses(r.path[k + 1])[m.i - 1]));
        CHECK(volume(r.path[k + 1]) < volume(r.path[k]));
      }
    }
  }
}
