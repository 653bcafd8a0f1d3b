#include "doctest.h"
#include "oracles.hpp"
#include "whitefact/random.hpp"

using namespace whitefact;
using oracle::k3word;

namespace {

TreeVertex U(const Word& w) { return TreeVertex::u(w); }
TreeVertex C(std::size_t i, const Word& w) { return TreeVertex::c(i, w); }

}  // namespace

TEST_CASE("canonical vertices") {
  auto s = oracle::k3();
  CHECK(C(1, k3word(s, "ab")) == C(1, k3word(s, "b")));
  CHECK(C(1, k3word(s, "ab")).rep() == k3word(s, "b"));
  CHECK(C(3, k3word(s, "ba")).rep() == k3word(s, "ba"));
  CHECK(U(k3word(s, "ab")).rep() == k3word(s, "ab"));
  const auto v = v_canon(TreeVertex::Kind::C, 1, k3word(s, "ab"));
  CHECK(v_canon(v.kind(), v.factor(), v.rep()) == v);
  CHECK(U(k3word(s, "a")) != U(Word(s)));
}

TEST_CASE("right action") {
  auto s = oracle::k3();
  CHECK(v_act(U(Word(s)), k3word(s, "ab")) == U(k3word(s, "ab")));
  CHECK(v_act(C(1, Word(s)), k3word(s, "a")) == C(1, Word(s)));
  CHECK(v_act(C(3, k3word(s, "ba")), k3word(s, "a")) == C(3, k3word(s, "b")));
  Rng rng(2);
  auto t = oracle::mixed();
  for (int k = 0; k < 200; ++k) {
    const Word g = random_word(t, 4, rng), h = random_word(t, 4, rng);
    const TreeVertex v = random_index(rng, 2) ? U(random_word(t, 4, rng))
                                              : C(1 + random_index(rng, 3), random_word(t, 4, rng));
    CHECK(v_act(v, Word(t)) == v);
    CHECK(v_act(v_act(v, g), h) == v_act(v, g * h));
  }
}

TEST_CASE("geodesic examples") {
  auto s = oracle::k3();
  const auto e = Word(s);
  const auto p1 = geodesic(U(e), C(1, e));
  CHECK(p1 == std::vector{U(e), C(1, e)});
  CHECK(distance(U(e), U(k3word(s, "ab"))) == 4);
  const auto p5 = geodesic(U(e), C(3, k3word(s, "ba")));
  CHECK(p5 == std::vector{U(e), C(1, e), U(k3word(s, "a")), C(2, k3word(s, "a")),
                          U(k3word(s, "ba")), C(3, k3word(s, "ba"))});
  CHECK(distance(U(e), C(3, k3word(s, "ba"))) == 5);
  CHECK(geodesic(C(2, e), C(2, e)) == std::vector{C(2, e)});
  CHECK(distance(C(1, e), C(2, e)) == 2);
}

TEST_CASE("lies_between examples") {
  auto s = oracle::k3();
  const auto e = Word(s);
  CHECK(lies_between(C(1, e), U(e), C(3, k3word(s, "ba"))));
  CHECK(lies_between(U(e), U(e), C(3, k3word(s, "ba"))));
  CHECK(lies_between(C(3, k3word(s, "ba")), U(e), C(3, k3word(s, "ba"))));
  CHECK_FALSE(lies_between(C(2, e), U(e), C(1, e)));
}

TEST_CASE("BFS ball sizes") {
  auto s = oracle::k3();
  CHECK(bfs_ball(U(Word(s)), 0).vertices.size() == 1);
  CHECK(bfs_ball(U(Word(s)), 1).vertices.size() == 4);
  CHECK(bfs_ball(U(Word(s)), 2).vertices.size() == 7);
  const Ball b = bfs_ball(U(Word(s)), 4);
  const auto d = ball_distances(b, b.index_of(U(Word(s))));
  CHECK(d[b.index_of(U(k3word(s, "ab")))] == 4);
  CHECK(std::is_sorted(b.vertices.begin(), b.vertices.end()));
  // Z/3 * Z/4 * Z/2: C_i has |G_i| U-neighbours.
  auto t = oracle::z342();
  CHECK(bfs_ball(U(Word(t)), 2).vertices.size() == 1 + 3 + (2 + 3 + 1));
  CHECK(bfs_ball(C(2, Word(t)), 1).vertices.size() == 5);
}

TEST_CASE("BFS requires finite factors") {
  auto t = oracle::mixed();
  CHECK_THROWS_WITH_AS(bfs_ball(U(Word(t)), 2), "oracle requires finite factors", DomainError);
}

TEST_CASE("geodesics agree with BFS distances over a ball") {
  for (const auto& s : {oracle::k3(), oracle::z342()}) {
    const Ball b = bfs_ball(U(Word(s)), 5);
    for (std::size_t p = 0; p < b.vertices.size(); ++p) {
      const auto d = ball_distances(b, p);
      for (std::size_t q = 0; q < b.vertices.size(); ++q) {
        const auto path = geodesic(b.vertices[p], b.vertices[q]);
        REQUIRE(path.size() == d[q] + 1);
        CHECK(distance(b.vertices[p], b.vertices[q]) == d[q]);
        for (std::size_t k = 0; k + 1 < path.size(); ++k) {
          CHECK(path[k].is_u() != path[k + 1].is_u());
          const auto nb = neighbours(path[k]);
          CHECK(std::find(nb.begin(), nb.end(), path[k + 1]) != nb.end());
        }
      }
    }
  }
}

TEST_CASE("geodesics with infinite factors are consistent") {
  auto s = oracle::mixed();
  Rng rng(4);
  for (int k = 0; k < 300; ++k) {
    auto vertex = [&] {
      return random_index(rng, 2) ? U(random_word(s, 5, rng))
                                  : C(1 + random_index(rng, 3), random_word(s, 5, rng));
    };
    const TreeVertex p = vertex(), q = vertex();
    const auto path = geodesic(p, q);
    CHECK(path.front() == p);
    CHECK(path.back() == q);
    CHECK(path.size() == distance(p, q) + 1);
    CHECK(geodesic(q, p) == std::vector(path.rbegin(), path.rend()));
    const Word g = random_word(s, 3, rng);
    CHECK(distance(v_act(p, g), v_act(q, g)) == distance(p, q));
    // Every interior vertex splits the distance.
    for (std::size_t j = 0; j < path.size(); ++j) {
      CHECK(distance(p, path[j]) == j);
      CHECK(lies_between(path[j], p, q));
    }
    for (std::size_t j = 0; j + 1 < path.size(); ++j) {
      const TreeVertex& a = path[j].is_u() ? path[j] : path[j + 1];
      const TreeVertex& c = path[j].is_u() ? path[j + 1] : path[j];
      // U.g is adjacent to G_i.g
      CHECK(C(c.factor(), a.rep()) == c);
    }
  }
}

TEST_CASE("halfway lemma") {
  for (const auto& s : {oracle::z342(), oracle::mixed()}) {
    Rng rng(9);
    const std::size_t n = s->rank();
    for (int t = 0; t < 300; ++t) {
      const std::size_t j = 1 + random_index(rng, n), k = 1 + random_index(rng, n);
      const Word gj = random_word(s, 5, rng, j), gk = random_word(s, 5, rng, k);
      if (C(j, gj) == C(k, gk)) continue;
      const Word h = gk.inverse() * Word::letter(s, random_nontrivial(s->factor(k), rng)) * gk;
      const TreeVertex p = C(j, gj);
      const auto path = geodesic(p, v_act(p, h));
      REQUIRE(path.size() % 2 == 1);
      CHECK(path[path.size() / 2] == C(k, gk));
    }
  }
}

TEST_CASE("elliptic lemma and stabiliser law") {
  auto s = oracle::z342();
  Rng rng(21);
  for (int t = 0; t < 300; ++t) {
    const std::size_t i = 1 + random_index(rng, 3);
    const TreeVertex c = C(i, random_word(s, 5, rng));
    const auto nb = neighbours(c);
    const Word x = nb[random_index(rng, nb.size())].rep();
    const Word y = nb[random_index(rng, nb.size())].rep();
    CHECK(v_act(c, x.inverse() * y) == c);

    const Word h = random_index(rng, 2) ? random_word(s, 3, rng)
                                        : c.rep().inverse() * Word::letter(s, random_element(s->factor(i), rng)) * c.rep();
    CHECK(stabilises(c, h) == (c.rep() * h * c.rep().inverse()).as_element_of(i).has_value());
  }
}

TEST_CASE("vertex names") {
  auto s = oracle::k3();
  CHECK(vertex_name(U(k3word(s, "ba"))) == "U:[[2,1],[1,1]]");
  CHECK(vertex_name(C(3, Word(s))) == "C3:[]");
  CHECK(vertex_from_string(s, "C1:[[1,1],[2,1]]") == C(1, k3word(s, "b")));
}
