#include <cstdlib>

#include "doctest.h"
#include "oracles.hpp"
#include "whitefact/explorer.hpp"

using namespace whitefact;

TEST_CASE("smallest balls") {
  auto s = oracle::k3();
  const SnBall b3 = enumerate_ball(s, 3);
  CHECK(b3.alpha_classes.size() == 1);
  CHECK(b3.a_classes.size() == 3);
  CHECK(b3.edges.size() == 3);
  CHECK(check_ball(b3).ok());
  CHECK(b3.alpha_classes[0] == AlphaLabel::base(s));
}

TEST_CASE("ball classes agree with brute-force dedup") {
  auto s = oracle::k3();
  for (std::size_t bound : {5u, 7u}) {
    const SnBall ball = enumerate_ball(s, bound);
    // Brute force: every slot-canonical splitting tuple within the bound, grouped
    // by exhaustive witness search.
    std::vector<AlphaLabel> reps, members;
    std::size_t splittings = 0;
    for (const auto& a : enumerate_words(s, 3, 1))
      for (const auto& b : enumerate_words(s, 3, 2))
        for (const auto& c : enumerate_words(s, 3, 3)) {
          const AlphaLabel l({a, b, c});
          if (volume(l) > bound) continue;
          bool splits = true;
          try {
            reduce_to_base(l);
          } catch (const DomainError&) {
            splits = false;
          }
          if (!splits) continue;
          ++splittings;
          members.push_back(l);
          bool seen = false;
          for (const auto& r : reps) seen = seen || oracle::alpha_witness(r, l, 5).has_value();
          if (!seen) reps.push_back(l);
        }
    CHECK(ball.alpha_classes.size() == reps.size());
    CHECK(ball.candidates - ball.non_splitting == splittings);
    auto key = [](const AlphaLabel& l) { return std::pair(l.total_length(), alpha_to_json(l).dump()); };
    for (const auto& rep : ball.alpha_classes) {
      CHECK(std::count_if(reps.begin(), reps.end(), [&](const AlphaLabel& r) {
              return oracle::alpha_witness(r, rep, 5).has_value();
            }) == 1);
      for (const auto& m : members)
        if (oracle::alpha_witness(rep, m, 5)) CHECK(key(rep) <= key(m));
    }
    const BallReport r = check_ball(ball);
    CHECK(r.ok());
    CHECK(r.reached_base == r.alpha_count);
  }
  CHECK(enumerate_ball(s, 5).alpha_classes.size() == 4);
}

TEST_CASE("every alpha class has n collapse edges") {
  for (const auto& s : {oracle::k3(), oracle::z342()}) {
    const SnBall ball = enumerate_ball(s, s->rank() + 4);
    std::vector<std::size_t> degree(ball.alpha_classes.size(), 0);
    for (const auto& [a, m] : ball.edges) ++degree[a];
    for (std::size_t d : degree) CHECK(d == s->rank());
    CHECK(check_ball(ball).ok());
  }
}

TEST_CASE("connectivity at bound 9") {
  const SnBall ball = enumerate_ball(oracle::k3(), 9);
  const BallReport r = check_ball(ball);
  CHECK(r.ok());
  CHECK(r.reached_base == r.alpha_count);
  CHECK(r.max_path_volume <= 9);
  CHECK(ball.candidates == 111);
}

TEST_CASE("mutated balls are flagged") {
  const SnBall ball = enumerate_ball(oracle::k3(), 7);
  SnBall cut = ball;
  const auto removed = cut.edges[4];
  cut.edges.erase(cut.edges.begin() + 4);
  const BallReport r = check_ball(cut);
  REQUIRE_FALSE(r.ok());
  const std::string expect = "alpha class " + std::to_string(removed.first) + " has 2 collapse edges";
  CHECK(std::any_of(r.failures.begin(), r.failures.end(),
                    [&](const std::string& f) { return f.find(expect) == 0; }));

  SnBall dup = ball;
  dup.alpha_classes.push_back(dup.alpha_classes.back());
  CHECK_FALSE(check_ball(dup).ok());

  SnBall wrong = ball;
  wrong.edges[0].second = wrong.edges[1].second;
  CHECK_FALSE(check_ball(wrong).ok());
}

TEST_CASE("enumeration preconditions") {
  CHECK_THROWS_AS(enumerate_ball(oracle::mixed(), 5), DomainError);
  CHECK_THROWS_AS(enumerate_ball(oracle::k3(), 2), DomainError);
}

TEST_CASE("result does not depend on the thread count") {
  auto s = oracle::z342();
  setenv("WHITEFACT_THREADS", "1", 1);
  const std::string one = sn_ball_to_json(enumerate_ball(s, 7)).dump();
  setenv("WHITEFACT_THREADS", "4", 1);
  const std::string four = sn_ball_to_json(enumerate_ball(s, 7)).dump();
  unsetenv("WHITEFACT_THREADS");
  CHECK(one == four);
}
