#include "whitefact/explorer.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "whitefact/factorization.hpp"
#include "whitefact/io.hpp"
#include "whitefact/parallel.hpp"
#include "whitefact/reduction.hpp"

namespace whitefact {

namespace {

std::vector<std::vector<Word>> bounded_tuples(const SystemRef& system, std::size_t budget) {
  const std::size_t n = system->rank();
  std::vector<std::vector<Word>> slot_words;
  for (std::size_t i = 1; i <= n; ++i) slot_words.push_back(enumerate_words(system, budget, i));
  std::vector<std::vector<Word>> out;
  std::vector<Word> current;
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t i, std::size_t left) {
    if (i == n) {
      out.push_back(current);
      return;
    }
    for (const Word& w : slot_words[i]) {
      if (w.length() > left) break;  // shortlex order
      current.push_back(w);
      fill(i + 1, left - w.length());
      current.pop_back();
    }
  };
  fill(0, budget);
  return out;
}

bool is_splitting(const AlphaLabel& l) {
  try {
    reduce_to_base(l);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

}  // namespace

SnBall enumerate_ball(const SystemRef& system, std::size_t max_volume) {
  const std::size_t n = system->rank();
  if (!system->all_finite()) throw DomainError("ball enumeration requires finite factors");
  if (max_volume < n)
    throw DomainError("max volume " + std::to_string(max_volume) + " is below n = " +
                      std::to_string(n));

  struct Candidate {
    std::size_t length;
    std::string key;
    AlphaLabel label;
  };
  std::vector<Candidate> candidates;
  for (auto& t : bounded_tuples(system, (max_volume - n) / 2)) {
    AlphaLabel l(std::move(t));
    candidates.push_back({l.total_length(), alpha_to_json(l).dump(), l});
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    return std::tie(a.length, a.key) < std::tie(b.length, b.key);
  });

  std::vector<char> splitting(candidates.size());
  parallel_for(candidates.size(),
               [&](std::size_t k) { splitting[k] = is_splitting(candidates[k].label); });

  SnBall ball;
  ball.system = system;
  ball.bound = max_volume;
  ball.candidates = candidates.size();
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (!splitting[k]) {
      ++ball.non_splitting;
      continue;
    }
    const AlphaLabel& l = candidates[k].label;
    const bool seen = std::any_of(ball.alpha_classes.begin(), ball.alpha_classes.end(),
                                  [&](const AlphaLabel& r) { return bool(alpha_equivalent(r, l)); });
    if (!seen) ball.alpha_classes.push_back(l);
  }

  for (std::size_t a = 0; a < ball.alpha_classes.size(); ++a) {
    for (const ALabel& m : collapses(ball.alpha_classes[a])) {
      std::size_t idx = 0;
      while (idx < ball.a_classes.size() && !a_equivalent(ball.a_classes[idx], m)) ++idx;
      if (idx == ball.a_classes.size()) ball.a_classes.push_back(m);
      ball.edges.emplace_back(a, idx);
    }
  }
  return ball;
}

BallReport check_ball(const SnBall& ball) {
  BallReport report;
  report.alpha_count = ball.alpha_classes.size();
  report.a_count = ball.a_classes.size();
  report.edge_count = ball.edges.size();
  auto fail = [&](std::string msg) { report.failures.push_back(std::move(msg)); };
  const SystemRef& system = ball.system;
  const std::size_t n = system->rank();
  const std::string alpha = "alpha class ";

  // Bipartite by construction (edge endpoints index different lists); each
  // edge must still be a genuine collapse.
  std::vector<std::vector<std::size_t>> incident(report.alpha_count);
  for (const auto& [a, m] : ball.edges) {
    if (a >= report.alpha_count || m >= report.a_count) {
      fail("edge (" + std::to_string(a) + ", " + std::to_string(m) + ") is out of range");
      continue;
    }
    incident[a].push_back(m);
    const ALabel& target = ball.a_classes[m];
    if (target.apex() == 0 || target.apex() > n ||
        !a_equivalent(collapses(ball.alpha_classes[a])[target.apex() - 1], target))
      fail("edge (" + std::to_string(a) + ", " + std::to_string(m) + ") is not a collapse");
  }
  for (std::size_t a = 0; a < report.alpha_count; ++a) {
    std::vector<std::size_t> apexes;
    for (std::size_t m : incident[a]) apexes.push_back(ball.a_classes[m].apex());
    std::sort(apexes.begin(), apexes.end());
    apexes.erase(std::unique(apexes.begin(), apexes.end()), apexes.end());
    if (incident[a].size() != n || apexes.size() != n)
      fail(alpha + std::to_string(a) + " has " + std::to_string(incident[a].size()) +
           " collapse edges, expected " + std::to_string(n));
  }

  // Every class reduces to the base class without leaving the ball.
  std::vector<std::string> reach(report.alpha_count);
  std::vector<std::size_t> peak(report.alpha_count, 0);
  parallel_for(report.alpha_count, [&](std::size_t a) {
    try {
      const Reduction r = reduce_to_base(ball.alpha_classes[a]);
      for (const AlphaLabel& step : r.path) peak[a] = std::max(peak[a], volume(step));
      if (peak[a] > ball.bound)
        reach[a] = "reduction path reaches volume " + std::to_string(peak[a]);
      for (const MoveRecord& m : r.moves)
        if (m.vol_after >= m.vol_before) reach[a] = "reduction path does not decrease volume";
      if (!is_base(r.final)) reach[a] = "reduction ends away from the base class";
    } catch (const DomainError& e) {
      reach[a] = e.what();
    }
  });
  for (std::size_t a = 0; a < report.alpha_count; ++a) {
    report.max_path_volume = std::max(report.max_path_volume, peak[a]);
    if (reach[a].empty())
      ++report.reached_base;
    else
      fail(alpha + std::to_string(a) + ": " + reach[a]);
  }

  // The base class and its n collapses.
  const AlphaLabel base = AlphaLabel::base(system);
  std::size_t base_idx = report.alpha_count;
  for (std::size_t a = 0; a < report.alpha_count && base_idx == report.alpha_count; ++a)
    if (alpha_equivalent(ball.alpha_classes[a], base)) base_idx = a;
  if (base_idx == report.alpha_count) {
    fail("base class missing");
  } else {
    std::vector<bool> hit(n, false);
    for (std::size_t m : incident[base_idx]) {
      const ALabel& c = ball.a_classes[m];
      if (a_equivalent(c, ALabel::base(system, c.apex())))
        hit[c.apex() - 1] = true;
      else
        fail("base class collapses to a non-base A class " + std::to_string(m));
    }
    for (std::size_t i = 1; i <= n; ++i)
      if (!hit[i - 1]) fail("base class is missing the collapse with apex " + std::to_string(i));
  }

  // Fundamental domain: the automorphism read off each class carries it
  // (and its collapses) back to the base cell.
  std::vector<std::string> domain(report.alpha_count);
  parallel_for(report.alpha_count, [&](std::size_t a) {
    const AlphaLabel& l = ball.alpha_classes[a];
    try {
      const PureSymmetricAuto back =
          invert(PureSymmetricAuto::from_conjugators(system, l.slots()));
      if (!alpha_equivalent(act(l, back), base)) {
        domain[a] = "is not carried to the base class";
        return;
      }
      for (const ALabel& c : collapses(l))
        if (!a_equivalent(act(c, back), ALabel::base(system, c.apex())))
          domain[a] = "collapse with apex " + std::to_string(c.apex()) +
                      " is not carried to the base cell";
    } catch (const DomainError& e) {
      domain[a] = e.what();
    }
  });
  for (std::size_t a = 0; a < report.alpha_count; ++a)
    if (!domain[a].empty()) fail(alpha + std::to_string(a) + " " + domain[a]);

  // Representatives are pairwise inequivalent.
  for (std::size_t a = 0; a < report.alpha_count; ++a)
    for (std::size_t b = a + 1; b < report.alpha_count; ++b)
      if (alpha_equivalent(ball.alpha_classes[a], ball.alpha_classes[b]))
        fail("alpha classes " + std::to_string(a) + " and " + std::to_string(b) + " coincide");
  for (std::size_t a = 0; a < report.a_count; ++a)
    for (std::size_t b = a + 1; b < report.a_count; ++b)
      if (a_equivalent(ball.a_classes[a], ball.a_classes[b]))
        fail("A classes " + std::to_string(a) + " and " + std::to_string(b) + " coincide");
  return report;
}

}  // namespace whitefact
