#include "whitefact/selftest.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "whitefact/explorer.hpp"
#include "whitefact/factorization.hpp"
#include "whitefact/random.hpp"
#include "whitefact/reduction.hpp"
#include "whitefact/tree.hpp"

namespace whitefact {

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

std::string ratio(std::size_t good, std::size_t total) {
  return std::to_string(good) + "/" + std::to_string(total);
}

Outcome distance_oracle() {
  std::size_t pairs = 0, bad = 0;
  for (const auto& orders : {std::vector<int>{2, 2, 2}, std::vector<int>{3, 4, 2}}) {
    const SystemRef system = cyclic_system(orders);
    const Ball ball = bfs_ball(TreeVertex::u(Word(system)), 6);
    for (std::size_t p = 0; p < ball.vertices.size(); ++p) {
      const auto dist = ball_distances(ball, p);
      for (std::size_t q = 0; q < ball.vertices.size(); ++q) {
        ++pairs;
        const auto path = geodesic(ball.vertices[p], ball.vertices[q]);
        bool good = path.size() == dist[q] + 1 && distance(ball.vertices[p], ball.vertices[q]) == dist[q] &&
                    path.front() == ball.vertices[p] && path.back() == ball.vertices[q];
        for (std::size_t k = 0; good && k + 1 < path.size(); ++k) {
          const std::size_t a = ball.index_of(path[k]), b = ball.index_of(path[k + 1]);
          good = a < ball.vertices.size() && b < ball.vertices.size() &&
                 std::count(ball.adjacency[a].begin(), ball.adjacency[a].end(), b) == 1;
        }
        if (!good) ++bad;
      }
    }
  }
  return {bad == 0, ratio(pairs - bad, pairs) + " vertex pairs agree with BFS"};
}

Outcome halfway(Rng& rng) {
  const SystemRef systems[] = {cyclic_system({2, 2, 2}), cyclic_system({3, 4, 2})};
  std::size_t good = 0;
  const std::size_t total = 1000;
  for (std::size_t t = 0; t < total; ++t) {
    const SystemRef& s = systems[t % 2];
    const std::size_t n = s->rank();
    std::size_t j, k;
    Word gj(s), gk(s);
    do {
      j = 1 + random_index(rng, n);
      k = 1 + random_index(rng, n);
      gj = random_word(s, 5, rng, j);
      gk = random_word(s, 5, rng, k);
    } while (TreeVertex::c(j, gj) == TreeVertex::c(k, gk));
    const Word h = gk.inverse() * Word::letter(s, random_nontrivial(s->factor(k), rng)) * gk;
    const TreeVertex p = TreeVertex::c(j, gj);
    const TreeVertex q = v_act(p, h);
    const TreeVertex mid = TreeVertex::c(k, gk);
    const auto path = geodesic(p, q);
    const std::size_t len = path.size() - 1;
    if (len % 2 == 0 && len > 0 && path[len / 2] == mid && distance(p, mid) == len / 2 &&
        distance(mid, q) == len / 2)
      ++good;
  }
  return {good == total, ratio(good, total) + " instances have the C-vertex at the midpoint"};
}

Outcome volume_decrease(Rng& rng) {
  const SystemRef systems[] = {cyclic_system({2, 2, 2}), cyclic_system({3, 4, 2}),
                               cyclic_system({3, 4, 2, 2})};
  const std::size_t total = 1000;
  std::size_t good = 0, steps = 0;
  for (std::size_t t = 0; t < total; ++t) {
    const SystemRef& s = systems[t % 3];
    const std::size_t n = s->rank();
    AlphaLabel l = random_splitting(s, 6, rng);
    while (volume(l) <= n) l = random_splitting(s, 6, rng);
    bool ok = true;
    try {
      while (ok && volume(l) > n) {
        const auto [next, move] = reduce_step(l, Word(s));
        std::size_t before = 0, after = 0;
        for (std::size_t i = 1; i <= n; ++i) {
          before += geodesic(TreeVertex::u(Word(s)), TreeVertex::c(i, l.slot(i))).size() - 1;
          after += geodesic(TreeVertex::u(Word(s)), TreeVertex::c(i, next.slot(i))).size() - 1;
        }
        ok = after < before && (before - after) % 2 == 0 && before - after >= 2 &&
             move.vol_before == before && move.vol_after == after &&
             a_equivalent(ALabel(move.i, l.slots()), ALabel(move.i, next.slots()));
        l = next;
        ++steps;
      }
      ok = ok && is_base(l);
    } catch (const DomainError&) {
      ok = false;
    }
    if (ok) ++good;
  }
  return {good == total,
          ratio(good, total) + " labels reduce lawfully (" + std::to_string(steps) + " steps)"};
}

Outcome base_characterisation() {
  const SystemRef s = cyclic_system({2, 2, 2});
  const std::size_t n = s->rank();
  std::vector<std::vector<Word>> slot_words;
  for (std::size_t i = 1; i <= n; ++i) slot_words.push_back(enumerate_words(s, 2, i));
  const auto witnesses = enumerate_words(s, 3);
  const AlphaLabel base = AlphaLabel::base(s);
  std::size_t tuples = 0, bad = 0, based = 0;
  std::vector<Word> t(n, Word(s));
  std::function<void(std::size_t)> each = [&](std::size_t i) {
    if (i == n) {
      ++tuples;
      const AlphaLabel l(t);
      const bool by_decider = is_base(l);
      const bool by_equivalence = bool(alpha_equivalent(l, base));
      bool by_volume = false, by_search = false;
      for (const Word& x : witnesses) {
        by_volume = by_volume || volume(l, x) == n;
        bool conj = true;
        for (std::size_t k = 1; k <= n && conj; ++k)
          conj = (l.slot(k) * x.inverse()).as_element_of(k).has_value();
        by_search = by_search || conj;
      }
      if (by_decider != by_volume || by_decider != by_equivalence || by_decider != by_search) ++bad;
      if (by_decider) ++based;
      return;
    }
    for (const Word& w : slot_words[i]) {
      t[i] = w;
      each(i + 1);
    }
  };
  each(0);
  return {bad == 0, std::to_string(tuples) + " tuples, " + std::to_string(based) +
                        " base-equivalent, " + std::to_string(bad) + " discrepancies"};
}

Outcome round_trip(Rng& rng) {
  const SystemRef systems[] = {cyclic_system({2, 2, 2}), cyclic_system({3, 4, 2, 2})};
  const std::size_t total = 200;
  std::size_t good = 0, whiteheads = 0;
  for (std::size_t t = 0; t < total; ++t) {
    const SystemRef& s = systems[t % 2];
    const PureSymmetricAuto psi = random_auto(s, 6, rng);
    try {
      const FactorizationTrace trace = factorize_with_trace(psi);
      const std::size_t count = trace.factorization.whitehead.size();
      whiteheads += count;
      if (verify_factorization(psi, trace.factorization) &&
          2 * count <= trace.initial_volume - s->rank())
        ++good;
    } catch (const DomainError&) {
    }
  }
  return {good == total, ratio(good, total) + " automorphisms verified (" +
                             std::to_string(whiteheads) + " Whitehead factors)"};
}

Outcome connectivity() {
  const SnBall ball = enumerate_ball(cyclic_system({2, 2, 2}), 9);
  const BallReport report = check_ball(ball);
  std::string detail = std::to_string(report.alpha_count) + " alpha classes, " +
                       std::to_string(report.a_count) + " A classes, " +
                       std::to_string(report.edge_count) + " edges, " +
                       ratio(report.reached_base, report.alpha_count) + " reach base";
  if (!report.ok()) detail += "; first failure: " + report.failures.front();
  return {report.ok() && report.reached_base == report.alpha_count, detail};
}

bool recomposes(const PureSymmetricAuto& psi, const Factorization& f) {
  return verify_factorization(psi, f);
}

Outcome stabilisers() {
  std::size_t cases = 0, bad = 0;
  for (const auto& orders : {std::vector<int>{2, 2, 2}, std::vector<int>{3, 4, 2}}) {
    const SystemRef s = cyclic_system(orders);
    const std::size_t n = s->rank();
    struct Subject {
      PureSymmetricAuto psi;
      std::size_t operating;  // 0 for factor automorphisms
    };
    std::vector<Subject> subjects;
    std::vector<std::vector<FactorAutoPart>> factor_autos{{}};
    for (std::size_t k = 1; k <= n; ++k) {
      std::vector<std::vector<FactorAutoPart>> next;
      for (const auto& prefix : factor_autos)
        for (const auto& p : all_automorphisms(s->factor(k))) {
          next.push_back(prefix);
          next.back().push_back(p);
        }
      factor_autos = std::move(next);
    }
    for (const auto& parts : factor_autos) subjects.push_back({PureSymmetricAuto::factor(s, parts), 0});
    for (std::size_t i = 1; i <= n; ++i)
      for (const auto& x : s->factor(i).elements())
        if (!s->is_identity(x))
          for (std::size_t j = 1; j <= n; ++j)
            if (j != i) subjects.push_back({to_auto(s, make_whitehead(*s, {j}, x)), i});

    for (const Subject& sub : subjects) {
      for (std::size_t apex = 1; apex <= n; ++apex) {
        ++cases;
        const bool expected = sub.operating == 0 || sub.operating == apex;
        bool got = false;
        try {
          const Factorization f = decompose_A_stabilizer(sub.psi, apex);
          got = recomposes(sub.psi, f);
          for (const auto& w : f.whitehead)
            got = got && w.operating() == apex && w.targets.size() == 1;
          if (!got) ++bad;  // accepted but unsound
          else if (!expected) ++bad;
          continue;
        } catch (const DomainError&) {
        }
        if (expected) ++bad;
      }
      for (const Word& h : enumerate_words(s, 2)) {
        ++cases;
        const PureSymmetricAuto psi = compose(sub.psi, PureSymmetricAuto::inner(h));
        const bool expected = sub.operating == 0;
        try {
          const Factorization f = decompose_alpha_stabilizer(psi);
          if (!recomposes(psi, f) || !f.whitehead.empty() || !expected) ++bad;
        } catch (const DomainError&) {
          if (expected) ++bad;
        }
      }
    }
  }
  return {bad == 0, std::to_string(cases) + " cases, " + std::to_string(bad) + " misclassified"};
}

Outcome mutation(Rng& rng) {
  const SystemRef systems[] = {cyclic_system({2, 2, 2}), cyclic_system({3, 4, 2, 2})};
  const std::size_t total = 50;
  std::size_t mutants = 0, caught = 0;
  for (std::size_t t = 0; t < total; ++t) {
    const SystemRef& s = systems[t % 2];
    const FactorSystem& sys = *s;
    PureSymmetricAuto psi = random_auto(s, 6, rng);
    Factorization f = factorize(psi);
    while (f.whitehead.empty()) {
      psi = random_auto(s, 6, rng);
      f = factorize(psi);
    }
    auto check = [&](const Factorization& m) {
      ++mutants;
      if (!verify_factorization(psi, m)) ++caught;
    };
    for (std::size_t k = 0; k < f.whitehead.size(); ++k) {
      Factorization del = f;
      del.whitehead.erase(del.whitehead.begin() + static_cast<std::ptrdiff_t>(k));
      check(del);
      const WhiteheadAuto& w = f.whitehead[k];
      for (const auto& x : sys.factor(w.operating()).elements()) {
        if (sys.is_identity(x) || x == w.x) continue;
        Factorization m = f;
        m.whitehead[k].x = x;
        check(m);
      }
      for (std::size_t j = 1; j <= sys.rank(); ++j) {
        if (j == w.operating()) continue;
        std::vector<std::size_t> y;
        for (std::size_t q : w.targets)
          if (q != j) y.push_back(q);
        if (y.size() == w.targets.size()) y.push_back(j);
        if (y.empty()) continue;
        Factorization m = f;
        m.whitehead[k] = make_whitehead(sys, y, w.x);
        check(m);
      }
    }
  }
  return {caught == mutants, ratio(caught, mutants) + " mutants rejected over " +
                                 std::to_string(total) + " factorizations"};
}

struct CriterionInfo {
  const char* name;
  double limit;
};

constexpr CriterionInfo kCriteria[kCriterionCount] = {
    {"oracle distance equivalence", 10},  {"halfway-point lemma", 10},
    {"volume-decrease law", 30},          {"base characterisation", 60},
    {"factorization round-trip", 60},     {"connectivity at desk scale", 120},
    {"stabiliser decompositions", 30},    {"mutation sensitivity", 10},
};

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > kCriterionCount) throw DomainError("no acceptance criterion " + std::to_string(id));
  CriterionResult r;
  r.id = id;
  r.name = kCriteria[id - 1].name;
  r.limit_seconds = kCriteria[id - 1].limit;
  Rng rng(seed + static_cast<std::uint64_t>(id));
  const auto start = std::chrono::steady_clock::now();
  Outcome out{false, ""};
  try {
    switch (id) {
      case 1: out = distance_oracle(); break;
      case 2: out = halfway(rng); break;
      case 3: out = volume_decrease(rng); break;
      case 4: out = base_characterisation(); break;
      case 5: out = round_trip(rng); break;
      case 6: out = connectivity(); break;
      case 7: out = stabilisers(); break;
      case 8: out = mutation(rng); break;
    }
  } catch (const std::exception& e) {
    out = {false, std::string("error: ") + e.what()};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.checks_passed = out.ok;
  r.detail = out.detail;
  return r;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, seed));
  return out;
}

std::string format_result(const CriterionResult& r) {
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", r.seconds, r.limit_seconds);
  std::ostringstream out;
  out << (r.passed() ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << ": " << r.detail
      << " (" << timing << ")";
  return out.str();
}

}  // namespace whitefact
