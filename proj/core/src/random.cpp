#include "whitefact/random.hpp"

#include <algorithm>

namespace whitefact {

std::size_t random_index(Rng& rng, std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

FactorElement random_element(const FactorGroup& g, Rng& rng) {
  if (!g.finite()) return g.element(std::uniform_int_distribution<int>(-kIntRange, kIntRange)(rng));
  return g.element(random_index(rng, g.size()));
}

FactorElement random_nontrivial(const FactorGroup& g, Rng& rng) {
  if (!g.finite()) {
    int v = std::uniform_int_distribution<int>(1, kIntRange)(rng);
    return g.element(random_index(rng, 2) == 0 ? v : -v);
  }
  const auto all = g.elements();
  return all[1 + random_index(rng, all.size() - 1)];
}

Word random_word_of_length(const SystemRef& system, std::size_t length, Rng& rng,
                           std::optional<std::size_t> avoid_leading) {
  const std::size_t n = system->rank();
  std::vector<FactorElement> letters;
  std::size_t prev = avoid_leading.value_or(0);
  for (std::size_t k = 0; k < length; ++k) {
    std::size_t f = 1 + random_index(rng, prev == 0 ? n : n - 1);
    if (prev != 0 && f >= prev) ++f;
    letters.push_back(random_nontrivial(system->factor(f), rng));
    prev = f;
  }
  return Word::reduce(system, letters);
}

Word random_word(const SystemRef& system, std::size_t max_length, Rng& rng,
                 std::optional<std::size_t> avoid_leading) {
  return random_word_of_length(system, random_index(rng, max_length + 1), rng, avoid_leading);
}

FactorAutoPart random_factor_part(const FactorGroup& g, Rng& rng) {
  if (!g.finite()) {
    FactorAutoPart p = identity_part(g);
    if (random_index(rng, 2) == 1) p.multiplier = -1;
    return p;
  }
  const auto all = all_automorphisms(g);
  return all[random_index(rng, all.size())];
}

std::vector<FactorAutoPart> random_factor_parts(const FactorSystem& system, Rng& rng) {
  std::vector<FactorAutoPart> out;
  for (const auto& g : system.factors()) out.push_back(random_factor_part(g, rng));
  return out;
}

WhiteheadAuto random_whitehead(const FactorSystem& system, Rng& rng, bool singleton) {
  const std::size_t n = system.rank();
  const std::size_t i = 1 + random_index(rng, n);
  std::vector<std::size_t> others;
  for (std::size_t j = 1; j <= n; ++j)
    if (j != i) others.push_back(j);
  std::vector<std::size_t> y;
  if (singleton) {
    y.push_back(others[random_index(rng, others.size())]);
  } else {
    while (y.empty())
      for (std::size_t j : others)
        if (random_index(rng, 2) == 1) y.push_back(j);
  }
  return make_whitehead(system, std::move(y), random_nontrivial(system.factor(i), rng));
}

PureSymmetricAuto random_auto(const SystemRef& system, std::size_t max_conjugator, Rng& rng) {
  PureSymmetricAuto psi = PureSymmetricAuto::factor(system, random_factor_parts(*system, rng));
  const std::size_t steps = random_index(rng, 3 * max_conjugator + 2);
  auto fits = [&](const PureSymmetricAuto& f) {
    return std::all_of(f.parts().begin(), f.parts().end(), [&](const AutoPart& p) {
      return p.conjugator.length() <= max_conjugator;
    });
  };
  for (std::size_t k = 0; k < steps; ++k) {
    PureSymmetricAuto move =
        random_index(rng, 5) == 0
            ? PureSymmetricAuto::inner(random_word_of_length(system, 1, rng))
            : to_auto(system, random_whitehead(*system, rng));
    PureSymmetricAuto next = random_index(rng, 2) == 0 ? compose(move, psi) : compose(psi, move);
    if (fits(next)) psi = std::move(next);
  }
  return psi;
}

AlphaLabel random_splitting(const SystemRef& system, std::size_t max_conjugator, Rng& rng) {
  const PureSymmetricAuto psi = random_auto(system, max_conjugator, rng);
  std::vector<Word> g;
  for (const auto& p : psi.parts()) g.push_back(p.conjugator);
  return AlphaLabel(std::move(g));
}

}  // namespace whitefact
