#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "whitefact/autos.hpp"
#include "whitefact/labellings.hpp"

namespace whitefact {

using Rng = std::mt19937_64;

// Payloads of infinite cyclic factors are drawn from [-kIntRange, kIntRange].
inline constexpr int kIntRange = 5;

std::size_t random_index(Rng& rng, std::size_t bound);  // uniform in [0, bound)

FactorElement random_element(const FactorGroup& g, Rng& rng);
FactorElement random_nontrivial(const FactorGroup& g, Rng& rng);

// Syllable length uniform in [0, max_length].
Word random_word(const SystemRef& system, std::size_t max_length, Rng& rng,
                 std::optional<std::size_t> avoid_leading = std::nullopt);
Word random_word_of_length(const SystemRef& system, std::size_t length, Rng& rng,
                           std::optional<std::size_t> avoid_leading = std::nullopt);

FactorAutoPart random_factor_part(const FactorGroup& g, Rng& rng);
std::vector<FactorAutoPart> random_factor_parts(const FactorSystem& system, Rng& rng);

// Random Y (non-empty, not containing the operating factor) unless
// `singleton` is set.
WhiteheadAuto random_whitehead(const FactorSystem& system, Rng& rng, bool singleton = false);

// A random pure symmetric automorphism: a random factor automorphism
// composed with random Whitehead and inner moves, keeping every conjugator at
// syllable length <= max_conjugator.
PureSymmetricAuto random_auto(const SystemRef& system, std::size_t max_conjugator, Rng& rng);

// The conjugator tuple of random_auto; always a free splitting.
AlphaLabel random_splitting(const SystemRef& system, std::size_t max_conjugator, Rng& rng);

}  // namespace whitefact
