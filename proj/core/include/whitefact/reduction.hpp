#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "whitefact/labellings.hpp"

namespace whitefact {

// C(i, g_i) lies on the j-th spoke from U.x, with U.y before it and U.z
// after it: [U.x, U.y, G_i.g_i, U.z, G_j.g_j].
struct FoldWitness {
  std::size_t i = 0;
  std::size_t j = 0;
  Word y;
  Word z;
};

// One volume-decreasing move: slot j is multiplied on the right by
// z^-1 y = g_i^-1 a g_i, with a in the operating factor G_i.
struct MoveRecord {
  std::size_t i = 0;
  std::size_t j = 0;
  FactorElement a;
  std::size_t vol_before = 0;
  std::size_t vol_after = 0;

  friend bool operator==(const MoveRecord&, const MoveRecord&) = default;
};

// Scans j = 1..n, then i != j, for C(i, g_i) on the j-th spoke. Nothing when
// no spoke passes through another slot's vertex (always the case at volume n).
std::optional<FoldWitness> find_fold(const AlphaLabel& l, const Word& x);

std::pair<AlphaLabel, MoveRecord> reduce_step(const AlphaLabel& l, const Word& x);

struct Reduction {
  AlphaLabel final;
  std::vector<MoveRecord> moves;
  std::vector<AlphaLabel> path;  // alpha labels visited, starting with the input
};

// Repeats reduce_step at x = 1 until the volume reaches n. Throws DomainError
// ("non-splitting input") if a tuple with volume > n admits no fold.
Reduction reduce_to_base(const AlphaLabel& l);

}  // namespace whitefact
