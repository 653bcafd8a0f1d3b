#include "whitefact/reduction.hpp"

#include <algorithm>

namespace whitefact {

std::optional<FoldWitness> find_fold(const AlphaLabel& l, const Word& x) {
  const SpokeGraph spokes = spoke_graph(l, x);
  const std::size_t n = l.rank();
  for (std::size_t j = 1; j <= n; ++j) {
    const auto& spoke = spokes.spokes[j - 1];
    for (std::size_t i = 1; i <= n; ++i) {
      if (i == j) continue;
      const TreeVertex target = TreeVertex::c(i, l.slot(i));
      const auto it = std::find(spoke.begin(), spoke.end(), target);
      if (it == spoke.end()) continue;
      // The spoke starts at a U-vertex and ends at C(j, g_j) != target, so the
      // fold vertex always has U-neighbours on both sides.
      const auto pos = static_cast<std::size_t>(it - spoke.begin());
      return FoldWitness{i, j, spoke[pos - 1].rep(), spoke[pos + 1].rep()};
    }
  }
  return std::nullopt;
}

std::pair<AlphaLabel, MoveRecord> reduce_step(const AlphaLabel& l, const Word& x) {
  const std::size_t n = l.rank();
  const std::size_t before = volume(l, x);
  if (before == n) throw DomainError("already base-equivalent");
  const auto fold = find_fold(l, x);
  if (!fold) throw DomainError("non-splitting input: no spoke fold at volume " +
                               std::to_string(before));
  const Word c = fold->z.inverse() * fold->y;
  const Word& gi = l.slot(fold->i);
  const auto a = (gi * c * gi.inverse()).as_element_of(fold->i);
  if (!a) throw DomainError("fold witness does not stabilise its C-vertex");

  std::vector<Word> slots = l.slots();
  slots[fold->j - 1] = slots[fold->j - 1] * c;
  AlphaLabel next(std::move(slots));
  const std::size_t after = volume(next, x);
  if (after + 2 > before || (before - after) % 2 != 0)
    throw DomainError("volume did not drop by an even amount >= 2");
  return {std::move(next), MoveRecord{fold->i, fold->j, *a, before, after}};
}

Reduction reduce_to_base(const AlphaLabel& l) {
  const Word origin(l.system());
  Reduction out{l, {}, {l}};
  while (volume(out.final, origin) > l.rank()) {
    auto [next, move] = reduce_step(out.final, origin);
    out.moves.push_back(std::move(move));
    out.path.push_back(next);
    out.final = std::move(next);
  }
  if (!is_base(out.final)) throw DomainError("non-splitting input");
  return out;
}

}  // namespace whitefact
