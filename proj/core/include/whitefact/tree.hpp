#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "whitefact/words.hpp"

namespace whitefact {

// A vertex of the universal cover of the base star labelling: either a
// U-vertex U.g (trivial stabiliser) or a C-vertex G_i.g (stabiliser G_i^g).
// C-vertices are kept coset-canonical: `rep` never starts with a G_i syllable.
class TreeVertex {
 public:
  enum class Kind { U, C };

  static TreeVertex u(Word rep);
  static TreeVertex c(std::size_t factor, const Word& rep);

  Kind kind() const { return kind_; }
  bool is_u() const { return kind_ == Kind::U; }
  bool is_c() const { return kind_ == Kind::C; }
  // 0 for U-vertices.
  std::size_t factor() const { return factor_; }
  const Word& rep() const { return rep_; }

  friend bool operator==(const TreeVertex&, const TreeVertex&) = default;
  // U-vertices first, then C-vertices by factor, then by rep (shortlex).
  friend std::strong_ordering operator<=>(const TreeVertex& a, const TreeVertex& b);

 private:
  TreeVertex(Kind kind, std::size_t factor, Word rep)
      : kind_(kind), factor_(factor), rep_(std::move(rep)) {}

  Kind kind_;
  std::size_t factor_;
  Word rep_;
};

TreeVertex v_canon(TreeVertex::Kind kind, std::size_t factor, const Word& rep);

// Right action: (H.g) . h = H.gh
TreeVertex v_act(const TreeVertex& v, const Word& g);

std::vector<TreeVertex> neighbours(const TreeVertex& v);

// The unique tree path from p to q, both ends included, read off the normal
// form of the connecting element.
std::vector<TreeVertex> geodesic(const TreeVertex& p, const TreeVertex& q);

// Same value as geodesic(p, q).size() - 1, by closed formula.
std::size_t distance(const TreeVertex& p, const TreeVertex& q);

bool lies_between(const TreeVertex& x, const TreeVertex& p, const TreeVertex& q);

// True iff h fixes v.
bool stabilises(const TreeVertex& v, const Word& h);

// Exact metric ball in the tree, found by breadth-first search. Vertices are
// sorted canonically; `adjacency` indexes into `vertices`.
struct Ball {
  TreeVertex center;
  std::size_t radius = 0;
  std::vector<TreeVertex> vertices;
  std::vector<std::size_t> depth;
  std::vector<std::vector<std::size_t>> adjacency;

  std::size_t index_of(const TreeVertex& v) const;
};

Ball bfs_ball(const TreeVertex& center, std::size_t radius);

// Distances from vertex `source` to every vertex of the ball, by BFS over the
// ball's own edges.
std::vector<std::size_t> ball_distances(const Ball& ball, std::size_t source);

// "U:<word json>" or "C<i>:<word json>"
std::string vertex_name(const TreeVertex& v);

}  // namespace whitefact
