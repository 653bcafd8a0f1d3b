#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "whitefact/labellings.hpp"

namespace whitefact {

// A volume-bounded piece of the complex of alpha and A classes: one
// representative per class, and the collapse edges between them.
struct SnBall {
  SystemRef system;
  std::size_t bound = 0;
  std::vector<AlphaLabel> alpha_classes;
  std::vector<ALabel> a_classes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (alpha index, A index)

  std::size_t candidates = 0;     // slot-canonical tuples within the bound
  std::size_t non_splitting = 0;  // candidates whose conjugates are not a free splitting
};

// Every slot-canonical tuple with volume(., 1) <= max_volume that is a free
// splitting of G, one representative per alpha class (least by total length,
// then serialized form), all their collapses up to A equivalence, and the
// collapse edges. Throws DomainError for infinite factors or max_volume < n.
SnBall enumerate_ball(const SystemRef& system, std::size_t max_volume);

struct BallReport {
  std::vector<std::string> failures;
  std::size_t alpha_count = 0;
  std::size_t a_count = 0;
  std::size_t edge_count = 0;
  std::size_t reached_base = 0;
  std::size_t max_path_volume = 0;

  bool ok() const { return failures.empty(); }
};

BallReport check_ball(const SnBall& ball);

}  // namespace whitefact
