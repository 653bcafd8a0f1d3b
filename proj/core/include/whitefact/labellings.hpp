#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "whitefact/autos.hpp"
#include "whitefact/tree.hpp"

namespace whitefact {

// (alpha : G_1^{g_1}, ..., G_n^{g_n}). Slot i is stored with any leading G_i
// syllable stripped, which does not change the conjugate subgroup.
class AlphaLabel {
 public:
  explicit AlphaLabel(std::vector<Word> slots);
  static AlphaLabel base(const SystemRef& system);

  const SystemRef& system() const { return slots_.front().system(); }
  std::size_t rank() const { return slots_.size(); }
  const std::vector<Word>& slots() const { return slots_; }
  // 1-based
  const Word& slot(std::size_t i) const { return slots_.at(i - 1); }
  std::size_t total_length() const;

  friend bool operator==(const AlphaLabel&, const AlphaLabel&) = default;

 private:
  std::vector<Word> slots_;
};

// (A : G_i^{g_i}; G_1^{g_1}, ..., G_n^{g_n}) with apex i.
class ALabel {
 public:
  ALabel(std::size_t apex, std::vector<Word> slots);
  static ALabel base(const SystemRef& system, std::size_t apex);

  std::size_t apex() const { return apex_; }
  const SystemRef& system() const { return slots_.front().system(); }
  std::size_t rank() const { return slots_.size(); }
  const std::vector<Word>& slots() const { return slots_; }
  const Word& slot(std::size_t i) const { return slots_.at(i - 1); }

  friend bool operator==(const ALabel&, const ALabel&) = default;

 private:
  std::size_t apex_;
  std::vector<Word> slots_;
};

// Outcome of the alpha equivalence decision. On success `witness` holds g
// with G_j^{k_j} = G_j^{h_j g} for every j; otherwise `failing_slot` is the
// first slot that rules out every candidate.
struct AlphaEquivalence {
  std::optional<Word> witness;
  std::size_t failing_slot = 0;

  explicit operator bool() const { return witness.has_value(); }
};

AlphaEquivalence alpha_equivalent(const AlphaLabel& l1, const AlphaLabel& l2);

// Equivalence of A-labellings. On failure `failing_slot` names the first slot
// whose double cosets differ (0 for an apex mismatch).
struct AEquivalence {
  bool equivalent = false;
  std::size_t failing_slot = 0;

  explicit operator bool() const { return equivalent; }
};

AEquivalence a_equivalent(const ALabel& m1, const ALabel& m2);

// The n collapses of an alpha labelling; the i-th has apex i.
std::vector<ALabel> collapses(const AlphaLabel& l);

// Image of a labelling under psi: slot j becomes c_j . psi(g_j) where c_j is
// psi's own conjugator for factor j.
AlphaLabel act(const AlphaLabel& l, const PureSymmetricAuto& psi);
ALabel act(const ALabel& l, const PureSymmetricAuto& psi);

struct SpokeGraph {
  TreeVertex center;
  std::vector<std::vector<TreeVertex>> spokes;  // spoke i joins U.x to G_i.g_i
  std::size_t volume = 0;
};

SpokeGraph spoke_graph(const AlphaLabel& l, const Word& x);
// Sum of the spoke lengths from U.x, counted with multiplicity.
std::size_t volume(const AlphaLabel& l, const Word& x);
std::size_t volume(const AlphaLabel& l);

bool is_base(const AlphaLabel& l);
// Some x with volume(l, x) = n exists iff l is base-equivalent; this returns it.
std::optional<Word> base_witness(const AlphaLabel& l);

}  // namespace whitefact
