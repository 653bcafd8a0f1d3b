#include "whitefact/labellings.hpp"

namespace whitefact {

namespace {

std::vector<Word> canonical_slots(std::vector<Word> slots) {
  if (slots.size() < 3) throw DomainError("a labelling needs one slot per factor (n >= 3)");
  const SystemRef system = slots.front().system();
  if (slots.size() != system->rank())
    throw DomainError("labelling has " + std::to_string(slots.size()) + " slots, system has " +
                      std::to_string(system->rank()) + " factors");
  for (std::size_t i = 1; i <= slots.size(); ++i) {
    require_same_system(slots.front(), slots[i - 1]);
    slots[i - 1] = slots[i - 1].strip_leading(i);
  }
  return slots;
}

// w = v . core . u with v in G_left, u in G_right (identities when absent).
struct CosetSplit {
  FactorElement left;
  Word core;
  FactorElement right;
};

CosetSplit split_double_coset(const Word& w, std::size_t left, std::size_t right) {
  const FactorSystem& sys = *w.system();
  CosetSplit out{sys.factor(left).identity(), w, sys.factor(right).identity()};
  if (out.core.leading_factor() == left) {
    out.left = out.core.syllables().front();
    out.core = out.core.strip_leading(left);
  }
  if (out.core.trailing_factor() == right) {
    out.right = out.core.syllables().back();
    out.core = out.core.strip_trailing(right);
  }
  return out;
}

}  // namespace

AlphaLabel::AlphaLabel(std::vector<Word> slots) : slots_(canonical_slots(std::move(slots))) {}

AlphaLabel AlphaLabel::base(const SystemRef& system) {
  return AlphaLabel(std::vector<Word>(system->rank(), Word(system)));
}

std::size_t AlphaLabel::total_length() const {
  std::size_t total = 0;
  for (const auto& w : slots_) total += w.length();
  return total;
}

ALabel::ALabel(std::size_t apex, std::vector<Word> slots)
    : apex_(apex), slots_(canonical_slots(std::move(slots))) {
  if (apex_ == 0 || apex_ > slots_.size())
    throw DomainError("apex " + std::to_string(apex_) + " out of range");
}

ALabel ALabel::base(const SystemRef& system, std::size_t apex) {
  return ALabel(apex, std::vector<Word>(system->rank(), Word(system)));
}

AlphaEquivalence alpha_equivalent(const AlphaLabel& l1, const AlphaLabel& l2) {
  require_same_system(l1.slot(1), l2.slot(1));
  const SystemRef& system = l1.system();
  const Word& h1 = l1.slot(1);
  const Word& k1 = l2.slot(1);
  // Candidates g = h_1^-1 u k_1 = h_2^-1 v k_2 (u in G_1, v in G_2) solve
  // v^-1 w u = w' for w = h_2 h_1^-1 and w' = k_2 k_1^-1; at most one exists.
  const CosetSplit w = split_double_coset(l1.slot(2) * h1.inverse(), 2, 1);
  const CosetSplit w2 = split_double_coset(l2.slot(2) * k1.inverse(), 2, 1);
  AlphaEquivalence out;
  if (!(w.core == w2.core)) {
    out.failing_slot = 2;
    return out;
  }
  const FactorElement u = system->mul(system->inverse(w.right), w2.right);
  const Word g = h1.inverse() * Word::letter(system, u) * k1;
  const Word g_inv = g.inverse();
  for (std::size_t j = 1; j <= l1.rank(); ++j) {
    if (!(l2.slot(j) * g_inv * l1.slot(j).inverse()).as_element_of(j)) {
      out.failing_slot = j;
      return out;
    }
  }
  out.witness = g;
  return out;
}

AEquivalence a_equivalent(const ALabel& m1, const ALabel& m2) {
  require_same_system(m1.slot(1), m2.slot(1));
  if (m1.apex() != m2.apex()) return {false, 0};
  const std::size_t i = m1.apex();
  const Word h_inv = m1.slot(i).inverse();
  const Word k_inv = m2.slot(i).inverse();
  for (std::size_t j = 1; j <= m1.rank(); ++j) {
    if (j == i) continue;
    const Word c1 = double_coset_core(m1.slot(j) * h_inv, j, i);
    const Word c2 = double_coset_core(m2.slot(j) * k_inv, j, i);
    if (!(c1 == c2)) return {false, j};
  }
  return {true, 0};
}

std::vector<ALabel> collapses(const AlphaLabel& l) {
  std::vector<ALabel> out;
  out.reserve(l.rank());
  for (std::size_t i = 1; i <= l.rank(); ++i) out.emplace_back(i, l.slots());
  return out;
}

namespace {

std::vector<Word> act_slots(const std::vector<Word>& slots, const PureSymmetricAuto& psi) {
  std::vector<Word> out;
  out.reserve(slots.size());
  for (std::size_t j = 1; j <= slots.size(); ++j)
    out.push_back(psi.part(j).conjugator * psi.apply(slots[j - 1]));
  return out;
}

}  // namespace

AlphaLabel act(const AlphaLabel& l, const PureSymmetricAuto& psi) {
  return AlphaLabel(act_slots(l.slots(), psi));
}

ALabel act(const ALabel& l, const PureSymmetricAuto& psi) {
  return ALabel(l.apex(), act_slots(l.slots(), psi));
}

SpokeGraph spoke_graph(const AlphaLabel& l, const Word& x) {
  SpokeGraph out{TreeVertex::u(x), {}, 0};
  for (std::size_t i = 1; i <= l.rank(); ++i) {
    out.spokes.push_back(geodesic(out.center, TreeVertex::c(i, l.slot(i))));
    out.volume += out.spokes.back().size() - 1;
  }
  return out;
}

std::size_t volume(const AlphaLabel& l, const Word& x) {
  const TreeVertex center = TreeVertex::u(x);
  std::size_t total = 0;
  for (std::size_t i = 1; i <= l.rank(); ++i)
    total += distance(center, TreeVertex::c(i, l.slot(i)));
  return total;
}

std::size_t volume(const AlphaLabel& l) { return volume(l, Word(l.system())); }

bool is_base(const AlphaLabel& l) {
  return static_cast<bool>(alpha_equivalent(AlphaLabel::base(l.system()), l));
}

std::optional<Word> base_witness(const AlphaLabel& l) {
  return alpha_equivalent(AlphaLabel::base(l.system()), l).witness;
}

}  // namespace whitefact
