#include "whitefact/autos.hpp"

#include <algorithm>

namespace whitefact {

PureSymmetricAuto::PureSymmetricAuto(SystemRef system, std::vector<AutoPart> parts)
    : system_(std::move(system)), parts_(std::move(parts)) {
  if (parts_.size() != system_->rank())
    throw DomainError("automorphism needs one part per factor (" +
                      std::to_string(system_->rank()) + "), got " +
                      std::to_string(parts_.size()));
  for (std::size_t k = 1; k <= parts_.size(); ++k) {
    auto& p = parts_[k - 1];
    if (p.conjugator.system() != system_) throw DomainError("mixed-system words");
    if (auto bad = validate_part(system_->factor(k), p.phi))
      throw DomainError("part " + std::to_string(k) + ": " + *bad);
  }
}

PureSymmetricAuto PureSymmetricAuto::identity(SystemRef system) {
  return factor(system, identity_parts(*system));
}

PureSymmetricAuto PureSymmetricAuto::inner(const Word& h) {
  const SystemRef& system = h.system();
  std::vector<AutoPart> parts;
  for (std::size_t k = 1; k <= system->rank(); ++k)
    parts.push_back({identity_part(system->factor(k)), h});
  return PureSymmetricAuto(system, std::move(parts));
}

PureSymmetricAuto PureSymmetricAuto::factor(SystemRef system,
                                            std::vector<FactorAutoPart> phis) {
  std::vector<AutoPart> parts;
  for (auto& phi : phis) parts.push_back({std::move(phi), Word(system)});
  return PureSymmetricAuto(system, std::move(parts));
}

PureSymmetricAuto PureSymmetricAuto::from_conjugators(SystemRef system,
                                                      const std::vector<Word>& g) {
  std::vector<AutoPart> parts;
  for (std::size_t k = 1; k <= g.size(); ++k)
    parts.push_back({identity_part(system->factor(k)), g[k - 1]});
  return PureSymmetricAuto(system, std::move(parts));
}

Word PureSymmetricAuto::apply(const FactorElement& x) const {
  const AutoPart& p = part(x.factor);
  const FactorElement image = fg_apply_auto(system_->factor(x.factor), p.phi, x);
  return p.conjugator.inverse() * Word::letter(system_, image) * p.conjugator;
}

Word PureSymmetricAuto::apply(const Word& w) const {
  if (w.system() != system_) throw DomainError("mixed-system words");
  Word out(system_);
  for (const auto& s : w.syllables()) out = out * apply(s);
  return out;
}

WhiteheadAuto make_whitehead(const FactorSystem& system, std::vector<std::size_t> targets,
                             FactorElement x) {
  const FactorGroup& g = system.factor(x.factor);
  if (!g.contains(x)) throw DomainError("Whitehead element is not in its operating factor");
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  for (std::size_t j : targets) {
    system.factor(j);
    if (j == x.factor) throw DomainError("operating factor cannot lie in Y");
  }
  return {std::move(targets), std::move(x)};
}

PureSymmetricAuto to_auto(const SystemRef& system, const WhiteheadAuto& w) {
  std::vector<Word> g(system->rank(), Word(system));
  for (std::size_t j : w.targets) g.at(j - 1) = Word::letter(system, w.x);
  return PureSymmetricAuto::from_conjugators(system, g);
}

WhiteheadAuto invert(const FactorSystem& system, const WhiteheadAuto& w) {
  return {w.targets, system.inverse(w.x)};
}

Word apply(const PureSymmetricAuto& psi, const Word& w) { return psi.apply(w); }

PureSymmetricAuto compose(const PureSymmetricAuto& f, const PureSymmetricAuto& g) {
  if (f.system() != g.system()) throw DomainError("mixed-system automorphisms");
  const SystemRef& system = f.system();
  std::vector<AutoPart> parts;
  for (std::size_t k = 1; k <= system->rank(); ++k) {
    const AutoPart& fp = f.part(k);
    const AutoPart& gp = g.part(k);
    parts.push_back({compose_parts(system->factor(k), fp.phi, gp.phi),
                     fp.conjugator * f.apply(gp.conjugator)});
  }
  return PureSymmetricAuto(system, std::move(parts));
}

bool same_automorphism(const PureSymmetricAuto& f, const PureSymmetricAuto& g) {
  if (f.system() != g.system()) return false;
  for (const auto& factor : f.system()->factors())
    for (const auto& x : factor.generators())
      if (!(f.apply(x) == g.apply(x))) return false;
  return true;
}

std::optional<Word> is_inner(const PureSymmetricAuto& psi) {
  // h = t_k^-1 g_k with t_k in G_k for every k; factors 1 and 2 pin h down
  // because g_2 g_1^-1 = t_2 t_1^-1 splits uniquely in G_2 . G_1.
  const SystemRef& system = psi.system();
  const Word& g1 = psi.part(1).conjugator;
  const Word& g2 = psi.part(2).conjugator;
  const auto split = split_product(g2 * g1.inverse(), 2, 1);
  if (!split) return std::nullopt;
  const Word h = Word::letter(system, split->second) * g1;
  if (!same_automorphism(psi, PureSymmetricAuto::inner(h))) return std::nullopt;
  return h;
}

std::vector<FactorAutoPart> identity_parts(const FactorSystem& system) {
  std::vector<FactorAutoPart> out;
  for (const auto& g : system.factors()) out.push_back(identity_part(g));
  return out;
}

std::vector<FactorAutoPart> factor_parts(const PureSymmetricAuto& psi) {
  const FactorSystem& system = *psi.system();
  std::vector<FactorAutoPart> out;
  for (std::size_t k = 1; k <= system.rank(); ++k) {
    const AutoPart& p = psi.part(k);
    const auto s = p.conjugator.as_element_of(k);
    if (!s) throw DomainError("factor " + std::to_string(k) + " is not mapped onto itself");
    const FactorGroup& g = system.factor(k);
    out.push_back(compose_parts(g, conjugation_part(g, *s), p.phi));
  }
  return out;
}

bool is_factor_automorphism(const PureSymmetricAuto& psi) {
  for (std::size_t k = 1; k <= psi.system()->rank(); ++k)
    if (!psi.part(k).conjugator.as_element_of(k)) return false;
  return true;
}

}  // namespace whitefact
