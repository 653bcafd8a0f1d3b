#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "whitefact/words.hpp"

namespace whitefact {

// psi(x) = g_k^-1 . phi_k(x) . g_k for x in G_k.
struct AutoPart {
  FactorAutoPart phi;
  Word conjugator;
};

// A pure symmetric automorphism in (phi_k, g_k) form. Parts are kept exactly
// as given; two different part lists may denote the same automorphism (see
// same_automorphism).
class PureSymmetricAuto {
 public:
  PureSymmetricAuto(SystemRef system, std::vector<AutoPart> parts);

  static PureSymmetricAuto identity(SystemRef system);
  static PureSymmetricAuto inner(const Word& h);
  static PureSymmetricAuto factor(SystemRef system, std::vector<FactorAutoPart> parts);
  // x in G_k -> g_k^-1 x g_k
  static PureSymmetricAuto from_conjugators(SystemRef system, const std::vector<Word>& g);

  const SystemRef& system() const { return system_; }
  const std::vector<AutoPart>& parts() const { return parts_; }
  const AutoPart& part(std::size_t k) const { return parts_.at(k - 1); }

  Word apply(const FactorElement& x) const;
  Word apply(const Word& w) const;

  friend bool operator==(const PureSymmetricAuto&, const PureSymmetricAuto&) = default;

 private:
  SystemRef system_;
  std::vector<AutoPart> parts_;
};

// (Y, x): conjugates every factor in Y by x (x in the operating factor, which
// is not in Y) and fixes every other factor pointwise.
struct WhiteheadAuto {
  std::vector<std::size_t> targets;  // Y, sorted
  FactorElement x;                   // x.factor is the operating factor

  std::size_t operating() const { return x.factor; }
  friend bool operator==(const WhiteheadAuto&, const WhiteheadAuto&) = default;
};

WhiteheadAuto make_whitehead(const FactorSystem& system, std::vector<std::size_t> targets,
                             FactorElement x);
PureSymmetricAuto to_auto(const SystemRef& system, const WhiteheadAuto& w);
WhiteheadAuto invert(const FactorSystem& system, const WhiteheadAuto& w);

Word apply(const PureSymmetricAuto& psi, const Word& w);

// compose(f, g).apply(w) == f.apply(g.apply(w))
PureSymmetricAuto compose(const PureSymmetricAuto& f, const PureSymmetricAuto& g);

// Equal as maps G -> G, checked on generators of every factor.
bool same_automorphism(const PureSymmetricAuto& f, const PureSymmetricAuto& g);

// h with psi = (w -> h^-1 w h), if psi is inner.
std::optional<Word> is_inner(const PureSymmetricAuto& psi);

bool is_factor_automorphism(const PureSymmetricAuto& psi);

// phi restricted to each factor, under the identity-conjugator reading.
std::vector<FactorAutoPart> factor_parts(const PureSymmetricAuto& psi);
std::vector<FactorAutoPart> identity_parts(const FactorSystem& system);

}  // namespace whitefact
