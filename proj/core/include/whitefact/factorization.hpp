#pragma once

#include <cstddef>
#include <vector>

#include "whitefact/autos.hpp"
#include "whitefact/reduction.hpp"

namespace whitefact {

// psi = whitehead[0] o whitehead[1] o ... o whitehead[m-1] o factor o inner,
// where inner is w -> inner^-1 w inner. The rightmost map is applied first.
struct Factorization {
  std::vector<WhiteheadAuto> whitehead;
  std::vector<FactorAutoPart> factor;
  Word inner;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

PureSymmetricAuto to_auto(const SystemRef& system, const Factorization& f);

// Accumulates a product E_1 o E_2 o ... of Whitehead, factor and inner maps
// (appended left to right) and keeps it in Factorization order by pushing
// factor and inner maps to the right.
class FactorizationBuilder {
 public:
  explicit FactorizationBuilder(SystemRef system);

  void append(const WhiteheadAuto& w);
  void append(const std::vector<FactorAutoPart>& phi);
  void append_inner(const Word& h);

  const Factorization& result() const { return result_; }

 private:
  SystemRef system_;
  Factorization result_;
};

// Factor parts (x -> s^-1 x s on factor k, identity elsewhere).
std::vector<FactorAutoPart> single_conjugation(const FactorSystem& system, std::size_t k,
                                               const FactorElement& s);

// Succeeds iff psi fixes the class of the base alpha labelling; the result
// has no Whitehead factors. Throws DomainError naming the offending slot.
Factorization decompose_alpha_stabilizer(const PureSymmetricAuto& psi);

// Succeeds iff psi fixes the class of the base A labelling with apex i; every
// Whitehead factor has Y = {G_j} and operating factor G_i.
Factorization decompose_A_stabilizer(const PureSymmetricAuto& psi, std::size_t i);

// Factors psi into Whitehead automorphisms, a factor automorphism and an inner
// automorphism by reducing its conjugator tuple to the base labelling.
Factorization factorize(const PureSymmetricAuto& psi);

struct FactorizationTrace {
  Factorization factorization;
  Reduction reduction;
  std::size_t initial_volume = 0;
};

FactorizationTrace factorize_with_trace(const PureSymmetricAuto& psi);

bool verify_factorization(const PureSymmetricAuto& psi, const Factorization& f);

PureSymmetricAuto invert(const PureSymmetricAuto& psi);

// Outer-class equality: a^-1 o b is inner.
bool same_outer_class(const PureSymmetricAuto& a, const PureSymmetricAuto& b);

}  // namespace whitefact
