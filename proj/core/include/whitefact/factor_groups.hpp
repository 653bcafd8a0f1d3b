#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "whitefact/errors.hpp"

namespace whitefact {

// Payloads of infinite cyclic factors grow without bound under composition.
using Integer = boost::multiprecision::cpp_int;

enum class FactorKind { cyclic, table, infinite_cyclic };

// An element g of a factor group G_i. `factor` is the 1-based factor index and
// is part of the element's identity: elements of different factors never mix.
struct FactorElement {
  std::size_t factor = 0;
  Integer value;  // residue mod m | table index | integer

  friend bool operator==(const FactorElement&, const FactorElement&) = default;
  friend bool operator<(const FactorElement& a, const FactorElement& b) {
    if (a.factor != b.factor) return a.factor < b.factor;
    return a.value < b.value;
  }
};

// The restriction of a factor automorphism to one factor.
//   cyclic          : x -> multiplier * x (mod m), multiplier a unit
//   infinite cyclic : x -> multiplier * x, multiplier = +-1
//   table           : x -> perm[x]
struct FactorAutoPart {
  std::size_t factor = 0;
  Integer multiplier = 1;
  std::vector<std::size_t> perm;

  friend bool operator==(const FactorAutoPart&, const FactorAutoPart&) = default;
};

// A computable factor group with 1-based index `id()` inside its system.
class FactorGroup {
 public:
  static FactorGroup cyclic(Integer order);
  static FactorGroup infinite_cyclic();
  // `inverse` may be omitted, in which case it is derived from the table.
  static FactorGroup table(std::vector<std::string> names,
                           std::vector<std::vector<std::size_t>> cayley,
                           std::size_t identity,
                           std::optional<std::vector<std::size_t>> inverse = std::nullopt);

  FactorKind kind() const { return kind_; }
  std::size_t id() const { return id_; }
  void set_id(std::size_t id) { id_ = id; }

  bool finite() const { return kind_ != FactorKind::infinite_cyclic; }
  // Element count; only meaningful for finite kinds.
  std::size_t size() const;
  const Integer& order() const { return order_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::vector<std::size_t>>& cayley() const { return cayley_; }
  const std::vector<std::size_t>& inverse_table() const { return inverse_; }
  std::size_t identity_index() const { return identity_; }

  FactorElement identity() const;
  FactorElement element(Integer payload) const;
  bool is_identity(const FactorElement& a) const;
  bool contains(const FactorElement& a) const;

  FactorElement mul(const FactorElement& a, const FactorElement& b) const;
  FactorElement inverse(const FactorElement& a) const;

  // All elements (finite kinds only), identity first.
  std::vector<FactorElement> elements() const;
  // Elements sufficient to pin down an automorphism: every element for table
  // groups, the generator 1 for cyclic kinds.
  std::vector<FactorElement> generators() const;

  // Empty optional when every invariant holds, otherwise the first violation.
  std::optional<std::string> validate() const;

  std::string element_name(const FactorElement& a) const;

 private:
  void check(const FactorElement& a) const;
  std::size_t index(const FactorElement& a) const;

  FactorKind kind_ = FactorKind::cyclic;
  std::size_t id_ = 0;
  Integer order_ = 0;
  std::vector<std::string> names_;
  std::vector<std::vector<std::size_t>> cayley_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
};

FactorElement fg_mul(const FactorGroup& g, const FactorElement& a, const FactorElement& b);

// Automorphism parts ---------------------------------------------------------

FactorAutoPart identity_part(const FactorGroup& g);
// x -> t^-1 x t on the factor containing t.
FactorAutoPart conjugation_part(const FactorGroup& g, const FactorElement& t);

FactorElement fg_apply_auto(const FactorGroup& g, const FactorAutoPart& phi,
                            const FactorElement& x);
// (f o g)(x) = f(g(x))
FactorAutoPart compose_parts(const FactorGroup& g, const FactorAutoPart& f,
                             const FactorAutoPart& h);
FactorAutoPart invert_part(const FactorGroup& g, const FactorAutoPart& phi);
bool is_identity_part(const FactorGroup& g, const FactorAutoPart& phi);

// Empty optional iff `phi` is an automorphism of `g`.
std::optional<std::string> validate_part(const FactorGroup& g, const FactorAutoPart& phi);

// Every automorphism of a finite factor, sorted and starting with the identity.
std::vector<FactorAutoPart> all_automorphisms(const FactorGroup& g);

// The ordered tuple (G_1, ..., G_n), n >= 3. Construction validates every
// factor and throws DomainError on the first violated axiom.
class FactorSystem {
 public:
  explicit FactorSystem(std::vector<FactorGroup> factors);

  std::size_t rank() const { return factors_.size(); }
  const FactorGroup& factor(std::size_t i) const;
  const std::vector<FactorGroup>& factors() const { return factors_; }
  bool all_finite() const;

  FactorElement mul(const FactorElement& a, const FactorElement& b) const {
    return factor(a.factor).mul(a, b);
  }
  FactorElement inverse(const FactorElement& a) const { return factor(a.factor).inverse(a); }
  bool is_identity(const FactorElement& a) const { return factor(a.factor).is_identity(a); }

 private:
  std::vector<FactorGroup> factors_;
};

using SystemRef = std::shared_ptr<const FactorSystem>;

SystemRef make_system(std::vector<FactorGroup> factors);
// Z/m1 * Z/m2 * ...
SystemRef cyclic_system(const std::vector<int>& orders);

}  // namespace whitefact
