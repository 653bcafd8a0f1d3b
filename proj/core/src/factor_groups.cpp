#include "whitefact/factor_groups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace whitefact {

namespace {

Integer mod_floor(const Integer& x, const Integer& m) {
  Integer r = x % m;
  if (r < 0) r += m;
  return r;
}

Integer gcd(Integer a, Integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Integer t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Inverse of a modulo m; caller guarantees gcd(a, m) = 1.
Integer mod_inverse(const Integer& a, const Integer& m) {
  Integer old_r = mod_floor(a, m), r = m;
  Integer old_s = 1, s = 0;
  while (r != 0) {
    Integer q = old_r / r;
    Integer t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  return mod_floor(old_s, m);
}

}  // namespace

FactorGroup FactorGroup::cyclic(Integer order) {
  FactorGroup g;
  g.kind_ = FactorKind::cyclic;
  g.order_ = std::move(order);
  return g;
}

FactorGroup FactorGroup::infinite_cyclic() {
  FactorGroup g;
  g.kind_ = FactorKind::infinite_cyclic;
  return g;
}

FactorGroup FactorGroup::table(std::vector<std::string> names,
                               std::vector<std::vector<std::size_t>> cayley,
                               std::size_t identity,
                               std::optional<std::vector<std::size_t>> inverse) {
  FactorGroup g;
  g.kind_ = FactorKind::table;
  const std::size_t n = cayley.size();
  if (names.size() != n) {
    names.resize(n);
    for (std::size_t k = 0; k < n; ++k)
      if (names[k].empty()) names[k] = "g" + std::to_string(k);
  }
  g.names_ = std::move(names);
  g.cayley_ = std::move(cayley);
  g.identity_ = identity;
  g.order_ = n;
  if (inverse) {
    g.inverse_ = std::move(*inverse);
  } else {
    g.inverse_.assign(n, identity);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (a < g.cayley_.size() && b < g.cayley_[a].size() && g.cayley_[a][b] == identity) {
          g.inverse_[a] = b;
          break;
        }
  }
  return g;
}

std::size_t FactorGroup::size() const {
  switch (kind_) {
    case FactorKind::cyclic:
      return order_.convert_to<std::size_t>();
    case FactorKind::table:
      return cayley_.size();
    case FactorKind::infinite_cyclic:
      break;
  }
  throw DomainError("factor " + std::to_string(id_) + " is infinite");
}

FactorElement FactorGroup::identity() const {
  if (kind_ == FactorKind::table) return {id_, Integer(identity_)};
  return {id_, Integer(0)};
}

FactorElement FactorGroup::element(Integer payload) const {
  if (kind_ == FactorKind::cyclic) payload = mod_floor(payload, order_);
  FactorElement e{id_, std::move(payload)};
  if (!contains(e))
    throw DomainError("payload " + e.value.str() + " is not an element of factor " +
                      std::to_string(id_));
  return e;
}

bool FactorGroup::is_identity(const FactorElement& a) const {
  if (kind_ == FactorKind::table) return a.value == identity_;
  return a.value == 0;
}

bool FactorGroup::contains(const FactorElement& a) const {
  if (a.factor != id_) return false;
  switch (kind_) {
    case FactorKind::cyclic:
      return a.value >= 0 && a.value < order_;
    case FactorKind::table:
      return a.value >= 0 && a.value < cayley_.size();
    case FactorKind::infinite_cyclic:
      return true;
  }
  return false;
}

void FactorGroup::check(const FactorElement& a) const {
  if (a.factor != id_) throw DomainError("cross-factor product");
  if (!contains(a))
    throw DomainError("payload " + a.value.str() + " is not an element of factor " +
                      std::to_string(id_));
}

std::size_t FactorGroup::index(const FactorElement& a) const {
  return a.value.convert_to<std::size_t>();
}

FactorElement FactorGroup::mul(const FactorElement& a, const FactorElement& b) const {
  if (a.factor != b.factor) throw DomainError("cross-factor product");
  check(a);
  check(b);
  switch (kind_) {
    case FactorKind::cyclic:
      return {id_, mod_floor(a.value + b.value, order_)};
    case FactorKind::table:
      return {id_, Integer(cayley_[index(a)][index(b)])};
    case FactorKind::infinite_cyclic:
      return {id_, a.value + b.value};
  }
  return {};
}

FactorElement FactorGroup::inverse(const FactorElement& a) const {
  check(a);
  switch (kind_) {
    case FactorKind::cyclic:
      return {id_, mod_floor(-a.value, order_)};
    case FactorKind::table:
      return {id_, Integer(inverse_[index(a)])};
    case FactorKind::infinite_cyclic:
      return {id_, -a.value};
  }
  return {};
}

std::vector<FactorElement> FactorGroup::elements() const {
  const std::size_t n = size();
  std::vector<FactorElement> out;
  out.reserve(n);
  out.push_back(identity());
  for (std::size_t k = 0; k < n; ++k) {
    FactorElement e{id_, Integer(k)};
    if (!is_identity(e)) out.push_back(std::move(e));
  }
  return out;
}

std::vector<FactorElement> FactorGroup::generators() const {
  if (kind_ == FactorKind::table) return elements();
  return {FactorElement{id_, Integer(1)}};
}

std::optional<std::string> FactorGroup::validate() const {
  switch (kind_) {
    case FactorKind::cyclic:
      if (order_ < 2) return "cyclic factor must have order at least 2";
      return std::nullopt;
    case FactorKind::infinite_cyclic:
      return std::nullopt;
    case FactorKind::table:
      break;
  }
  const std::size_t n = cayley_.size();
  if (n < 2) return "table factor must have at least 2 elements";
  for (const auto& row : cayley_)
    if (row.size() != n) return "Cayley table is not square";
  for (const auto& row : cayley_)
    for (std::size_t v : row)
      if (v >= n) return "Cayley table entry out of range";
  if (identity_ >= n) return "identity index out of range";
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> row_seen(n), col_seen(n);
    for (std::size_t b = 0; b < n; ++b) {
      if (row_seen[cayley_[a][b]] || col_seen[cayley_[b][a]]) return "not a Latin square";
      row_seen[cayley_[a][b]] = true;
      col_seen[cayley_[b][a]] = true;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    if (cayley_[identity_][a] != a || cayley_[a][identity_] != a)
      return "identity row/column is not the identity map";
  if (inverse_.size() != n) return "inverse table inconsistent";
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t b = inverse_[a];
    if (b >= n || cayley_[a][b] != identity_ || cayley_[b][a] != identity_ || inverse_[b] != a)
      return "inverse table inconsistent";
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (cayley_[cayley_[a][b]][c] != cayley_[a][cayley_[b][c]]) return "not associative";
  return std::nullopt;
}

std::string FactorGroup::element_name(const FactorElement& a) const {
  if (kind_ == FactorKind::table && contains(a)) return names_[index(a)];
  return a.value.str();
}

FactorElement fg_mul(const FactorGroup& g, const FactorElement& a, const FactorElement& b) {
  return g.mul(a, b);
}

FactorAutoPart identity_part(const FactorGroup& g) {
  FactorAutoPart p;
  p.factor = g.id();
  p.multiplier = 1;
  if (g.kind() == FactorKind::table) {
    p.perm.resize(g.size());
    std::iota(p.perm.begin(), p.perm.end(), std::size_t{0});
  }
  return p;
}

FactorAutoPart conjugation_part(const FactorGroup& g, const FactorElement& t) {
  if (t.factor != g.id()) throw DomainError("cross-factor product");
  FactorAutoPart p = identity_part(g);
  if (g.kind() != FactorKind::table) return p;
  const FactorElement t_inv = g.inverse(t);
  for (std::size_t k = 0; k < p.perm.size(); ++k) {
    const FactorElement x{g.id(), Integer(k)};
    p.perm[k] = g.mul(g.mul(t_inv, x), t).value.convert_to<std::size_t>();
  }
  return p;
}

FactorElement fg_apply_auto(const FactorGroup& g, const FactorAutoPart& phi,
                            const FactorElement& x) {
  if (phi.factor != x.factor || x.factor != g.id())
    throw DomainError("automorphism of factor " + std::to_string(phi.factor) +
                      " applied to an element of factor " + std::to_string(x.factor));
  if (!g.contains(x))
    throw DomainError("payload " + x.value.str() + " is not an element of factor " +
                      std::to_string(g.id()));
  switch (g.kind()) {
    case FactorKind::cyclic:
      return {g.id(), mod_floor(phi.multiplier * x.value, g.order())};
    case FactorKind::infinite_cyclic:
      return {g.id(), phi.multiplier * x.value};
    case FactorKind::table:
      return {g.id(), Integer(phi.perm.at(x.value.convert_to<std::size_t>()))};
  }
  return {};
}

FactorAutoPart compose_parts(const FactorGroup& g, const FactorAutoPart& f,
                             const FactorAutoPart& h) {
  if (f.factor != g.id() || h.factor != g.id())
    throw DomainError("composing automorphisms of different factors");
  FactorAutoPart out;
  out.factor = g.id();
  switch (g.kind()) {
    case FactorKind::cyclic:
      out.multiplier = mod_floor(f.multiplier * h.multiplier, g.order());
      break;
    case FactorKind::infinite_cyclic:
      out.multiplier = f.multiplier * h.multiplier;
      break;
    case FactorKind::table:
      out.perm.resize(h.perm.size());
      for (std::size_t k = 0; k < h.perm.size(); ++k) out.perm[k] = f.perm.at(h.perm[k]);
      break;
  }
  return out;
}

FactorAutoPart invert_part(const FactorGroup& g, const FactorAutoPart& phi) {
  if (auto bad = validate_part(g, phi)) throw DomainError(*bad);
  FactorAutoPart out;
  out.factor = g.id();
  switch (g.kind()) {
    case FactorKind::cyclic:
      out.multiplier = mod_inverse(phi.multiplier, g.order());
      break;
    case FactorKind::infinite_cyclic:
      out.multiplier = phi.multiplier;
      break;
    case FactorKind::table:
      out.perm.resize(phi.perm.size());
      for (std::size_t k = 0; k < phi.perm.size(); ++k) out.perm[phi.perm[k]] = k;
      break;
  }
  return out;
}

bool is_identity_part(const FactorGroup& g, const FactorAutoPart& phi) {
  switch (g.kind()) {
    case FactorKind::cyclic:
      return mod_floor(phi.multiplier, g.order()) == 1;
    case FactorKind::infinite_cyclic:
      return phi.multiplier == 1;
    case FactorKind::table:
      return phi.perm == identity_part(g).perm;
  }
  return false;
}

std::optional<std::string> validate_part(const FactorGroup& g, const FactorAutoPart& phi) {
  if (phi.factor != g.id())
    return "automorphism part is for factor " + std::to_string(phi.factor) + ", expected " +
           std::to_string(g.id());
  switch (g.kind()) {
    case FactorKind::cyclic:
      if (gcd(mod_floor(phi.multiplier, g.order()), g.order()) != 1)
        return "multiplier " + phi.multiplier.str() + " is not a unit mod " + g.order().str();
      return std::nullopt;
    case FactorKind::infinite_cyclic:
      if (phi.multiplier != 1 && phi.multiplier != -1)
        return "only +1 and -1 are automorphisms of an infinite cyclic factor";
      return std::nullopt;
    case FactorKind::table:
      break;
  }
  const std::size_t n = g.size();
  if (phi.perm.size() != n) return "permutation has the wrong length";
  std::vector<bool> seen(n);
  for (std::size_t v : phi.perm) {
    if (v >= n || seen[v]) return "map is not a permutation";
    seen[v] = true;
  }
  const auto& t = g.cayley();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (phi.perm[t[a][b]] != t[phi.perm[a]][phi.perm[b]]) return "map is not a homomorphism";
  return std::nullopt;
}

namespace {

std::vector<std::size_t> closure(const FactorGroup& g, const std::vector<std::size_t>& gens) {
  const auto& t = g.cayley();
  std::vector<bool> in(g.size());
  std::deque<std::size_t> queue{g.identity_index()};
  in[g.identity_index()] = true;
  std::vector<std::size_t> out;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    out.push_back(u);
    for (std::size_t s : gens) {
      const std::size_t v = t[u][s];
      if (!in[v]) {
        in[v] = true;
        queue.push_back(v);
      }
    }
  }
  return out;
}

std::size_t element_order(const FactorGroup& g, std::size_t a) {
  const auto& t = g.cayley();
  std::size_t k = 1;
  for (std::size_t x = a; x != g.identity_index(); x = t[x][a]) ++k;
  return k;
}

}  // namespace

std::vector<FactorAutoPart> all_automorphisms(const FactorGroup& g) {
  if (!g.finite()) throw DomainError("automorphism enumeration requires a finite factor");
  std::vector<FactorAutoPart> out;
  if (g.kind() == FactorKind::cyclic) {
    const Integer& m = g.order();
    for (Integer k = 1; k < m; ++k) {
      if (gcd(k, m) != 1) continue;
      FactorAutoPart p = identity_part(g);
      p.multiplier = k;
      out.push_back(std::move(p));
    }
    return out;
  }

  // Greedy generating set, then every image assignment of matching orders.
  const std::size_t n = g.size();
  const auto& t = g.cayley();
  std::vector<std::size_t> gens;
  std::vector<std::size_t> span = closure(g, gens);
  for (std::size_t a = 0; a < n && span.size() < n; ++a) {
    if (std::find(span.begin(), span.end(), a) != span.end()) continue;
    gens.push_back(a);
    span = closure(g, gens);
  }

  std::vector<std::size_t> images(gens.size());
  auto try_assignment = [&]() {
    std::vector<std::size_t> map(n, n);
    map[g.identity_index()] = g.identity_index();
    std::deque<std::size_t> queue{g.identity_index()};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const std::size_t v = t[u][gens[k]];
        const std::size_t image = t[map[u]][images[k]];
        if (map[v] == n) {
          map[v] = image;
          queue.push_back(v);
        } else if (map[v] != image) {
          return;
        }
      }
    }
    FactorAutoPart p;
    p.factor = g.id();
    p.perm = std::move(map);
    if (!validate_part(g, p)) out.push_back(std::move(p));
  };
  auto recurse = [&](auto&& self, std::size_t k) -> void {
    if (k == gens.size()) {
      try_assignment();
      return;
    }
    const std::size_t ord = element_order(g, gens[k]);
    for (std::size_t c = 0; c < n; ++c) {
      if (element_order(g, c) != ord) continue;
      images[k] = c;
      self(self, k + 1);
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end(), [](const FactorAutoPart& a, const FactorAutoPart& b) {
    return a.perm < b.perm;
  });
  return out;
}

FactorSystem::FactorSystem(std::vector<FactorGroup> factors) : factors_(std::move(factors)) {
  if (factors_.size() < 3)
    throw DomainError("a free product needs at least 3 non-trivial factors");
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    factors_[i].set_id(i + 1);
    if (auto bad = factors_[i].validate())
      throw DomainError("factor " + std::to_string(i + 1) + ": " + *bad);
  }
}

const FactorGroup& FactorSystem::factor(std::size_t i) const {
  if (i == 0 || i > factors_.size())
    throw DomainError("factor index " + std::to_string(i) + " out of range 1.." +
                      std::to_string(factors_.size()));
  return factors_[i - 1];
}

bool FactorSystem::all_finite() const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const FactorGroup& g) { return g.finite(); });
}

SystemRef make_system(std::vector<FactorGroup> factors) {
  return std::make_shared<const FactorSystem>(std::move(factors));
}

SystemRef cyclic_system(const std::vector<int>& orders) {
  std::vector<FactorGroup> factors;
  factors.reserve(orders.size());
  for (int m : orders)
    factors.push_back(m == 0 ? FactorGroup::infinite_cyclic() : FactorGroup::cyclic(m));
  return make_system(std::move(factors));
}

}  // namespace whitefact
