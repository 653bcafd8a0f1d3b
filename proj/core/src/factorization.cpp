#include "whitefact/factorization.hpp"

namespace whitefact {

PureSymmetricAuto to_auto(const SystemRef& system, const Factorization& f) {
  PureSymmetricAuto out = compose(PureSymmetricAuto::factor(system, f.factor),
                                  PureSymmetricAuto::inner(f.inner));
  for (auto it = f.whitehead.rbegin(); it != f.whitehead.rend(); ++it)
    out = compose(to_auto(system, *it), out);
  return out;
}

FactorizationBuilder::FactorizationBuilder(SystemRef system)
    : system_(std::move(system)),
      result_{{}, identity_parts(*system_), Word(system_)} {}

void FactorizationBuilder::append(const WhiteheadAuto& w) {
  // iota_h o w = w o iota_{w^-1(h)} and phi o (Y, x) = (Y, phi(x)) o phi.
  result_.inner = to_auto(system_, invert(*system_, w)).apply(result_.inner);
  const std::size_t k = w.operating();
  result_.whitehead.push_back(
      {w.targets, fg_apply_auto(system_->factor(k), result_.factor[k - 1], w.x)});
}

void FactorizationBuilder::append(const std::vector<FactorAutoPart>& phi) {
  std::vector<FactorAutoPart> inverse;
  for (std::size_t k = 1; k <= system_->rank(); ++k) {
    const FactorGroup& g = system_->factor(k);
    inverse.push_back(invert_part(g, phi[k - 1]));
    result_.factor[k - 1] = compose_parts(g, result_.factor[k - 1], phi[k - 1]);
  }
  result_.inner = PureSymmetricAuto::factor(system_, std::move(inverse)).apply(result_.inner);
}

void FactorizationBuilder::append_inner(const Word& h) { result_.inner = h * result_.inner; }

std::vector<FactorAutoPart> single_conjugation(const FactorSystem& system, std::size_t k,
                                               const FactorElement& s) {
  auto parts = identity_parts(system);
  parts[k - 1] = conjugation_part(system.factor(k), s);
  return parts;
}

namespace {

// Factor parts x -> s_k^-1 phi_k(x) s_k.
std::vector<FactorAutoPart> twisted_parts(const FactorSystem& system,
                                          const std::vector<FactorElement>& s,
                                          const std::vector<FactorAutoPart>& phi) {
  std::vector<FactorAutoPart> out;
  for (std::size_t k = 1; k <= system.rank(); ++k) {
    const FactorGroup& g = system.factor(k);
    out.push_back(compose_parts(g, conjugation_part(g, s[k - 1]), phi[k - 1]));
  }
  return out;
}

std::vector<FactorAutoPart> phis(const PureSymmetricAuto& psi) {
  std::vector<FactorAutoPart> out;
  for (const auto& p : psi.parts()) out.push_back(p.phi);
  return out;
}

std::vector<Word> conjugators(const PureSymmetricAuto& psi) {
  std::vector<Word> out;
  for (const auto& p : psi.parts()) out.push_back(p.conjugator);
  return out;
}

// For a base-equivalent tuple t with witness g (t_k = a_k g):
// psi_t = iota_g o (x -> a_k^-1 x a_k).
void append_base_tuple(FactorizationBuilder& builder, const FactorSystem& system,
                       const std::vector<Word>& t, const Word& g) {
  std::vector<FactorElement> a;
  const Word g_inv = g.inverse();
  for (std::size_t k = 1; k <= system.rank(); ++k) {
    auto s = (t[k - 1] * g_inv).as_element_of(k);
    if (!s) throw DomainError("slot " + std::to_string(k) + " is not in G_k . g");
    a.push_back(*s);
  }
  builder.append_inner(g);
  builder.append(twisted_parts(system, a, identity_parts(system)));
}

}  // namespace

Factorization decompose_alpha_stabilizer(const PureSymmetricAuto& psi) {
  const SystemRef& system = psi.system();
  const auto c = conjugators(psi);
  const auto eq = alpha_equivalent(AlphaLabel::base(system), AlphaLabel(c));
  if (!eq)
    throw DomainError("not a stabiliser of the base alpha vertex: slot " +
                      std::to_string(eq.failing_slot));
  const Word g_inv = eq.witness->inverse();
  std::vector<FactorElement> b;
  for (std::size_t k = 1; k <= system->rank(); ++k) b.push_back(*(c[k - 1] * g_inv).as_element_of(k));
  FactorizationBuilder builder(system);
  builder.append_inner(*eq.witness);
  builder.append(twisted_parts(*system, b, phis(psi)));
  return builder.result();
}

Factorization decompose_A_stabilizer(const PureSymmetricAuto& psi, std::size_t i) {
  const SystemRef& system = psi.system();
  system->factor(i);
  const auto c = conjugators(psi);
  const auto eq = a_equivalent(ALabel::base(system, i), ALabel(i, c));
  if (!eq)
    throw DomainError("not a stabiliser of the base A vertex with apex " + std::to_string(i) +
                      ": slot " + std::to_string(eq.failing_slot));
  // c_j = v_j u_j c_i with v_j in G_j and u_j in G_i, so
  // psi = iota_{c_i} o prod_j (G_j, u_j) o (x -> v_j^-1 phi_j(x) v_j).
  const Word ci_inv = c[i - 1].inverse();
  std::vector<FactorElement> v;
  std::vector<WhiteheadAuto> moves;
  for (std::size_t j = 1; j <= system->rank(); ++j) {
    if (j == i) {
      v.push_back(system->factor(j).identity());
      continue;
    }
    const auto split = split_product(c[j - 1] * ci_inv, j, i);
    v.push_back(split->first);
    if (!system->is_identity(split->second))
      moves.push_back(make_whitehead(*system, {j}, split->second));
  }
  FactorizationBuilder builder(system);
  builder.append_inner(c[i - 1]);
  for (const auto& w : moves) builder.append(w);
  builder.append(twisted_parts(*system, v, phis(psi)));
  return builder.result();
}

FactorizationTrace factorize_with_trace(const PureSymmetricAuto& psi) {
  const SystemRef& system = psi.system();
  const FactorSystem& sys = *system;
  const std::size_t n = sys.rank();

  // psi = psi_L o sigma o phi_0, where L is the slot-canonical conjugator tuple
  // and sigma absorbs the stripped leading syllables.
  const auto raw = conjugators(psi);
  const AlphaLabel start(raw);
  std::vector<FactorElement> stripped;
  for (std::size_t k = 1; k <= n; ++k)
    stripped.push_back(*(raw[k - 1] * start.slot(k).inverse()).as_element_of(k));

  FactorizationTrace trace{Factorization{{}, {}, Word(system)}, Reduction{start, {}, {start}}, volume(start)};
  if (!base_witness(start)) trace.reduction = reduce_to_base(start);
  const Reduction& red = trace.reduction;

  FactorizationBuilder builder(system);
  append_base_tuple(builder, sys, red.final.slots(), *base_witness(red.final));
  // Each move replaced slot j by g_j c (c = g_i^-1 a g_i), which equals
  // psi_before o (G_j, a); re-canonicalising g_j c strips s in G_j, giving
  // psi_before = psi_after o sigma_k o (G_j, a)^-1.
  for (std::size_t k = red.moves.size(); k-- > 0;) {
    const MoveRecord& m = red.moves[k];
    const AlphaLabel& before = red.path[k];
    const AlphaLabel& after = red.path[k + 1];
    const Word& gi = before.slot(m.i);
    const Word c = gi.inverse() * Word::letter(system, m.a) * gi;
    const Word raw_j = before.slot(m.j) * c;
    const auto s = (raw_j * after.slot(m.j).inverse()).as_element_of(m.j);
    builder.append(single_conjugation(sys, m.j, *s));
    builder.append(make_whitehead(sys, {m.j}, sys.inverse(m.a)));
  }
  builder.append(twisted_parts(sys, stripped, identity_parts(sys)));
  builder.append(phis(psi));
  trace.factorization = builder.result();
  return trace;
}

Factorization factorize(const PureSymmetricAuto& psi) {
  return factorize_with_trace(psi).factorization;
}

bool verify_factorization(const PureSymmetricAuto& psi, const Factorization& f) {
  const FactorSystem& sys = *psi.system();
  if (f.factor.size() != sys.rank() || f.inner.system() != psi.system()) return false;
  for (std::size_t k = 1; k <= sys.rank(); ++k)
    if (validate_part(sys.factor(k), f.factor[k - 1])) return false;
  for (const auto& w : f.whitehead) {
    if (w.x.factor == 0 || w.x.factor > sys.rank() || !sys.factor(w.x.factor).contains(w.x))
      return false;
    for (std::size_t j : w.targets)
      if (j == 0 || j > sys.rank() || j == w.x.factor) return false;
  }
  return same_automorphism(psi, to_auto(psi.system(), f));
}

PureSymmetricAuto invert(const PureSymmetricAuto& psi) {
  const SystemRef& system = psi.system();
  const Factorization f = factorize(psi);
  std::vector<FactorAutoPart> inverse_parts;
  for (std::size_t k = 1; k <= system->rank(); ++k)
    inverse_parts.push_back(invert_part(system->factor(k), f.factor[k - 1]));
  PureSymmetricAuto out = compose(PureSymmetricAuto::inner(f.inner.inverse()),
                                  PureSymmetricAuto::factor(system, inverse_parts));
  for (auto it = f.whitehead.rbegin(); it != f.whitehead.rend(); ++it)
    out = compose(out, to_auto(system, invert(*system, *it)));
  return out;
}

bool same_outer_class(const PureSymmetricAuto& a, const PureSymmetricAuto& b) {
  return is_inner(compose(invert(a), b)).has_value();
}

}  // namespace whitefact
