// Test-only reference implementations. Deliberately naive and independent
// of the engine's algorithms: exhaustive searches, permutation arithmetic,
// repeated-pass word reduction.
#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "whitefact/io.hpp"
#include "whitefact/labellings.hpp"

namespace oracle {

using namespace whitefact;

// S3 as permutations of {0,1,2}; product (p*q)(x) = p(q(x)).
using Perm = std::array<int, 3>;

inline const std::vector<std::pair<std::string, Perm>>& s3_elements() {
  static const std::vector<std::pair<std::string, Perm>> els = {
      {"e", {0, 1, 2}},     {"(12)", {1, 0, 2}},  {"(13)", {2, 1, 0}},
      {"(23)", {0, 2, 1}},  {"(123)", {1, 2, 0}}, {"(132)", {2, 0, 1}},
  };
  return els;
}

inline std::size_t s3_index(const std::string& name) {
  const auto& els = s3_elements();
  for (std::size_t k = 0; k < els.size(); ++k)
    if (els[k].first == name) return k;
  return els.size();
}

inline FactorGroup s3_group() {
  const auto& els = s3_elements();
  std::vector<std::string> names;
  for (const auto& e : els) names.push_back(e.first);
  std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      Perm c{};
      for (int x = 0; x < 3; ++x) c[x] = els[a].second[els[b].second[x]];
      for (std::size_t k = 0; k < 6; ++k)
        if (els[k].second == c) table[a][b] = k;
    }
  return FactorGroup::table(names, table, 0);
}

inline SystemRef k3() { return cyclic_system({2, 2, 2}); }
inline SystemRef z342() { return cyclic_system({3, 4, 2}); }
// Every backend in one system: Z/3 * Z * S3.
inline SystemRef mixed() {
  return make_system({FactorGroup::cyclic(3), FactorGroup::infinite_cyclic(), s3_group()});
}

inline Word word(const SystemRef& s, const std::string& json_text) {
  return word_from_json(s, json::parse(json_text));
}

// K3 shorthand: "ba" is b.a with a in G1, b in G2, c in G3; "" is 1.
inline Word k3word(const SystemRef& s, const std::string& letters) {
  std::vector<FactorElement> out;
  for (char ch : letters) out.push_back({static_cast<std::size_t>(ch - 'a' + 1), 1});
  return Word::reduce(s, out);
}

inline AlphaLabel k3alpha(const SystemRef& s, const std::vector<std::string>& slots) {
  std::vector<Word> w;
  for (const auto& t : slots) w.push_back(k3word(s, t));
  return AlphaLabel(w);
}

// Normal form by repeated passes over a letter list, with arithmetic done
// directly on payloads (cyclic kinds only).
inline std::vector<std::pair<std::size_t, long>> naive_reduce(
    const std::vector<int>& orders, std::vector<std::pair<std::size_t, long>> letters) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::pair<std::size_t, long>> next;
    for (auto [f, v] : letters) {
      const long m = orders[f - 1];
      v = ((v % m) + m) % m;
      if (v == 0) {
        changed = true;
        continue;
      }
      if (!next.empty() && next.back().first == f) {
        next.back().second = (next.back().second + v) % m;
        if (next.back().second == 0) next.pop_back();
        changed = true;
        continue;
      }
      next.emplace_back(f, v);
    }
    letters = std::move(next);
  }
  return letters;
}

// All distinct elements of syllable length <= len, generated from raw letter
// strings and deduplicated by normal form.
inline std::set<std::vector<std::pair<std::size_t, long>>> brute_words(const std::vector<int>& orders,
                                                                       std::size_t len) {
  std::set<std::vector<std::pair<std::size_t, long>>> out;
  std::vector<std::pair<std::size_t, long>> cur;
  std::function<void()> rec = [&] {
    out.insert(naive_reduce(orders, cur));
    if (cur.size() == len) return;
    for (std::size_t f = 1; f <= orders.size(); ++f)
      for (long v = 1; v < orders[f - 1]; ++v) {
        cur.emplace_back(f, v);
        rec();
        cur.pop_back();
      }
  };
  rec();
  return out;
}

inline bool in_factor(const Word& w, std::size_t k) { return w.as_element_of(k).has_value(); }

// Search for g with G_j^{k_j} = G_j^{h_j g} for all j, over all g of syllable
// length <= max_len.
inline std::optional<Word> alpha_witness(const AlphaLabel& l1, const AlphaLabel& l2,
                                         std::size_t max_len) {
  for (const Word& g : enumerate_words(l1.system(), max_len)) {
    bool ok = true;
    for (std::size_t j = 1; j <= l1.rank() && ok; ++j)
      ok = in_factor(l2.slot(j) * g.inverse() * l1.slot(j).inverse(), j);
    if (ok) return g;
  }
  return std::nullopt;
}

// Search for g and g_j in H_i with K_j = H_j^{g_j g} for all j (apexes equal).
inline bool a_witness(const ALabel& m1, const ALabel& m2, std::size_t max_len) {
  if (m1.apex() != m2.apex()) return false;
  const SystemRef& s = m1.system();
  const std::size_t i = m1.apex();
  const Word& hi = m1.slot(i);
  std::vector<Word> hi_elements;
  for (const auto& x : s->factor(i).elements()) hi_elements.push_back(hi.inverse() * Word::letter(s, x) * hi);
  for (const Word& g : enumerate_words(s, max_len)) {
    bool ok = true;
    for (std::size_t j = 1; j <= m1.rank() && ok; ++j) {
      ok = false;
      for (const Word& gj : hi_elements)
        if (in_factor(m2.slot(j) * g.inverse() * gj.inverse() * m1.slot(j).inverse(), j)) {
          ok = true;
          break;
        }
    }
    if (ok) return true;
  }
  return false;
}

// Letterwise image x -> g_k^-1 phi_k(x) g_k, multiplied out naively.
inline Word apply_naive(const PureSymmetricAuto& psi, const Word& w) {
  const SystemRef& s = psi.system();
  Word out(s);
  for (const auto& x : w.syllables()) {
    const AutoPart& p = psi.part(x.factor);
    const FactorElement y = fg_apply_auto(s->factor(x.factor), p.phi, x);
    out = out * p.conjugator.inverse() * Word::letter(s, y) * p.conjugator;
  }
  return out;
}

}  // namespace oracle
