#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "whitefact/factor_groups.hpp"

namespace whitefact {

// An element of G = G_1 * ... * G_n in normal form: s_1 s_2 ... s_m with no
// identity syllable and adjacent syllables in distinct factors. The product is
// read left to right. The empty word is 1.
class Word {
 public:
  explicit Word(SystemRef system) : system_(std::move(system)) {}

  // Reduces an arbitrary letter sequence to normal form.
  static Word reduce(SystemRef system, std::span<const FactorElement> letters);
  static Word letter(SystemRef system, FactorElement s);

  const SystemRef& system() const { return system_; }
  const std::vector<FactorElement>& syllables() const { return syllables_; }
  std::size_t length() const { return syllables_.size(); }
  bool empty() const { return syllables_.empty(); }

  std::optional<std::size_t> leading_factor() const;
  std::optional<std::size_t> trailing_factor() const;

  Word inverse() const;

  // Drops the first syllable if it lies in G_i.
  Word strip_leading(std::size_t i) const;
  // Drops the last syllable if it lies in G_i.
  Word strip_trailing(std::size_t i) const;
  // The last k syllables.
  Word suffix(std::size_t k) const;

  // Single-syllable view: the element if the word lies in G_i (identity for
  // the empty word), otherwise nothing.
  std::optional<FactorElement> as_element_of(std::size_t i) const;

  friend Word operator*(const Word& u, const Word& v);
  friend bool operator==(const Word& u, const Word& v);
  // Shortlex: syllable count first, then syllables lexicographically.
  friend std::strong_ordering operator<=>(const Word& u, const Word& v);

 private:
  void push(FactorElement s);

  SystemRef system_;
  std::vector<FactorElement> syllables_;
};

Word w_reduce(const SystemRef& system, std::span<const FactorElement> letters);
Word w_mul(const Word& u, const Word& v);
Word w_inv(const Word& u);
std::size_t w_syllables(const Word& u);
std::optional<std::size_t> w_leading_factor(const Word& u);

// Double-coset representative for G_left . w . G_right (left != right): strip
// at most one leading G_left syllable and one trailing G_right syllable. Two
// words lie in the same double coset iff their cores are equal; the empty
// core is the double coset G_left . G_right itself.
Word double_coset_core(const Word& w, std::size_t left, std::size_t right);

// Splits w in G_left . G_right as (v, u), v in G_left and u in G_right, with
// identity elements standing in for absent syllables. Nothing if w lies
// outside that product set.
std::optional<std::pair<FactorElement, FactorElement>> split_product(const Word& w,
                                                                     std::size_t left,
                                                                     std::size_t right);

// Every word of syllable length <= max_length (finite systems only), in
// shortlex order. When `avoid_leading` is set, words starting with that
// factor are skipped.
std::vector<Word> enumerate_words(const SystemRef& system, std::size_t max_length,
                                  std::optional<std::size_t> avoid_leading = std::nullopt);

// Number of such words, counted combinatorially.
std::size_t count_words(const FactorSystem& system, std::size_t max_length);

void require_same_system(const Word& u, const Word& v);

// "1" for the empty word, otherwise "f.p*f.p*...".
std::string to_string(const Word& w);

}  // namespace whitefact
