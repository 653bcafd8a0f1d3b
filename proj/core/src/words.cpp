#include "whitefact/words.hpp"

#include <algorithm>
#include <functional>

namespace whitefact {

void require_same_system(const Word& u, const Word& v) {
  if (u.system() != v.system()) throw DomainError("mixed-system words");
}

void Word::push(FactorElement s) {
  const FactorSystem& sys = *system_;
  const FactorGroup& g = sys.factor(s.factor);
  if (!g.contains(s))
    throw DomainError("payload " + s.value.str() + " is not an element of factor " +
                      std::to_string(s.factor));
  if (g.is_identity(s)) return;
  if (!syllables_.empty() && syllables_.back().factor == s.factor) {
    FactorElement merged = g.mul(syllables_.back(), s);
    if (g.is_identity(merged)) {
      syllables_.pop_back();
    } else {
      syllables_.back() = std::move(merged);
    }
    return;
  }
  syllables_.push_back(std::move(s));
}

Word Word::reduce(SystemRef system, std::span<const FactorElement> letters) {
  Word w(std::move(system));
  w.syllables_.reserve(letters.size());
  for (const auto& s : letters) w.push(s);
  return w;
}

Word Word::letter(SystemRef system, FactorElement s) {
  Word w(std::move(system));
  w.push(std::move(s));
  return w;
}

std::optional<std::size_t> Word::leading_factor() const {
  if (syllables_.empty()) return std::nullopt;
  return syllables_.front().factor;
}

std::optional<std::size_t> Word::trailing_factor() const {
  if (syllables_.empty()) return std::nullopt;
  return syllables_.back().factor;
}

Word Word::inverse() const {
  Word w(system_);
  w.syllables_.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
    w.syllables_.push_back(system_->inverse(*it));
  return w;
}

Word Word::strip_leading(std::size_t i) const {
  Word w(*this);
  if (!w.syllables_.empty() && w.syllables_.front().factor == i)
    w.syllables_.erase(w.syllables_.begin());
  return w;
}

Word Word::strip_trailing(std::size_t i) const {
  Word w(*this);
  if (!w.syllables_.empty() && w.syllables_.back().factor == i) w.syllables_.pop_back();
  return w;
}

Word Word::suffix(std::size_t k) const {
  Word w(system_);
  k = std::min(k, syllables_.size());
  w.syllables_.assign(syllables_.end() - static_cast<std::ptrdiff_t>(k), syllables_.end());
  return w;
}

std::optional<FactorElement> Word::as_element_of(std::size_t i) const {
  if (syllables_.empty()) return system_->factor(i).identity();
  if (syllables_.size() == 1 && syllables_.front().factor == i) return syllables_.front();
  return std::nullopt;
}

Word operator*(const Word& u, const Word& v) {
  require_same_system(u, v);
  Word w(u);
  w.syllables_.reserve(u.syllables_.size() + v.syllables_.size());
  for (const auto& s : v.syllables_) w.push(s);
  return w;
}

bool operator==(const Word& u, const Word& v) {
  return u.system_ == v.system_ && u.syllables_ == v.syllables_;
}

std::strong_ordering operator<=>(const Word& u, const Word& v) {
  if (auto c = u.syllables_.size() <=> v.syllables_.size(); c != 0) return c;
  for (std::size_t k = 0; k < u.syllables_.size(); ++k) {
    const auto& a = u.syllables_[k];
    const auto& b = v.syllables_[k];
    if (a.factor != b.factor) return a.factor <=> b.factor;
    if (a.value != b.value) return a.value < b.value ? std::strong_ordering::less
                                                     : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Word w_reduce(const SystemRef& system, std::span<const FactorElement> letters) {
  return Word::reduce(system, letters);
}
Word w_mul(const Word& u, const Word& v) { return u * v; }
Word w_inv(const Word& u) { return u.inverse(); }
std::size_t w_syllables(const Word& u) { return u.length(); }
std::optional<std::size_t> w_leading_factor(const Word& u) { return u.leading_factor(); }

Word double_coset_core(const Word& w, std::size_t left, std::size_t right) {
  return w.strip_leading(left).strip_trailing(right);
}

std::optional<std::pair<FactorElement, FactorElement>> split_product(const Word& w,
                                                                     std::size_t left,
                                                                     std::size_t right) {
  const FactorSystem& sys = *w.system();
  FactorElement v = sys.factor(left).identity();
  FactorElement u = sys.factor(right).identity();
  const auto& s = w.syllables();
  std::size_t k = 0;
  if (k < s.size() && s[k].factor == left) v = s[k++];
  if (k < s.size() && s[k].factor == right) u = s[k++];
  if (k != s.size()) return std::nullopt;
  return std::make_pair(std::move(v), std::move(u));
}

std::vector<Word> enumerate_words(const SystemRef& system, std::size_t max_length,
                                  std::optional<std::size_t> avoid_leading) {
  if (!system->all_finite()) throw DomainError("word enumeration requires finite factors");
  std::vector<std::vector<FactorElement>> nontrivial;
  for (const auto& g : system->factors()) {
    auto all = g.elements();
    nontrivial.emplace_back(all.begin() + 1, all.end());
  }
  std::vector<Word> out;
  std::vector<FactorElement> letters;
  std::function<void(std::size_t)> extend = [&](std::size_t remaining) {
    if (remaining == 0) {
      out.push_back(Word::reduce(system, letters));
      return;
    }
    for (std::size_t f = 1; f <= system->rank(); ++f) {
      if (letters.empty() && avoid_leading && *avoid_leading == f) continue;
      if (!letters.empty() && letters.back().factor == f) continue;
      for (const auto& s : nontrivial[f - 1]) {
        letters.push_back(s);
        extend(remaining - 1);
        letters.pop_back();
      }
    }
  };
  for (std::size_t len = 0; len <= max_length; ++len) extend(len);
  return out;
}

std::size_t count_words(const FactorSystem& system, std::size_t max_length) {
  // ending[f] = number of reduced words of the current length ending in G_f.
  const std::size_t n = system.rank();
  std::vector<std::size_t> ending(n + 1, 0), weight(n + 1, 0);
  for (std::size_t f = 1; f <= n; ++f) weight[f] = system.factor(f).size() - 1;
  std::size_t total = 1;
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<std::size_t> next(n + 1, 0);
    std::size_t all = 0;
    for (std::size_t f = 1; f <= n; ++f) all += ending[f];
    for (std::size_t f = 1; f <= n; ++f)
      next[f] = weight[f] * (len == 1 ? 1 : all - ending[f]);
    ending = std::move(next);
    for (std::size_t f = 1; f <= n; ++f) total += ending[f];
  }
  return total;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += '*';
    out += std::to_string(s.factor) + "." + s.value.str();
  }
  return out;
}

}  // namespace whitefact
