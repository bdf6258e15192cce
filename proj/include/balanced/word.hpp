#pragma once

// Words over the two-letter alphabet {L, R}, their alphabetical order, balance
// and elevation.

#include <cassert>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "balanced/errors.hpp"

namespace balanced {

enum class Letter : char { L = 'L', R = 'R' };

// Weight of a letter: +1 for R, -1 for L.
constexpr int weight(Letter a) noexcept { return a == Letter::R ? 1 : -1; }

constexpr Letter opposite(Letter a) noexcept {
  return a == Letter::R ? Letter::L : Letter::R;
}

// An immutable finite word over {L, R}.
//
// Letters are stored as the characters 'L' and 'R'. Since 'L' < 'R' in ASCII,
// plain string comparison is exactly the alphabetical order (L before R, a
// proper prefix before its extensions).
class Word {
 public:
  Word() = default;

  // Parses a word; lowercase letters are accepted.
  static Word parse(std::string_view text) {
    std::string letters(text.size(), 'L');
    for (std::size_t i = 0; i < text.size(); ++i) {
      switch (text[i]) {
        case 'L':
        case 'l':
          letters[i] = 'L';
          break;
        case 'R':
        case 'r':
          letters[i] = 'R';
          break;
        default:
          throw InvalidCharacter(i, text[i]);
      }
    }
    return Word(std::move(letters), Trusted{});
  }

  static Word repeat(const Word& w, std::size_t times) {
    std::string s;
    s.reserve(w.size() * times);
    for (std::size_t i = 0; i < times; ++i) s += w.letters_;
    return Word(std::move(s), Trusted{});
  }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  Letter operator[](std::size_t i) const noexcept {
    assert(i < letters_.size());
    return static_cast<Letter>(letters_[i]);
  }

  // Canonical text: uppercase, no separators.
  const std::string& str() const noexcept { return letters_; }

  // Letters [pos, pos + len).
  Word subword(std::size_t pos, std::size_t len) const {
    return Word(letters_.substr(pos, len), Trusted{});
  }

  // Copy of this word with letters [pos, pos + first + second) rearranged so
  // that the block of length `second` comes first.
  Word exchange(std::size_t pos, std::size_t first, std::size_t second) const {
    std::string s = letters_;
    s.replace(pos, first + second,
              letters_.substr(pos + first, second) + letters_.substr(pos, first));
    return Word(std::move(s), Trusted{});
  }

  friend Word operator+(const Word& x, const Word& y) {
    return Word(x.letters_ + y.letters_, Trusted{});
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& x, const Word& y) {
    return x.letters_.compare(y.letters_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Word& w) {
    return os << w.letters_;
  }

 private:
  struct Trusted {};
  Word(std::string letters, Trusted) : letters_(std::move(letters)) {}

  std::string letters_;
};

inline Word parse_word(std::string_view text) { return Word::parse(text); }

namespace literals {
inline Word operator""_w(const char* s, std::size_t n) {
  return Word::parse(std::string_view(s, n));
}
}  // namespace literals

// Alphabetical comparison, L < R.
inline std::strong_ordering compare_alpha(const Word& x, const Word& y) {
  return x <=> y;
}

inline Word flip(const Word& w) {
  std::string s = w.str();
  for (char& c : s) c = (c == 'L') ? 'R' : 'L';
  return Word::parse(s);
}

inline bool is_balanced(const Word& w) {
  int sum = 0;
  for (std::size_t i = 0; i < w.size(); ++i) sum += weight(w[i]);
  return sum == 0;
}

// Partial sums of letter weights; entry k is the elevation after k letters,
// so the result has size() + 1 entries and starts at 0.
inline std::vector<int> elevation_sequence(const Word& w) {
  std::vector<int> e(w.size() + 1, 0);
  for (std::size_t k = 0; k < w.size(); ++k) e[k + 1] = e[k] + weight(w[k]);
  return e;
}

// All balanced words of the given length, alphabetically.
inline std::vector<Word> balanced_words(std::size_t length) {
  std::vector<Word> out;
  if (length % 2 != 0) return out;
  std::string s(length, 'L');
  // Odometer over {L,R}^length in alphabetical order.
  while (true) {
    std::size_t r = 0;
    for (char c : s) r += (c == 'R');
    if (2 * r == length) out.push_back(Word::parse(s));
    std::size_t i = length;
    while (i > 0 && s[i - 1] == 'R') s[--i] = 'L';
    if (i == 0) break;
    s[i - 1] = 'R';
  }
  return out;
}

// Multiset of integers, stored as value -> multiplicity (multiplicity >= 1).
class ElevationMultiset {
 public:
  using Entries = std::map<int, std::size_t>;

  ElevationMultiset() = default;
  ElevationMultiset(std::initializer_list<std::pair<const int, std::size_t>> il) {
    for (const auto& [v, m] : il) add(v, m);
  }

  void add(int value, std::size_t count = 1) {
    if (count != 0) entries_[value] += count;
  }

  std::size_t multiplicity(int value) const {
    auto it = entries_.find(value);
    return it == entries_.end() ? 0 : it->second;
  }

  std::size_t total() const {
    std::size_t t = 0;
    for (const auto& [v, m] : entries_) t += m;
    return t;
  }

  const Entries& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  friend bool operator==(const ElevationMultiset&,
                         const ElevationMultiset&) = default;

  // e.g. {-1, 0^2, 1}
  friend std::ostream& operator<<(std::ostream& os, const ElevationMultiset& m) {
    os << '{';
    bool first = true;
    for (const auto& [v, k] : m.entries_) {
      if (!first) os << ", ";
      first = false;
      os << v;
      if (k != 1) os << '^' << k;
    }
    return os << '}';
  }

 private:
  Entries entries_;
};

inline ElevationMultiset elevation_multiset(const Word& w) {
  ElevationMultiset m;
  for (int e : elevation_sequence(w)) m.add(e);
  return m;
}

}  // namespace balanced

template <>
struct std::hash<balanced::Word> {
  std::size_t operator()(const balanced::Word& w) const noexcept {
    return std::hash<std::string>{}(w.str());
  }
};
