#pragma once

// Reduced words and the reduction algorithm.
//
// A word is reduced when it contains no subword UD with U an upper prime and D
// a lower prime. Repeatedly swapping the leftmost such UD into DU strictly
// decreases the word alphabetically, and for balanced input ends at the unique
// reduced word of the equivalence class, which is also its alphabetical
// minimum. That makes reduce() a canonical form for balanced words.

#include <cassert>
#include <cstddef>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "balanced/errors.hpp"
#include "balanced/word.hpp"

namespace balanced {

// Position of a UD subword: [start, start + u_len) is an upper prime and
// [start + u_len, start + u_len + d_len) a lower prime.
struct UdOccurrence {
  std::size_t start = 0;
  std::size_t u_len = 0;
  std::size_t d_len = 0;

  friend bool operator==(const UdOccurrence&, const UdOccurrence&) = default;
};

// Parameters of form L^a (RL)^k_1 R (RL)^k_2 R ... (RL)^k_m R L^b.
struct ReducedParams {
  std::size_t a = 0;
  std::size_t b = 0;
  std::vector<std::size_t> ks;  // k_1 .. k_m

  std::size_t m() const noexcept { return ks.size(); }

  Word rebuild() const {
    std::string s(a, 'L');
    for (std::size_t k : ks) {
      for (std::size_t t = 0; t < k; ++t) s += "RL";
      s += 'R';
    }
    s.append(b, 'L');
    return Word::parse(s);
  }

  friend bool operator==(const ReducedParams&, const ReducedParams&) = default;
};

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

namespace detail {

// next[k] = smallest k' > k with e_k' = e_k, or npos. A prime subword starting
// at k necessarily ends at next[k].
inline std::vector<std::size_t> next_equal_elevation(const std::vector<int>& e) {
  const std::size_t n = e.size() - 1;
  std::vector<std::size_t> seen(2 * n + 1, npos);
  std::vector<std::size_t> next(e.size(), npos);
  for (std::size_t k = e.size(); k-- > 0;) {
    const std::size_t slot = static_cast<std::size_t>(e[k] + static_cast<int>(n));
    next[k] = seen[slot];
    seen[slot] = k;
  }
  return next;
}

}  // namespace detail

// Smallest start index of a UD subword. At a given start the occurrence is
// unique: U must end at the first return to the starting elevation, and D is
// then the prime that follows.
inline std::optional<UdOccurrence> find_leftmost_ud(const Word& w) {
  if (w.size() < 4) return std::nullopt;
  const auto e = elevation_sequence(w);
  const auto next = detail::next_equal_elevation(e);
  const std::size_t n = w.size();
  for (std::size_t i = 0; i + 4 <= n; ++i) {
    if (w[i] != Letter::R) continue;
    const std::size_t mid = next[i];
    if (mid == npos || mid >= n || w[mid] != Letter::L) continue;
    const std::size_t end = next[mid];
    if (end == npos) continue;
    return UdOccurrence{i, mid - i, end - mid};
  }
  return std::nullopt;
}

// True iff w contains R L^n R with n >= 2.
inline bool has_long_valley(const Word& w) {
  std::size_t run = 0;
  bool after_r = false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == Letter::L) {
      ++run;
    } else {
      if (after_r && run >= 2) return true;
      after_r = true;
      run = 0;
    }
  }
  return false;
}

inline bool has_ud_subword(const Word& w) { return find_leftmost_ud(w).has_value(); }

inline bool is_reduced(const Word& w) {
  const bool valley = has_long_valley(w);
  const bool ud = has_ud_subword(w);
  // The two characterizations coincide on balanced words.
  assert(!is_balanced(w) || valley == ud);
  return !valley && !ud;
}

// Reads w as L^a (RL)^k_1 R ... (RL)^k_m R L^b, or nullopt if w is not of that
// form (or the exponents do not satisfy a + b = m).
inline std::optional<ReducedParams> parse_reduced_form(const Word& w) {
  const std::size_t n = w.size();
  ReducedParams p;
  std::size_t lo = 0;
  while (lo < n && w[lo] == Letter::L) ++lo;
  if (lo == n) {
    if (n != 0) return std::nullopt;
    return p;
  }
  std::size_t hi = n;
  while (w[hi - 1] == Letter::L) --hi;
  p.a = lo;
  p.b = n - hi;

  // Middle part starts and ends with R.
  std::size_t k = 0;
  for (std::size_t i = lo; i < hi;) {
    if (w[i] != Letter::R) return std::nullopt;
    if (i + 1 < hi && w[i + 1] == Letter::L) {
      ++k;
      i += 2;
    } else {
      p.ks.push_back(k);
      k = 0;
      ++i;
    }
  }
  if (p.a + p.b != p.m()) return std::nullopt;
  return p;
}

inline ReducedParams reduced_params(const Word& w) {
  if (!is_balanced(w)) throw NotBalanced("not balanced: " + w.str());
  auto p = parse_reduced_form(w);
  if (!p) throw NotReduced("not reduced: " + w.str());
  return *p;
}

// Elevation multiset of the word described by p, from its parameters alone:
// {0,-1,..,-a} + {0,1,..,b} + {(i-a)^mu_i : 0 <= i <= m} with
// mu_0 = k_1, mu_i = k_i + 1 + k_(i+1), mu_m = k_m.
inline ElevationMultiset multiset_closed_form(const ReducedParams& p) {
  ElevationMultiset out;
  const std::size_t m = p.m();
  if (m == 0) {
    // Only the empty word has m = 0 (then a = b = 0).
    out.add(0);
    return out;
  }
  const int a = static_cast<int>(p.a);
  for (int v = 0; v >= -a; --v) out.add(v);
  for (int v = 0; v <= static_cast<int>(p.b); ++v) out.add(v);
  out.add(-a, p.ks.front());
  for (std::size_t i = 1; i < m; ++i)
    out.add(static_cast<int>(i) - a, p.ks[i - 1] + 1 + p.ks[i]);
  out.add(static_cast<int>(m) - a, p.ks.back());
  return out;
}

// One step of the reduction algorithm, or nullopt if w is already reduced.
inline std::optional<Word> reduction_step(const Word& w) {
  auto ud = find_leftmost_ud(w);
  if (!ud) return std::nullopt;
  return w.exchange(ud->start, ud->u_len, ud->d_len);
}

// Every word visited by the reduction algorithm, starting with w itself and
// ending with the reduced word.
inline std::vector<Word> reduction_trace(const Word& w) {
  std::vector<Word> trace{w};
  while (auto next = reduction_step(trace.back())) trace.push_back(std::move(*next));
  return trace;
}

inline Word reduce(Word w) {
  while (auto next = reduction_step(w)) w = std::move(*next);
  return w;
}

struct ElevationWitness {
  int elevation = 0;
  std::size_t left = 0;   // i' in [0, i]
  std::size_t right = 0;  // j' in [j, l(w)]

  friend bool operator==(const ElevationWitness&, const ElevationWitness&) = default;
};

// For balanced w and i < j with e_i >= e_j: an elevation e in [e_j, e_i]
// attained both at some i' <= i and some j' >= j. Picks the smallest such e,
// then the largest i' and the smallest j'.
inline ElevationWitness matching_elevation_witness(const Word& w, std::size_t i,
                                                   std::size_t j) {
  if (!is_balanced(w)) throw PreconditionViolated("word is not balanced");
  if (!(i < j) || j > w.size())
    throw PreconditionViolated("need i < j <= l(w), got i=" + std::to_string(i) +
                               ", j=" + std::to_string(j));
  const auto e = elevation_sequence(w);
  if (e[i] < e[j]) throw PreconditionViolated("need e_i >= e_j");

  for (int level = e[j]; level <= e[i]; ++level) {
    std::size_t left = npos;
    for (std::size_t k = i + 1; k-- > 0;) {
      if (e[k] == level) {
        left = k;
        break;
      }
    }
    if (left == npos) continue;
    for (std::size_t k = j; k < e.size(); ++k) {
      if (e[k] == level) return {level, left, k};
    }
  }
  throw std::logic_error("no matching elevation for a balanced word");
}

inline std::ostream& operator<<(std::ostream& os, const ReducedParams& p) {
  os << "(a=" << p.a << ", b=" << p.b << ", m=" << p.m() << ", ks=[";
  for (std::size_t i = 0; i < p.ks.size(); ++i) os << (i ? "," : "") << p.ks[i];
  return os << "])";
}

}  // namespace balanced
