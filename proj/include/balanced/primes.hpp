#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "balanced/errors.hpp"
#include "balanced/word.hpp"

namespace balanced {

enum class PrimeKind { Upper, Lower };

constexpr std::string_view to_string(PrimeKind k) noexcept {
  return k == PrimeKind::Upper ? "upper" : "lower";
}

constexpr PrimeKind opposite(PrimeKind k) noexcept {
  return k == PrimeKind::Upper ? PrimeKind::Lower : PrimeKind::Upper;
}

// The ordered prime factors of a nonempty balanced word.
struct PrimeFactorization {
  std::vector<Word> factors;

  std::size_t count() const noexcept { return factors.size(); }

  Word product() const {
    Word w;
    for (const auto& f : factors) w = w + f;
    return w;
  }

  friend bool operator==(const PrimeFactorization&,
                         const PrimeFactorization&) = default;
};

// Nonempty, balanced, and no interior elevation equals zero.
inline bool is_prime(const Word& w) {
  if (w.empty()) return false;
  int e = 0;
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    e += weight(w[k]);
    if (e == 0) return false;
  }
  return e + weight(w[w.size() - 1]) == 0;
}

// Splits at every interior return to elevation zero.
inline PrimeFactorization prime_factorize(const Word& w) {
  if (w.empty()) throw EmptyWord("cannot factorize the empty word");
  if (!is_balanced(w)) throw NotBalanced("not balanced: " + w.str());

  PrimeFactorization out;
  int e = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    e += weight(w[k]);
    if (e == 0) {
      out.factors.push_back(w.subword(start, k + 1 - start));
      start = k + 1;
    }
  }
  return out;
}

// The sign of the interior elevations of a prime is constant, so the first
// letter decides it.
inline PrimeKind prime_kind(const Word& p) {
  if (!is_prime(p)) throw NotPrime("not prime: " + p.str());
  return p[0] == Letter::R ? PrimeKind::Upper : PrimeKind::Lower;
}

inline bool is_upper_prime(const Word& w) {
  return is_prime(w) && w[0] == Letter::R;
}

inline bool is_lower_prime(const Word& w) {
  return is_prime(w) && w[0] == Letter::L;
}

// An upper prime is R Z L with Z a (possibly empty) product of upper primes;
// returns the factors of Z.
inline std::vector<Word> unwrap_upper(const Word& p) {
  if (!is_upper_prime(p)) throw NotUpperPrime("not an upper prime: " + p.str());
  Word inner = p.subword(1, p.size() - 2);
  if (inner.empty()) return {};
  return prime_factorize(inner).factors;
}

}  // namespace balanced
