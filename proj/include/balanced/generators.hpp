#pragma once

// Prime enumeration, prime equivalence classes, and the minimal generating set
// built from one representative per class: the commutators U D - D U with U
// ranging over upper-class representatives and D over lower-class ones.
//
// Generation and minimality of that set are checked at bounded length as
// restricted swap reachability between UD and DU.

#include <algorithm>
#include <cstddef>
#include <future>
#include <map>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "balanced/equivalence.hpp"
#include "balanced/errors.hpp"
#include "balanced/primes.hpp"
#include "balanced/reduction.hpp"
#include "balanced/word.hpp"

namespace balanced {

struct PrimeClass {
  Word representative;
  std::vector<Word> members;  // alphabetical; representative first

  friend bool operator==(const PrimeClass&, const PrimeClass&) = default;
};

struct PrimeClassTable {
  PrimeKind kind = PrimeKind::Upper;
  std::size_t max_len = 0;
  std::vector<PrimeClass> classes;  // by (length, representative)
};

struct GeneratorPair {
  Word u;
  Word d;

  SwapType swap_type() const { return SwapType(u, d); }

  friend bool operator==(const GeneratorPair&, const GeneratorPair&) = default;
  friend auto operator<=>(const GeneratorPair&, const GeneratorPair&) = default;
};

namespace detail {

inline void require_max_len(std::size_t max_len) {
  if (max_len < 2)
    throw PreconditionViolated("max_len must be at least 2, got " + std::to_string(max_len));
}

// Results of fn(0) .. fn(n - 1), computed on up to hardware_concurrency threads.
template <class Fn>
auto parallel_map(std::size_t n, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using R = decltype(fn(std::size_t{}));
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(n, std::thread::hardware_concurrency()));
  std::vector<R> out(n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::future<void>> tasks;
  for (std::size_t w = 0; w < workers; ++w) {
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < n; i += workers) out[i] = fn(i);
    }));
  }
  for (auto& t : tasks) t.get();
  return out;
}

}  // namespace detail

// All primes of the given kind with length <= max_len, alphabetically sorted.
// Upper primes are built as R Z L over products Z of shorter upper primes;
// lower primes are their flips.
inline std::vector<Word> enumerate_primes(PrimeKind kind, std::size_t max_len) {
  detail::require_max_len(max_len);
  const std::size_t half = max_len / 2;
  std::vector<std::vector<Word>> upper(half + 1);     // by half-length
  std::vector<std::vector<Word>> products(half + 1);  // by half-length
  products[0].push_back(Word{});
  const Word r = Word::parse("R");
  const Word l = Word::parse("L");
  for (std::size_t h = 1; h <= half; ++h) {
    for (const auto& z : products[h - 1]) upper[h].push_back(r + z + l);
    for (std::size_t first = 1; first <= h; ++first) {
      for (const auto& p : upper[first]) {
        for (const auto& z : products[h - first]) products[h].push_back(p + z);
      }
    }
  }
  std::vector<Word> out;
  for (std::size_t h = 1; h <= half; ++h) {
    for (const auto& p : upper[h]) out.push_back(kind == PrimeKind::Upper ? p : flip(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Primes of one kind grouped into equivalence classes via reduce().
inline PrimeClassTable prime_classes(PrimeKind kind, std::size_t max_len) {
  std::map<std::pair<std::size_t, Word>, std::vector<Word>> by_rep;
  for (auto& p : enumerate_primes(kind, max_len)) {
    Word rep = reduce(p);
    by_rep[{p.size(), std::move(rep)}].push_back(std::move(p));
  }
  PrimeClassTable table{kind, max_len, {}};
  for (auto& [key, members] : by_rep) {
    std::sort(members.begin(), members.end());
    table.classes.push_back({key.second, std::move(members)});
  }
  return table;
}

inline std::vector<Word> representatives(const PrimeClassTable& table) {
  std::vector<Word> reps;
  for (const auto& c : table.classes) reps.push_back(c.representative);
  return reps;
}

inline std::vector<GeneratorPair> minimal_generating_pairs(std::size_t max_len) {
  const auto ups = representatives(prime_classes(PrimeKind::Upper, max_len));
  const auto downs = representatives(prime_classes(PrimeKind::Lower, max_len));
  std::vector<GeneratorPair> pairs;
  pairs.reserve(ups.size() * downs.size());
  for (const auto& u : ups)
    for (const auto& d : downs) pairs.push_back({u, d});
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

// Swap types of `pairs` short enough to occur inside a word of length `len`.
inline SwapTypeSet swap_types_up_to(const std::vector<GeneratorPair>& pairs, std::size_t len) {
  SwapTypeSet types;
  for (const auto& p : pairs) {
    if (p.u.size() + p.d.size() <= len) types.insert(p.swap_type());
  }
  return types;
}

// Whether UD and DU are connected by swaps whose types come from `pairs`.
inline bool verify_generation(const Word& u, const Word& d,
                              const std::vector<GeneratorPair>& pairs,
                              std::size_t limit = kDefaultClassLimit) {
  if (!is_upper_prime(u)) throw PreconditionViolated("not an upper prime: " + u.str());
  if (!is_lower_prime(d)) throw PreconditionViolated("not a lower prime: " + d.str());
  const Word ud = u + d;
  return restricted_reachable(ud, d + u, swap_types_up_to(pairs, ud.size()), limit);
}

// For each pair p: whether p's own commutator is still generated once p is
// removed. A minimal generating set yields false everywhere.
inline std::vector<std::pair<GeneratorPair, bool>> verify_minimality(
    const std::vector<GeneratorPair>& pairs, std::size_t limit = kDefaultClassLimit) {
  auto still_generated = detail::parallel_map(pairs.size(), [&](std::size_t i) {
    std::vector<GeneratorPair> rest;
    rest.reserve(pairs.size() - 1);
    for (std::size_t j = 0; j < pairs.size(); ++j)
      if (j != i) rest.push_back(pairs[j]);
    return verify_generation(pairs[i].u, pairs[i].d, rest, limit) ? 1 : 0;
  });
  std::vector<std::pair<GeneratorPair, bool>> out;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    out.emplace_back(pairs[i], still_generated[i] != 0);
  return out;
}

}  // namespace balanced
