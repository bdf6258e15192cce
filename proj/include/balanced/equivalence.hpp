#pragma once

// Swaps and equivalence classes of words.
//
// Two words are related by a swap of type (F, G) when one is W1 F G W2 and the
// other W1 G F W2 with F, G nonempty balanced words. Equivalence is the
// reflexive-transitive closure of this relation. Restricting which types may
// be used gives reachability in the ideal generated by the corresponding
// commutators FG - GF.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "balanced/errors.hpp"
#include "balanced/reduction.hpp"
#include "balanced/word.hpp"

namespace balanced {

inline constexpr std::size_t kDefaultClassLimit = 100000;

// Unordered pair of nonempty balanced words; stored with f <= g.
class SwapType {
 public:
  SwapType(Word f, Word g) : f_(std::move(f)), g_(std::move(g)) {
    if (g_ < f_) std::swap(f_, g_);
  }

  const Word& f() const noexcept { return f_; }
  const Word& g() const noexcept { return g_; }

  friend bool operator==(const SwapType&, const SwapType&) = default;
  friend auto operator<=>(const SwapType&, const SwapType&) = default;

  friend std::ostream& operator<<(std::ostream& os, const SwapType& t) {
    return os << '(' << t.f_ << ',' << t.g_ << ')';
  }

 private:
  Word f_;
  Word g_;
};

}  // namespace balanced

template <>
struct std::hash<balanced::SwapType> {
  std::size_t operator()(const balanced::SwapType& t) const noexcept {
    const std::size_t h = std::hash<balanced::Word>{}(t.f());
    return h ^ (std::hash<balanced::Word>{}(t.g()) + 0x9e3779b97f4a7c15ULL + (h << 6) +
                (h >> 2));
  }
};

namespace balanced {

using SwapTypeSet = std::unordered_set<SwapType>;

// Calls fn(i, j, k) for every i < j < k such that [i, j) and [j, k) are both
// nonempty balanced subwords, i.e. e_i = e_j = e_k.
template <class Fn>
void for_each_swap_site(const Word& w, Fn&& fn) {
  const auto e = elevation_sequence(w);
  const auto next = detail::next_equal_elevation(e);
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = next[i]; j != npos; j = next[j]) {
      for (std::size_t k = next[j]; k != npos; k = next[k]) fn(i, j, k);
    }
  }
}

// Every distinct word one swap away from w, with the full set of swap types
// realizing each.
inline std::map<Word, std::set<SwapType>> swap_neighbors(const Word& w) {
  std::map<Word, std::set<SwapType>> out;
  for_each_swap_site(w, [&](std::size_t i, std::size_t j, std::size_t k) {
    Word v = w.exchange(i, j - i, k - j);
    if (v == w) return;
    out[std::move(v)].emplace(w.subword(i, j - i), w.subword(j, k - j));
  });
  return out;
}

inline std::set<SwapType> are_swap_related(const Word& x, const Word& y) {
  std::set<SwapType> types;
  if (x.size() != y.size() || x == y) return types;
  // The two words agree outside the exchanged block.
  std::size_t lo = 0;
  while (x[lo] == y[lo]) ++lo;
  std::size_t hi = x.size();
  while (x[hi - 1] == y[hi - 1]) --hi;
  for_each_swap_site(x, [&](std::size_t i, std::size_t j, std::size_t k) {
    if (i > lo || k < hi) return;
    if (x.exchange(i, j - i, k - j) == y)
      types.emplace(x.subword(i, j - i), x.subword(j, k - j));
  });
  return types;
}

// Distinct words one swap away from w using only types accepted by `allowed`,
// called as allowed(F, G) with F the left block. Sorted, no duplicates.
template <class Allowed>
std::vector<Word> restricted_neighbors(const Word& w, Allowed&& allowed) {
  std::vector<Word> out;
  for_each_swap_site(w, [&](std::size_t i, std::size_t j, std::size_t k) {
    Word f = w.subword(i, j - i);
    Word g = w.subword(j, k - j);
    if (f == g || !allowed(f, g)) return;
    Word v = w.exchange(i, j - i, k - j);
    if (v != w) out.push_back(std::move(v));
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline constexpr auto any_swap = [](const Word&, const Word&) { return true; };

// Breadth-first closure of w under the allowed swaps. With a `target`, stops
// as soon as it is reached. Throws LimitExceeded once more than `limit` words
// have been discovered.
template <class Allowed>
std::vector<Word> closure_if(const Word& w, Allowed&& allowed,
                             std::size_t limit = kDefaultClassLimit,
                             const Word* target = nullptr) {
  std::unordered_set<Word> seen{w};
  std::vector<Word> order{w};
  std::deque<Word> frontier{w};
  if (target && *target == w) return order;
  while (!frontier.empty()) {
    Word cur = std::move(frontier.front());
    frontier.pop_front();
    for (auto& v : restricted_neighbors(cur, allowed)) {
      if (!seen.insert(v).second) continue;
      if (seen.size() > limit) throw LimitExceeded(limit);
      order.push_back(v);
      if (target && *target == v) return order;
      frontier.push_back(std::move(v));
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

template <class Allowed>
bool reachable_if(const Word& x, const Word& y, Allowed&& allowed,
                  std::size_t limit = kDefaultClassLimit) {
  if (x.size() != y.size()) return false;
  const auto visited = closure_if(x, allowed, limit, &y);
  return visited.back() == y || std::binary_search(visited.begin(), visited.end(), y);
}

// Whether a sequence of swaps, each of a type in `allowed`, leads from x to y.
inline bool restricted_reachable(const Word& x, const Word& y, const SwapTypeSet& allowed,
                                 std::size_t limit = kDefaultClassLimit) {
  if (x == y) return true;
  if (allowed.empty()) return false;
  std::set<std::size_t> lengths;
  for (const auto& t : allowed) {
    lengths.insert(t.f().size());
    lengths.insert(t.g().size());
  }
  return reachable_if(
      x, y,
      [&](const Word& f, const Word& g) {
        if (!lengths.count(f.size()) || !lengths.count(g.size())) return false;
        return allowed.count(SwapType(f, g)) > 0;
      },
      limit);
}

struct EquivalenceClass {
  std::vector<Word> members;                        // alphabetical
  std::vector<std::pair<Word, Word>> edges;         // first < second, sorted
  std::vector<std::pair<Word, Word>> reduction_edges;  // from -> to, sorted by from

  std::size_t size() const noexcept { return members.size(); }
  bool contains(const Word& w) const {
    return std::binary_search(members.begin(), members.end(), w);
  }
  const Word& minimum() const { return members.front(); }
};

inline EquivalenceClass equivalence_class(const Word& w,
                                          std::size_t limit = kDefaultClassLimit) {
  EquivalenceClass c;
  c.members = closure_if(w, any_swap, limit);
  for (const auto& x : c.members) {
    for (const auto& y : restricted_neighbors(x, any_swap)) {
      if (x < y) c.edges.emplace_back(x, y);
    }
    if (auto y = reduction_step(x)) c.reduction_edges.emplace_back(x, std::move(*y));
  }
  std::sort(c.edges.begin(), c.edges.end());
  return c;
}

// Balanced words are compared through their reduced forms; anything else by
// searching the class of x.
inline bool are_equivalent(const Word& x, const Word& y,
                           std::size_t limit = kDefaultClassLimit) {
  if (x.size() != y.size()) return false;
  if (x == y) return true;
  if (is_balanced(x) && is_balanced(y)) return reduce(x) == reduce(y);
  return reachable_if(x, y, any_swap, limit);
}

// DOT rendering of the swap graph. Swap relations are undirected edges; a
// reduction step x -> y is drawn as the same edge with an arrow towards y.
inline std::string swap_graph_dot(const EquivalenceClass& c) {
  std::map<std::pair<Word, Word>, const Word*> directed;
  for (const auto& [from, to] : c.reduction_edges) {
    auto key = from < to ? std::make_pair(from, to) : std::make_pair(to, from);
    directed[key] = &from;
  }
  std::ostringstream os;
  os << "graph swaps {\n";
  for (const auto& m : c.members) os << "  \"" << m << "\";\n";
  for (const auto& e : c.edges) {
    auto it = directed.find(e);
    if (it == directed.end()) {
      os << "  \"" << e.first << "\" -- \"" << e.second << "\";\n";
    } else {
      const Word& from = *it->second;
      const Word& to = from == e.first ? e.second : e.first;
      os << "  \"" << from << "\" -- \"" << to << "\" [dir=forward];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace balanced
