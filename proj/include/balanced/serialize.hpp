#pragma once

// nlohmann::json renderings of the library's value types.

#include "json.hpp"

#include "balanced/equivalence.hpp"
#include "balanced/generators.hpp"
#include "balanced/graph.hpp"
#include "balanced/primes.hpp"
#include "balanced/word.hpp"

namespace balanced {

inline void to_json(nlohmann::json& j, const Word& w) { j = w.str(); }

// [[value, multiplicity], ...] sorted by value.
inline void to_json(nlohmann::json& j, const ElevationMultiset& m) {
  j = nlohmann::json::array();
  for (const auto& [v, k] : m.entries()) j.push_back({v, k});
}

inline void to_json(nlohmann::json& j, const PrimeFactorization& f) { j = f.factors; }

inline void to_json(nlohmann::json& j, const EquivalenceClass& c) {
  auto pairs = [](const std::vector<std::pair<Word, Word>>& es) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& [x, y] : es) a.push_back({x.str(), y.str()});
    return a;
  };
  j = nlohmann::json{{"members", c.members},
                     {"edges", pairs(c.edges)},
                     {"reduction_edges", pairs(c.reduction_edges)}};
}

inline void to_json(nlohmann::json& j, const PrimeClass& c) {
  j = nlohmann::json{{"representative", c.representative}, {"members", c.members}};
}

inline void to_json(nlohmann::json& j, const PrimeClassTable& t) {
  j = nlohmann::json{{"kind", std::string(to_string(t.kind))},
                     {"max_len", t.max_len},
                     {"classes", t.classes}};
}

inline void to_json(nlohmann::json& j, const GeneratorPair& p) { j = {p.u.str(), p.d.str()}; }

// Nested array indexed [h][i][j].
inline void to_json(nlohmann::json& j, const IntersectionTable& t) {
  const std::size_t d = t.diameter();
  j = nlohmann::json::array();
  for (std::size_t h = 0; h <= d; ++h) {
    nlohmann::json plane = nlohmann::json::array();
    for (std::size_t i = 0; i <= d; ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t k = 0; k <= d; ++k) row.push_back(t(h, i, k));
      plane.push_back(std::move(row));
    }
    j.push_back(std::move(plane));
  }
}

}  // namespace balanced
