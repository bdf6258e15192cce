#pragma once

// Graph-side check of the balanced-word commutation criterion.
//
// For a graph with a base vertex, vertices are grouped by distance from the
// base. The raising matrix R sends a vertex to the sum of its neighbours one
// layer further out, the lowering matrix L to those one layer further in, and
// E_i* projects onto layer i. For a bipartite distance-regular graph the
// graph is thin with respect to the base exactly when all balanced words in R
// and L commute; check_thin_commutation() tests that at bounded word length.
//
// All matrices are exact integer matrices. Matrix rows and columns follow the
// vertex order of the model: layer by layer outwards from the base, and within
// a layer in input order.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "balanced/errors.hpp"
#include "balanced/generators.hpp"
#include "balanced/primes.hpp"
#include "balanced/word.hpp"

namespace balanced {

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  explicit IntegerMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

  static IntegerMatrix identity(std::size_t n) {
    IntegerMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t dim() const noexcept { return n_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::int64_t v) { return v == 0; });
  }

  std::int64_t trace() const {
    std::int64_t t = 0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    IntegerMatrix c(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
      for (std::size_t k = 0; k < a.n_; ++k) {
        const std::int64_t aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < a.n_; ++j) c(i, j) += aik * b(k, j);
      }
    }
    return c;
  }

  friend IntegerMatrix operator+(IntegerMatrix a, const IntegerMatrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend IntegerMatrix operator-(IntegerMatrix a, const IntegerMatrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

  // One line per row, entries separated by single spaces.
  std::string to_text() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < n_; ++r) {
      for (std::size_t c = 0; c < n_; ++c) os << (c ? " " : "") << (*this)(r, c);
      os << '\n';
    }
    return os.str();
  }

  std::vector<std::vector<std::int64_t>> rows() const {
    std::vector<std::vector<std::int64_t>> out(n_);
    for (std::size_t r = 0; r < n_; ++r)
      out[r].assign(data_.begin() + static_cast<std::ptrdiff_t>(r * n_),
                    data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * n_));
    return out;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> data_;
};

// A finite simple connected graph with a base vertex. Vertex 0 is the base.
class GraphModel {
 public:
  // Vertices are given by name in input order; edges index into `names`.
  static GraphModel build(std::vector<std::string> names,
                          const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                          std::size_t base) {
    const std::size_t n = names.size();
    if (base >= n) throw UnknownBaseVertex("base vertex index out of range");
    std::vector<std::vector<std::size_t>> adj(n);
    for (auto [u, v] : edges) {
      if (u == v) throw SelfLoop("self-loop at vertex " + names[u]);
      if (std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end())
        throw DuplicateEdge("duplicate edge " + names[u] + " " + names[v]);
      adj[u].push_back(v);
      adj[v].push_back(u);
    }

    const auto dist = bfs(adj, base);
    for (std::size_t v = 0; v < n; ++v) {
      if (dist[v] == kUnreached)
        throw Disconnected("vertex " + names[v] + " is not reachable from " + names[base]);
    }

    // Layer order, then input order.
    std::vector<std::size_t> order(n);
    for (std::size_t v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return dist[a] < dist[b]; });
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;

    GraphModel g;
    g.names_.resize(n);
    g.adj_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      g.names_[i] = std::move(names[order[i]]);
      for (std::size_t w : adj[order[i]]) g.adj_[i].push_back(position[w]);
      std::sort(g.adj_[i].begin(), g.adj_[i].end());
    }
    g.distances_.resize(n * n);
    std::size_t diameter = 0;
    for (std::size_t s = 0; s < n; ++s) {
      const auto d = bfs(g.adj_, s);
      for (std::size_t t = 0; t < n; ++t) {
        g.distances_[s * n + t] = d[t];
        diameter = std::max<std::size_t>(diameter, d[t]);
      }
    }
    g.layers_.assign(diameter + 1, {});
    for (std::size_t v = 0; v < n; ++v) g.layers_[g.distance(0, v)].push_back(v);
    return g;
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& vertices() const noexcept { return names_; }
  const std::string& base() const { return names_.front(); }
  std::size_t diameter() const noexcept { return layers_.size() - 1; }

  // layers()[i] lists the vertices at distance i from the base. May end with
  // empty layers when the base is not a vertex of maximal eccentricity.
  const std::vector<std::vector<std::size_t>>& layers() const noexcept { return layers_; }
  std::size_t layer_of(std::size_t v) const { return distance(0, v); }

  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_[v]; }

  std::size_t distance(std::size_t u, std::size_t v) const {
    return distances_[u * names_.size() + v];
  }

 private:
  static constexpr std::uint16_t kUnreached = 0xffff;

  static std::vector<std::uint16_t> bfs(const std::vector<std::vector<std::size_t>>& adj,
                                        std::size_t s) {
    std::vector<std::uint16_t> d(adj.size(), kUnreached);
    std::deque<std::size_t> q{s};
    d[s] = 0;
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop_front();
      for (std::size_t v : adj[u]) {
        if (d[v] == kUnreached) {
          d[v] = static_cast<std::uint16_t>(d[u] + 1);
          q.push_back(v);
        }
      }
    }
    return d;
  }

  std::vector<std::string> names_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::uint16_t> distances_;
  std::vector<std::vector<std::size_t>> layers_;
};

// Q_d with base (0,...,0). Within each layer vertices are the coordinate
// subsets in lexicographic order; for d = 3 this is the order
// (0,0,0) | (1,0,0) (0,1,0) (0,0,1) | (1,1,0) (1,0,1) (0,1,1) | (1,1,1).
inline GraphModel hypercube(std::size_t d) {
  if (d < 1 || d > 12)
    throw DimensionOutOfRange("hypercube dimension must be in [1, 12], got " +
                              std::to_string(d));
  std::vector<std::uint32_t> masks;
  for (std::size_t k = 0; k <= d; ++k) {
    std::vector<bool> pick(d, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::uint32_t m = 0;
      for (std::size_t i = 0; i < d; ++i)
        if (pick[i]) m |= 1u << i;
      masks.push_back(m);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  std::unordered_map<std::uint32_t, std::size_t> index;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    index[masks[i]] = i;
    std::string s = "(";
    for (std::size_t b = 0; b < d; ++b) s += std::string(b ? "," : "") + ((masks[i] >> b) & 1 ? "1" : "0");
    names.push_back(s + ")");
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t b = 0; b < d; ++b) {
      const std::uint32_t other = masks[i] ^ (1u << b);
      if (masks[i] < other) edges.emplace_back(i, index.at(other));
    }
  }
  return GraphModel::build(std::move(names), edges, 0);
}

// Edge list: one "u v" pair of whitespace-free vertex names per line. A line
// holding a single name declares a vertex; blank lines and lines starting
// with '#' are ignored. Vertices are numbered by first appearance.
inline GraphModel load_graph(std::string_view text, std::string_view base) {
  std::vector<std::string> names;
  std::unordered_map<std::string, std::size_t> index;
  auto id = [&](const std::string& name) {
    auto [it, inserted] = index.try_emplace(name, names.size());
    if (inserted) names.push_back(name);
    return it->second;
  };
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (tok.size() == 1) {
      id(tok[0]);
    } else if (tok.size() == 2) {
      if (tok[0] == tok[1]) throw SelfLoop("self-loop at vertex " + tok[0]);
      const std::size_t u = id(tok[0]);
      edges.emplace_back(u, id(tok[1]));
    } else {
      throw MalformedEdgeList("line " + std::to_string(lineno) + ": expected \"u v\"");
    }
  }
  auto it = index.find(std::string(base));
  if (it == index.end()) throw UnknownBaseVertex("unknown base vertex " + std::string(base));
  return GraphModel::build(std::move(names), edges, it->second);
}

struct DistanceRegularityWitness {
  std::pair<std::string, std::string> first;
  std::pair<std::string, std::string> second;
  std::size_t h = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t first_count = 0;
  std::size_t second_count = 0;
};

class NotDistanceRegular : public DomainError {
 public:
  explicit NotDistanceRegular(DistanceRegularityWitness w)
      : DomainError(describe(w)), witness_(std::move(w)) {}

  const DistanceRegularityWitness& witness() const noexcept { return witness_; }

 private:
  static std::string describe(const DistanceRegularityWitness& w) {
    std::ostringstream os;
    os << "not distance-regular: pairs (" << w.first.first << ", " << w.first.second
       << ") and (" << w.second.first << ", " << w.second.second << ") at distance " << w.h
       << " have " << w.first_count << " vs " << w.second_count
       << " vertices at distances (" << w.i << ", " << w.j << ")";
    return os.str();
  }

  DistanceRegularityWitness witness_;
};

// p(h, i, j) for 0 <= h, i, j <= d.
class IntersectionTable {
 public:
  explicit IntersectionTable(std::size_t d) : d_(d), p_((d + 1) * (d + 1) * (d + 1), 0) {}

  std::size_t diameter() const noexcept { return d_; }
  std::size_t& operator()(std::size_t h, std::size_t i, std::size_t j) {
    return p_[(h * (d_ + 1) + i) * (d_ + 1) + j];
  }
  std::size_t operator()(std::size_t h, std::size_t i, std::size_t j) const {
    return p_[(h * (d_ + 1) + i) * (d_ + 1) + j];
  }

  friend bool operator==(const IntersectionTable&, const IntersectionTable&) = default;

 private:
  std::size_t d_;
  std::vector<std::size_t> p_;
};

// Counts |{z : d(x,z) = i, d(z,y) = j}| for every ordered pair (x, y) and
// checks that it depends only on d(x, y). Cost is O(n^2 d^2 n / 64).
inline IntersectionTable intersection_numbers(const GraphModel& g) {
  const std::size_t n = g.size();
  const std::size_t d = g.diameter();
  const std::size_t words = (n + 63) / 64;

  // sphere[x][i] = bitset of vertices at distance i from x.
  std::vector<std::uint64_t> sphere(n * (d + 1) * words, 0);
  auto bits = [&](std::size_t x, std::size_t i) { return &sphere[(x * (d + 1) + i) * words]; };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t z = 0; z < n; ++z) bits(x, g.distance(x, z))[z / 64] |= 1ULL << (z % 64);

  IntersectionTable table(d);
  std::vector<std::pair<std::size_t, std::size_t>> first_pair(d + 1, {n, n});
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t h = g.distance(x, y);
      const bool first = first_pair[h].first == n;
      if (first) first_pair[h] = {x, y};
      for (std::size_t i = 0; i <= d; ++i) {
        const std::uint64_t* a = bits(x, i);
        for (std::size_t j = 0; j <= d; ++j) {
          const std::uint64_t* b = bits(y, j);
          std::size_t count = 0;
          for (std::size_t k = 0; k < words; ++k) count += std::popcount(a[k] & b[k]);
          if (first) {
            table(h, i, j) = count;
          } else if (table(h, i, j) != count) {
            const auto& names = g.vertices();
            const auto [fx, fy] = first_pair[h];
            throw NotDistanceRegular({{names[fx], names[fy]},
                                      {names[x], names[y]},
                                      h, i, j, table(h, i, j), count});
          }
        }
      }
    }
  }
  return table;
}

struct LayerMatrices {
  IntegerMatrix lowering;
  IntegerMatrix raising;
  IntegerMatrix adjacency;
  // A - R - L: adjacency inside layers. Zero iff no edge joins two vertices at
  // the same distance from the base, which holds for bipartite graphs.
  IntegerMatrix residue;

  bool adjacency_splits() const { return residue.is_zero(); }
};

// Column v of R (resp. L) is the sum of v's neighbours one layer out (in).
inline LayerMatrices raising_lowering(const GraphModel& g) {
  const std::size_t n = g.size();
  LayerMatrices m{IntegerMatrix(n), IntegerMatrix(n), IntegerMatrix(n), IntegerMatrix(n)};
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w : g.neighbors(v)) {
      m.adjacency(w, v) = 1;
      if (g.layer_of(w) == g.layer_of(v) + 1) m.raising(w, v) = 1;
      if (g.layer_of(w) + 1 == g.layer_of(v)) m.lowering(w, v) = 1;
    }
  }
  m.residue = m.adjacency - m.raising - m.lowering;
  return m;
}

// E_0*, ..., E_d*: diagonal projections onto the layers.
inline std::vector<IntegerMatrix> projections(const GraphModel& g) {
  std::vector<IntegerMatrix> out;
  for (const auto& layer : g.layers()) {
    IntegerMatrix e(g.size());
    for (std::size_t v : layer) e(v, v) = 1;
    out.push_back(std::move(e));
  }
  return out;
}

// Sum = I, pairwise products zero, idempotent.
inline bool projections_consistent(const std::vector<IntegerMatrix>& es) {
  if (es.empty()) return false;
  const std::size_t n = es.front().dim();
  IntegerMatrix sum(n);
  for (std::size_t i = 0; i < es.size(); ++i) {
    sum = sum + es[i];
    for (std::size_t j = 0; j < es.size(); ++j) {
      const IntegerMatrix prod = es[i] * es[j];
      if (i == j ? !(prod == es[i]) : !prod.is_zero()) return false;
    }
  }
  return sum == IntegerMatrix::identity(n);
}

// The product of the letter matrices, read left to right: RL maps to R * L.
inline IntegerMatrix word_matrix(const Word& w, const IntegerMatrix& lowering,
                                 const IntegerMatrix& raising) {
  IntegerMatrix m = IntegerMatrix::identity(lowering.dim());
  for (std::size_t i = 0; i < w.size(); ++i)
    m = m * (w[i] == Letter::R ? raising : lowering);
  return m;
}

enum class CommutationScope {
  // Prime words only. Every balanced word is a product of primes no longer
  // than itself, so this finds a violation iff the full check does.
  Primes,
  AllBalanced,
};

struct CommutationReport {
  std::size_t words_checked = 0;
  std::size_t pairs_checked = 0;
  std::vector<std::pair<Word, Word>> violations;  // F < G with FG != GF

  bool thin() const noexcept { return violations.empty(); }
};

inline CommutationReport check_thin_commutation(const GraphModel& g, std::size_t max_word_len,
                                                CommutationScope scope = CommutationScope::Primes) {
  if (max_word_len < 2 || max_word_len % 2 != 0)
    throw PreconditionViolated("max_word_len must be even and at least 2");
  std::vector<Word> words;
  if (scope == CommutationScope::Primes) {
    words = enumerate_primes(PrimeKind::Upper, max_word_len);
    const auto lower = enumerate_primes(PrimeKind::Lower, max_word_len);
    words.insert(words.end(), lower.begin(), lower.end());
  } else {
    for (std::size_t len = 2; len <= max_word_len; len += 2) {
      const auto ws = balanced_words(len);
      words.insert(words.end(), ws.begin(), ws.end());
    }
  }
  std::sort(words.begin(), words.end());

  const auto lr = raising_lowering(g);
  std::vector<IntegerMatrix> mats;
  mats.reserve(words.size());
  for (const auto& w : words) mats.push_back(word_matrix(w, lr.lowering, lr.raising));

  CommutationReport report;
  report.words_checked = words.size();
  for (std::size_t a = 0; a < words.size(); ++a) {
    for (std::size_t b = a + 1; b < words.size(); ++b) {
      ++report.pairs_checked;
      if (!(mats[a] * mats[b] == mats[b] * mats[a])) report.violations.emplace_back(words[a], words[b]);
    }
  }
  return report;
}

}  // namespace balanced
