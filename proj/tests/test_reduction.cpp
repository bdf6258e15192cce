#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>

#include "balanced/equivalence.hpp"
#include "balanced/reduction.hpp"
#include "oracles.hpp"

using namespace balanced;
using namespace balanced::literals;

namespace {

// U -> RL, D -> LR, wrapped in RR..LL.
Word w12(const std::string& pattern) {
  std::string s = "RR";
  for (char c : pattern) s += c == 'U' ? "RL" : "LR";
  return parse_word(s + "LL");
}

bool parsed_reduced(const Word& w) { return parse_reduced_form(w).has_value(); }

}  // namespace

TEST(Reduction, IsReduced) {
  EXPECT_TRUE(is_reduced("LRRL"_w));
  EXPECT_FALSE(is_reduced("RRLLLR"_w));
  EXPECT_TRUE(is_reduced("LLRLRRRLRRLL"_w));
  EXPECT_TRUE(is_reduced(Word{}));
}

TEST(Reduction, ReducedParams) {
  EXPECT_EQ(reduced_params("RLRRLL"_w), (ReducedParams{0, 2, {1, 0}}));
  EXPECT_EQ(reduced_params("LRRRLRLRLL"_w), (ReducedParams{1, 2, {0, 0, 2}}));
  EXPECT_EQ(reduced_params(Word{}), (ReducedParams{0, 0, {}}));
  EXPECT_EQ(reduced_params("LRRRLRLRLL"_w).rebuild(), "LRRRLRLRLL"_w);
  EXPECT_THROW(reduced_params("RRLLLR"_w), NotReduced);
  EXPECT_THROW(reduced_params("RRL"_w), NotBalanced);
}

TEST(Reduction, ClosedFormExamples) {
  const Word big = "LLRLRLRLRRLRLRRLRRLL"_w;  // LL(RL)^3 R (RL)^2 R (RL) R R LL
  ASSERT_TRUE(is_balanced(big));
  const auto p = reduced_params(big);
  EXPECT_EQ(p, (ReducedParams{2, 2, {3, 2, 1, 0}}));
  EXPECT_EQ(multiset_closed_form(p), elevation_multiset(big));
  EXPECT_EQ(multiset_closed_form(ReducedParams{}), (ElevationMultiset{{0, 1}}));
  EXPECT_EQ(multiset_closed_form(ReducedParams{1, 1, {0, 0}}),
            (ElevationMultiset{{-1, 1}, {0, 3}, {1, 1}}));
  EXPECT_EQ(multiset_closed_form(ReducedParams{1, 1, {0, 0}}), elevation_multiset("LRRL"_w));
}

TEST(Reduction, FindLeftmostUd) {
  EXPECT_EQ(find_leftmost_ud("RRLLLR"_w), (UdOccurrence{0, 4, 2}));
  EXPECT_FALSE(find_leftmost_ud("LRRL"_w).has_value());
  EXPECT_EQ(find_leftmost_ud("RLLR"_w), (UdOccurrence{0, 2, 2}));
}

TEST(Reduction, Reduce) {
  EXPECT_EQ(reduce("RRLLLR"_w), "LRRRLL"_w);
  EXPECT_EQ(reduce("LRRL"_w), "LRRL"_w);
  EXPECT_EQ(reduce(w12("UUDD")), w12("DDUU"));
}

TEST(Reduction, Trace) {
  const auto t = reduction_trace("RRLLLR"_w);
  ASSERT_GE(t.size(), 2u);
  EXPECT_EQ(t.front(), "RRLLLR"_w);
  EXPECT_EQ(t.back(), "LRRRLL"_w);
  EXPECT_EQ(reduction_trace("LRRL"_w), std::vector<Word>{"LRRL"_w});
}

TEST(Reduction, Witness) {
  const auto w = matching_elevation_witness("RRRLLRLL"_w, 3, 5);
  const bool e2 = w == ElevationWitness{2, 2, 6};
  const bool e1 = w.elevation == 1 && w.left == 1 && (w.right == 5 || w.right == 7);
  EXPECT_TRUE(e1 || e2);
  EXPECT_THROW(matching_elevation_witness("RLLR"_w, 1, 1), PreconditionViolated);
  EXPECT_EQ(matching_elevation_witness("RRLL"_w, 1, 3), (ElevationWitness{1, 1, 3}));
}

// Leftmost UD against the brute-force scan of all (U, D) splits.
TEST(Reduction, LeftmostUdMatchesOracle) {
  for (std::size_t len = 0; len <= 12; ++len) {
    for (const auto& s : oracle::all_words(len)) {
      const auto all = oracle::ud_subwords(s);
      const auto got = find_leftmost_ud(parse_word(s));
      if (all.empty()) {
        EXPECT_FALSE(got.has_value()) << s;
        continue;
      }
      ASSERT_TRUE(got.has_value()) << s;
      const auto first = *std::min_element(all.begin(), all.end());
      const auto [start, u, d] = first;
      EXPECT_EQ(*got, (UdOccurrence{start, u, d})) << s;
      // Only one occurrence at the smallest start.
      EXPECT_EQ(std::count_if(all.begin(), all.end(),
                              [&](const auto& t) { return std::get<0>(t) == start; }),
                1)
          << s;
    }
  }
}

// The three characterizations of reducedness coincide on balanced words.
TEST(Reduction, ThreeWayAgreement) {
  for (std::size_t len = 0; len <= 14; len += 2) {
    for (const auto& s : oracle::all_balanced(len)) {
      const Word w = parse_word(s);
      const bool no_ud = oracle::ud_subwords(s).empty();
      const bool no_valley = !oracle::has_long_valley(s);
      EXPECT_EQ(no_ud, no_valley) << s;
      EXPECT_EQ(no_ud, parsed_reduced(w)) << s;
      EXPECT_EQ(no_ud, is_reduced(w)) << s;
      EXPECT_EQ(!has_ud_subword(w), no_ud) << s;
      EXPECT_EQ(!has_long_valley(w), no_valley) << s;
    }
  }
}

TEST(Reduction, ClosedFormUpTo14) {
  std::size_t checked = 0;
  for (std::size_t len = 0; len <= 14; len += 2) {
    for (const auto& s : oracle::all_balanced(len)) {
      const Word w = parse_word(s);
      if (!is_reduced(w)) continue;
      const auto p = reduced_params(w);
      EXPECT_EQ(p.a + p.b, p.m()) << s;
      EXPECT_EQ(p.rebuild(), w);
      EXPECT_EQ(multiset_closed_form(p).entries(), oracle::multiset(s)) << s;
      ++checked;
    }
  }
  EXPECT_GT(checked, 100u);
}

TEST(Reduction, WitnessPostconditionUpTo10) {
  for (std::size_t len = 2; len <= 10; len += 2) {
    for (const auto& s : oracle::all_balanced(len)) {
      const Word w = parse_word(s);
      for (std::size_t i = 0; i <= len; ++i) {
        for (std::size_t j = i + 1; j <= len; ++j) {
          const int ei = oracle::elevation(s, i);
          const int ej = oracle::elevation(s, j);
          if (ei < ej) {
            EXPECT_THROW(matching_elevation_witness(w, i, j), PreconditionViolated);
            continue;
          }
          const auto wit = matching_elevation_witness(w, i, j);
          EXPECT_LE(ej, wit.elevation);
          EXPECT_LE(wit.elevation, ei);
          EXPECT_LE(wit.left, i);
          EXPECT_GE(wit.right, j);
          EXPECT_LE(wit.right, len);
          EXPECT_EQ(oracle::elevation(s, wit.left), wit.elevation);
          EXPECT_EQ(oracle::elevation(s, wit.right), wit.elevation);
          // Smallest e first, then largest i', then smallest j'.
          for (int e = ej; e < wit.elevation; ++e) {
            bool l = false, r = false;
            for (std::size_t k = 0; k <= i; ++k) l |= oracle::elevation(s, k) == e;
            for (std::size_t k = j; k <= len; ++k) r |= oracle::elevation(s, k) == e;
            EXPECT_FALSE(l && r) << s << ' ' << i << ' ' << j;
          }
          for (std::size_t k = wit.left + 1; k <= i; ++k)
            EXPECT_NE(oracle::elevation(s, k), wit.elevation);
          for (std::size_t k = j; k < wit.right; ++k)
            EXPECT_NE(oracle::elevation(s, k), wit.elevation);
        }
      }
    }
  }
}

// reduce(w) is the only reduced word of the class and its minimum.
TEST(Reduction, CanonicalFormUpTo12) {
  for (std::size_t len = 0; len <= 12; len += 2) {
    std::set<std::string> done;
    for (const auto& s : oracle::all_balanced(len)) {
      if (done.count(s)) continue;
      const auto cls = oracle::swap_class(s);
      done.insert(cls.begin(), cls.end());
      const Word min = parse_word(*cls.begin());
      std::size_t reduced = 0;
      for (const auto& m : cls) {
        const Word w = parse_word(m);
        if (oracle::ud_subwords(m).empty()) ++reduced;
        EXPECT_EQ(reduce(w), min) << m;
      }
      EXPECT_EQ(reduced, 1u) << s;
    }
  }
}

TEST(Reduction, StepsDecrease) {
  for (std::size_t len = 0; len <= 14; ++len) {
    for (const auto& s : oracle::all_words(len)) {
      const auto t = reduction_trace(parse_word(s));
      for (std::size_t k = 1; k < t.size(); ++k) {
        EXPECT_LT(t[k], t[k - 1]) << s;
        EXPECT_EQ(elevation_multiset(t[k]), elevation_multiset(t[k - 1]));
      }
      EXPECT_FALSE(has_ud_subword(t.back())) << s;
    }
  }
}

// Unbalanced words: equivalent words still reduce to the same word at these
// lengths. Not relied on anywhere.
TEST(Reduction, UnbalancedHypothesis) {
  for (std::size_t len = 1; len <= 10; ++len) {
    std::set<std::string> done;
    for (const auto& s : oracle::all_words(len)) {
      if (oracle::balanced(s) || done.count(s)) continue;
      const auto cls = oracle::swap_class(s);
      done.insert(cls.begin(), cls.end());
      const Word r = reduce(parse_word(s));
      for (const auto& m : cls) EXPECT_EQ(reduce(parse_word(m)), r) << m;
    }
  }
}
