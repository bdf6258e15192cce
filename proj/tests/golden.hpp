#pragma once

// Published reference data, transcribed by hand. Parentheses in the class
// listings only mark the swapped blocks and are stripped before use.

#include <array>
#include <string>
#include <tuple>
#include <vector>

namespace golden {

inline std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (c == 'L' || c == 'R') out += c;
  return out;
}

// One row per class, members in alphabetical order.
inline const std::vector<std::vector<std::string>> kUpperClasses10 = {
    {"RL"},
    {"RRLL"},
    {"RRLRLL"},
    {"RRRLLL"},
    {"RRLRLRLL"},
    {"RR(LR)(RL)LL", "RR(RL)(LR)LL"},
    {"RRRLRLLL"},
    {"RRRRLLLL"},
    {"RRLRLRLRLL"},
    {"RR(LR)(LR)(RL)LL", "RR(LR)(RL)(LR)LL", "RR(RL)(LR)(LR)LL"},
    {"RR(LR)(RL)(RL)LL", "RR(RL)(LR)(RL)LL", "RR(RL)(RL)(LR)LL"},
    {"RR(LR)(RRLL)LL", "RR(RRLL)(LR)LL"},
    {"RRRLRLRLLL"},
    {"RRR(LR)(RL)LLL", "RRR(RL)(LR)LLL"},
    {"RRRRLRLLLL"},
    {"RRRRRLLLLL"},
};

inline const std::vector<std::vector<std::string>> kLowerClasses10 = {
    {"LR"},
    {"LLRR"},
    {"LLLRRR"},
    {"LLRLRR"},
    {"LLLLRRRR"},
    {"LLLRLRRR"},
    {"LL(LR)(RL)RR", "LL(RL)(LR)RR"},
    {"LLRLRLRR"},
    {"LLLLLRRRRR"},
    {"LLLLRLRRRR"},
    {"LLL(LR)(RL)RRR", "LLL(RL)(LR)RRR"},
    {"LL(LLRR)(RL)RR", "LL(RL)(LLRR)RR"},
    {"LLLRLRLRRR"},
    {"LL(LR)(LR)(RL)RR", "LL(LR)(RL)(LR)RR", "LL(RL)(LR)(LR)RR"},
    {"LL(LR)(RL)(RL)RR", "LL(RL)(LR)(RL)RR", "LL(RL)(RL)(LR)RR"},
    {"LLRLRLRLRR"},
};

// Q_3, rows and columns in the order alpha, beta1..3, gamma1..3, delta.
inline const std::array<const char*, 8> kQ3Adjacency = {
    "01110000", "10001100", "10001010", "10000110",
    "01100001", "01010001", "00110001", "00001110",
};
inline const std::array<const char*, 8> kQ3Raising = {
    "00000000", "10000000", "10000000", "10000000",
    "01100000", "01010000", "00110000", "00001110",
};
inline const std::array<const char*, 8> kQ3Lowering = {
    "01110000", "00001100", "00001010", "00000110",
    "00000001", "00000001", "00000001", "00000000",
};
inline const std::array<std::size_t, 8> kQ3Layer = {0, 1, 1, 1, 2, 2, 2, 3};

// (h, i, j, p^h_ij) as listed, i >= j.
inline const std::vector<std::tuple<int, int, int, int>> kQ3Intersections = {
    {0, 1, 1, 3}, {0, 2, 2, 3}, {0, 3, 3, 1}, {0, 0, 0, 1}, {1, 1, 0, 1},
    {1, 2, 1, 2}, {1, 3, 2, 1}, {2, 1, 1, 2}, {2, 2, 0, 1}, {2, 2, 2, 2},
    {2, 3, 1, 1}, {2, 3, 3, 0}, {3, 2, 1, 3}, {3, 3, 0, 1}, {3, 3, 2, 0},
};

// Q_3 edge list with vertices named by coordinates, base (0,0,0).
inline const char* kQ3Edges =
    "(0,0,0) (1,0,0)\n(0,0,0) (0,1,0)\n(0,0,0) (0,0,1)\n"
    "(1,0,0) (1,1,0)\n(1,0,0) (1,0,1)\n(0,1,0) (1,1,0)\n(0,1,0) (0,1,1)\n"
    "(0,0,1) (1,0,1)\n(0,0,1) (0,1,1)\n"
    "(1,1,0) (1,1,1)\n(1,0,1) (1,1,1)\n(0,1,1) (1,1,1)\n";

inline std::string rows_text(const std::array<const char*, 8>& rows) {
  std::string out;
  for (const char* r : rows) {
    for (int c = 0; c < 8; ++c) {
      if (c) out += ' ';
      out += r[c];
    }
    out += '\n';
  }
  return out;
}

inline std::string projection_text(std::size_t layer) {
  std::string out;
  for (std::size_t r = 0; r < 8; ++r) {
    for (std::size_t c = 0; c < 8; ++c) {
      if (c) out += ' ';
      out += r == c && kQ3Layer[r] == layer ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

}  // namespace golden
