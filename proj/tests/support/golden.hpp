#pragma once

// Block grids transcribed from the worked alpha = (5,4,3,1,1) example: each
// token names the Toeplitz family (letter = chain pair) and its diagonal
// index; "." is a zero block.

#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace golden {

struct Token {
  std::size_t row_chain;
  std::size_t col_chain;
  std::size_t diagonal;
};

inline const std::map<char, std::pair<std::size_t, std::size_t>>& letters() {
  static const std::map<char, std::pair<std::size_t, std::size_t>> table = {
      {'A', {1, 1}}, {'I', {1, 2}}, {'L', {1, 3}}, {'Q', {1, 4}}, {'W', {1, 5}},
      {'H', {2, 1}}, {'B', {2, 2}}, {'M', {2, 3}}, {'R', {2, 4}}, {'X', {2, 5}},
      {'J', {3, 1}}, {'K', {3, 2}}, {'C', {3, 3}}, {'S', {3, 4}}, {'Y', {3, 5}},
      {'N', {4, 1}}, {'O', {4, 2}}, {'P', {4, 3}}, {'D', {4, 4}}, {'G', {4, 5}},
      {'T', {5, 1}}, {'U', {5, 2}}, {'V', {5, 3}}, {'F', {5, 4}}, {'E', {5, 5}},
  };
  return table;
}

// Centralizer element of the generalized Jordan form.
inline const std::array<const char*, 14> kJordanX = {
    "A1 .  .  .  .  .  .  .  .  .  .  .  .  .",
    "A2 A1 .  .  .  I1 .  .  .  .  .  .  .  .",
    "A3 A2 A1 .  .  I2 I1 .  .  L1 .  .  .  .",
    "A4 A3 A2 A1 .  I3 I2 I1 .  L2 L1 .  .  .",
    "A5 A4 A3 A2 A1 I4 I3 I2 I1 L3 L2 L1 Q1 W1",
    "H1 .  .  .  .  B1 .  .  .  .  .  .  .  .",
    "H2 H1 .  .  .  B2 B1 .  .  M1 .  .  .  .",
    "H3 H2 H1 .  .  B3 B2 B1 .  M2 M1 .  .  .",
    "H4 H3 H2 H1 .  B4 B3 B2 B1 M3 M2 M1 R1 X1",
    "J1 .  .  .  .  K1 .  .  .  C1 .  .  .  .",
    "J2 J1 .  .  .  K2 K1 .  .  C2 C1 .  .  .",
    "J3 J2 J1 .  .  K3 K2 K1 .  C3 C2 C1 S1 Y1",
    "N1 .  .  .  .  O1 .  .  .  P1 .  .  D1 G1",
    "T1 .  .  .  .  U1 .  .  .  V1 .  .  F1 E1",
};

// Centralizer element of the generalized Weyr form, levels 5|3|3|2|1.
inline const std::array<const char*, 14> kWeyrK = {
    "A1 I1 L1 Q1 W1 A2 I2 L2 A3 I3 L3 A4 I4 A5",
    ".  B1 M1 R1 X1 H1 B2 M2 H2 B3 M3 H3 B4 H4",
    ".  .  C1 S1 Y1 .  K1 C2 J1 K2 C3 J2 K3 J3",
    ".  .  .  D1 G1 .  .  .  .  .  P1 .  O1 N1",
    ".  .  .  F1 E1 .  .  .  .  .  V1 .  U1 T1",
    ".  .  .  .  .  A1 I1 L1 A2 I2 L2 A3 I3 A4",
    ".  .  .  .  .  .  B1 M1 H1 B2 M2 H2 B3 H3",
    ".  .  .  .  .  .  .  C1 .  K1 C2 J1 K2 J2",
    ".  .  .  .  .  .  .  .  A1 I1 L1 A2 I2 A3",
    ".  .  .  .  .  .  .  .  .  B1 M1 H1 B2 H2",
    ".  .  .  .  .  .  .  .  .  .  C1 .  K1 J1",
    ".  .  .  .  .  .  .  .  .  .  .  A1 I1 A2",
    ".  .  .  .  .  .  .  .  .  .  .  .  B1 H1",
    ".  .  .  .  .  .  .  .  .  .  .  .  .  A1",
};

using Grid = std::vector<std::vector<std::optional<Token>>>;

inline Grid parse_grid(const std::array<const char*, 14>& rows) {
  Grid grid;
  for (const char* row : rows) {
    std::istringstream is(row);
    std::vector<std::optional<Token>> cells;
    std::string tok;
    while (is >> tok) {
      if (tok == ".") {
        cells.emplace_back();
      } else {
        const auto [i, j] = letters().at(tok[0]);
        cells.emplace_back(Token{i, j, std::stoul(tok.substr(1))});
      }
    }
    grid.push_back(std::move(cells));
  }
  return grid;
}

// The 7-block W of the alpha = (3,2,2) example: "C", "E" or ".".
inline const std::array<const char*, 7> kWeyr322 = {
    "C . . E . . .",
    ". C . . E . .",
    ". . C . . E .",
    ". . . C . . E",
    ". . . . C . .",
    ". . . . . C .",
    ". . . . . . C",
};

}  // namespace golden
