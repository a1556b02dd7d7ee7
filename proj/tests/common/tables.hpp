#pragma once

// Reference colorings for the three caterpillar families, plus the 14
// reduction rows.  Colors are 1-based as printed; row_to_coloring shifts
// them to the library's 0-based scheme.

#include <string>
#include <utility>
#include <vector>

#include "sec/caterpillar.hpp"

namespace sectest {

struct TableRow {
  std::vector<int> alphas;                 // spine colors alpha_0..alpha_l
  std::vector<std::vector<int>> pendants;  // per spine vertex x_1..x_l
};

inline sec::CatColoring row_to_coloring(const TableRow& row) {
  sec::CatColoring col;
  for (int a : row.alphas) col.spine.push_back(a - 1);
  for (const auto& p : row.pendants) {
    std::vector<int> q;
    for (int c : p) q.push_back(c - 1);
    col.pendant.push_back(q);
  }
  return col;
}

// 11 colorings of Cat(3,3,3,3,3,3,3,3) with 5 colors
inline std::vector<TableRow> table1() {
  return {
      {{1, 2, 5, 3, 2, 1, 4, 2, 3},
       {{3}, {4}, {1}, {4}, {5}, {3}, {5}, {1}}},
      {{1, 2, 5, 3, 2, 1, 4, 2, 1},
       {{3}, {4}, {1}, {4}, {5}, {3}, {5}, {3}}},
      {{1, 3, 4, 2, 3, 4, 5, 3, 2},
       {{2}, {5}, {1}, {5}, {1}, {2}, {1}, {4}}},
      {{1, 3, 4, 2, 3, 4, 5, 3, 4},
       {{2}, {5}, {1}, {5}, {1}, {2}, {1}, {2}}},
      {{1, 2, 5, 3, 2, 1, 3, 2, 1},
       {{3}, {4}, {1}, {4}, {5}, {4}, {5}, {4}}},
      {{1, 2, 5, 3, 2, 1, 3, 2, 4},
       {{3}, {4}, {1}, {4}, {5}, {4}, {5}, {1}}},
      {{1, 2, 5, 3, 4, 1, 3, 4, 2},
       {{3}, {4}, {1}, {2}, {5}, {2}, {5}, {1}}},
      {{1, 2, 5, 3, 2, 1, 3, 5, 1},
       {{3}, {4}, {1}, {4}, {5}, {4}, {2}, {4}}},
      {{1, 2, 5, 3, 2, 1, 3, 5, 4},
       {{3}, {4}, {1}, {4}, {5}, {4}, {2}, {1}}},
      {{1, 2, 5, 3, 4, 5, 3, 4, 2},
       {{3}, {4}, {1}, {2}, {1}, {2}, {1}, {5}}},
      {{1, 2, 5, 3, 4, 5, 3, 4, 5},
       {{3}, {4}, {1}, {2}, {1}, {2}, {1}, {2}}},
  };
}

// 12 colorings of Cat(4,3,4,3,4,3) with 6 colors
inline std::vector<TableRow> table2() {
  return {
      {{1, 2, 5, 1, 6, 3, 1}, {{3, 4}, {6}, {3, 4}, {2}, {4, 5}, {2}}},
      {{1, 3, 6, 2, 5, 1, 2}, {{2, 4}, {5}, {1, 4}, {3}, {4, 5}, {3}}},
      {{1, 2, 5, 1, 6, 5, 1}, {{3, 4}, {6}, {3, 4}, {2}, {3, 4}, {2}}},
      {{1, 3, 6, 2, 3, 1, 2}, {{2, 4}, {5}, {1, 4}, {5}, {4, 6}, {5}}},
      {{1, 3, 6, 1, 3, 2, 5}, {{2, 4}, {5}, {2, 4}, {5}, {4, 6}, {1}}},
      {{1, 3, 6, 1, 3, 6, 1}, {{2, 4}, {5}, {2, 4}, {5}, {2, 4}, {5}}},
      {{1, 4, 6, 1, 4, 6, 5}, {{2, 3}, {5}, {2, 3}, {5}, {2, 3}, {1}}},
      {{1, 2, 5, 3, 6, 4, 2}, {{3, 4}, {6}, {1, 4}, {2}, {1, 5}, {3}}},
      {{1, 4, 6, 2, 4, 3, 2}, {{2, 3}, {5}, {1, 3}, {5}, {1, 6}, {5}}},
      {{1, 4, 6, 2, 4, 3, 5}, {{2, 3}, {5}, {1, 3}, {5}, {1, 6}, {2}}},
      {{1, 4, 6, 2, 4, 6, 2}, {{2, 3}, {5}, {1, 3}, {5}, {1, 3}, {5}}},
      {{1, 3, 6, 2, 3, 6, 5}, {{2, 4}, {5}, {1, 4}, {5}, {1, 4}, {2}}},
  };
}

// 12 colorings of Cat(4,3,4,3,3,4) with 6 colors
inline std::vector<TableRow> table3() {
  return {
      {{1, 3, 6, 1, 5, 4, 1}, {{2, 4}, {5}, {2, 4}, {3}, {6}, {2, 3}}},
      {{1, 2, 6, 3, 5, 1, 2}, {{3, 4}, {5}, {1, 4}, {2}, {6}, {3, 4}}},
      {{1, 2, 6, 4, 2, 3, 1}, {{3, 4}, {5}, {1, 3}, {5}, {6}, {4, 5}}},
      {{1, 3, 5, 4, 6, 1, 3}, {{2, 4}, {6}, {1, 2}, {3}, {2}, {4, 5}}},
      {{1, 3, 5, 4, 6, 1, 5}, {{2, 4}, {6}, {1, 2}, {3}, {2}, {3, 4}}},
      {{1, 2, 6, 1, 2, 6, 1}, {{3, 4}, {5}, {3, 4}, {5}, {3}, {4, 5}}},
      {{1, 2, 5, 1, 2, 5, 4}, {{3, 4}, {6}, {3, 4}, {6}, {3}, {1, 6}}},
      {{1, 2, 5, 4, 2, 1, 5}, {{3, 4}, {6}, {1, 3}, {6}, {3}, {4, 6}}},
      {{1, 2, 5, 3, 6, 4, 2}, {{3, 4}, {6}, {1, 4}, {2}, {1}, {3, 5}}},
      {{1, 3, 5, 4, 6, 2, 5}, {{2, 4}, {6}, {1, 2}, {3}, {1}, {3, 4}}},
      {{1, 2, 6, 3, 2, 6, 3}, {{3, 4}, {5}, {1, 4}, {5}, {1}, {4, 5}}},
      {{1, 2, 5, 4, 2, 3, 5}, {{3, 4}, {6}, {1, 3}, {6}, {1}, {4, 6}}},
  };
}

// the sigma = 7 reduction table: degree sequence of T and of T'_{-1}
inline std::vector<std::pair<std::string, std::string>> table4() {
  return {
      {"Cat(3,5,3,5,3,5,3)", "Cat(3,4,3,4,3,4)"},
      {"Cat(5,3,5,3,3,5,3)", "Cat(4,3,4,3,3,4)"},
      {"Cat(5,3,3,5,3,5,3)", "Cat(4,3,3,4,3,4)"},
      {"Cat(5,3,5,3,5,3,5)", "Cat(4,3,4,3,4,3)"},
      {"Cat(5,3,3,5,3,3,5)", "Cat(4,3,3,4,3,3)"},
      {"Cat(3,5,3,5,3,4,4)", "Cat(3,4,3,4,3,3)"},
      {"Cat(5,3,5,3,4,4,4)", "Cat(4,3,4,3,3,4)"},
      {"Cat(3,5,3,4,4,4,4)", "Cat(3,4,3,3,4,3)"},
      {"Cat(5,3,4,4,4,4,4)", "Cat(4,3,3,4,3,4)"},
      {"Cat(4,4,4,4,4,4,4)", "Cat(3,4,3,4,3,4)"},
      {"Cat(3,5,3,4,4,3,5)", "Cat(3,4,3,3,4,3)"},
      {"Cat(5,3,4,4,4,3,5)", "Cat(4,3,3,4,3,3)"},
      {"Cat(4,4,3,5,3,4,4)", "Cat(3,4,3,4,3,3)"},
      {"Cat(4,4,3,5,3,3,5)", "Cat(3,4,3,4,3,3)"},
  };
}

inline sec::Caterpillar caterpillar_of(const TableRow& row) {
  std::vector<int> degrees;
  for (const auto& p : row.pendants) degrees.push_back((int)p.size() + 2);
  return sec::Caterpillar(degrees);
}

// boundary tuple realized by a table row, over the 1..kappa palette
inline sec::PrePalette boundary_of(const TableRow& row, int kappa) {
  sec::CatColoring col = row_to_coloring(row);
  sec::PrePalette p;
  for (int i = 0; i < kappa; ++i) p.palette.push_back(i);
  const int l = (int)col.pendant.size();
  p.alpha0 = col.spine[0];
  p.alphal = col.spine[l];
  p.c1 = col.pendant[0];
  p.c1.push_back(col.spine[0]);
  p.c1.push_back(col.spine[1]);
  std::sort(p.c1.begin(), p.c1.end());
  p.cl = col.pendant[l - 1];
  p.cl.push_back(col.spine[l - 1]);
  p.cl.push_back(col.spine[l]);
  std::sort(p.cl.begin(), p.cl.end());
  return p;
}

}  // namespace sectest
