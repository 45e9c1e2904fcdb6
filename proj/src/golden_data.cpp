#include "qcheb/families.hpp"

#include <map>
#include <vector>

namespace qcheb {

// Embedded expected values for the eight incomplete-number columns, rows
// n = 1..9, k = 0..floor(n/2). These are the published values verbatim; the
// one cell that disagrees with the definitions is listed in
// knownDiscrepancies() and carries its re-derivation in the note.
const std::map<TableColumn, std::vector<GoldenCell>>& goldenCells() {
    static const std::map<TableColumn, std::vector<GoldenCell>> cells = {
        {TableColumn::T4_T, {{1, 0, 1}, {2, 0, 2}, {2, 1, 1}, {3, 0, 4}, {3, 1, 1}, {4, 0, 8}, {4, 1, 0}, {4, 2, 1}, {5, 0, 16}, {5, 1, -4}, {5, 2, 1}, {6, 0, 32}, {6, 1, -16}, {6, 2, 2}, {6, 3, 1}, {7, 0, 64}, {7, 1, -48}, {7, 2, 8}, {7, 3, 1}, {8, 0, 128}, {8, 1, -128}, {8, 2, 32}, {8, 3, 0}, {8, 4, 1}, {9, 0, 256}, {9, 1, -320}, {9, 2, 112}, {9, 3, -8}, {9, 4, 1}}},
        {TableColumn::T4_U, {{1, 0, 2}, {2, 0, 4}, {2, 1, 3}, {3, 0, 8}, {3, 1, 4}, {4, 0, 16}, {4, 1, 4}, {4, 2, 5}, {5, 0, 32}, {5, 1, 0}, {5, 2, 6}, {6, 0, 64}, {6, 1, -16}, {6, 2, 8}, {6, 3, 7}, {7, 0, 128}, {7, 1, -64}, {7, 2, 16}, {7, 3, 8}, {8, 0, 256}, {8, 1, -192}, {8, 2, 48}, {8, 3, 8}, {8, 4, 9}, {9, 0, 512}, {9, 1, -512}, {9, 2, 160}, {9, 3, 0}, {9, 4, 10}}},
        {TableColumn::T5_F, {{1, 0, 1}, {2, 0, 1}, {2, 1, 2}, {3, 0, 1}, {3, 1, 3}, {4, 0, 1}, {4, 1, 4}, {4, 2, 5}, {5, 0, 1}, {5, 1, 5}, {5, 2, 8}, {6, 0, 1}, {6, 1, 6}, {6, 2, 12}, {6, 3, 13}, {7, 0, 1}, {7, 1, 7}, {7, 2, 17}, {7, 3, 21}, {8, 0, 1}, {8, 1, 8}, {8, 2, 23}, {8, 3, 33}, {8, 4, 34}, {9, 0, 1}, {9, 1, 9}, {9, 2, 30}, {9, 3, 50}, {9, 4, 55}}},
        {TableColumn::T5_P, {{1, 0, 2}, {2, 0, 4}, {2, 1, 5}, {3, 0, 8}, {3, 1, 12}, {4, 0, 16}, {4, 1, 28}, {4, 2, 29}, {5, 0, 32}, {5, 1, 64}, {5, 2, 70}, {6, 0, 64}, {6, 1, 144}, {6, 2, 168}, {6, 3, 169}, {7, 0, 128}, {7, 1, 320}, {7, 2, 400}, {7, 3, 408}, {8, 0, 256}, {8, 1, 704}, {8, 2, 944}, {8, 3, 984}, {8, 4, 985}, {9, 0, 512}, {9, 1, 1536}, {9, 2, 2208}, {9, 3, 2368}, {9, 4, 2378}}},
        {TableColumn::T5_J, {{1, 0, 1}, {2, 0, 1}, {2, 1, 3}, {3, 0, 1}, {3, 1, 5}, {4, 0, 1}, {4, 1, 7}, {4, 2, 11}, {5, 0, 1}, {5, 1, 9}, {5, 2, 21}, {6, 0, 1}, {6, 1, 114}, {6, 2, 35}, {6, 3, 43}, {7, 0, 1}, {7, 1, 13}, {7, 2, 53}, {7, 3, 85}, {8, 0, 1}, {8, 1, 15}, {8, 2, 75}, {8, 3, 155}, {8, 4, 171}, {9, 0, 1}, {9, 1, 17}, {9, 2, 101}, {9, 3, 261}, {9, 4, 341}}},
        {TableColumn::T6_L, {{1, 0, 1}, {2, 0, 1}, {2, 1, 3}, {3, 0, 1}, {3, 1, 4}, {4, 0, 1}, {4, 1, 5}, {4, 2, 7}, {5, 0, 1}, {5, 1, 6}, {5, 2, 11}, {6, 0, 1}, {6, 1, 7}, {6, 2, 16}, {6, 3, 18}, {7, 0, 1}, {7, 1, 8}, {7, 2, 22}, {7, 3, 29}, {8, 0, 1}, {8, 1, 9}, {8, 2, 29}, {8, 3, 45}, {8, 4, 47}, {9, 0, 1}, {9, 1, 10}, {9, 2, 37}, {9, 3, 67}, {9, 4, 76}}},
        {TableColumn::T6_Q, {{1, 0, 2}, {2, 0, 4}, {2, 1, 6}, {3, 0, 8}, {3, 1, 14}, {4, 0, 16}, {4, 1, 32}, {4, 2, 34}, {5, 0, 32}, {5, 1, 72}, {5, 2, 82}, {6, 0, 64}, {6, 1, 160}, {6, 2, 196}, {6, 3, 198}, {7, 0, 128}, {7, 1, 352}, {7, 2, 464}, {7, 3, 478}, {8, 0, 256}, {8, 1, 768}, {8, 2, 1088}, {8, 3, 1152}, {8, 4, 1154}, {9, 0, 512}, {9, 1, 1664}, {9, 2, 2528}, {9, 3, 2768}, {9, 4, 2786}}},
        {TableColumn::T6_j, {{1, 0, 1}, {2, 0, 1}, {2, 1, 5}, {3, 0, 1}, {3, 1, 7}, {4, 0, 1}, {4, 1, 9}, {4, 2, 17}, {5, 0, 1}, {5, 1, 11}, {5, 2, 31}, {6, 0, 1}, {6, 1, 13}, {6, 2, 49}, {6, 3, 65}, {7, 0, 1}, {7, 1, 15}, {7, 2, 71}, {7, 3, 127}, {8, 0, 1}, {8, 1, 17}, {8, 2, 97}, {8, 3, 225}, {8, 4, 257}, {9, 0, 1}, {9, 1, 19}, {9, 2, 127}, {9, 3, 367}, {9, 4, 511}}},
    };
    return cells;
}

const std::vector<KnownDiscrepancy>& knownDiscrepancies() {
    static const std::vector<KnownDiscrepancy> list = {
        {TableColumn::T5_J, 6, 1, 114, 11,
         "definition gives sum_{j<=1} C(6-j,j) 2^j = 1 + 5*2 = 11; the published 114 "
         "breaks both the row's monotone accretion (next cell is 35) and the column "
         "recurrence, so it is treated as a typo"},
    };
    return list;
}

}  // namespace qcheb
