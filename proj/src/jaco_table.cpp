#include "curlgraph/jaco_table.hpp"

namespace curling {

const std::vector<JacoRow>& jaco_golden_table() {
    static const std::vector<JacoRow> table = {
        {1, {0}, 1, 1, 1},
        {2, {1, 1}, 1, 1, 2},
        {3, {1, 2, 1}, 1, 1, 2},
        {4, {1, 2, 2, 1}, 2, 4, 2},
        {5, {1, 2, 3, 2, 2}, 1, 1, 3},
        {6, {1, 2, 3, 3, 3, 2}, 1, 1, 3},
        {7, {1, 2, 3, 4, 4, 3, 3}, 1, 1, 3},
        {8, {1, 2, 3, 4, 5, 4, 4, 3}, 1, 1, 3},
        {9, {1, 2, 3, 4, 5, 5, 5, 4, 3}, 1, 1, 3},
        {10, {1, 2, 3, 4, 5, 6, 6, 5, 4, 4}, 1, 1, 3},
        {11, {1, 2, 3, 4, 5, 6, 7, 6, 5, 5, 4}, 1, 1, 3},
        {12, {1, 2, 3, 4, 5, 6, 7, 7, 6, 6, 5, 4}, 1, 1, 3},
        {13, {1, 2, 3, 4, 5, 6, 7, 8, 7, 7, 6, 5, 5}, 2, 4, 3},
        {14, {1, 2, 3, 4, 5, 6, 7, 8, 8, 8, 7, 6, 6, 5}, 2, 4, 3},
        {15, {1, 2, 3, 4, 5, 6, 7, 8, 9, 9, 8, 7, 7, 6, 6}, 2, 4, 3},
        {16, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 9, 8, 8, 7, 7, 6}, 2, 4, 3},
        {17, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 10, 9, 9, 8, 8, 7, 6}, 2, 4, 3},
        {18, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 10, 10, 9, 9, 8, 7, 7}, 3, 9, 3},
        {19, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 11, 11, 10, 10, 9, 8, 8, 7},
         3, 9, 3},
        {20, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 12, 11, 11, 10, 9, 9, 8, 8},
         3, 9, 3},
        {21, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 12, 12, 11, 10, 10, 9,
              9, 8},
         3, 9, 3},
        {22, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 13, 13, 12, 11, 11, 10,
              10, 9, 8},
         3, 9, 3},
        {23, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 14, 13, 12, 12, 11,
              11, 10, 9, 9},
         3, 9, 3},
        {24, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 14, 13, 13, 12,
              12, 11, 10, 10, 9},
         3, 9, 3},
        {25, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 15, 14, 14, 13,
              13, 12, 11, 11, 10, 9},
         3, 9, 3},
    };
    return table;
}

} // namespace curling
