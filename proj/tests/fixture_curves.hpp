// Shared table of test curves: weight data, defining equations, and the
// expected weight multisets of the two graded bases.  The multisets were
// computed by tools/graded-oracle (an independent brute-force
// implementation) and are frozen here; entries with printed reference
// values in the catalog agree with them.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

struct CurveFixture {
    std::string name;
    std::vector<long> weights;
    std::vector<long> degrees;
    std::string f1, f2;
    std::vector<long> phi_weights;  // sorted ascending
    std::vector<long> f_weights;    // sorted ascending
};

inline const std::vector<CurveFixture>& curve_fixtures() {
    static const std::vector<CurveFixture> table = {
        {"S5", {1, 1, 1}, {2, 2}, "x1^2 + x2^2 + x3^2", "x2 x3",
         {0, 1, 1, 1, 2}, {2, 2, 2, 3, 3}},
        {"S6", {3, 3, 2}, {6, 5}, "x1^2 + x2^2 + x3^3", "x2 x3",
         {0, 2, 3, 3, 4, 6}, {5, 5, 6, 7, 8, 9}},
        {"S7", {2, 2, 1}, {4, 3}, "x1^2 + x2^2 + x3^4", "x2 x3",
         {0, 1, 2, 2, 2, 3, 4}, {3, 3, 4, 4, 5, 5, 6}},
        {"T7", {3, 2, 2}, {6, 4}, "x1^2 + x2^3 + x3^3", "x2 x3",
         {0, 2, 2, 3, 4, 4, 6}, {4, 5, 5, 7, 7, 7, 9}},
        {"T8", {6, 4, 3}, {12, 7}, "x1^2 + x2^3 + x3^4", "x2 x3",
         {0, 3, 4, 6, 6, 8, 9, 12}, {7, 9, 10, 12, 13, 14, 15, 18}},
        {"T9", {15, 10, 6}, {30, 16}, "x1^2 + x2^3 + x3^5", "x2 x3",
         {0, 6, 10, 12, 15, 18, 20, 24, 30}, {16, 21, 25, 27, 31, 33, 35, 39, 45}},
        {"U7", {4, 5, 3}, {9, 8}, "x1 x2 + x3^3", "x1^2 + x2 x3",
         {0, 3, 4, 5, 6, 7, 10}, {7, 8, 9, 10, 11, 13, 14}},
        {"U8", {3, 4, 2}, {7, 6}, "x1 x2", "x1^2 + x2 x3 + x3^3",
         {0, 2, 3, 4, 4, 5, 6, 8}, {5, 6, 7, 7, 8, 9, 10, 11}},
        {"U9", {5, 7, 3}, {12, 10}, "x1 x2 + x3^4", "x1^2 + x2 x3",
         {0, 3, 5, 6, 7, 8, 9, 11, 14}, {8, 10, 11, 12, 13, 14, 16, 17, 19}},
        {"W8", {6, 5, 4}, {12, 10}, "x1^2 + x3^3", "x2^2 + x1 x3",
         {0, 4, 5, 6, 8, 9, 10, 14}, {9, 10, 11, 13, 14, 15, 17, 19}},
        {"W9", {5, 4, 3}, {10, 8}, "x1^2 + x2 x3^2", "x2^2 + x1 x3",
         {0, 3, 4, 5, 6, 7, 8, 9, 12}, {7, 8, 9, 10, 11, 12, 13, 14, 16}},
        {"Z9", {3, 3, 2}, {6, 6}, "x1^2 + x2^2 + x3^3", "x1 x2",
         {0, 2, 3, 3, 4, 5, 5, 6, 8}, {5, 5, 6, 7, 7, 8, 8, 10, 10}},
        {"Z10", {7, 6, 4}, {14, 12}, "x1^2 + x2 x3^2", "x2^2 + x3^3",
         {0, 4, 6, 7, 8, 10, 11, 12, 14, 18},
         {10, 11, 13, 14, 15, 17, 17, 19, 21, 23}},
        {"P22", {1, 1, 1}, {2, 2}, "x1^2 + x2^2 + x3^2", "x1 x2",
         {0, 1, 1, 1, 2}, {2, 2, 2, 3, 3}},
        {"P32", {2, 3, 3}, {6, 5}, "x1^3 + x2^2 + x3^2", "x1 x2",
         {0, 2, 3, 3, 4, 6}, {5, 5, 6, 7, 8, 9}},
        {"G9", {3, 3, 2}, {6, 6}, "x1^2 + x3^3", "x2^2 + x3^3",
         {0, 2, 3, 3, 4, 5, 5, 6, 8}, {5, 5, 6, 7, 7, 8, 8, 10, 10}},
        {"G12", {9, 6, 4}, {18, 12}, "x1^2 + x2 x3^3", "x2^2 + x3^3",
         {0, 4, 6, 8, 9, 10, 12, 13, 14, 16, 18, 22},
         {10, 13, 14, 15, 17, 19, 19, 21, 23, 23, 25, 29}},
        {"FZ12", {8, 3, 4}, {12, 11}, "x1 x3 + x3^3 + x2^4", "x1 x2",
         {0, 3, 4, 6, 7, 8, 8, 9, 10, 12, 13, 16},
         {7, 10, 11, 11, 12, 13, 14, 15, 16, 17, 19, 20}},
        {"FZ14", {10, 3, 5}, {15, 13}, "x1 x3 + x3^3 + x2^5", "x1 x2",
         {0, 3, 5, 6, 8, 9, 10, 10, 11, 12, 14, 15, 17, 20},
         {8, 11, 13, 13, 14, 15, 16, 17, 18, 19, 20, 22, 23, 25}},
        {"U11", {2, 3, 1}, {5, 4}, "x1 x2 + x3^5", "x1^2 + x2 x3",
         {0, 1, 2, 2, 3, 3, 3, 4, 4, 5, 6}, {3, 4, 4, 5, 5, 5, 6, 6, 7, 7, 8}},
        {"FW13", {11, 4, 5}, {16, 15}, "x1 x3 + x2^4", "x1 x2 + x3^3",
         {0, 4, 5, 8, 9, 10, 11, 12, 13, 14, 17, 18, 22},
         {9, 13, 14, 15, 16, 17, 18, 19, 21, 22, 23, 26, 27}},
        {"FW19", {17, 4, 7}, {24, 21}, "x1 x3 + x2^6", "x1 x2 + x3^3",
         {0, 4, 7, 8, 11, 12, 14, 15, 16, 17, 18, 19, 20, 22, 23, 26, 27, 30, 34},
         {11, 15, 18, 19, 21, 22, 23, 24, 25, 26, 27, 29, 30, 31, 33, 34, 37, 38, 41}},
        {"K13", {7, 3, 5}, {14, 10}, "x1^2 + x2^3 x3", "x1 x2 + x3^2",
         {0, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 15, 18},
         {8, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 23}},
        {"K14", {10, 4, 7}, {20, 14}, "x1^2 + x2^5", "x1 x2 + x3^2",
         {0, 4, 7, 8, 10, 11, 12, 14, 15, 16, 18, 19, 22, 26},
         {11, 14, 15, 17, 18, 19, 21, 22, 23, 25, 26, 27, 29, 33}},
        {"HD13", {7, 5, 4}, {14, 12}, "x1^2 + x2^2 x3", "x1 x2 + x3^3",
         {0, 4, 5, 7, 8, 9, 10, 11, 12, 13, 15, 16, 20},
         {9, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 22, 24}},
        {"HD14", {9, 6, 5}, {18, 15}, "x1^2 + x2^3", "x1 x2 + x3^3",
         {0, 5, 6, 9, 10, 11, 12, 14, 15, 16, 17, 20, 21, 26},
         {11, 14, 15, 16, 17, 19, 20, 21, 22, 23, 25, 26, 28, 31}},
        {"FT44", {2, 1, 1}, {3, 3}, "x1 x2 + x3^3", "x1 x3 + x2^3 + x2 x3^2",
         {0, 1, 1, 2, 2, 2, 2, 3, 3, 4}, {2, 3, 3, 3, 3, 4, 4, 4, 5, 5}},
        {"NR235", {15, 10, 6}, {30, 25}, "x1^2 + x2^3 + x3^5", "x1 x2",
         {0, 6, 10, 12, 15, 16, 18, 20, 21, 22, 24, 26, 27, 28, 30, 32, 33, 36,
          38, 42, 48},
         {16, 21, 22, 25, 26, 27, 28, 31, 32, 33, 34, 36, 37, 38, 39, 42, 43,
          44, 48, 49, 54}},
    };
    return table;
}

inline const CurveFixture& fixture_by_name(const std::string& name) {
    for (const auto& fx : curve_fixtures()) {
        if (fx.name == name) return fx;
    }
    throw std::logic_error("unknown fixture " + name);
}
