#include "rde/fixtures.hpp"

namespace rde::fixtures {

using shift_poly::mul;
using shift_poly::normalized;

namespace {
ShiftPoly prod(std::initializer_list<ShiftPoly> factors) {
    ShiftPoly acc{1};
    for (const auto& f : factors) acc = mul(acc, f);
    return normalized(acc);
}
const ShiftPoly q4{1, 0, -4, 0, 1};  // Y^4 - 4Y^2 + 1
}  // namespace

ShiftPoly ladder_system_annihilator() {
    return prod({{-1, 1}, {1, 1}, {1, 0, 0, 0, 1}, q4, q4});
}

ShiftPoly ladder_minimal() { return prod({{-1, 1}, {1, 1}, q4, q4}); }

ShiftPoly ladder_stride2() { return prod({{-1, 1}, q4, q4}); }

ShiftPoly path_annihilator() { return ShiftPoly{1, -2, 1}; }
ShiftPoly path_num_minimal() { return prod({{-1, 1}, {-1, 1}}); }
ShiftPoly path_den_minimal() { return ShiftPoly{-1, 1}; }

ShiftPoly two_tree_num_minimal() { return prod({{1, 1}, {1, -3, 1}, {1, -3, 1}}); }
ShiftPoly two_tree_den_minimal() { return ShiftPoly{1, -3, 1}; }

ShiftPoly fan_annihilator() { return ShiftPoly{1, -3, 1}; }
ShiftPoly wheel_den_fixture() { return prod({{1, -3, 1}, {-1, 1}}); }

ShiftPoly three_tree_system_annihilator() {
    return prod({{-1, 1},
                 {-1, 1},
                 {1, -4, -1, -4, 1},
                 {1, -4, -1, -4, 1},
                 {1, 3, 6, 3, 1},
                 {-1, 6, -1, -6, -48, 20, 0, 2}});
}

ShiftPoly three_tree_num_minimal() {
    return prod({{-1, 1}, {-1, 1}, {1, -4, -1, -4, 1}, {1, -4, -1, -4, 1}, {1, 3, 6, 3, 1}});
}

ShiftPoly three_tree_den_minimal() { return prod({{-1, 1}, {1, -4, -1, -4, 1}}); }

std::vector<Int> three_tree_numerator_heads() {
    return {Int("127920"),     Int("606530"),      Int("2858661"),    Int("13426688"),
            Int("62846424"),   Int("293216196"),   Int("1364289416"), Int("6331841700"),
            Int("29319607080"), Int("135483247712"), Int("624865625995")};
}

std::vector<PrintedValue> three_tree_num_ratio_table() {
    return {{1.00067, 5}, {0.999617, 6}, {1.00007, 5}, {1.00004, 5},
            {0.999965, 6}, {1.00001, 5}, {1.0, 2},     {0.999997, 6}};
}

std::vector<PrintedValue> three_tree_den_ratio_table() {
    return {{1.00078, 5}, {1.0002, 4}, {1.00003, 5}, {1.00001, 5}, {1.0, 2},
            {1.0, 2},     {1.0, 2},    {1.0, 2},     {1.0, 2},     {1.0, 2}};
}

}  // namespace rde::fixtures
