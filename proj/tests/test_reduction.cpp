#include <doctest.h>

#include "rde/expansion.hpp"
#include "rde/families.hpp"
#include "rde/fixtures.hpp"
#include "rde/reduction.hpp"

using namespace rde;
using shift_poly::ShiftPoly;

namespace {

reduction::ReducedSystem reduce_family(const std::string& name) {
    auto spec = families::find_spec(name);
    auto handles = families::bapat_handles(spec);
    auto exp = expansion::laplace_expand(handles.numerator, spec->min_size);
    return reduction::system_reduce(exp.Q);
}

}  // namespace

TEST_CASE("SystemReduce empties the eliminated columns") {
    auto rs = reduce_family("ladder");
    CHECK(rs.support == std::vector<int>{4, 5, 13});
    for (const auto& row : rs.R)
        for (std::size_t j = 0; j < row.size(); ++j) {
            bool in_support = std::find(rs.support.begin(), rs.support.end(),
                                        static_cast<int>(j) + 1) != rs.support.end();
            if (!in_support) CHECK(row[j].is_zero());
        }
}

TEST_CASE("small-system annihilators") {
    // x_n = 2Y x_n  =>  annihilated by 1 - 2Y (up to sign).
    ShiftPoly one{1};
    CHECK(reduction::annihilator_1x1(one, ShiftPoly{0, 2}) == ShiftPoly{1, -2});
    // Coupled pair x = Yx + Yy, y = Yx (Fibonacci-type):
    // (D'-F')(A'-B') - C'E' with A'=1, B'=Y, C'=Y, D'=1, E'=Y, F'=0.
    ShiftPoly y{0, 1};
    ShiftPoly ann = reduction::annihilator_2x2(one, y, y, one, y, ShiftPoly{});
    CHECK(shift_poly::normalized(ann) == ShiftPoly{-1, 1, 1});  // Y^2 + Y - 1
}

TEST_CASE("solve_identity_system recovers the reference annihilators") {
    auto path = reduce_family("path");
    CHECK(shift_poly::normalized(reduction::solve_identity_system(path)) ==
          fixtures::path_annihilator());
    auto ladder = reduce_family("ladder");
    CHECK(shift_poly::normalized(reduction::solve_identity_system(ladder)) ==
          fixtures::ladder_system_annihilator());
}

TEST_CASE("support cap rejects oversized systems") {
    auto rs = reduce_family("corrugated2tree");
    CHECK(rs.support.size() == 26);
    CHECK_THROWS((void)reduction::solve_identity_system(rs, 16));
}

TEST_CASE("wheel denominator fixture") {
    auto fx = reduction::wheel_denominator_fixture();
    CHECK(fx.annihilator == fixtures::wheel_den_fixture());
    CHECK(fx.validity == 6);
}
