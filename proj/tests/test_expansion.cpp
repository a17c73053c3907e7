#include <doctest.h>

#include "rde/expansion.hpp"
#include "rde/families.hpp"

using namespace rde;
using shift_poly::ShiftPoly;

TEST_CASE("path expansion closes with two families and the known Q") {
    auto spec = families::find_spec("path");
    auto handles = families::bapat_handles(spec);
    auto res = expansion::laplace_expand(handles.numerator, spec->min_size);
    CHECK(res.families.size() == 2);
    REQUIRE(res.Q.size() == 2);
    CHECK(res.Q[0][0] == ShiftPoly{0, 2});   // 2Y
    CHECK(res.Q[0][1] == ShiftPoly{0, 1});   // Y
    CHECK(res.Q[1][0] == ShiftPoly{0, -1});  // -Y
    CHECK(res.Q[1][1].is_zero());
}

TEST_CASE("ladder expansion reproduces the reference ledger shape") {
    auto spec = families::find_spec("ladder");
    auto handles = families::bapat_handles(spec);
    auto res = expansion::laplace_expand(handles.numerator, spec->min_size);
    CHECK(res.ledger.size() == 22);
    CHECK(res.families.size() == 13);
    REQUIRE(res.Q.size() == 13);
    // First row of the reference Q: Det(M(1)) = 2Y Det(M(2)) - Y Det(M(3)).
    CHECK(res.Q[0][0].is_zero());
    CHECK(res.Q[0][1] == ShiftPoly{0, 2});
    CHECK(res.Q[0][2] == ShiftPoly{0, -1});
    for (std::size_t j = 3; j < 13; ++j) CHECK(res.Q[0][j].is_zero());
}

TEST_CASE("ledger rows carry consistent ids, parents and modes") {
    auto spec = families::find_spec("linear2tree");
    auto handles = families::bapat_handles(spec);
    auto res = expansion::laplace_expand(handles.numerator, spec->min_size);
    int max_id = 0;
    for (const auto& row : res.ledger) {
        CHECK(row.id >= 1);
        CHECK(row.id <= static_cast<int>(res.families.size()));
        CHECK(row.parent <= max_id);  // children reference already-seen families
        max_id = std::max(max_id, row.id);
        if (row.parent != 0) {
            CHECK((row.mode == 'R' || row.mode == 'C' || row.mode == '0'));
            CHECK_FALSE(row.coeff.is_zero());
            CHECK(row.coeff.coeff(0) == 0);  // every coefficient carries a factor Y
        }
    }
    CHECK(max_id == static_cast<int>(res.families.size()));
}

TEST_CASE("ledger_to_Q rebuilds the assembled system") {
    auto spec = families::find_spec("ladder");
    auto handles = families::bapat_handles(spec);
    auto res = expansion::laplace_expand(handles.numerator, spec->min_size);
    auto rebuilt = expansion::ledger_to_Q(res.ledger, static_cast<int>(res.families.size()));
    CHECK(rebuilt == res.Q);
}

TEST_CASE("family cap aborts runaway expansions") {
    auto spec = families::find_spec("linear3tree");
    auto handles = families::bapat_handles(spec);
    CHECK_THROWS_AS((void)expansion::laplace_expand(handles.numerator, spec->min_size, 10),
                    std::runtime_error);
}
