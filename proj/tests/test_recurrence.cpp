#include <doctest.h>

#include "rde/families.hpp"
#include "rde/fixtures.hpp"
#include "rde/oracle.hpp"
#include "rde/recurrence.hpp"

using namespace rde;
using shift_poly::ShiftPoly;

namespace {

std::vector<Int> fibonacci_seq(int len) {
    std::vector<Int> s{0, 1};
    while (static_cast<int>(s.size()) < len) s.push_back(s[s.size() - 1] + s[s.size() - 2]);
    return s;
}

}  // namespace

TEST_CASE("Berlekamp-Massey recovers the Fibonacci recurrence") {
    auto fib = fibonacci_seq(20);
    ShiftPoly bm = recurrence::berlekamp_massey(fib);
    CHECK(bm == ShiftPoly{-1, 1, 1});  // Y^2 + Y - 1 normalized
    for (long n = 2; n < 20; ++n) CHECK(shift_poly::apply(bm, fib, 0, n) == 0);
}

TEST_CASE("validity index flags a corrupted head exactly") {
    auto fib = fibonacci_seq(24);
    fib[3] += 5;  // break the recurrence at n = 3, 4, 5
    CHECK(recurrence::validity_index(ShiftPoly{-1, 1, 1}, fib, 0) == 6);
    fib[3] -= 5;
    CHECK(recurrence::validity_index(ShiftPoly{-1, 1, 1}, fib, 0) == 2);
}

TEST_CASE("minimal annihilator divides the system annihilator (ladder)") {
    auto spec = families::find_spec("ladder");
    auto handles = families::bapat_handles(spec);
    auto seq = recurrence::oracle_sequence(*handles.numerator, 0, 70);
    ShiftPoly a = fixtures::ladder_system_annihilator();
    auto rec = recurrence::minimal_annihilator(a, seq, 0);
    CHECK(rec.annihilator == fixtures::ladder_minimal());
    CHECK(rec.validity_index == 10);
    CHECK(shift_poly::divides(rec.annihilator, a).has_value());
    CHECK(recurrence::hankel_minimal(rec.annihilator, seq));
    // The full degree-14 operator is not minimal: its Hankel certificate fails.
    CHECK_FALSE(recurrence::hankel_minimal(a, seq));
}

TEST_CASE("root-power characteristic polynomial (resultant construction)") {
    // Roots of X^2-3X+1 are phi^2, phi^-2; squaring gives Z^2-7Z+1.
    CHECK(recurrence::root_power_char(ShiftPoly{1, -3, 1}, 2) == ShiftPoly{1, -7, 1});
    // Stride 1 is the identity map.
    CHECK(recurrence::root_power_char(ShiftPoly{1, -3, 1}, 1) == ShiftPoly{1, -3, 1});
}

TEST_CASE("stride-2 subsequence of Fibonacci") {
    auto fib = fibonacci_seq(40);
    auto res = recurrence::subsequence_annihilator(ShiftPoly{-1, 1, 1}, 2, fib, 0);
    // F_{2n} satisfies t_n = 3 t_{n-1} - t_{n-2}.
    CHECK(res.minimal.annihilator == ShiftPoly{1, -3, 1});
    CHECK(res.sub_start == 0);
    REQUIRE(res.subsequence.size() >= 4);
    CHECK(res.subsequence[0] == 0);
    CHECK(res.subsequence[1] == 1);
    CHECK(res.subsequence[2] == 3);
    CHECK(res.subsequence[3] == 8);
}

TEST_CASE("ladder stride-2 annihilator in the original variable") {
    auto spec = families::find_spec("ladder");
    auto handles = families::bapat_handles(spec);
    auto seq = recurrence::oracle_sequence(*handles.numerator, 0, 70);
    auto res = recurrence::subsequence_annihilator(fixtures::ladder_minimal(), 2, seq, 0);
    CHECK(res.original == fixtures::ladder_stride2());
    // The pulled-back divisor still annihilates the even subsequence.
    for (long n = res.sub_start + res.minimal.validity_index;
         n < res.sub_start + static_cast<long>(res.subsequence.size()); ++n)
        CHECK(shift_poly::apply(res.minimal.annihilator, res.subsequence, res.sub_start, n) == 0);
}
