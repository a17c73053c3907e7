#include <doctest.h>

#include "rde/binet.hpp"
#include "rde/pipeline.hpp"

using namespace rde;
using binet::Real;
using shift_poly::ShiftPoly;

TEST_CASE("Yun squarefree decomposition") {
    // (Y-1)^2 (Y+2), expressed in X-form for the root finder's input.
    ShiftPoly p = shift_poly::mul(shift_poly::mul(ShiftPoly{-1, 1}, ShiftPoly{-1, 1}),
                                  ShiftPoly{2, 1});
    auto factors = binet::squarefree_decomposition(p);
    REQUIRE(factors.size() == 2);
    // Sorted by multiplicity or insertion; identify by degree.
    bool seen_simple = false, seen_double = false;
    for (const auto& [f, mult] : factors) {
        if (mult == 1) {
            CHECK(shift_poly::normalized(f) == ShiftPoly{2, 1});
            seen_simple = true;
        }
        if (mult == 2) {
            CHECK(shift_poly::normalized(f) == ShiftPoly{-1, 1});
            seen_double = true;
        }
    }
    CHECK(seen_simple);
    CHECK(seen_double);
}

TEST_CASE("char_roots finds exact quadratic roots to working precision") {
    Real::default_precision(75);
    auto roots = binet::char_roots(ShiftPoly{1, -3, 1}, 50);  // X^2 - 3X + 1
    REQUIRE(roots.size() == 2);
    Real phi2 = (Real(3) + sqrt(Real(5))) / 2;
    CHECK(roots[0].is_real);
    CHECK(roots[1].is_real);
    CHECK(boost::multiprecision::abs(roots[0].value.re - phi2) < Real("1e-45"));
    CHECK(boost::multiprecision::abs(roots[1].value.re - (Real(3) - sqrt(Real(5))) / 2) <
          Real("1e-45"));
    CHECK(roots[0].mult == 1);
}

TEST_CASE("repeated roots carry their multiplicity") {
    Real::default_precision(75);
    // (Y^4 - 4Y^2 + 1)^2 has four double roots.
    ShiftPoly q4{1, 0, -4, 0, 1};
    auto roots = binet::char_roots(shift_poly::mul(q4, q4), 50);
    REQUIRE(roots.size() == 4);
    for (const auto& r : roots) CHECK(r.mult == 2);
}

TEST_CASE("binet_fit reproduces the exact sequence past the validity index") {
    pipeline::Config cfg;
    cfg.family = "linear2tree";
    cfg.last_stage = pipeline::Stage::binet;
    auto run = pipeline::run_family(cfg);
    REQUIRE(run.num_bf);
    REQUIRE(run.num_min);
    Real tol = pow(Real(10), -(cfg.precision - 10));
    long last = run.num_start + static_cast<long>(run.num_seq.size()) - 1;
    long upto = std::min(last, run.num_min->validity_index + 25);
    for (long n = run.num_min->validity_index; n <= upto; ++n) {
        Real exact = binet::to_real(run.num_seq[n - run.num_start]);
        Real err = boost::multiprecision::abs(binet::evaluate(*run.num_bf, n).re - exact);
        if (exact != 0) err /= boost::multiprecision::abs(exact);
        CHECK(err < tol);
    }
}

TEST_CASE("ladder numerator has a dominant-modulus tie at +/- sqrt(2+sqrt(3))") {
    pipeline::Config cfg;
    cfg.family = "ladder";
    cfg.last_stage = pipeline::Stage::binet;
    auto run = pipeline::run_family(cfg);
    REQUIRE(run.num_bf);
    auto asym = binet::asymptotic_form(*run.num_bf);
    CHECK(asym.dominant.size() == 2);
    Real target = sqrt(Real(2) + sqrt(Real(3)));
    CHECK(boost::multiprecision::abs(asym.modulus - target) < Real("1e-40"));
}

TEST_CASE("resistance_exact agrees with hand values") {
    auto path = families::find_spec("path");
    for (int n = 3; n <= 12; ++n) CHECK(binet::resistance_exact(path, n) == Rat(n - 1));
    auto ladder = families::find_spec("ladder");
    CHECK(binet::resistance_exact(ladder, 6) == Rat(7, 5));
}
