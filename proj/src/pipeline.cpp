#include "rde/pipeline.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "rde/oracle.hpp"

namespace rde::pipeline {

using binet::Real;
using families::DenomStrategy;

namespace {

int stage_rank(Stage s) { return static_cast<int>(s); }

bool wants(const Config& cfg, Stage s) { return stage_rank(cfg.last_stage) >= stage_rank(s); }

long sequence_start(const families::FamilySpec& spec) {
    // Border families (fan, wheel) degenerate below one node of rim, so
    // their determinant sequences start at index 1; banded families admit
    // the empty minor with determinant 1 at index 0.
    return spec.border ? 1 : 0;
}

}  // namespace

families::SpecPtr resolve_spec(const std::string& family) {
    if (auto spec = families::find_spec(family)) return spec;
    std::ifstream in(family);
    if (!in) throw std::invalid_argument("unknown family: " + family);
    std::ostringstream text;
    text << in.rdbuf();
    return families::spec_from_json_text(text.str());
}

FamilyRun run_family(const Config& cfg) {
    FamilyRun run;
    run.spec = resolve_spec(cfg.family);
    run.handles = families::bapat_handles(run.spec, cfg.denom);
    run.min_size = cfg.min_size > 0 ? cfg.min_size : run.spec->min_size;

    run.num_exp = expansion::laplace_expand(run.handles.numerator, run.min_size, cfg.family_cap);
    if (!wants(cfg, Stage::reduce)) return run;

    run.num_red = reduction::system_reduce(run.num_exp.Q);
    if (!wants(cfg, Stage::annihilate)) return run;

    if (static_cast<int>(run.num_red->support.size()) > cfg.support_cap) {
        run.annihilate_note = "support of " + std::to_string(run.num_red->support.size()) +
                              " columns exceeds support cap " + std::to_string(cfg.support_cap) +
                              "; solve stage skipped";
        return run;
    }
    run.system_annihilator =
        shift_poly::normalized(reduction::solve_identity_system(*run.num_red, cfg.support_cap));

    switch (run.spec->denom_strategy) {
        case DenomStrategy::shared_banded:
            // Banded family: the numerator's sequence of Laplace expansions
            // applies verbatim to L(1|1).
            run.den_annihilator = run.system_annihilator;
            break;
        case DenomStrategy::separate_expand: {
            run.den_exp =
                expansion::laplace_expand(run.handles.denominator, run.min_size, cfg.family_cap);
            run.den_red = reduction::system_reduce(run.den_exp->Q);
            run.den_annihilator = shift_poly::normalized(
                reduction::solve_identity_system(*run.den_red, cfg.support_cap));
            break;
        }
        case DenomStrategy::manual_fixture:
            run.den_annihilator = reduction::wheel_denominator_fixture().annihilator;
            break;
    }
    if (!wants(cfg, Stage::minimal)) return run;

    run.num_start = sequence_start(*run.spec);
    run.den_start = run.num_start;
    long num_len = cfg.sequence_length > 0
                       ? cfg.sequence_length
                       : std::max(3L * run.system_annihilator->degree() + 20, 60L);
    long den_len = cfg.sequence_length > 0
                       ? cfg.sequence_length
                       : std::max(3L * run.den_annihilator->degree() + 20, 60L);
    run.num_seq =
        recurrence::oracle_sequence(*run.handles.numerator, run.num_start, run.num_start + num_len - 1);
    run.den_seq = recurrence::oracle_sequence(*run.handles.denominator, run.den_start,
                                              run.den_start + den_len - 1);
    run.num_min = recurrence::minimal_annihilator(*run.system_annihilator, run.num_seq, run.num_start);
    run.den_min = recurrence::minimal_annihilator(*run.den_annihilator, run.den_seq, run.den_start);

    if (run.spec->numerator_odd_truncate) {
        // Period-2 family: the even-index subsequence is the natural one
        // (only even sizes are graphs); report its stride-2 annihilator.
        run.stride2 = recurrence::subsequence_annihilator(run.num_min->annihilator, 2, run.num_seq,
                                                          run.num_start, 0);
    }
    if (!wants(cfg, Stage::binet)) return run;

    Real::default_precision(cfg.precision + 25);
    run.num_bf = binet::binet_fit(*run.num_min, run.num_seq, run.num_start,
                                  run.num_min->validity_index, cfg.precision);
    run.den_bf = binet::binet_fit(*run.den_min, run.den_seq, run.den_start,
                                  run.den_min->validity_index, cfg.precision);

    if (run.spec->name == "linear3tree") {
        OneOver14Report rep;
        auto num_asym = binet::asymptotic_form(*run.num_bf);
        auto den_asym = binet::asymptotic_form(*run.den_bf);
        if (num_asym.dominant.size() != 1 || den_asym.dominant.size() != 1)
            throw std::runtime_error("linear3tree: unexpected dominant-root tie");
        std::size_t ni = num_asym.dominant[0], di = den_asym.dominant[0];
        rep.r1 = run.num_bf->roots[ni].value.re;
        // h_n ~ (b0 + b1 n) r^n = (C'1 + C'2 (n-7)) r^n.
        Real b0 = run.num_bf->coeffs[ni][0].re;
        Real b1 = run.num_bf->coeffs[ni][1].re;
        rep.c_num2 = b1;
        rep.c_num1 = b0 + 7 * b1;
        rep.c_den = run.den_bf->coeffs[di][0].re;

        Real one14 = Real(1) / 14;
        for (int n = 40; n <= 60; ++n) {
            auto r_at = [&](int m) {
                return (rep.c_num2 * (m - 9) + rep.c_num1) / (rep.c_den * rep.r1);
            };
            rep.asym_deviation.push_back(
                boost::multiprecision::abs(r_at(n + 1) - r_at(n) - one14));
        }
        Rat prev;
        for (int n = 25; n <= 41; ++n) {
            Rat r = binet::resistance_exact(run.spec, n);
            if (n > 25) rep.exact_diffs.emplace_back(n - 1, Rat(r - prev));
            prev = r;
        }
        for (int n = 8; n <= 15; ++n) {
            Real asym = (rep.c_num1 + rep.c_num2 * (n - 7)) * pow(rep.r1, n);
            rep.num_ratios.push_back(asym / binet::to_real(run.num_seq[n - run.num_start]));
        }
        for (int n = 6; n <= 15; ++n) {
            Real asym = rep.c_den * pow(rep.r1, n);
            rep.den_ratios.push_back(asym / binet::to_real(run.den_seq[n - run.den_start]));
        }
        run.one_over_14 = std::move(rep);
    }
    if (!wants(cfg, Stage::resistance)) return run;

    int step = run.spec->numerator_odd_truncate ? 2 : 1;  // graphs exist at even sizes only
    int first = run.spec->min_size;
    if (step == 2 && first % 2 == 1) ++first;
    for (int n = first; n <= cfg.resistance_max_n; n += step)
        run.resistance.emplace_back(n, binet::resistance_exact(run.spec, n));
    return run;
}

}  // namespace rde::pipeline
