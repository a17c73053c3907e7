// Exact property suites: no tolerances anywhere in this file.
#include <doctest.h>

#include <map>

#include "rde/binet.hpp"
#include "rde/expansion.hpp"
#include "rde/families.hpp"
#include "rde/oracle.hpp"
#include "rde/pipeline.hpp"
#include "rde/recurrence.hpp"
#include "rde/reduction.hpp"

using namespace rde;
using shift_poly::ShiftPoly;

namespace {

struct DetCache {
    std::map<std::pair<const families::FamilyHandle*, int>, Int> memo;

    Int at(const families::HandlePtr& h, int n) {
        auto key = std::make_pair(h.get(), n);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Int d = oracle::det_exact(h->instantiate(n));
        memo.emplace(key, d);
        return d;
    }
};

int max_degree(const expansion::PolyMatrix& m) {
    int d = 0;
    for (const auto& row : m)
        for (const auto& p : row) d = std::max(d, p.degree());
    return d;
}

// Det(M(i), n) = sum_j sum_k m[i][j].c[k] * Det(M(j), n-k), exactly.
void check_system_rows(const expansion::PolyMatrix& m,
                       const std::vector<families::HandlePtr>& fams, int min_size,
                       DetCache& cache, int sizes) {
    int base = min_size + max_degree(m);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (int n = base + 1; n <= base + sizes; ++n) {
            Int lhs = cache.at(fams[i], n);
            Int rhs = 0;
            for (std::size_t j = 0; j < m.size(); ++j)
                for (std::size_t k = 0; k < m[i][j].c.size(); ++k)
                    if (m[i][j].c[k] != 0)
                        rhs += m[i][j].c[k] * cache.at(fams[j], n - static_cast<int>(k));
            CAPTURE(i);
            CAPTURE(n);
            CHECK(lhs == rhs);
        }
}

}  // namespace

TEST_CASE("ledger-row soundness: every expansion identity holds at six sizes") {
    for (const auto& name : families::builtin_names()) {
        auto spec = families::find_spec(name);
        auto handles = families::bapat_handles(spec);
        auto exp = expansion::laplace_expand(handles.numerator, spec->min_size);
        DetCache cache;
        // Group ledger rows by parent; each group is one Laplace expansion.
        std::map<int, std::vector<const expansion::LedgerRow*>> groups;
        for (const auto& row : exp.ledger)
            if (row.parent != 0) groups[row.parent].push_back(&row);
        for (const auto& [parent, rows] : groups)
            for (int n = exp.min_size + 2; n <= exp.min_size + 7; ++n) {
                Int lhs = cache.at(exp.families[parent - 1], n);
                Int rhs = 0;
                for (const auto* row : rows)
                    for (std::size_t k = 0; k < row->coeff.c.size(); ++k)
                        if (row->coeff.c[k] != 0)
                            rhs += row->coeff.c[k] *
                                   cache.at(exp.families[row->id - 1], n - static_cast<int>(k));
                CAPTURE(name);
                CAPTURE(parent);
                CAPTURE(n);
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("Q and R rows are exact identities on oracle determinants") {
    for (const auto& name : {"path", "ladder", "linear2tree", "fan", "wheel", "linear3tree"}) {
        auto spec = families::find_spec(name);
        auto handles = families::bapat_handles(spec);
        auto exp = expansion::laplace_expand(handles.numerator, spec->min_size);
        auto red = reduction::system_reduce(exp.Q);
        DetCache cache;
        CAPTURE(name);
        check_system_rows(exp.Q, exp.families, exp.min_size, cache, 4);
        check_system_rows(red.R, exp.families, exp.min_size, cache, 4);
    }
}

TEST_CASE("minimal annihilators: divisibility and Hankel minimality certificates") {
    for (const auto& name : families::builtin_names()) {
        if (std::string(name) == "corrugated2tree") continue;  // solve stage capped
        pipeline::Config cfg;
        cfg.family = name;
        cfg.last_stage = pipeline::Stage::minimal;
        auto run = pipeline::run_family(cfg);
        CAPTURE(name);
        REQUIRE(run.system_annihilator);
        REQUIRE(run.num_min);
        REQUIRE(run.den_min);
        CHECK(shift_poly::divides(run.num_min->annihilator, *run.system_annihilator).has_value());
        CHECK(shift_poly::divides(run.den_min->annihilator, *run.den_annihilator).has_value());
        CHECK(recurrence::hankel_minimal(run.num_min->annihilator, run.num_seq));
        CHECK(recurrence::hankel_minimal(run.den_min->annihilator, run.den_seq));
        // The annihilators really kill the tails.
        for (long n = run.num_min->validity_index;
             n < run.num_start + static_cast<long>(run.num_seq.size()); ++n)
            CHECK(shift_poly::apply(run.num_min->annihilator, run.num_seq, run.num_start, n) == 0);
        for (long n = run.den_min->validity_index;
             n < run.den_start + static_cast<long>(run.den_seq.size()); ++n)
            CHECK(shift_poly::apply(run.den_min->annihilator, run.den_seq, run.den_start, n) == 0);
    }
}

TEST_CASE("resistance: determinant ratio equals grounded linear solve up to n = 30") {
    for (const auto& name : families::builtin_names()) {
        auto spec = families::find_spec(name);
        int step = spec->numerator_odd_truncate ? 2 : 1;
        int first = spec->min_size + (step == 2 && spec->min_size % 2 == 1 ? 1 : 0);
        for (int n = first; n <= 30; n += step) {
            CAPTURE(name);
            CAPTURE(n);
            Rat ratio = binet::resistance_exact(spec, n);
            Rat solved = oracle::resistance_solve(*spec, n, 1, n);
            CHECK(ratio == solved);
            CHECK(solved == oracle::resistance_solve(*spec, n, n, 1));  // symmetry
        }
    }
}
