#include "rde/reduction.hpp"

#include <stdexcept>

namespace rde::reduction {

using shift_poly::add;
using shift_poly::mul;
using shift_poly::sub;

ReducedSystem system_reduce(const PolyMatrix& Q) {
    ReducedSystem out;
    out.R = Q;
    auto& m = out.R;
    const std::size_t n = m.size();
    for (std::size_t k = 1; k < n; ++k) {
        if (!m[k][k].is_zero()) continue;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m[i][k].is_zero()) continue;
            ShiftPoly cik = m[i][k];
            for (std::size_t j = 0; j < n; ++j)
                if (j != k && !m[k][j].is_zero()) m[i][j] = add(m[i][j], mul(cik, m[k][j]));
            m[i][k] = {};
        }
    }
    out.support = support_columns(m);
    return out;
}

std::vector<int> support_columns(const PolyMatrix& m) {
    std::vector<int> sup;
    for (std::size_t j = 0; j < m.size(); ++j) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i][j].is_zero()) {
                sup.push_back(static_cast<int>(j) + 1);
                break;
            }
        }
    }
    return sup;
}

namespace {
const ShiftPoly kOne{1};
}

ShiftPoly annihilator_1x1(const ShiftPoly& a, const ShiftPoly& b) { return sub(a, b); }

ShiftPoly annihilator_2x2(const ShiftPoly& a, const ShiftPoly& b, const ShiftPoly& c,
                          const ShiftPoly& d, const ShiftPoly& e, const ShiftPoly& f) {
    return sub(mul(sub(d, f), sub(a, b)), mul(c, e));
}

ShiftPoly annihilator_3x3(const ShiftPoly& a, const ShiftPoly& b, const ShiftPoly& c,
                          const ShiftPoly& d, const ShiftPoly& e, const ShiftPoly& f,
                          const ShiftPoly& g, const ShiftPoly& h, const ShiftPoly& i) {
    ShiftPoly e1 = sub(kOne, e);
    // A' = 1-E, B' = (1-E)A + BD, C' = (1-E)C + BF,
    // D' = 1-E, E' = (1-E)G + HD, F' = (1-E)I + HF.
    return annihilator_2x2(e1, add(mul(e1, a), mul(b, d)), add(mul(e1, c), mul(b, f)), e1,
                           add(mul(e1, g), mul(h, d)), add(mul(e1, i), mul(h, f)));
}

ShiftPoly solve_identity_system(const ReducedSystem& rs, int support_cap) {
    const auto& sup = rs.support;
    int k = static_cast<int>(sup.size());
    if (k == 0) throw std::domain_error("solve_identity_system: empty support");
    if (k > support_cap) throw std::runtime_error("solve_identity_system: support exceeds cap");

    PolyMatrix a(k, std::vector<ShiftPoly>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) a[i][j] = rs.R[sup[i] - 1][sup[j] - 1];

    // Eliminate the highest-index variable, scaling by 1 - A_nn.
    while (k > 3) {
        ShiftPoly scale = sub(kOne, a[k - 1][k - 1]);
        PolyMatrix next(k - 1, std::vector<ShiftPoly>(k - 1));
        for (int i = 0; i < k - 1; ++i)
            for (int j = 0; j < k - 1; ++j)
                next[i][j] = add(mul(scale, a[i][j]), mul(a[i][k - 1], a[k - 1][j]));
        a = std::move(next);
        --k;
    }
    if (k == 3)
        return annihilator_3x3(a[0][0], a[0][1], a[0][2], a[1][0], a[1][1], a[1][2], a[2][0],
                               a[2][1], a[2][2]);
    if (k == 2)
        // x = Ax + By, y = Cx + Dy in two-variable form.
        return annihilator_2x2(kOne, a[0][0], a[0][1], kOne, a[1][0], a[1][1]);
    return annihilator_1x1(kOne, a[0][0]);
}

Fixture wheel_denominator_fixture() {
    // (Y^2 - 3Y + 1)(Y - 1), valid from n = 6 (hand derivation).
    ShiftPoly ann = mul(ShiftPoly{1, -3, 1}, ShiftPoly{-1, 1});
    return Fixture{shift_poly::normalized(ann), 6};
}

}  // namespace rde::reduction
