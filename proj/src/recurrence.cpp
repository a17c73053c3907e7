#include "rde/recurrence.hpp"

#include <algorithm>
#include <stdexcept>

#include "rde/oracle.hpp"

namespace rde::recurrence {

using shift_poly::RatPoly;
using shift_poly::ShiftPoly;

std::vector<Int> oracle_sequence(const FamilyHandle& h, long from, long to) {
    if (from < 0) throw std::invalid_argument("oracle_sequence: negative start");
    std::vector<Int> out;
    for (long n = from; n <= to; ++n)
        out.push_back(oracle::det_exact(h.instantiate(static_cast<int>(n))));
    return out;
}

ShiftPoly berlekamp_massey(const std::vector<Int>& window) {
    RatPoly c{Rat(1)}, b{Rat(1)};
    long l = 0, m = 1;
    Rat bb(1);
    for (std::size_t n = 0; n < window.size(); ++n) {
        Rat d(window[n]);
        for (long i = 1; i <= l; ++i) d += c[i] * Rat(window[n - i]);
        if (d == 0) {
            ++m;
            continue;
        }
        bool grow = 2 * l <= static_cast<long>(n);
        RatPoly t = c;
        Rat coef = d / bb;
        if (b.size() + m > c.size()) c.resize(b.size() + m, Rat(0));
        for (std::size_t i = 0; i < b.size(); ++i) c[i + m] -= coef * b[i];
        if (grow) {
            l = static_cast<long>(n) + 1 - l;
            b = std::move(t);
            bb = d;
            m = 1;
        } else {
            ++m;
        }
    }
    return shift_poly::from_rational(c);
}

long validity_index(const ShiftPoly& c, const std::vector<Int>& seq, long start) {
    long d = c.degree();
    long last_bad = -1;
    for (long n = start + d; n < start + static_cast<long>(seq.size()); ++n)
        if (shift_poly::apply(c, seq, start, n) != 0) last_bad = n;
    return last_bad >= 0 ? last_bad + 1 : start + d;
}

Recurrence minimal_annihilator(const ShiftPoly& a, const std::vector<Int>& seq, long start) {
    if (seq.empty()) throw std::invalid_argument("minimal_annihilator: empty sequence");
    std::vector<Int> tail(seq.begin() + seq.size() / 2, seq.end());
    ShiftPoly c = berlekamp_massey(tail);
    if (!shift_poly::divides(c, a))
        throw std::runtime_error(
            "minimal_annihilator: candidate fails division; sampled tail too short");
    // C must kill at least deg(A) - deg(C) consecutive terms;
    // the validity scan below covers the whole tested tail, which subsumes it.
    Recurrence rec;
    rec.annihilator = c;
    rec.validity_index = validity_index(c, seq, start);
    rec.tested_from = start;
    rec.tested_to = start + static_cast<long>(seq.size()) - 1;
    long slack = static_cast<long>(a.degree()) - c.degree();
    if (rec.tested_to - rec.validity_index + 1 < slack + c.degree())
        throw std::runtime_error("minimal_annihilator: tested window too short");
    return rec;
}

bool hankel_minimal(const ShiftPoly& c, const std::vector<Int>& seq) {
    const long d = c.degree();
    if (d <= 0) return true;
    if (static_cast<long>(seq.size()) < 2 * d) return false;
    // Window from the stationary tail: 2d - 1 consecutive terms.
    std::size_t base = seq.size() - static_cast<std::size_t>(2 * d);
    Matrix h(d, std::vector<Int>(d));
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j) h[i][j] = seq[base + i + j];
    return oracle::det_exact(h) != 0;
}

namespace {

ShiftPoly poly_det_bareiss(std::vector<std::vector<ShiftPoly>> m) {
    using shift_poly::exact_div;
    using shift_poly::mul;
    using shift_poly::sub;
    const std::size_t n = m.size();
    if (n == 0) return ShiftPoly{1};
    int sign = 1;
    ShiftPoly prev{1};
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return {};
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div(sub(mul(m[i][j], m[k][k]), mul(m[i][k], m[k][j])), prev);
            m[i][k] = {};
        }
        prev = m[k][k];
    }
    return sign == 1 ? m[n - 1][n - 1] : shift_poly::neg(m[n - 1][n - 1]);
}

// Small-divisor enumeration for rational-root candidates; values beyond the
// trial-division budget only contribute the trivial divisors.
std::vector<Int> divisors(const Int& v) {
    Int a = abs(v);
    std::vector<Int> out;
    if (a == 0) return out;
    Int d = 1;
    const Int budget = 1000000;
    while (d * d <= a && d <= budget) {
        if (a % d == 0) {
            out.push_back(d);
            if (d * d != a) out.push_back(a / d);
        }
        ++d;
    }
    if (d <= budget) return out;
    out.push_back(1);
    if (a != 1) out.push_back(a);
    return out;
}

Rat eval_at(const ShiftPoly& p, const Rat& x) {
    Rat acc(0);
    for (std::size_t i = p.c.size(); i-- > 0;) acc = acc * x + Rat(p.c[i]);
    return acc;
}

// (value, multiplicity) pairs sorted ascending by value.
std::vector<std::pair<Rat, int>> rational_roots(const ShiftPoly& p) {
    std::vector<std::pair<Rat, int>> out;
    if (p.degree() < 1) return out;
    std::vector<Rat> candidates;
    for (const Int& num : divisors(p.c.front()))
        for (const Int& den : divisors(p.c.back()))
            for (int s = -1; s <= 1; s += 2) {
                Rat r(s * num, den);
                r.canonicalize();
                candidates.push_back(r);
            }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const Rat& r : candidates) {
        if (eval_at(p, r) != 0) continue;
        // Multiplicity via repeated division by (den*x - num).
        ShiftPoly factor(std::vector<Int>{-r.get_num(), r.get_den()});
        ShiftPoly rest = p;
        int mult = 0;
        while (auto q = shift_poly::divides(factor, rest)) {
            ++mult;
            rest = shift_poly::from_rational(*q);
            if (rest.degree() < 1 || eval_at(rest, r) != 0) break;
        }
        out.emplace_back(r, mult);
    }
    return out;
}

}  // namespace

CharPoly root_power_char(const CharPoly& p, int stride) {
    if (stride < 1) throw std::invalid_argument("root_power_char: stride must be >= 1");
    if (p.degree() < 1) return p;
    const int m = p.degree();
    const int s = stride;
    // Sylvester matrix of p(x) (degree m) and q(x) = z - x^s (degree s in x,
    // coefficients in Z[z]); entries are polynomials in z.
    const int n = m + s;
    std::vector<std::vector<ShiftPoly>> syl(n, std::vector<ShiftPoly>(n));
    for (int r = 0; r < s; ++r)
        for (int k = 0; k <= m; ++k)
            syl[r][r + k] = ShiftPoly(std::vector<Int>{p.c[m - k]});
    for (int r = 0; r < m; ++r) {
        syl[s + r][r] = ShiftPoly{-1};                         // x^s coefficient
        syl[s + r][r + s] = ShiftPoly(std::vector<Int>{0, 1});  // constant term z
    }
    return shift_poly::normalized(poly_det_bareiss(std::move(syl)));
}

SubsequenceResult subsequence_annihilator(const ShiftPoly& c, int stride,
                                          const std::vector<Int>& seq, long start, int phase) {
    if (stride < 2) throw std::invalid_argument("subsequence_annihilator: stride must be >= 2");
    SubsequenceResult res;

    CharPoly cx = shift_poly::normalized(shift_poly::to_char(c));
    CharPoly dx = root_power_char(cx, stride);
    res.full = shift_poly::normalized(shift_poly::from_char(dx));

    // Compressed subsequence: original indices congruent to phase mod stride.
    long first = start;
    while (((first - phase) % stride + stride) % stride != 0) ++first;
    for (long n = first; n < start + static_cast<long>(seq.size()); n += stride)
        res.subsequence.push_back(seq[n - start]);
    res.sub_start = (first - phase) / stride;

    std::vector<Int> tail(res.subsequence.begin() + res.subsequence.size() / 2,
                          res.subsequence.end());
    ShiftPoly dmin = berlekamp_massey(tail);
    CharPoly dmin_x = shift_poly::normalized(shift_poly::to_char(dmin));
    if (!shift_poly::divides(dmin_x, dx))
        throw std::runtime_error("subsequence_annihilator: minimal does not divide root-power");
    res.minimal.annihilator = dmin;
    res.minimal.validity_index = validity_index(dmin, res.subsequence, res.sub_start);
    res.minimal.tested_from = res.sub_start;
    res.minimal.tested_to = res.sub_start + static_cast<long>(res.subsequence.size()) - 1;

    // Original-variable form: greedily strip rational roots of C (ascending,
    // each multiplicity once) while the stripped polynomial's root powers
    // still cover the minimal subsequence annihilator.
    CharPoly e = cx;
    for (const auto& [root, mult] : rational_roots(cx)) {
        ShiftPoly factor(std::vector<Int>{-root.get_num(), root.get_den()});
        for (int t = 0; t < mult; ++t) {
            auto q = shift_poly::divides(factor, e);
            if (!q) break;
            CharPoly trial = shift_poly::from_rational(*q);
            if (trial.degree() < dmin_x.degree()) break;
            if (!shift_poly::divides(dmin_x, root_power_char(trial, stride))) break;
            e = trial;
        }
    }
    res.original = shift_poly::normalized(shift_poly::from_char(e));
    return res;
}

}  // namespace rde::recurrence
