#include "rde/shift_poly.hpp"

#include <cctype>
#include <stdexcept>

namespace rde::shift_poly {

namespace {

std::vector<Int> trim(std::vector<Int> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

}  // namespace

ShiftPoly::ShiftPoly(std::initializer_list<long> coeffs) {
    for (long x : coeffs) c.emplace_back(x);
    c = trim(std::move(c));
}

ShiftPoly::ShiftPoly(std::vector<Int> coeffs) : c(trim(std::move(coeffs))) {}

ShiftPoly add(const ShiftPoly& a, const ShiftPoly& b) {
    std::vector<Int> r(std::max(a.c.size(), b.c.size()), Int(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
    return ShiftPoly(std::move(r));
}

ShiftPoly neg(const ShiftPoly& a) {
    std::vector<Int> r = a.c;
    for (auto& x : r) x = -x;
    return ShiftPoly(std::move(r));
}

ShiftPoly sub(const ShiftPoly& a, const ShiftPoly& b) { return add(a, neg(b)); }

ShiftPoly mul(const ShiftPoly& a, const ShiftPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> r(a.c.size() + b.c.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            if (b.c[j] != 0) r[i + j] += a.c[i] * b.c[j];
    }
    return ShiftPoly(std::move(r));
}

ShiftPoly scale(const ShiftPoly& a, const Int& k) {
    std::vector<Int> r = a.c;
    for (auto& x : r) x *= k;
    return ShiftPoly(std::move(r));
}

Int content(const ShiftPoly& a) {
    Int g = 0;
    for (const auto& x : a.c) g = gcd(g, x);
    return abs(g);
}

ShiftPoly normalized(const ShiftPoly& a) {
    if (a.is_zero()) return {};
    Int g = content(a);
    if (a.c.back() < 0) g = -g;
    std::vector<Int> r = a.c;
    for (auto& x : r) x /= g;
    return ShiftPoly(std::move(r));
}

RatPoly rat_trim(RatPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

std::pair<RatPoly, RatPoly> divmod_q(const ShiftPoly& a, const ShiftPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    RatPoly rem(a.c.begin(), a.c.end());
    rem = rat_trim(std::move(rem));
    RatPoly quo;
    if (rem.size() >= b.c.size()) quo.resize(rem.size() - b.c.size() + 1, Rat(0));
    while (rem.size() >= b.c.size()) {
        Rat f = rem.back() / Rat(b.c.back());
        std::size_t d = rem.size() - b.c.size();
        quo[d] = f;
        for (std::size_t i = 0; i < b.c.size(); ++i) rem[d + i] -= f * Rat(b.c[i]);
        rem.pop_back();
        rem = rat_trim(std::move(rem));
    }
    return {std::move(quo), std::move(rem)};
}

std::optional<RatPoly> divides(const ShiftPoly& a, const ShiftPoly& b) {
    auto [q, r] = divmod_q(b, a);
    if (!r.empty()) return std::nullopt;
    return q;
}

ShiftPoly exact_div(const ShiftPoly& a, const ShiftPoly& b) {
    auto [q, r] = divmod_q(a, b);
    if (!r.empty()) throw std::domain_error("exact_div: nonzero remainder");
    std::vector<Int> out(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i].get_den() != 1) throw std::domain_error("exact_div: non-integral quotient");
        out[i] = q[i].get_num();
    }
    return ShiftPoly(std::move(out));
}

ShiftPoly from_rational(const RatPoly& p) {
    RatPoly t = rat_trim(p);
    if (t.empty()) return {};
    Int den = 1;
    for (const auto& x : t) den = lcm(den, x.get_den());
    std::vector<Int> r(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        Rat v = t[i] * Rat(den);
        r[i] = v.get_num();
    }
    return normalized(ShiftPoly(std::move(r)));
}

Int apply(const ShiftPoly& a, const std::vector<Int>& seq, long start, long n) {
    Int s = 0;
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        long idx = n - static_cast<long>(i);
        if (idx < start || idx - start >= static_cast<long>(seq.size()))
            throw std::out_of_range("shift_poly::apply: index outside sequence");
        s += a.c[i] * seq[idx - start];
    }
    return s;
}

CharPoly to_char(const ShiftPoly& a) {
    std::vector<Int> r(a.c.rbegin(), a.c.rend());
    return ShiftPoly(std::move(r));
}

ShiftPoly from_char(const CharPoly& c) { return to_char(c); }

std::string to_string(const ShiftPoly& a, char var) {
    if (a.is_zero()) return "0";
    std::string out;
    for (int i = a.degree(); i >= 0; --i) {
        const Int& k = a.c[i];
        if (k == 0) continue;
        Int mag = abs(k);
        if (out.empty())
            out += (k < 0) ? "-" : "";
        else
            out += (k < 0) ? " - " : " + ";
        bool show_coeff = (i == 0) || mag != 1;
        if (show_coeff) out += mag.get_str();
        if (i > 0) {
            if (show_coeff) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

ShiftPoly parse(const std::string& text, char var) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    std::vector<Int> coeffs;
    auto put = [&](std::size_t deg, const Int& v) {
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, Int(0));
        coeffs[deg] += v;
    };
    skip_ws();
    if (pos == text.size()) throw std::invalid_argument("parse: empty input");
    bool first = true;
    while (true) {
        skip_ws();
        if (pos == text.size()) {
            if (first) throw std::invalid_argument("parse: expected term");
            break;
        }
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = (text[pos] == '-') ? -1 : 1;
            ++pos;
            skip_ws();
        } else if (!first) {
            throw std::invalid_argument("parse: expected '+' or '-'");
        }
        std::string digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            digits += text[pos++];
        skip_ws();
        bool star = false;
        if (pos < text.size() && text[pos] == '*') {
            ++pos;
            skip_ws();
            star = true;
        }
        std::size_t deg = 0;
        bool has_var = pos < text.size() && text[pos] == var;
        if (has_var) {
            ++pos;
            deg = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                std::string e;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    e += text[pos++];
                if (e.empty()) throw std::invalid_argument("parse: missing exponent");
                deg = std::stoul(e);
            }
        } else if (star || digits.empty()) {
            throw std::invalid_argument("parse: malformed term");
        }
        Int coeff = digits.empty() ? Int(1) : Int(digits);
        put(deg, sign * coeff);
        first = false;
    }
    return ShiftPoly(std::move(coeffs));
}

}  // namespace rde::shift_poly
