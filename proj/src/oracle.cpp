#include "rde/oracle.hpp"

#include <stdexcept>

namespace rde::oracle {

Int det_exact(Matrix m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Rat resistance_solve(const families::FamilySpec& spec, int n, int i, int j) {
    if (i == j) throw std::invalid_argument("resistance_solve: i == j");
    if (i < 1 || j < 1 || i > n || j > n)
        throw std::invalid_argument("resistance_solve: node out of range");
    Matrix lap = spec.instantiate(n);

    // Ground node j: drop its row/column, solve L' v = e_i for the unit
    // injection (the -1 sink lands on the grounded node).
    std::vector<std::vector<Rat>> a;
    std::vector<Rat> b;
    for (int r = 1; r <= n; ++r) {
        if (r == j) continue;
        std::vector<Rat> row;
        for (int c = 1; c <= n; ++c)
            if (c != j) row.emplace_back(lap[r - 1][c - 1]);
        a.push_back(std::move(row));
        b.emplace_back(r == i ? 1 : 0);
    }
    const std::size_t m = a.size();
    for (std::size_t k = 0; k < m; ++k) {
        std::size_t piv = k;
        while (piv < m && a[piv][k] == 0) ++piv;
        if (piv == m) throw std::runtime_error("resistance_solve: singular grounded Laplacian");
        if (piv != k) {
            std::swap(a[k], a[piv]);
            std::swap(b[k], b[piv]);
        }
        for (std::size_t r2 = k + 1; r2 < m; ++r2) {
            if (a[r2][k] == 0) continue;
            Rat f = a[r2][k] / a[k][k];
            for (std::size_t c2 = k; c2 < m; ++c2) a[r2][c2] -= f * a[k][c2];
            b[r2] -= f * b[k];
        }
    }
    std::vector<Rat> v(m);
    for (std::size_t k = m; k-- > 0;) {
        Rat s = b[k];
        for (std::size_t c2 = k + 1; c2 < m; ++c2) s -= a[k][c2] * v[c2];
        v[k] = s / a[k][k];
    }
    std::size_t pos_i = static_cast<std::size_t>(i > j ? i - 2 : i - 1);
    Rat out = v[pos_i];
    out.canonicalize();
    return out;
}

Int fibonacci(unsigned long n) {
    Int r;
    mpz_fib_ui(r.get_mpz_t(), n);
    return r;
}

Int lucas(unsigned long n) {
    Int r;
    mpz_lucnum_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace rde::oracle
