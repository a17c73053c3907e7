#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace rde {

// Exact arithmetic base types for the whole pipeline.
using Int = mpz_class;
using Rat = mpq_class;

// Dense exact integer matrix, row major.
using Matrix = std::vector<std::vector<Int>>;

inline Matrix transpose(const Matrix& m) {
    if (m.empty()) return {};
    Matrix t(m[0].size(), std::vector<Int>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

}  // namespace rde
