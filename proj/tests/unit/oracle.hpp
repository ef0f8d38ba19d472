#pragma once

// Independent reference arithmetic for tests: boost rationals, plain Gaussian elimination,
// no code shared with the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace oracle {

using Q = boost::multiprecision::cpp_rational;
using Row = std::vector<Q>;

inline std::size_t rank(std::vector<Row> m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Q f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

}  // namespace oracle
