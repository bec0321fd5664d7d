#pragma once

#include "samelson/lattice.hpp"

#include <initializer_list>
#include <vector>

namespace samelson::testutil {

inline IntegerMatrix from_rows(
    std::initializer_list<std::initializer_list<long long>> rows) {
    std::size_t nr = rows.size();
    std::size_t nc = nr ? rows.begin()->size() : 0;
    IntegerMatrix m(nr, nc);
    std::size_t r = 0;
    for (const auto& row : rows) {
        std::size_t c = 0;
        for (long long x : row) {
            m.at(r, c++) = x;
        }
        ++r;
    }
    return m;
}

inline IntegerMatrix from_cols(const std::vector<std::vector<Integer>>& cols) {
    std::size_t nc = cols.size();
    std::size_t nr = nc ? cols[0].size() : 0;
    IntegerMatrix m(nr, nc);
    for (std::size_t c = 0; c < nc; ++c) {
        for (std::size_t r = 0; r < nr; ++r) {
            m.at(r, c) = cols[c][r];
        }
    }
    return m;
}

inline std::vector<Integer> vec(std::initializer_list<long long> xs) {
    return std::vector<Integer>(xs.begin(), xs.end());
}

inline std::vector<Integer> ones(std::size_t n) {
    return std::vector<Integer>(n, Integer(1));
}

inline std::vector<Integer> scaled(const std::vector<Integer>& v,
                                   const Integer& d) {
    std::vector<Integer> r = v;
    for (Integer& x : r) {
        x *= d;
    }
    return r;
}

}  // namespace samelson::testutil
