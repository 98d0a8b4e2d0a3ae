#pragma once

// Exact determinants.
//
// det_bareiss is the production evaluator: fraction-free elimination in
// which every division is exact. det_laplace is an independent cofactor
// expansion kept as a cross-checking oracle; it refuses orders above
// kLaplaceMaxOrder.

#include "nstep/bigint.hpp"
#include "nstep/errors.hpp"
#include "nstep/matrix.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nstep {

inline constexpr std::size_t kLaplaceMaxOrder = 8;

inline BigInt det_bareiss(const IntMatrix& m) {
    if (!m.is_square()) {
        throw DimensionError("determinant of a non-square matrix");
    }
    const std::size_t n = m.rows();
    std::vector<BigInt> a(m.entries().begin(), m.entries().end());
    auto at = [&](std::size_t i, std::size_t k) -> BigInt& { return a[i * n + k]; };

    int sign = 1;
    BigInt prev_pivot = 1;
    BigInt scratch;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && at(swap_row, k) == 0) {
                ++swap_row;
            }
            if (swap_row == n) {
                return 0;
            }
            for (std::size_t c = k; c < n; ++c) {
                std::swap(at(k, c), at(swap_row, c));
            }
            sign = -sign;
        }
        const BigInt& pivot = at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // a_ij <- (a_kk a_ij - a_ik a_kj) / previous pivot
                scratch = pivot * at(i, j);
                scratch -= at(i, k) * at(k, j);
                if (!mpz_divisible_p(scratch.get_mpz_t(), prev_pivot.get_mpz_t())) {
                    throw std::logic_error("inexact division in fraction-free elimination");
                }
                mpz_divexact(at(i, j).get_mpz_t(), scratch.get_mpz_t(), prev_pivot.get_mpz_t());
            }
            at(i, k) = 0;
        }
        prev_pivot = pivot;
    }
    BigInt det = at(n - 1, n - 1);
    if (sign < 0) {
        det = -det;
    }
    return det;
}

namespace detail {

// Expansion along the first remaining row; `cols` lists the live column
// indices (0-based) of the minor that starts at `row`.
inline BigInt laplace(const IntMatrix& m, std::size_t row, std::vector<std::size_t>& cols) {
    if (cols.size() == 1) {
        return m(row + 1, cols[0] + 1);
    }
    BigInt total = 0;
    for (std::size_t t = 0; t < cols.size(); ++t) {
        const BigInt& entry = m(row + 1, cols[t] + 1);
        if (entry == 0) {
            continue;
        }
        const std::size_t removed = cols[t];
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(t));
        BigInt cofactor = laplace(m, row + 1, cols);
        cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(t), removed);
        if (t % 2 == 0) {
            total += entry * cofactor;
        } else {
            total -= entry * cofactor;
        }
    }
    return total;
}

}  // namespace detail

inline BigInt det_laplace(const IntMatrix& m) {
    if (!m.is_square()) {
        throw DimensionError("determinant of a non-square matrix");
    }
    if (m.rows() > kLaplaceMaxOrder) {
        throw SizeGuardError("cofactor expansion limited to order " + std::to_string(kLaplaceMaxOrder));
    }
    std::vector<std::size_t> cols(m.cols());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        cols[k] = k;
    }
    return detail::laplace(m, 0, cols);
}

}  // namespace nstep
