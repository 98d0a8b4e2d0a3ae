#pragma once

// The banded sign matrix P, its row submatrices Q, the recursive column
// extension A -> A_{n+r}, and signed minors of the extension.
//
// A minor of A_{n+r} keeps n of its n+r columns. The last column is always
// kept, so a minor is described either by the r deleted columns
// j_1 < ... < j_r (all below n+r) or by the n-1 other kept columns
// i_1 < ... < i_{n-1}. The determinant of the minor equals
//     sgn * det Q(j_1..j_r) * det A
// and check_prop1 verifies that equality exactly.

#include "nstep/bigint.hpp"
#include "nstep/determinant.hpp"
#include "nstep/errors.hpp"
#include "nstep/matrix.hpp"

#include <cstddef>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace nstep {

namespace detail {

inline void require_order_and_length(int n, int r) {
    if (n < 2) {
        throw DomainError("order n must be at least 2, got " + std::to_string(n));
    }
    if (r < 1) {
        throw DomainError("extension length r must be at least 1, got " + std::to_string(r));
    }
}

}  // namespace detail

/// Deleted/kept description of a minor of A_{n+r}. `kept` ends with n+r.
struct MinorSelection {
    int n;
    int r;
    std::vector<std::size_t> deleted;
    std::vector<std::size_t> kept;

    static MinorSelection from_deleted(int n, int r, std::vector<std::size_t> deleted) {
        detail::require_order_and_length(n, r);
        const auto last = static_cast<std::size_t>(n + r);
        if (deleted.size() != static_cast<std::size_t>(r)) {
            throw SelectionError("expected " + std::to_string(r) + " deleted columns, got " +
                                 std::to_string(deleted.size()));
        }
        for (std::size_t j : deleted) {
            if (j == last) {
                throw LastColumnError("column " + std::to_string(last) + " (the last) cannot be deleted");
            }
        }
        require_ascending(deleted, last - 1, "deleted column");
        MinorSelection sel{n, r, std::move(deleted), {}};
        std::size_t t = 0;
        for (std::size_t k = 1; k < last; ++k) {
            if (t < sel.deleted.size() && sel.deleted[t] == k) {
                ++t;
            } else {
                sel.kept.push_back(k);
            }
        }
        sel.kept.push_back(last);
        return sel;
    }

    /// `kept` lists i_1..i_{n-1}; n+r is appended.
    static MinorSelection from_kept(int n, int r, const std::vector<std::size_t>& kept) {
        detail::require_order_and_length(n, r);
        const auto last = static_cast<std::size_t>(n + r);
        if (kept.size() != static_cast<std::size_t>(n - 1)) {
            throw SelectionError("expected " + std::to_string(n - 1) + " kept columns, got " +
                                 std::to_string(kept.size()));
        }
        require_ascending(kept, last - 1, "kept column");
        std::vector<std::size_t> deleted;
        std::size_t t = 0;
        for (std::size_t k = 1; k < last; ++k) {
            if (t < kept.size() && kept[t] == k) {
                ++t;
            } else {
                deleted.push_back(k);
            }
        }
        return from_deleted(n, r, std::move(deleted));
    }

    /// i_1..i_{n-1}, without the always-kept last column.
    std::vector<std::size_t> free_kept() const { return {kept.begin(), kept.end() - 1}; }
};

/// Every r-subset of {1..n+r-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> all_deletions(int n, int r) {
    detail::require_order_and_length(n, r);
    const auto pool = static_cast<std::size_t>(n + r - 1);
    const auto size = static_cast<std::size_t>(r);
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> current(size);
    std::iota(current.begin(), current.end(), std::size_t{1});
    while (true) {
        out.push_back(current);
        // Rightmost position that can still be incremented.
        std::size_t pos = size;
        while (pos > 0 && current[pos - 1] == pool - size + pos) {
            --pos;
        }
        if (pos == 0) {
            break;
        }
        ++current[pos - 1];
        for (std::size_t t = pos; t < size; ++t) {
            current[t] = current[t - 1] + 1;
        }
    }
    return out;
}

/// (n+r-1) x r matrix: entry(i, j) = 1 for j <= i <= j+n-1, -1 for i = j+n, else 0.
inline IntMatrix build_P(int n, int r) {
    detail::require_order_and_length(n, r);
    const auto rows = static_cast<std::size_t>(n + r - 1);
    const auto cols = static_cast<std::size_t>(r);
    const auto span = static_cast<std::size_t>(n);
    IntMatrix p(rows, cols);
    for (std::size_t j = 1; j <= cols; ++j) {
        for (std::size_t i = j; i <= j + span - 1; ++i) {
            p(i, j) = 1;
        }
        if (j + span <= rows) {
            p(j + span, j) = -1;
        }
    }
    return p;
}

/// Rows j_1..j_r of build_P(n, r).
inline IntMatrix build_Q(int n, int r, const std::vector<std::size_t>& rows) {
    if (rows.size() != static_cast<std::size_t>(r)) {
        throw SelectionError("Q needs exactly r = " + std::to_string(r) + " rows");
    }
    return select_rows(build_P(n, r), rows);
}

/// n x (n+r) matrix whose column n+j is the sum of columns j..n+j-1.
inline IntMatrix extend_columns(const IntMatrix& a, int r) {
    if (!a.is_square()) {
        throw DimensionError("column extension needs a square matrix");
    }
    if (r < 1) {
        throw DomainError("extension length r must be at least 1");
    }
    const std::size_t n = a.rows();
    const std::size_t total = n + static_cast<std::size_t>(r);
    IntMatrix out(n, total);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t k = 1; k <= n; ++k) {
            out(i, k) = a(i, k);
        }
    }
    for (std::size_t j = 1; j <= static_cast<std::size_t>(r); ++j) {
        const std::vector<BigInt> column = sum_columns(out, j, n + j - 1);
        for (std::size_t i = 1; i <= n; ++i) {
            out(i, n + j) = column[i - 1];
        }
    }
    return out;
}

/// Deletes the listed columns of an n x (n+r) extension; r = cols - rows.
inline IntMatrix minor_by_deletion(const IntMatrix& extended, const std::vector<std::size_t>& deleted) {
    if (extended.cols() <= extended.rows()) {
        throw DimensionError("extended matrix must have more columns than rows");
    }
    const auto n = static_cast<int>(extended.rows());
    const auto r = static_cast<int>(extended.cols() - extended.rows());
    const MinorSelection sel = MinorSelection::from_deleted(n, r, deleted);
    return select_columns(extended, sel.kept);
}

/// (-1)^{nr + j_1 + ... + j_r + r(r-1)/2}
inline int sign_from_deleted(int n, int r, const std::vector<std::size_t>& deleted) {
    const MinorSelection sel = MinorSelection::from_deleted(n, r, deleted);
    long long e = static_cast<long long>(n) * r + static_cast<long long>(r) * (r - 1) / 2;
    for (std::size_t j : sel.deleted) {
        e += static_cast<long long>(j);
    }
    return sign_power(e);
}

/// (-1)^{n(n-1)/2 + i_1 + ... + i_{n-1}}
inline int sign_from_kept(int n, const std::vector<std::size_t>& kept) {
    if (n < 2) {
        throw DomainError("order n must be at least 2");
    }
    if (kept.size() != static_cast<std::size_t>(n - 1)) {
        throw SelectionError("expected n-1 kept columns");
    }
    require_ascending(kept, std::numeric_limits<std::size_t>::max(), "kept column");
    long long e = static_cast<long long>(n) * (n - 1) / 2;
    for (std::size_t i : kept) {
        e += static_cast<long long>(i);
    }
    return sign_power(e);
}

struct Prop1Record {
    int n;
    int r;
    std::vector<std::size_t> deleted;
    BigInt minor_value;
    int sign;
    BigInt detQ;
    BigInt detA;
    BigInt rhs;
    bool pass;
};

inline Prop1Record check_prop1(const IntMatrix& a, int r, const std::vector<std::size_t>& deleted) {
    if (!a.is_square()) {
        throw DimensionError("Proposition check needs a square matrix");
    }
    const auto n = static_cast<int>(a.rows());
    const MinorSelection sel = MinorSelection::from_deleted(n, r, deleted);

    const int sign = sign_from_deleted(n, r, sel.deleted);
    if (sign != sign_from_kept(n, sel.free_kept())) {
        throw std::logic_error("deleted-form and kept-form signs disagree");
    }
    Prop1Record rec{n, r, sel.deleted, 0, sign, 0, 0, 0, false};
    rec.minor_value = det_bareiss(select_columns(extend_columns(a, r), sel.kept));
    rec.detQ = det_bareiss(build_Q(n, r, sel.deleted));
    rec.detA = det_bareiss(a);
    rec.rhs = sign * rec.detQ * rec.detA;
    rec.pass = rec.minor_value == rec.rhs;
    return rec;
}

/// det Q_r(n, n+1, ..., n+r-1).
inline BigInt q_fib_det(int n, int r) {
    detail::require_order_and_length(n, r);
    std::vector<std::size_t> rows(static_cast<std::size_t>(r));
    std::iota(rows.begin(), rows.end(), static_cast<std::size_t>(n));
    return det_bareiss(build_Q(n, r, rows));
}

}  // namespace nstep
