#pragma once

// Dense matrices of arbitrary-precision integers and the column
// manipulations the determinant identities are built from.
//
// All public row/column indices are 1-based.

#include "nstep/bigint.hpp"
#include "nstep/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace nstep {

class IntMatrix {
public:
    /// Zero matrix. Both dimensions must be at least 1.
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
        if (rows == 0 || cols == 0) {
            throw DimensionError("matrix dimensions must be positive");
        }
    }

    /// Row-major entries; length must equal rows*cols.
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (rows == 0 || cols == 0) {
            throw DimensionError("matrix dimensions must be positive");
        }
        if (entries_.size() != rows * cols) {
            throw DimensionError("entry count does not match dimensions");
        }
    }

    /// Nested literal, e.g. IntMatrix{{1, 2}, {0, 1}}. Ragged rows are rejected.
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        if (rows_ == 0 || cols_ == 0) {
            throw DimensionError("matrix dimensions must be positive");
        }
        entries_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) {
                throw DimensionError("ragged rows in matrix literal");
            }
            for (long v : row) {
                entries_.emplace_back(v);
            }
        }
    }

    static IntMatrix identity(std::size_t order) {
        IntMatrix m(order, order);
        for (std::size_t i = 1; i <= order; ++i) {
            m(i, i) = 1;
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    BigInt& operator()(std::size_t i, std::size_t k) { return entries_[offset(i, k)]; }
    const BigInt& operator()(std::size_t i, std::size_t k) const { return entries_[offset(i, k)]; }

    /// Row-major storage.
    std::span<const BigInt> entries() const noexcept { return entries_; }

    /// Column k as a vector of length rows().
    std::vector<BigInt> column(std::size_t k) const {
        check_col(k);
        std::vector<BigInt> out;
        out.reserve(rows_);
        for (std::size_t i = 1; i <= rows_; ++i) {
            out.push_back((*this)(i, k));
        }
        return out;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t offset(std::size_t i, std::size_t k) const {
        if (i < 1 || i > rows_ || k < 1 || k > cols_) {
            throw SelectionError("matrix index out of range");
        }
        return (i - 1) * cols_ + (k - 1);
    }

    void check_col(std::size_t k) const {
        if (k < 1 || k > cols_) {
            throw SelectionError("column index out of range");
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> entries_;
};

inline IntMatrix transpose(const IntMatrix& m) {
    IntMatrix out(m.cols(), m.rows());
    for (std::size_t i = 1; i <= m.rows(); ++i) {
        for (std::size_t k = 1; k <= m.cols(); ++k) {
            out(k, i) = m(i, k);
        }
    }
    return out;
}

/// Column k of the result is column cols+1-k of the input.
inline IntMatrix reverse_columns(const IntMatrix& m) {
    IntMatrix out(m.rows(), m.cols());
    const std::size_t c = m.cols();
    for (std::size_t i = 1; i <= m.rows(); ++i) {
        for (std::size_t k = 1; k <= c; ++k) {
            out(i, k) = m(i, c + 1 - k);
        }
    }
    return out;
}

/// Throws SelectionError unless `indices` is strictly ascending within 1..limit.
inline void require_ascending(std::span<const std::size_t> indices, std::size_t limit, std::string_view what) {
    for (std::size_t t = 0; t < indices.size(); ++t) {
        if (indices[t] < 1 || indices[t] > limit) {
            throw SelectionError(std::string(what) + " index " + std::to_string(indices[t]) +
                                 " outside 1.." + std::to_string(limit));
        }
        if (t > 0 && indices[t] <= indices[t - 1]) {
            throw SelectionError(std::string(what) + " indices must be strictly ascending");
        }
    }
}

inline IntMatrix select_columns(const IntMatrix& m, std::span<const std::size_t> kept) {
    if (kept.empty()) {
        throw SelectionError("no columns selected");
    }
    require_ascending(kept, m.cols(), "column");
    IntMatrix out(m.rows(), kept.size());
    for (std::size_t i = 1; i <= m.rows(); ++i) {
        for (std::size_t t = 0; t < kept.size(); ++t) {
            out(i, t + 1) = m(i, kept[t]);
        }
    }
    return out;
}

inline IntMatrix select_rows(const IntMatrix& m, std::span<const std::size_t> kept) {
    if (kept.empty()) {
        throw SelectionError("no rows selected");
    }
    require_ascending(kept, m.rows(), "row");
    IntMatrix out(kept.size(), m.cols());
    for (std::size_t t = 0; t < kept.size(); ++t) {
        for (std::size_t k = 1; k <= m.cols(); ++k) {
            out(t + 1, k) = m(kept[t], k);
        }
    }
    return out;
}

/// Entrywise sum of columns lo..hi inclusive.
inline std::vector<BigInt> sum_columns(const IntMatrix& m, std::size_t lo, std::size_t hi) {
    if (lo < 1 || lo > hi || hi > m.cols()) {
        throw RangeError("column range " + std::to_string(lo) + ".." + std::to_string(hi) +
                         " invalid for " + std::to_string(m.cols()) + " columns");
    }
    std::vector<BigInt> out(m.rows());
    for (std::size_t i = 1; i <= m.rows(); ++i) {
        for (std::size_t k = lo; k <= hi; ++k) {
            out[i - 1] += m(i, k);
        }
    }
    return out;
}

/// Parses the text literal "1 2; 0 1": rows separated by ';', entries by
/// whitespace or ','.
inline IntMatrix parse_matrix(std::string_view text) {
    std::vector<std::vector<BigInt>> rows;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(';', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string row_text(text.substr(start, end - start));
        std::replace(row_text.begin(), row_text.end(), ',', ' ');
        std::istringstream in(row_text);
        std::vector<BigInt> row;
        std::string token;
        while (in >> token) {
            row.push_back(from_decimal(token));
        }
        if (row.empty()) {
            throw ParseError("empty row in matrix literal");
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw ParseError("ragged rows in matrix literal");
        }
        rows.push_back(std::move(row));
        start = end + 1;
    }
    std::vector<BigInt> flat;
    for (auto& row : rows) {
        std::move(row.begin(), row.end(), std::back_inserter(flat));
    }
    const std::size_t cols = rows.front().size();
    return IntMatrix(rows.size(), cols, std::move(flat));
}

/// Inverse of parse_matrix: "1 2; 0 1".
inline std::string format_matrix(const IntMatrix& m) {
    std::string out;
    for (std::size_t i = 1; i <= m.rows(); ++i) {
        if (i > 1) {
            out += "; ";
        }
        for (std::size_t k = 1; k <= m.cols(); ++k) {
            if (k > 1) {
                out += ' ';
            }
            out += to_decimal(m(i, k));
        }
    }
    return out;
}

}  // namespace nstep
