#pragma once

// Determinant identities for n-step Fibonacci numbers: the matrices, their
// exact determinants, and the predicted right-hand sides.
//
//   Cassini    det[F_{r+k-i+1}]                          = (-1)^{(n-1)r}
//   d'Ocagne   Cassini with last column F_{r+n+s-i}      = (-1)^{(n-1)r} F_s
//   Vajda      (see vajda_matrix)                        = (-1)^{(n-1)r + floor(n/2)} F_p F_q
//   Catalan    Vajda with q = p
//
// Matrix entries and predictions are always taken from the same convention.

#include "nstep/bigint.hpp"
#include "nstep/construction.hpp"
#include "nstep/determinant.hpp"
#include "nstep/errors.hpp"
#include "nstep/matrix.hpp"
#include "nstep/sequence.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nstep {

enum class IdentityKind {
    Cassini,
    DOcagne,
    Vajda,
    Catalan,
    GeneralizedDOcagne,
    RatioInvariance,
    // The n = 2 Catalan statement in its own displayed form and sign.
    CatalanN2Stated,
    // det(reverse_columns(transpose(M))) = (-1)^{floor(n/2)} det(M) for a d'Ocagne matrix M.
    ColumnReversal,
};

inline std::string_view kind_name(IdentityKind kind) {
    switch (kind) {
    case IdentityKind::Cassini: return "cassini";
    case IdentityKind::DOcagne: return "docagne";
    case IdentityKind::Vajda: return "vajda";
    case IdentityKind::Catalan: return "catalan";
    case IdentityKind::GeneralizedDOcagne: return "gen-docagne";
    case IdentityKind::RatioInvariance: return "ratio";
    case IdentityKind::CatalanN2Stated: return "catalan-n2-stated";
    case IdentityKind::ColumnReversal: return "column-reversal";
    }
    return "unknown";
}

struct IdentityCase {
    IdentityKind kind;
    int n;
    int r;
    std::optional<int> s;
    std::optional<int> p;
    std::optional<int> q;
    SeqConvention conv = Classic{};
};

struct VerificationRecord {
    IdentityCase id;
    BigInt lhs;
    BigInt rhs;
    bool pass;
    std::size_t matrix_order;
    // Matrix literals of caller-supplied inputs (gen-docagne, ratio).
    std::vector<std::string> inputs;
};

namespace detail {

// F over an index window, fetched with one terms_range call.
class TermTable {
public:
    TermTable(int n, const SeqConvention& conv, std::int64_t lo, std::int64_t hi)
        : lo_(lo), terms_(terms_range(NStepParams(n), conv, lo, hi)) {}
    const BigInt& operator()(std::int64_t k) const { return terms_.at(static_cast<std::size_t>(k - lo_)); }

private:
    std::int64_t lo_;
    std::vector<BigInt> terms_;
};

inline void require_positive(int value, const char* name) {
    if (value < 1) {
        throw DomainError(std::string(name) + " must be at least 1, got " + std::to_string(value));
    }
}

inline VerificationRecord make_record(IdentityCase id, BigInt lhs, BigInt rhs, std::size_t order) {
    const bool pass = lhs == rhs;
    return VerificationRecord{std::move(id), std::move(lhs), std::move(rhs), pass, order, {}};
}

}  // namespace detail

/// entry(i, k) = F_{r+k-i+1}
inline IntMatrix cassini_matrix(int n, int r, const SeqConvention& conv) {
    const NStepParams params(n);
    detail::require_positive(r, "r");
    const detail::TermTable f(params.n, conv, r - n + 2, r + n);
    const auto order = static_cast<std::size_t>(n);
    IntMatrix m(order, order);
    for (int i = 1; i <= n; ++i) {
        for (int k = 1; k <= n; ++k) {
            m(i, k) = f(r + k - i + 1);
        }
    }
    return m;
}

inline VerificationRecord verify_cassini(int n, int r, const SeqConvention& conv) {
    const IntMatrix m = cassini_matrix(n, r, conv);
    BigInt rhs = sign_power(static_cast<long long>(n - 1) * r);
    return detail::make_record({IdentityKind::Cassini, n, r, {}, {}, {}, conv}, det_bareiss(m), std::move(rhs),
                               m.rows());
}

/// Cassini columns 1..n-1; entry(i, n) = F_{r+n+s-i}.
inline IntMatrix docagne_matrix(int n, int r, int s, const SeqConvention& conv) {
    const NStepParams params(n);
    detail::require_positive(r, "r");
    detail::require_positive(s, "s");
    const detail::TermTable f(params.n, conv, r - n + 2, r + n + s - 1);
    const auto order = static_cast<std::size_t>(n);
    IntMatrix m(order, order);
    for (int i = 1; i <= n; ++i) {
        for (int k = 1; k < n; ++k) {
            m(i, k) = f(r + k - i + 1);
        }
        m(i, n) = f(r + n + s - i);
    }
    return m;
}

inline VerificationRecord verify_docagne(int n, int r, int s, const SeqConvention& conv) {
    const IntMatrix m = docagne_matrix(n, r, s, conv);
    BigInt rhs = sign_power(static_cast<long long>(n - 1) * r) * term(NStepParams(n), conv, s);
    return detail::make_record({IdentityKind::DOcagne, n, r, s, {}, {}, conv}, det_bareiss(m), std::move(rhs),
                               m.rows());
}

/// Rows i < n: F_{r-n+i+k} for k < n, F_{p+r+i-1} in the last column.
/// Row n: F_{q+r+k-1} for k < n, F_{p+q+r+n-2} in the last column.
inline IntMatrix vajda_matrix(int n, int r, int p, int q, const SeqConvention& conv) {
    const NStepParams params(n);
    detail::require_positive(r, "r");
    detail::require_positive(p, "p");
    detail::require_positive(q, "q");
    const detail::TermTable f(params.n, conv, r - n + 2, p + q + r + n - 2);
    const auto order = static_cast<std::size_t>(n);
    IntMatrix m(order, order);
    for (int i = 1; i < n; ++i) {
        for (int k = 1; k < n; ++k) {
            m(i, k) = f(r - n + i + k);
        }
        m(i, n) = f(p + r + i - 1);
    }
    for (int k = 1; k < n; ++k) {
        m(n, k) = f(q + r + k - 1);
    }
    m(n, n) = f(p + q + r + n - 2);
    return m;
}

inline VerificationRecord verify_vajda(int n, int r, int p, int q, const SeqConvention& conv) {
    const IntMatrix m = vajda_matrix(n, r, p, q, conv);
    const NStepParams params(n);
    BigInt rhs = sign_power(static_cast<long long>(n - 1) * r + n / 2) * term(params, conv, p) * term(params, conv, q);
    return detail::make_record({IdentityKind::Vajda, n, r, {}, p, q, conv}, det_bareiss(m), std::move(rhs),
                               m.rows());
}

inline VerificationRecord verify_catalan(int n, int r, int p, const SeqConvention& conv) {
    VerificationRecord rec = verify_vajda(n, r, p, p, conv);
    rec.id.kind = IdentityKind::Catalan;
    rec.id.q.reset();
    return rec;
}

/// The n = 2 Catalan statement as displayed: det[[F_{r-p}, F_r], [F_r, F_{p+r}]] = (-1)^{r-p} F_p^2.
inline VerificationRecord verify_catalan_n2_stated(int r, int p, const SeqConvention& conv) {
    detail::require_positive(r, "r");
    detail::require_positive(p, "p");
    const detail::TermTable f(2, conv, r - p, r + p);
    const IntMatrix m(2, 2, {f(r - p), f(r), f(r), f(r + p)});
    BigInt fp = term(NStepParams(2), conv, p);
    BigInt rhs = sign_power(static_cast<long long>(r) - p) * fp * fp;
    return detail::make_record({IdentityKind::CatalanN2Stated, 2, r, {}, p, {}, conv}, det_bareiss(m),
                               std::move(rhs), 2);
}

/// Transpose then reverse the columns of the d'Ocagne matrix; the determinant
/// picks up floor(n/2) column swaps.
inline VerificationRecord verify_column_reversal(int n, int r, int s, const SeqConvention& conv) {
    const IntMatrix m = docagne_matrix(n, r, s, conv);
    BigInt lhs = det_bareiss(reverse_columns(transpose(m)));
    BigInt rhs = sign_power(n / 2) * det_bareiss(m);
    return detail::make_record({IdentityKind::ColumnReversal, n, r, s, {}, {}, conv}, std::move(lhs),
                               std::move(rhs), m.rows());
}

namespace detail {

// det of columns {1, ..., n-1, n+r} of the extension of a.
inline BigInt leading_minor_with_last(const IntMatrix& a, int r) {
    const auto n = static_cast<int>(a.rows());
    std::vector<std::size_t> kept;
    for (int k = 1; k < n; ++k) {
        kept.push_back(static_cast<std::size_t>(k));
    }
    kept.push_back(static_cast<std::size_t>(n + r));
    return det_bareiss(select_columns(extend_columns(a, r), kept));
}

}  // namespace detail

/// det of columns {1..n-1, n+r} of extend_columns(a, r) against
/// F_r * det a, with F in the PaperPowers convention.
inline VerificationRecord generalized_docagne(const IntMatrix& a, int r) {
    if (!a.is_square()) {
        throw DimensionError("generalized d'Ocagne needs a square matrix");
    }
    const auto n = static_cast<int>(a.rows());
    const NStepParams params(n);
    detail::require_positive(r, "r");
    BigInt lhs = detail::leading_minor_with_last(a, r);
    BigInt rhs = term(params, PaperPowers{}, r) * det_bareiss(a);
    VerificationRecord rec =
        detail::make_record({IdentityKind::GeneralizedDOcagne, n, r, {}, {}, {}, PaperPowers{}}, std::move(lhs),
                            std::move(rhs), a.rows());
    rec.inputs.push_back(format_matrix(a));
    return rec;
}

/// M_a / det a = M_b / det b, checked cross-multiplied: lhs = M_a det b, rhs = M_b det a.
inline VerificationRecord ratio_invariance(const IntMatrix& a, const IntMatrix& b, int r) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
        throw DimensionError("ratio invariance needs two square matrices of equal order");
    }
    const auto n = static_cast<int>(a.rows());
    const NStepParams params(n);
    detail::require_positive(r, "r");
    const BigInt det_a = det_bareiss(a);
    const BigInt det_b = det_bareiss(b);
    if (det_a == 0 || det_b == 0) {
        throw RegularityError("ratio invariance needs nonsingular matrices");
    }
    BigInt lhs = detail::leading_minor_with_last(a, r) * det_b;
    BigInt rhs = detail::leading_minor_with_last(b, r) * det_a;
    VerificationRecord rec = detail::make_record({IdentityKind::RatioInvariance, n, r, {}, {}, {}, PaperPowers{}},
                                                 std::move(lhs), std::move(rhs), a.rows());
    rec.inputs.push_back(format_matrix(a));
    rec.inputs.push_back(format_matrix(b));
    return rec;
}

}  // namespace nstep
