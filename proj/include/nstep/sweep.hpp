#pragma once

// Parameter sweeps over the identity checks and the signed-minor
// proposition. Sweeps may run on several threads, but every result vector
// comes back in canonical lexicographic order.

#include "nstep/bigint.hpp"
#include "nstep/construction.hpp"
#include "nstep/errors.hpp"
#include "nstep/identities.hpp"
#include "nstep/matrix.hpp"
#include "nstep/sequence.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <initializer_list>
#include <iterator>
#include <limits>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace nstep {

/// Inclusive integer range, written "a..b" or "a".
struct IntRange {
    int lo;
    int hi;

    static IntRange single(int v) { return {v, v}; }

    std::vector<int> values() const {
        std::vector<int> out;
        for (int v = lo; v <= hi; ++v) {
            out.push_back(v);
        }
        return out;
    }

    std::string str() const { return lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi); }
};

inline IntRange parse_range(std::string_view text) {
    auto parse_int = [&](std::string_view part) {
        std::string s(part);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            throw ParseError("bad range '" + std::string(text) + "'");
        }
        if (used != s.size()) {
            throw ParseError("bad range '" + std::string(text) + "'");
        }
        return v;
    };
    const std::size_t dots = text.find("..");
    IntRange range{};
    if (dots == std::string_view::npos) {
        range.lo = range.hi = parse_int(text);
    } else {
        range.lo = parse_int(text.substr(0, dots));
        range.hi = parse_int(text.substr(dots + 2));
    }
    if (range.lo > range.hi) {
        throw RangeError("empty range '" + std::string(text) + "'");
    }
    return range;
}

// ---------------------------------------------------------------------------
// Randomness
//
// Every sweep cell owns a std::mt19937_64 seeded through std::seed_seq from
// (seed, tag...). Entries are drawn uniformly from [-bound, bound] by
// rejection sampling on the raw 64-bit output, so the stream depends only on
// the seed and the cell, never on thread scheduling or the standard library's
// distribution implementations.

inline std::mt19937_64 cell_engine(std::uint64_t seed, std::initializer_list<std::uint32_t> tags) {
    std::vector<std::uint32_t> material{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    material.insert(material.end(), tags.begin(), tags.end());
    std::seed_seq seq(material.begin(), material.end());
    return std::mt19937_64(seq);
}

inline long uniform_entry(std::mt19937_64& engine, long bound) {
    if (bound <= 0) {
        return 0;
    }
    const auto span = static_cast<std::uint64_t>(2 * bound + 1);
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x = 0;
    do {
        x = engine();
    } while (x >= limit);
    return static_cast<long>(x % span) - bound;
}

inline IntMatrix random_matrix(std::mt19937_64& engine, std::size_t rows, std::size_t cols, long bound) {
    std::vector<BigInt> entries;
    entries.reserve(rows * cols);
    for (std::size_t t = 0; t < rows * cols; ++t) {
        entries.emplace_back(uniform_entry(engine, bound));
    }
    return IntMatrix(rows, cols, std::move(entries));
}

/// Nonsingular random square matrix (redraws singular ones).
inline IntMatrix random_regular_matrix(std::mt19937_64& engine, std::size_t order, long bound) {
    if (bound < 1) {
        throw DomainError("a nonsingular random matrix needs bound >= 1");
    }
    while (true) {
        IntMatrix m = random_matrix(engine, order, order, bound);
        if (det_bareiss(m) != 0) {
            return m;
        }
    }
}

// ---------------------------------------------------------------------------
// Execution

/// Runs task(i) for i in [0, count) on up to `threads` workers and returns
/// the results indexed by i. The first exception thrown by any task is
/// rethrown on the caller's thread.
template <class Task>
auto run_cells(std::size_t count, unsigned threads, Task&& task) {
    using Result = decltype(task(std::size_t{0}));
    std::vector<Result> results(count);
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) {
            results[i] = task(i);
        }
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> workers;
        for (unsigned t = 0; t < threads; ++t) {
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    try {
                        results[i] = task(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) {
                            failure = std::current_exception();
                        }
                        next = count;
                    }
                }
            });
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return results;
}

template <class T>
std::vector<T> flatten(std::vector<std::vector<T>> nested) {
    std::vector<T> out;
    for (auto& chunk : nested) {
        std::move(chunk.begin(), chunk.end(), std::back_inserter(out));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Identity sweeps

struct IdentityGrid {
    IntRange n{2, 4};
    IntRange r{1, 10};
    IntRange s{1, 5};
    IntRange p{1, 5};
    IntRange q{1, 5};
};

/// Canonical order: (n, r, s, p, q). Catalan ignores q; the n = 2 stated
/// Catalan form only runs at n = 2.
inline std::vector<VerificationRecord> sweep_identity(IdentityKind kind, const IdentityGrid& grid,
                                                      const SeqConvention& conv, unsigned threads = 1) {
    struct Cell {
        int n;
        int r;
    };
    std::vector<Cell> cells;
    for (int n : grid.n.values()) {
        if (kind == IdentityKind::CatalanN2Stated && n != 2) {
            continue;
        }
        for (int r : grid.r.values()) {
            cells.push_back({n, r});
        }
    }
    auto per_cell = run_cells(cells.size(), threads, [&](std::size_t i) {
        const auto [n, r] = cells[i];
        std::vector<VerificationRecord> out;
        switch (kind) {
        case IdentityKind::Cassini:
            out.push_back(verify_cassini(n, r, conv));
            break;
        case IdentityKind::DOcagne:
            for (int s : grid.s.values()) {
                out.push_back(verify_docagne(n, r, s, conv));
            }
            break;
        case IdentityKind::ColumnReversal:
            for (int s : grid.s.values()) {
                out.push_back(verify_column_reversal(n, r, s, conv));
            }
            break;
        case IdentityKind::Vajda:
            for (int p : grid.p.values()) {
                for (int q : grid.q.values()) {
                    out.push_back(verify_vajda(n, r, p, q, conv));
                }
            }
            break;
        case IdentityKind::Catalan:
            for (int p : grid.p.values()) {
                out.push_back(verify_catalan(n, r, p, conv));
            }
            break;
        case IdentityKind::CatalanN2Stated:
            for (int p : grid.p.values()) {
                out.push_back(verify_catalan_n2_stated(r, p, conv));
            }
            break;
        default:
            throw DomainError("kind '" + std::string(kind_name(kind)) + "' is not a sequence identity");
        }
        return out;
    });
    return flatten(std::move(per_cell));
}

/// Generalized d'Ocagne over seeded random matrices (singular ones included),
/// or over one fixed matrix when `fixed` is set. Order: (n, r, trial).
inline std::vector<VerificationRecord> sweep_generalized_docagne(IntRange n_range, IntRange r_range, int trials,
                                                                 long bound, std::uint64_t seed,
                                                                 const std::optional<IntMatrix>& fixed,
                                                                 unsigned threads = 1) {
    std::vector<std::pair<int, int>> cells;
    if (fixed) {
        for (int r : r_range.values()) {
            cells.emplace_back(static_cast<int>(fixed->rows()), r);
        }
    } else {
        for (int n : n_range.values()) {
            for (int r : r_range.values()) {
                cells.emplace_back(n, r);
            }
        }
    }
    auto per_cell = run_cells(cells.size(), threads, [&](std::size_t i) {
        const auto [n, r] = cells[i];
        std::vector<VerificationRecord> out;
        if (fixed) {
            out.push_back(generalized_docagne(*fixed, r));
            return out;
        }
        auto engine = cell_engine(seed, {0x67644FU, static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(r)});
        for (int t = 0; t < trials; ++t) {
            const auto order = static_cast<std::size_t>(n);
            out.push_back(generalized_docagne(random_matrix(engine, order, order, bound), r));
        }
        return out;
    });
    return flatten(std::move(per_cell));
}

/// Ratio invariance over seeded random nonsingular pairs. Order: (n, r, trial).
inline std::vector<VerificationRecord> sweep_ratio_invariance(IntRange n_range, IntRange r_range, int trials,
                                                              long bound, std::uint64_t seed, unsigned threads = 1) {
    std::vector<std::pair<int, int>> cells;
    for (int n : n_range.values()) {
        for (int r : r_range.values()) {
            cells.emplace_back(n, r);
        }
    }
    auto per_cell = run_cells(cells.size(), threads, [&](std::size_t i) {
        const auto [n, r] = cells[i];
        auto engine = cell_engine(seed, {0x726174U, static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(r)});
        std::vector<VerificationRecord> out;
        const auto order = static_cast<std::size_t>(n);
        for (int t = 0; t < trials; ++t) {
            IntMatrix a = random_regular_matrix(engine, order, bound);
            IntMatrix b = random_regular_matrix(engine, order, bound);
            out.push_back(ratio_invariance(a, b, r));
        }
        return out;
    });
    return flatten(std::move(per_cell));
}

// ---------------------------------------------------------------------------
// Signed-minor proposition sweep

struct Prop1Entry {
    int trial;
    std::string matrix;
    Prop1Record record;
};

/// For each (n, r) draws `trials` matrices (entries in [-bound, bound]) and
/// checks every deletion subset. With `fixed` set, n is the matrix order and
/// that matrix is the only trial. Order: (n, r, trial, deletion).
inline std::vector<Prop1Entry> sweep_prop1(IntRange n_range, IntRange r_range, int trials, long bound,
                                           std::uint64_t seed, const std::optional<IntMatrix>& fixed = std::nullopt,
                                           unsigned threads = 1) {
    if (trials < 1) {
        throw DomainError("trials must be at least 1");
    }
    if (bound < 0) {
        throw DomainError("entry bound must be non-negative");
    }
    if (fixed) {
        n_range = IntRange::single(static_cast<int>(fixed->rows()));
    }
    std::vector<std::pair<int, int>> cells;
    for (int n : n_range.values()) {
        for (int r : r_range.values()) {
            cells.emplace_back(n, r);
        }
    }
    auto per_cell = run_cells(cells.size(), threads, [&](std::size_t i) {
        const auto [n, r] = cells[i];
        auto engine = cell_engine(seed, {0x707231U, static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(r)});
        const auto deletions = all_deletions(n, r);
        std::vector<Prop1Entry> out;
        const int count = fixed ? 1 : trials;
        for (int t = 0; t < count; ++t) {
            const auto order = static_cast<std::size_t>(n);
            const IntMatrix a = fixed ? *fixed : random_matrix(engine, order, order, bound);
            const std::string literal = format_matrix(a);
            for (const auto& deleted : deletions) {
                out.push_back({t, literal, check_prop1(a, r, deleted)});
            }
        }
        return out;
    });
    return flatten(std::move(per_cell));
}

// ---------------------------------------------------------------------------
// Convention probe

struct ProbeCell {
    IdentityKind family;
    std::string convention;
    int n;
    std::size_t total;
    std::size_t passed;
};

/// Pass tallies per (family, convention, n) for the Classic and PaperPowers
/// conventions.
inline std::vector<ProbeCell> convention_probe(const IdentityGrid& grid, unsigned threads = 1) {
    const IdentityKind families[] = {IdentityKind::Cassini, IdentityKind::DOcagne, IdentityKind::Vajda,
                                     IdentityKind::Catalan, IdentityKind::CatalanN2Stated,
                                     IdentityKind::ColumnReversal};
    const SeqConvention conventions[] = {Classic{}, PaperPowers{}};
    std::vector<ProbeCell> cells;
    for (IdentityKind family : families) {
        for (const auto& conv : conventions) {
            for (const auto& rec : sweep_identity(family, grid, conv, threads)) {
                if (cells.empty() || cells.back().family != family ||
                    cells.back().convention != convention_name(conv) || cells.back().n != rec.id.n) {
                    cells.push_back({family, convention_name(conv), rec.id.n, 0, 0});
                }
                ++cells.back().total;
                cells.back().passed += rec.pass ? 1 : 0;
            }
        }
    }
    return cells;
}

}  // namespace nstep
