#pragma once

// n-step Fibonacci numbers F_k = F_{k-1} + ... + F_{k-n}, extended to every
// integer index through the inverted recurrence.
//
// Each convention pins n consecutive values (the seed window); everything
// else follows from the recurrence in both directions.

#include "nstep/bigint.hpp"
#include "nstep/errors.hpp"
#include "nstep/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

namespace nstep {

struct NStepParams {
    explicit NStepParams(int steps) : n(steps) {
        if (n < 2) {
            throw DomainError("step count n must be at least 2, got " + std::to_string(steps));
        }
    }
    int n;
};

/// F_1 = 1 and F_k = 0 on the n-1 indices just below 1 (1, 1, 2, 4, ... for n = 3).
struct Classic {};
/// F_k = 2^{k-1} for k = 1..n.
struct PaperPowers {};
/// Arbitrary values for F_1..F_n.
struct Custom {
    std::vector<BigInt> seeds;
};

using SeqConvention = std::variant<Classic, PaperPowers, Custom>;

/// "classic", "paper" or "custom:a,b,...".
inline std::string convention_name(const SeqConvention& conv) {
    return std::visit(
        [](const auto& c) -> std::string {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, Classic>) {
                return "classic";
            } else if constexpr (std::is_same_v<T, PaperPowers>) {
                return "paper";
            } else {
                std::string out = "custom:";
                for (std::size_t t = 0; t < c.seeds.size(); ++t) {
                    out += (t ? "," : "") + to_decimal(c.seeds[t]);
                }
                return out;
            }
        },
        conv);
}

inline SeqConvention parse_convention(std::string_view text) {
    if (text == "classic") {
        return Classic{};
    }
    if (text == "paper" || text == "paper-powers") {
        return PaperPowers{};
    }
    if (text.starts_with("custom:")) {
        Custom c;
        std::string rest(text.substr(7));
        std::size_t start = 0;
        while (start <= rest.size()) {
            std::size_t end = rest.find(',', start);
            if (end == std::string::npos) {
                end = rest.size();
            }
            c.seeds.push_back(from_decimal(rest.substr(start, end - start)));
            start = end + 1;
        }
        return c;
    }
    throw ParseError("unknown convention '" + std::string(text) + "' (classic | paper | custom:a,b,...)");
}

/// The n pinned values of a convention and the index of the first one.
struct SeedWindow {
    std::int64_t first;
    std::vector<BigInt> values;
};

inline SeedWindow seed_window(NStepParams p, const SeqConvention& conv) {
    const auto n = static_cast<std::size_t>(p.n);
    return std::visit(
        [&](const auto& c) -> SeedWindow {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, Classic>) {
                SeedWindow w{2 - p.n, std::vector<BigInt>(n)};
                w.values.back() = 1;
                return w;
            } else if constexpr (std::is_same_v<T, PaperPowers>) {
                SeedWindow w{1, {}};
                BigInt v = 1;
                for (std::size_t t = 0; t < n; ++t, v *= 2) {
                    w.values.push_back(v);
                }
                return w;
            } else {
                if (c.seeds.size() != n) {
                    throw DomainError("custom convention needs exactly n = " + std::to_string(n) +
                                      " seeds, got " + std::to_string(c.seeds.size()));
                }
                return SeedWindow{1, c.seeds};
            }
        },
        conv);
}

namespace detail {

// n+1 consecutive terms F_first..F_{first+n}. Both directions use the
// two-term form of the recurrence F_{k+1} = 2 F_k - F_{k-n}, so one step
// costs O(1) big-integer operations regardless of n.
class SlidingWindow {
public:
    SlidingWindow(NStepParams p, const SeqConvention& conv) : n_(static_cast<std::size_t>(p.n)) {
        SeedWindow seed = seed_window(p, conv);
        first_ = seed.first;
        BigInt next = 0;
        for (auto& v : seed.values) {
            next += v;
            terms_.push_back(std::move(v));
        }
        terms_.push_back(std::move(next));
    }

    std::int64_t first() const { return first_; }
    std::int64_t last() const { return first_ + static_cast<std::int64_t>(n_); }
    const BigInt& at(std::int64_t k) const { return terms_[static_cast<std::size_t>(k - first_)]; }
    bool contains(std::int64_t k) const { return k >= first() && k <= last(); }

    void step_forward() {
        BigInt next = 2 * terms_.back() - terms_.front();
        terms_.pop_front();
        terms_.push_back(std::move(next));
        ++first_;
    }

    // F_{first-1} = 2 F_{first+n-1} - F_{first+n}
    void step_backward() {
        BigInt prev = 2 * terms_[n_ - 1] - terms_[n_];
        terms_.pop_back();
        terms_.push_front(std::move(prev));
        --first_;
    }

private:
    std::size_t n_;
    std::int64_t first_;
    std::deque<BigInt> terms_;
};

}  // namespace detail

/// [F_lo, ..., F_hi] in one sliding pass away from the seed window.
inline std::vector<BigInt> terms_range(NStepParams p, const SeqConvention& conv, std::int64_t lo,
                                       std::int64_t hi) {
    if (lo > hi) {
        throw RangeError("empty index range " + std::to_string(lo) + ".." + std::to_string(hi));
    }
    std::vector<BigInt> out(static_cast<std::size_t>(hi - lo + 1));
    auto slot = [&](std::int64_t k) -> BigInt& { return out[static_cast<std::size_t>(k - lo)]; };

    detail::SlidingWindow forward(p, conv);
    const std::int64_t seed_first = forward.first();
    for (std::int64_t k = std::max(lo, forward.first()); k <= std::min(hi, forward.last()); ++k) {
        slot(k) = forward.at(k);
    }
    while (forward.last() < hi) {
        forward.step_forward();
        if (forward.last() >= lo) {
            slot(forward.last()) = forward.at(forward.last());
        }
    }
    if (lo < seed_first) {
        detail::SlidingWindow backward(p, conv);
        while (backward.first() > lo) {
            backward.step_backward();
            if (backward.first() <= hi) {
                slot(backward.first()) = backward.at(backward.first());
            }
        }
    }
    return out;
}

/// F_k for any integer k.
inline BigInt term(NStepParams p, const SeqConvention& conv, std::int64_t k) {
    return terms_range(p, conv, k, k).front();
}

/// First row all ones, ones on the subdiagonal: maps the state
/// (F_k, F_{k-1}, ..., F_{k-n+1}) to (F_{k+1}, F_k, ..., F_{k-n+2}).
inline IntMatrix companion_matrix(NStepParams p) {
    const auto n = static_cast<std::size_t>(p.n);
    IntMatrix c(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        c(1, k) = 1;
    }
    for (std::size_t i = 2; i <= n; ++i) {
        c(i, i - 1) = 1;
    }
    return c;
}

namespace detail {

// Row-major square product with reused accumulators.
inline void square_multiply(const std::vector<BigInt>& a, const std::vector<BigInt>& b, std::vector<BigInt>& out,
                            std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            BigInt& acc = out[i * n + j];
            acc = 0;
            for (std::size_t t = 0; t < n; ++t) {
                mpz_addmul(acc.get_mpz_t(), a[i * n + t].get_mpz_t(), b[t * n + j].get_mpz_t());
            }
        }
    }
}

}  // namespace detail

/// F_k for k >= 1 by binary exponentiation of the companion matrix applied
/// to the seed state.
inline BigInt term_fast(NStepParams p, const SeqConvention& conv, std::int64_t k) {
    if (k < 1) {
        throw DomainError("fast engine needs k >= 1, got " + std::to_string(k));
    }
    const auto n = static_cast<std::size_t>(p.n);
    SeedWindow seed = seed_window(p, conv);
    const std::int64_t top = seed.first + p.n - 1;
    if (k <= top) {
        return seed.values[static_cast<std::size_t>(k - seed.first)];
    }

    // power = C^(k - top), accumulated right to left.
    std::vector<BigInt> power(n * n), base(n * n), scratch(n * n);
    const IntMatrix c = companion_matrix(p);
    std::copy(c.entries().begin(), c.entries().end(), base.begin());
    for (std::size_t i = 0; i < n; ++i) {
        power[i * n + i] = 1;
    }
    auto e = static_cast<std::uint64_t>(k - top);
    bool power_is_identity = true;
    while (e > 0) {
        if (e & 1U) {
            if (power_is_identity) {
                power = base;
                power_is_identity = false;
            } else {
                detail::square_multiply(power, base, scratch, n);
                std::swap(power, scratch);
            }
        }
        e >>= 1U;
        if (e > 0) {
            detail::square_multiply(base, base, scratch, n);
            std::swap(base, scratch);
        }
    }
    // Top entry of power * (F_top, F_{top-1}, ..., F_{top-n+1}).
    BigInt result = 0;
    for (std::size_t t = 0; t < n; ++t) {
        mpz_addmul(result.get_mpz_t(), power[t].get_mpz_t(), seed.values[n - 1 - t].get_mpz_t());
    }
    return result;
}

}  // namespace nstep
