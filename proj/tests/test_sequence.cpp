#include "nstep/sequence.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <vector>

using nstep::BigInt;
using nstep::Classic;
using nstep::Custom;
using nstep::NStepParams;
using nstep::PaperPowers;

TEST(NStepParams, RejectsFewerThanTwoSteps) {
    EXPECT_THROW(NStepParams(1), nstep::DomainError);
    EXPECT_THROW(NStepParams(0), nstep::DomainError);
    EXPECT_EQ(NStepParams(2).n, 2);
}

TEST(Term, PaperPowersSeedsAndRecurrence) {
    const NStepParams three(3);
    EXPECT_EQ(nstep::term(three, PaperPowers{}, 1), 1);
    EXPECT_EQ(nstep::term(three, PaperPowers{}, 2), 2);
    EXPECT_EQ(nstep::term(three, PaperPowers{}, 3), 4);
    EXPECT_EQ(nstep::term(three, PaperPowers{}, 4), 7);
    EXPECT_EQ(nstep::term(NStepParams(4), PaperPowers{}, 4), 8);
}

TEST(Term, ClassicBackwardExtension) {
    const NStepParams three(3);
    EXPECT_EQ(nstep::term(three, Classic{}, 0), 0);
    EXPECT_EQ(nstep::term(three, Classic{}, -2), 1);
    EXPECT_EQ(nstep::term(NStepParams(2), Classic{}, 10), 55);
    // Frozen from an independent map-based evaluation.
    EXPECT_EQ(nstep::terms_range(three, Classic{}, -6, 5),
              (std::vector<BigInt>{-3, 2, 0, -1, 1, 0, 0, 1, 1, 2, 4, 7}));
    EXPECT_EQ(nstep::term(NStepParams(2), Classic{}, -10), -55);
    EXPECT_EQ(nstep::term(NStepParams(4), Classic{}, -7), 2);
}

TEST(Term, FrozenLargeValues) {
    EXPECT_EQ(nstep::term(NStepParams(3), PaperPowers{}, 30), 53798080);
    EXPECT_EQ(nstep::term(NStepParams(5), Classic{}, 100), BigInt("62281407721435951202621359588"));
}

TEST(TermsRange, SmallWindows) {
    EXPECT_EQ(nstep::terms_range(NStepParams(2), PaperPowers{}, 1, 4), (std::vector<BigInt>{1, 2, 3, 5}));
    EXPECT_EQ(nstep::terms_range(NStepParams(3), Classic{}, 1, 5), (std::vector<BigInt>{1, 1, 2, 4, 7}));
    EXPECT_EQ(nstep::terms_range(NStepParams(3), Classic{}, 5, 5), (std::vector<BigInt>{7}));
    EXPECT_EQ(nstep::terms_range(NStepParams(2), Classic{}, -3, 3), (std::vector<BigInt>{2, -1, 1, 0, 1, 1, 2}));
    EXPECT_THROW(nstep::terms_range(NStepParams(2), Classic{}, 4, 3), nstep::RangeError);
}

TEST(TermsRange, WindowsAwayFromSeedsMatchOracle) {
    for (int n = 2; n <= 6; ++n) {
        auto classic = oracle::NaiveSequence::classic(n);
        auto paper = oracle::NaiveSequence::paper(n);
        for (auto [lo, hi] : {std::pair{-40, -30}, std::pair{-5, 5}, std::pair{50, 60}, std::pair{-20, 80}}) {
            const auto got_c = nstep::terms_range(NStepParams(n), Classic{}, lo, hi);
            const auto got_p = nstep::terms_range(NStepParams(n), PaperPowers{}, lo, hi);
            for (int k = lo; k <= hi; ++k) {
                ASSERT_EQ(got_c[static_cast<std::size_t>(k - lo)], classic(k)) << "n=" << n << " k=" << k;
                ASSERT_EQ(got_p[static_cast<std::size_t>(k - lo)], paper(k)) << "n=" << n << " k=" << k;
            }
        }
    }
}

TEST(Term, RecurrenceResidualAcrossSeam) {
    const nstep::SeqConvention conventions[] = {Classic{}, PaperPowers{}, Custom{{3, -1, 4, 1}}};
    for (const auto& conv : conventions) {
        const int n = 4;
        const auto f = nstep::terms_range(NStepParams(n), conv, -60, 60);
        for (std::size_t k = static_cast<std::size_t>(n); k < f.size(); ++k) {
            BigInt residual = f[k];
            for (int j = 1; j <= n; ++j) {
                residual -= f[k - static_cast<std::size_t>(j)];
            }
            ASSERT_EQ(residual, 0) << nstep::convention_name(conv) << " at offset " << k;
        }
    }
}

TEST(Term, ShiftRelationBetweenConventions) {
    for (int n = 2; n <= 6; ++n) {
        const auto paper = nstep::terms_range(NStepParams(n), PaperPowers{}, 1, 200);
        const auto classic = nstep::terms_range(NStepParams(n), Classic{}, 2, 201);
        ASSERT_EQ(paper, classic) << "n=" << n;
    }
}

TEST(Term, ClassicZeroAndNegafibonacci) {
    for (int n = 2; n <= 6; ++n) {
        EXPECT_EQ(nstep::term(NStepParams(n), Classic{}, 0), 0);
    }
    const auto f = nstep::terms_range(NStepParams(2), Classic{}, -30, 30);
    for (int k = 1; k <= 30; ++k) {
        const BigInt& negative = f[static_cast<std::size_t>(30 - k)];
        const BigInt& positive = f[static_cast<std::size_t>(30 + k)];
        EXPECT_EQ(negative, nstep::sign_power(k + 1) * positive) << "k=" << k;
    }
}

TEST(Custom, SeedsAreValidated) {
    EXPECT_THROW(nstep::term(NStepParams(3), Custom{{1, 2}}, 5), nstep::DomainError);
    EXPECT_THROW(nstep::term_fast(NStepParams(3), Custom{{1, 2, 3, 4}}, 5), nstep::DomainError);
    // Lucas numbers 1, 3, 4, 7, 11, ...
    EXPECT_EQ(nstep::terms_range(NStepParams(2), Custom{{1, 3}}, 1, 6), (std::vector<BigInt>{1, 3, 4, 7, 11, 18}));
}

TEST(Convention, ParseAndName) {
    EXPECT_EQ(nstep::convention_name(nstep::parse_convention("classic")), "classic");
    EXPECT_EQ(nstep::convention_name(nstep::parse_convention("paper")), "paper");
    EXPECT_EQ(nstep::convention_name(nstep::parse_convention("custom:2,-1,5")), "custom:2,-1,5");
    EXPECT_THROW(nstep::parse_convention("lucas"), nstep::ParseError);
    EXPECT_THROW(nstep::parse_convention("custom:1,,2"), nstep::ParseError);
}

TEST(CompanionMatrix, Shape) {
    EXPECT_EQ(nstep::companion_matrix(NStepParams(2)), (nstep::IntMatrix{{1, 1}, {1, 0}}));
    EXPECT_EQ(nstep::companion_matrix(NStepParams(3)), (nstep::IntMatrix{{1, 1, 1}, {1, 0, 0}, {0, 1, 0}}));
}

TEST(CompanionMatrix, AdvancesStateByOne) {
    const nstep::SeqConvention conventions[] = {Classic{}, PaperPowers{}, Custom{{5, -2, 7}}};
    for (const auto& conv : conventions) {
        const NStepParams p(3);
        const auto c = nstep::companion_matrix(p);
        const auto f = nstep::terms_range(p, conv, 1, 4);
        const BigInt state[] = {f[2], f[1], f[0]};
        const BigInt expected[] = {f[3], f[2], f[1]};
        for (std::size_t i = 1; i <= 3; ++i) {
            BigInt v = 0;
            for (std::size_t k = 1; k <= 3; ++k) {
                v += c(i, k) * state[k - 1];
            }
            EXPECT_EQ(v, expected[i - 1]);
        }
    }
}

TEST(TermFast, MatchesIterativeEngine) {
    EXPECT_EQ(nstep::term_fast(NStepParams(2), Classic{}, 10), 55);
    EXPECT_EQ(nstep::term_fast(NStepParams(3), PaperPowers{}, 30), nstep::term(NStepParams(3), PaperPowers{}, 30));
    for (int n = 2; n <= 6; ++n) {
        EXPECT_EQ(nstep::term_fast(NStepParams(n), Classic{}, 1), 1);
        EXPECT_EQ(nstep::term_fast(NStepParams(n), PaperPowers{}, 1), 1);
        const auto f = nstep::terms_range(NStepParams(n), Classic{}, 1, 300);
        for (int k = 1; k <= 300; k += 7) {
            ASSERT_EQ(nstep::term_fast(NStepParams(n), Classic{}, k), f[static_cast<std::size_t>(k - 1)]);
        }
    }
    const Custom lucas{{1, 3}};
    EXPECT_EQ(nstep::term_fast(NStepParams(2), lucas, 500), nstep::term(NStepParams(2), lucas, 500));
}

TEST(TermFast, RejectsNonPositiveIndex) {
    EXPECT_THROW(nstep::term_fast(NStepParams(2), Classic{}, 0), nstep::DomainError);
    EXPECT_THROW(nstep::term_fast(NStepParams(2), Classic{}, -4), nstep::DomainError);
}
