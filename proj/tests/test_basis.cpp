#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "curvedcs/basis.hpp"
#include "curvedcs/error.hpp"
#include "oracles.hpp"

using namespace curvedcs;

namespace {

Errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected curvedcs::Error";
    return Errc::invariant_violation;
}

}  // namespace

TEST(BasisWeights, DegreeOneIsLinearInterpolation) {
    const auto w = basis_weights({1, 0.7}, 0.3).w;
    ASSERT_EQ(w.size(), 2u);
    EXPECT_NEAR(w[0], 0.7, 1e-15);
    EXPECT_NEAR(w[1], 0.3, 1e-15);
}

TEST(BasisWeights, EndpointsAreUnitVectors) {
    const auto w0 = basis_weights({5, 1.0}, 0.0).w;
    EXPECT_EQ(w0, (std::vector<double>{1, 0, 0, 0, 0, 0}));
    const auto w1 = basis_weights({5, 1.0}, 1.0).w;
    EXPECT_EQ(w1, (std::vector<double>{0, 0, 0, 0, 0, 1}));
}

TEST(BasisWeights, BetaZeroIsBernstein) {
    const auto w = basis_weights({5, 0.0}, 0.4).w;
    EXPECT_NEAR(w[2], 0.3456, 1e-14);
}

TEST(BasisWeights, MatchesDefiningFormula) {
    for (int m : {2, 3, 7, 15})
        for (double beta : {0.1, 0.5, 1.0, 2.0})
            for (double t : {0.05, 0.3, 0.5, 0.77, 0.99}) {
                const auto w = basis_weights({m, beta}, t).w;
                for (int i = 0; i <= m; ++i) {
                    const double ref = oracle::cs_basis(m, beta, t, i);
                    EXPECT_NEAR(w[i], ref, 1e-13 * std::max(1.0, std::abs(ref))) << m << ' ' << beta << ' ' << t << ' ' << i;
                }
            }
}

TEST(BasisWeights, NoOverflowAtLargeDegree) {
    // (1+m beta)^{m-1} = 241^59 is ~1e140; direct products would lose it for larger m
    for (double t : oracle::linspace(0.0, 1.0, 41)) {
        const auto w = basis_weights({60, 4.0}, t).w;
        double sum = 0.0;
        for (double v : w) {
            ASSERT_TRUE(std::isfinite(v));
            sum += v;
        }
        EXPECT_NEAR(sum, 1.0, 1e-10);
    }
}

TEST(BasisWeights, Errors) {
    EXPECT_EQ(code_of([] { basis_weights({3, 1.0}, 1.5); }), Errc::degenerate_input);
    EXPECT_EQ(code_of([] { basis_weights({3, 1.0}, -1e-6); }), Errc::degenerate_input);
    EXPECT_EQ(code_of([] { basis_weights({0, 1.0}, 0.5); }), Errc::invalid_parameter);
    EXPECT_EQ(code_of([] { basis_weights({3, -0.1}, 0.5); }), Errc::invalid_parameter);
    // slightly outside [0,1] is clamped
    EXPECT_EQ(basis_weights({3, 1.0}, 1.0 + 1e-13).w.back(), 1.0);
}

TEST(BasisProperties, PartitionLinearityNonnegativity) {
    for (int m = 1; m <= 20; ++m)
        for (double beta : {0.0, 0.1, 1.0, 2.0})
            for (double t : oracle::linspace(0.0, 1.0, 101)) {
                const auto w = basis_weights({m, beta}, t).w;
                double sum = 0.0, first = 0.0;
                for (int i = 0; i <= m; ++i) {
                    EXPECT_GE(w[i], -1e-15);
                    sum += w[i];
                    first += w[i] * i / m;
                }
                EXPECT_NEAR(sum, 1.0, 1e-10) << m << ' ' << beta << ' ' << t;
                EXPECT_NEAR(first, t, 1e-10) << m << ' ' << beta << ' ' << t;
            }
}

TEST(BasisProperties, BernsteinReduction) {
    for (int m = 1; m <= 20; ++m)
        for (double t : oracle::linspace(0.0, 1.0, 101)) {
            const auto w = basis_weights({m, 0.0}, t).w;
            for (int i = 0; i <= m; ++i) EXPECT_NEAR(w[i], oracle::bernstein(m, t, i), 1e-12);
        }
}

TEST(AbelSum, Examples) {
    EXPECT_NEAR(abel_sum(2, 0, 0.3, 0.9, 1.0), 0.3, 1e-15);
    EXPECT_NEAR(abel_sum(1, 4, 0.2, 0.5, 0.0), 0.2401, 1e-15);
    EXPECT_NEAR(abel_sum(2, 1, 0.3, 0.4, 0.5), 0.91, 1e-15);
}

TEST(AbelSum, NegativeOrderIsZeroAndZeroPowersAreOne) {
    EXPECT_EQ(abel_sum(2, -1, 0.3, 0.4, 0.5), 0.0);
    // k = M term has (y + 0)^0 with y = 0
    EXPECT_NEAR(abel_sum(1, 2, 0.25, 0.0, 0.0), 0.0625, 1e-15);
}

TEST(AbelSum, MatchesDirectSum) {
    for (int j : {0, 1, 2, 3})
        for (int M : {1, 4, 9})
            for (double beta : {0.25, 1.0})
                EXPECT_NEAR(abel_sum(j, M, 0.4, 0.7, beta), oracle::abel_sum(j, M, 0.4, 0.7, beta),
                            1e-12 * oracle::abel_sum(j, M, 0.4, 0.7, beta));
}

TEST(AbelSum, UndefinedZeroToNegativePower) {
    EXPECT_EQ(code_of([] { abel_sum(0, 3, 0.0, 0.5, 0.0); }), Errc::undefined_sum);
}

TEST(SecondMoment, Examples) {
    EXPECT_NEAR(second_moment({5, 0.0}, 0.4), 0.208, 1e-14);
    // 11/24 from the three-term direct sum
    EXPECT_NEAR(second_moment({2, 1.0}, 0.5), 11.0 / 24.0, 1e-15);
    // 50-digit direct summation (tests/oracle/derive_expected.py)
    EXPECT_NEAR(second_moment({10, 0.5}, 0.25), 0.18345638322241512346, 1e-10 * 0.1834563832);
}

TEST(SecondMoment, ClosedFormMatchesDirectSummation) {
    for (int m = 2; m <= 15; ++m)
        for (double beta : {0.1, 1.0})
            for (double t : oracle::linspace(0.0, 1.0, 51)) {
                const double direct = oracle::second_moment_direct(m, beta, t);
                EXPECT_LE(std::abs(second_moment({m, beta}, t) - direct), 1e-10 * std::abs(direct))
                    << m << ' ' << beta << ' ' << t;
                EXPECT_NEAR(second_moment_direct({m, beta}, t), direct, 1e-13);
            }
}

TEST(SecondMoment, RequiresDegreeTwo) {
    EXPECT_EQ(code_of([] { second_moment({1, 1.0}, 0.5); }), Errc::invalid_parameter);
    EXPECT_NEAR(second_moment_direct({1, 1.0}, 0.3), 0.3, 1e-15);
}

TEST(ApplyUnivariate, Examples) {
    const std::vector<double> constant(5, 2.5);
    for (double t : {0.0, 0.21, 0.6, 1.0}) EXPECT_NEAR(apply_univariate({4, 1.0}, constant, t), 2.5, 1e-14);
    const std::vector<double> linear{0.0, 0.25, 0.5, 0.75, 1.0};
    EXPECT_NEAR(apply_univariate({4, 1.0}, linear, 0.37), 0.37, 1e-14);
    const std::vector<double> spike{1.0, 0.0, 0.0, 0.0};
    EXPECT_EQ(apply_univariate({3, 0.5}, spike, 0.0), 1.0);
}

TEST(ApplyUnivariate, EndpointsAreExact) {
    const std::vector<double> values{0.1234567, -3.0, 7.5, 2.0, 9.87654321};
    EXPECT_EQ(apply_univariate({4, 1.3}, values, 0.0), values.front());
    EXPECT_EQ(apply_univariate({4, 1.3}, values, 1.0), values.back());
}

TEST(ApplyUnivariate, LengthMismatch) {
    const std::vector<double> values{1.0, 2.0};
    EXPECT_EQ(code_of([&] { apply_univariate({3, 1.0}, values, 0.5); }), Errc::length_mismatch);
}
