#include <gtest/gtest.h>

#include "specloss/distributions.hpp"
#include "specloss/error.hpp"
#include "support/oracles.hpp"

using namespace specloss;

TEST(StudentT, SymmetryAtZero) {
    for (int df : {1, 2, 5, 30, 251}) EXPECT_NEAR(student_t_sf(0.0, df), 0.5, 1e-15);
}

TEST(StudentT, PrintedProbabilities) {
    EXPECT_NEAR(student_t_two_sided(0.438757, 251), 0.6612, 5e-4);
    EXPECT_NEAR(student_t_two_sided(2.166459, 251), 0.0312, 5e-4);
    EXPECT_NEAR(student_t_two_sided(3.558902, 251), 0.0004, 5e-4);
}

TEST(StudentT, ClosedFormForOneAndTwoDegreesOfFreedom) {
    for (double t : {-3.0, -0.5, 0.25, 1.0, 7.5}) {
        EXPECT_NEAR(student_t_sf(t, 1), 0.5 - std::atan(t) / std::numbers::pi, 1e-13);
        EXPECT_NEAR(student_t_sf(t, 2), 0.5 - t / (2.0 * std::sqrt(2.0 + t * t)), 1e-13);
    }
}

TEST(StudentT, MatchesQuadratureOracle) {
    for (int df : {1, 3, 10, 47, 251, 1000})
        for (double t : {0.1, 0.7, 1.96, 3.2, 6.0, 12.0}) {
            const double lib = student_t_two_sided(t, df);
            const double ref = oracle::t_two_sided(t, df);
            EXPECT_TRUE(testutil::rel_close(lib, ref, 1e-9)) << "df=" << df << " t=" << t << " lib=" << lib
                                                             << " ref=" << ref;
        }
}

TEST(StudentT, MonotoneDecreasingInAbsT) {
    double prev = 1.0;
    for (double t = 0.0; t < 20.0; t += 0.05) {
        const double p = student_t_two_sided(t, 17);
        EXPECT_LE(p, prev);
        prev = p;
    }
}

TEST(StudentT, RejectsNonPositiveDf) {
    EXPECT_THROW(student_t_sf(1.0, 0), InvalidArgument);
    EXPECT_THROW(student_t_sf(1.0, -3), InvalidArgument);
}

TEST(FDistribution, BoundaryAndSymmetry) {
    EXPECT_EQ(f_sf(0.0, 3, 251), 1.0);
    EXPECT_NEAR(f_sf(1.0, 10, 10), 0.5, 1e-14);
    EXPECT_LT(f_sf(77.35073, 3, 251), 5e-7);
    EXPECT_LT(f_sf(20259.96, 3, 251), 5e-7);
}

TEST(FDistribution, MatchesQuadratureOracle) {
    for (auto [d1, d2] : {std::pair{1, 5}, {3, 251}, {2, 17}, {5, 40}, {10, 10}})
        for (double f : {0.2, 1.0, 2.5, 7.0, 30.0}) {
            const double lib = f_sf(f, d1, d2);
            const double ref = oracle::f_upper(f, d1, d2);
            EXPECT_TRUE(testutil::rel_close(lib, ref, 1e-9)) << d1 << "," << d2 << " f=" << f;
        }
}

TEST(FDistribution, MonotoneDecreasing) {
    double prev = 1.0;
    for (double f = 0.0; f < 50.0; f += 0.25) {
        const double p = f_sf(f, 3, 251);
        EXPECT_LE(p, prev);
        prev = p;
    }
}

TEST(FDistribution, RejectsNegativeStatistic) { EXPECT_THROW(f_sf(-0.1, 3, 10), InvalidArgument); }

TEST(IncompleteBeta, KnownValues) {
    EXPECT_EQ(incomplete_beta(2.0, 3.0, 0.0), 0.0);
    EXPECT_EQ(incomplete_beta(2.0, 3.0, 1.0), 1.0);
    // I_x(1, b) = 1 - (1 - x)^b
    EXPECT_NEAR(incomplete_beta(1.0, 4.0, 0.3), 1.0 - std::pow(0.7, 4.0), 1e-14);
    EXPECT_NEAR(incomplete_beta(2.5, 2.5, 0.5), 0.5, 1e-14);
}
