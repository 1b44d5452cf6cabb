#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "specloss/critical_values.hpp"
#include "specloss/table_data.hpp"

using namespace specloss;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct PrintedBlock {
    const char* variable;
    int lag;
    double one, five, ten;
};

// Level-test blocks: series of 255 observations, lag chosen by SIC.
constexpr PrintedBlock kPrinted[] = {
    {"U_SMALL_VOL", 3, -3.456302, -2.872857, -2.572875},
    {"U_SMALL_DEP", 4, -3.456408, -2.872904, -2.572900},
    {"I", 4, -3.456408, -2.872904, -2.572900},
    {"R", 2, -3.456197, -2.872811, -2.572851},
    {"U_BIG_VOL", 4, -3.456408, -2.872904, -2.572900},
    {"U_BIG_DEP", 3, -3.456302, -2.872857, -2.572875},
};

}  // namespace

TEST(EmbeddedTables, MatchShippedDataFilesByteForByte) {
    const std::string dir = SPECLOSS_DATA_DIR;
    EXPECT_EQ(slurp(dir + "/mackinnon_tau_critical.txt"), tables::kTauCriticalTable);
    EXPECT_EQ(slurp(dir + "/mackinnon_tau_pvalue.txt"), tables::kTauPvalueTable);
    EXPECT_EQ(slurp(dir + "/davidson_mackinnon_coint.txt"), tables::kCointCriticalTable);
}

TEST(EmbeddedTables, ParseCompletely) {
    EXPECT_EQ(tables::tau_critical_surfaces().size(), 18u);
    EXPECT_EQ(tables::tau_pvalue_surfaces().size(), 6u);
    EXPECT_EQ(tables::coint_critical_rows().size(), 5u);
}

TEST(EmbeddedTables, ParserRejectsMissingFormatLine) {
    EXPECT_THROW(tables::parse_table("c 1 2 3\n"), ParseError);
}

TEST(MacKinnonCritical, ReproducesEveryPrintedLevelBlock) {
    for (const auto& b : kPrinted) {
        const double t_eff = 255.0 - 1.0 - b.lag;
        const auto cv = mackinnon_critical_values(1, Deterministics::constant, t_eff);
        EXPECT_NEAR(cv.one, b.one, 1e-3) << b.variable;
        EXPECT_NEAR(cv.five, b.five, 1e-3) << b.variable;
        EXPECT_NEAR(cv.ten, b.ten, 1e-3) << b.variable;
    }
}

TEST(MacKinnonCritical, AsymptoticInterceptAtHugeSample) {
    for (const auto& s : tables::tau_critical_surfaces()) {
        const SignificanceLevel level = s.level < 0.02   ? SignificanceLevel::one
                                        : s.level < 0.07 ? SignificanceLevel::five
                                                         : SignificanceLevel::ten;
        EXPECT_NEAR(mackinnon_critical_value(level, s.n_variables, Deterministics::constant, 1e9), s.beta[0],
                    1e-6);
    }
    EXPECT_NEAR(mackinnon_critical_value(SignificanceLevel::one, 1, Deterministics::constant, 1e9), -3.43035, 1e-6);
}

TEST(MacKinnonCritical, OrderedAcrossLevelsAndShrinkingWithSampleSize) {
    for (int n = 1; n <= 6; ++n) {
        double prev_one = -1e9;
        for (double t : {30.0, 50.0, 100.0, 255.0, 500.0, 1000.0, 1e5}) {
            const auto cv = mackinnon_critical_values(n, Deterministics::constant, t);
            EXPECT_LT(cv.one, cv.five);
            EXPECT_LT(cv.five, cv.ten);
            EXPECT_LT(cv.ten, 0.0);
            // Magnitude decreases toward the asymptotic value as T grows.
            EXPECT_GT(cv.one, prev_one) << "n=" << n << " t=" << t;
            prev_one = cv.one;
        }
    }
}

TEST(MacKinnonCritical, UnsupportedConfigurations) {
    EXPECT_THROW(mackinnon_critical_values(1, Deterministics::none, 100), UnsupportedConfiguration);
    EXPECT_THROW(mackinnon_critical_values(1, Deterministics::constant_trend, 100), UnsupportedConfiguration);
    EXPECT_THROW(mackinnon_critical_values(7, Deterministics::constant, 100), UnsupportedConfiguration);
    EXPECT_THROW(mackinnon_critical_values(1, Deterministics::constant, 0), InvalidArgument);
}

TEST(MacKinnonPvalue, PrintedAnchors) {
    EXPECT_NEAR(mackinnon_pvalue(-3.3496, 1, Deterministics::constant), 0.013, 0.003);
    EXPECT_NEAR(mackinnon_pvalue(-2.1528, 1, Deterministics::constant), 0.224, 0.02);
    EXPECT_NEAR(mackinnon_pvalue(-3.370369, 1, Deterministics::constant), 0.0129, 0.003);
    EXPECT_NEAR(mackinnon_pvalue(-1.801486, 1, Deterministics::constant), 0.3793, 0.02);
    EXPECT_NEAR(mackinnon_pvalue(-0.331998, 1, Deterministics::constant), 0.9168, 0.02);
    EXPECT_NEAR(mackinnon_pvalue(-3.681785, 1, Deterministics::constant), 0.0049, 0.003);
}

TEST(MacKinnonPvalue, AsymptoticCriticalValuesMapToTheirLevels) {
    EXPECT_NEAR(mackinnon_pvalue(-3.43035, 1, Deterministics::constant), 0.01, 2e-3);
    EXPECT_NEAR(mackinnon_pvalue(-2.86154, 1, Deterministics::constant), 0.05, 5e-3);
    EXPECT_NEAR(mackinnon_pvalue(-2.56677, 1, Deterministics::constant), 0.10, 5e-3);
}

TEST(MacKinnonPvalue, MonotoneAndClamped) {
    double prev = 0.0;
    for (double t = -25.0; t <= 5.0; t += 0.01) {
        const double p = mackinnon_pvalue(t, 1, Deterministics::constant);
        EXPECT_GE(p, prev) << "t=" << t;
        EXPECT_GE(p, kMinPvalue);
        EXPECT_LE(p, kMaxPvalue);
        prev = p;
    }
    EXPECT_EQ(mackinnon_pvalue(-40.0, 1, Deterministics::constant), kMinPvalue);
    EXPECT_EQ(mackinnon_pvalue(10.0, 1, Deterministics::constant), kMaxPvalue);
}

TEST(MacKinnonPvalue, UnsupportedConfigurations) {
    EXPECT_THROW(mackinnon_pvalue(-2.0, 1, Deterministics::constant_trend), UnsupportedConfiguration);
    EXPECT_THROW(mackinnon_pvalue(-2.0, 9, Deterministics::constant), UnsupportedConfiguration);
}

TEST(DavidsonMacKinnon, FourVariableConstantsExact) {
    const auto cv = dm_critical_values(4);
    EXPECT_EQ(cv.one, -4.64);
    EXPECT_EQ(cv.five, -4.10);
    EXPECT_EQ(cv.ten, -3.81);
    EXPECT_EQ(dm_critical_value(4, SignificanceLevel::one), -4.64);
    EXPECT_EQ(dm_critical_value(4, SignificanceLevel::ten), -3.81);
}

TEST(DavidsonMacKinnon, OrderedForEverySupportedCount) {
    for (int n = 2; n <= 6; ++n) {
        const auto cv = dm_critical_values(n);
        EXPECT_LT(cv.one, cv.five);
        EXPECT_LT(cv.five, cv.ten);
    }
    EXPECT_LT(dm_critical_values(6).one, dm_critical_values(2).one);
}

TEST(DavidsonMacKinnon, OutOfRangeCounts) {
    EXPECT_THROW(dm_critical_values(1), UnsupportedConfiguration);
    EXPECT_THROW(dm_critical_values(7), UnsupportedConfiguration);
}

TEST(SignificanceLevels, Labels) {
    EXPECT_EQ(label(SignificanceLevel::one), "1%");
    EXPECT_EQ(label(SignificanceLevel::five), "5%");
    EXPECT_EQ(label(SignificanceLevel::ten), "10%");
    EXPECT_DOUBLE_EQ(fraction(SignificanceLevel::five), 0.05);
}
