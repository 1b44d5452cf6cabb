#include <gtest/gtest.h>

#include <cmath>
#include <regex>
#include <sstream>

#include "specloss/report.hpp"
#include "support/oracles.hpp"

using namespace specloss;

namespace {

const AnalysisReport& sample_report() {
    static const AnalysisReport rep = [] {
        RunConfig cfg;
        cfg.synth_seed = 42;
        return analyze(cfg);
    }();
    return rep;
}

/// A printed number and half a unit in its last printed digit.
struct Printed {
    double v = 0.0;
    double half_ulp = 0.0;
};

Printed printed(const std::string& tok) {
    const auto e = tok.find('E');
    const auto mantissa = tok.substr(0, e);
    const auto dot = mantissa.find('.');
    const int decimals = dot == std::string::npos ? 0 : static_cast<int>(mantissa.size() - dot - 1);
    const int exponent = e == std::string::npos ? 0 : std::stoi(tok.substr(e + 1));
    return {std::stod(tok), 0.5 * std::pow(10.0, exponent - decimals)};
}

/// Bound on |a/b - exact| given the rounding of a and b.
double ratio_bound(const Printed& a, const Printed& b) {
    return std::fabs(a.v / b.v) * (a.half_ulp / std::fabs(a.v) + b.half_ulp / std::fabs(b.v)) * 1.01;
}

/// Value following `label` in a rendered table.
Printed value_after(const std::string& text, const std::string& label) {
    const auto pos = text.find(label);
    if (pos == std::string::npos) throw std::runtime_error("label not found: " + label);
    std::istringstream in(text.substr(pos + label.size()));
    std::string tok;
    in >> tok;
    return printed(tok);
}

struct ParsedRow {
    std::string name;
    Printed coef, se, t, p;
};

std::vector<ParsedRow> parse_rows(const std::string& text) {
    std::vector<ParsedRow> rows;
    std::istringstream in(text);
    std::string line;
    bool in_rows = false;
    while (std::getline(in, line)) {
        if (line.starts_with("Variable")) {
            in_rows = true;
            std::getline(in, line);  // blank
            continue;
        }
        if (!in_rows) continue;
        if (line.empty()) break;
        std::istringstream ls(line);
        ParsedRow r;
        std::string c, s, t, p;
        ls >> r.name >> c >> s >> t >> p;
        r.coef = printed(c);
        r.se = printed(s);
        r.t = printed(t);
        r.p = printed(p);
        rows.push_back(r);
    }
    return rows;
}

}  // namespace

TEST(FormatStat, PrintedStyles) {
    EXPECT_EQ(format_stat(0.480387), "0.480387");
    EXPECT_EQ(format_stat(-42.31813), "-42.31813");
    EXPECT_EQ(format_stat(1650.314), "1650.314");
    EXPECT_EQ(format_stat(20259.96), "20259.96");
    EXPECT_EQ(format_stat(-13.49351), "-13.49351");
    EXPECT_EQ(format_stat(-1.19e-11), "-1.19E-11");
    EXPECT_EQ(format_stat(3.57e-5), "3.57E-05");
    EXPECT_EQ(format_stat(1.0), "1.000000");
    EXPECT_EQ(format_stat(0.0), "0.000000");
    EXPECT_EQ(format_stat(std::nan("")), "NA");
    EXPECT_EQ(format_fixed(0.012876, 4), "0.0129");
}

TEST(RenderText, PureFunctionOfTheReport) {
    const auto& rep = sample_report();
    EXPECT_EQ(render_text(rep), render_text(rep));
    const auto copy = rep;
    EXPECT_EQ(render_text(copy), render_text(rep));
    EXPECT_EQ(render_csv(copy), render_csv(rep));
}

TEST(RenderText, ContainsThePrintedLayout) {
    const auto text = render_text(sample_report());
    for (const char* needle :
         {"Null Hypothesis: U_SMALL_VOL has a unit root", "Exogenous: Constant",
          "(Automatic - based on SIC, maxlag=5)", "Augmented Dickey-Fuller test statistic", "Test critical values:",
          "Dependent Variable: U_SMALL_VOL", "Method: Least Squares", "R-squared", "Adjusted R-squared",
          "S.E. of regression", "Sum squared resid", "Log likelihood", "F-statistic", "Prob(F-statistic)",
          "Mean dependent var", "S.D. dependent var", "Akaike info criterion", "Schwarz criterion",
          "Hannan-Quinn criter.", "Durbin-Watson stat", "Null Hypothesis: RESID1 has a unit root",
          "Null Hypothesis: RESID2 has a unit root", "-4.64", "-4.10", "-3.81",
          "R: positive coefficient (direct relationship with the dependent variable u expected; matches)",
          "I: positive coefficient (direct relationship with the dependent variable u expected; matches)",
          "U_BIG_VOL: negative coefficient (inverse relationship with the dependent variable u expected; matches)",
          "ADF test results - summary:"})
        EXPECT_NE(text.find(needle), std::string::npos) << needle;
}

TEST(RenderText, DiagnosticRowOrderMatchesPrintedTable) {
    std::ostringstream out;
    render_ols(out, sample_report().regressions[0].coint.stage1);
    const auto text = out.str();
    const char* order[] = {"R-squared", "Adjusted R-squared", "S.E. of regression", "Sum squared resid",
                           "Log likelihood", "F-statistic", "Prob(F-statistic)"};
    std::size_t last = 0;
    for (const char* label : order) {
        const auto pos = text.find(std::string("\n") + label);
        ASSERT_NE(pos, std::string::npos) << label;
        EXPECT_GT(pos, last) << label;
        last = pos;
    }
}

TEST(RenderText, ReparsedTablesAreInternallyConsistent) {
    for (const auto& block : sample_report().regressions) {
        std::ostringstream out;
        render_ols(out, block.coint.stage1);
        const auto text = out.str();
        const auto rows = parse_rows(text);
        ASSERT_EQ(rows.size(), 4u);
        for (const auto& r : rows)
            EXPECT_NEAR(r.t.v, r.coef.v / r.se.v, ratio_bound(r.coef, r.se) + r.t.half_ulp) << r.name;

        const double T = static_cast<double>(block.coint.stage1.n_obs), k = 4.0;
        const auto se = value_after(text, "S.E. of regression");
        const auto ssr = value_after(text, "Sum squared resid");
        const auto ll = value_after(text, "Log likelihood");
        const double se2 = se.v * se.v * (T - k);
        EXPECT_NEAR(se2, ssr.v, 2.0 * se.half_ulp / se.v * se2 * 1.01 + ssr.half_ulp);
        const double ic_slack = 2.0 * ll.half_ulp / T + value_after(text, "Akaike info criterion").half_ulp;
        EXPECT_NEAR(value_after(text, "Akaike info criterion").v, (-2.0 * ll.v + 2.0 * k) / T, ic_slack);
        EXPECT_NEAR(value_after(text, "Schwarz criterion").v, (-2.0 * ll.v + k * std::log(T)) / T, ic_slack);
        EXPECT_NEAR(value_after(text, "Hannan-Quinn criter.").v,
                    (-2.0 * ll.v + 2.0 * k * std::log(std::log(T))) / T, ic_slack);
    }
}

TEST(RenderCsv, TriplesAreWellFormed) {
    const auto csv = render_csv(sample_report());
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "table,field,value");
    const std::regex row(R"(^[^,]+,[^,]+,("([^"]|"")*"|[^,"]*)$)");
    int n = 0;
    while (std::getline(in, line)) {
        EXPECT_TRUE(std::regex_match(line, row)) << line;
        ++n;
    }
    EXPECT_GT(n, 100);
    EXPECT_NE(csv.find("coint:regression1,verdict,cointegrated_at_1"), std::string::npos);
    EXPECT_NE(csv.find("signs:regression2,U_BIG_DEP,matches"), std::string::npos);
}

TEST(RenderCsv, NumbersRoundTripExactly) {
    const auto& rep = sample_report();
    const auto csv = render_csv(rep);
    const auto key = std::string("adf:I,t_statistic,");
    const auto pos = csv.find(key);
    ASSERT_NE(pos, std::string::npos);
    const double t = std::stod(csv.substr(pos + key.size()));
    EXPECT_EQ(t, rep.ladders[2].level.t_statistic);
}

TEST(TripleWriterTest, QuotesTextWithSeparators) {
    std::ostringstream out;
    TripleWriter w(out);
    w.text("data", "source", "file a,b.csv");
    w.text("data", "note", "say \"hi\"");
    EXPECT_EQ(out.str(), "table,field,value\ndata,source,\"file a,b.csv\"\ndata,note,\"say \"\"hi\"\"\"\n");
}

TEST(RenderCoint, UsesResidualConstants) {
    std::ostringstream out;
    render_coint(out, sample_report().regressions[1].coint);
    const auto text = out.str();
    EXPECT_NE(text.find("Davidson-MacKinnon"), std::string::npos);
    EXPECT_NE(text.find("Verdict: cointegrated at the 1% level"), std::string::npos);
}
