#include <gtest/gtest.h>

#include <json.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
    int rc = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + "\"" ALGENT_CLI "\" " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int status = pclose(p);
    r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);)
        if (!l.empty()) v.push_back(l);
    return v;
}

std::string sample(const std::string& f) { return std::string("\"") + ALGENT_SAMPLES "/" + f + "\""; }

std::vector<std::pair<int, double>> plot_rows(const std::string& out) {
    std::vector<std::pair<int, double>> rows;
    for (const auto& l : lines(out)) {
        std::istringstream in(l);
        int n;
        double v;
        in >> n >> v;
        rows.emplace_back(n, v);
    }
    return rows;
}

}  // namespace

TEST(Cli, CatalogListsEveryEntryWithKind) {
    auto r = run("catalog");
    ASSERT_EQ(r.rc, 0);
    auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 14u);
    EXPECT_EQ(ls[0], "name,kind,anchor");
    for (const char* name : {"henon,rational", "musiker,rational", "gauss5,rational", "somos4,rational",
                             "scott,rational", "hone,rational", "fibmono,monomial", "squaremono,monomial",
                             "counterexample,monomial", "inv-gap,monomial", "scott-trop,tropical",
                             "musiker-trop,tropical", "pl-max2,pl-recurrence"})
        EXPECT_NE(r.out.find(name), std::string::npos) << name;
}

TEST(Cli, DegseqCounterexampleWithZero) {
    auto r = run("degseq counterexample --nmax 20 --include-zero");
    ASSERT_EQ(r.rc, 0);
    auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 22u);
    EXPECT_EQ(ls[1], "0,1");
    EXPECT_EQ(ls[2], "1,2");
    EXPECT_EQ(ls[21], "20,833");
}

TEST(Cli, DegseqRationalCarriesExactness) {
    auto r = run("degseq musiker --nmax 4");
    ASSERT_EQ(r.rc, 0);
    auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 5u);
    EXPECT_EQ(ls[0], "N,degree,exact");
    EXPECT_EQ(ls[4], "4,8,true");
}

TEST(Cli, EntropySquaremonoJson) {
    auto r = run("entropy squaremono --format json");
    ASSERT_EQ(r.rc, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["algebraic_entropy"].get<double>(), std::log(3.0), 1e-12);
    EXPECT_NEAR(j["toral_entropy"].get<double>(), std::log(6.0), 1e-12);
    EXPECT_FALSE(j["toral_ambiguous"].get<bool>());
    EXPECT_EQ(j["dynamical_degrees"].size(), 2u);
}

TEST(Cli, IterateGauss5FifthPowerIsIdentity) {
    auto r = run("iterate gauss5 --n 5");
    ASSERT_EQ(r.rc, 0);
    EXPECT_NE(r.out.find("identity,true"), std::string::npos);
    auto r4 = run("iterate gauss5 --n 4");
    ASSERT_EQ(r4.rc, 0);
    EXPECT_NE(r4.out.find("identity,false"), std::string::npos);
}

TEST(Cli, PlotdataRowCounts) {
    auto deg = plot_rows(run("plotdata squaremono degree --nmax 7").out);
    ASSERT_EQ(deg.size(), 8u);
    EXPECT_EQ(deg.front().first, 0);
    EXPECT_EQ(deg.back().second, 2187.0);
    auto cn = plot_rows(run("plotdata counterexample cn --nmax 20").out);
    EXPECT_EQ(cn.size(), 21u);
}

TEST(Cli, PlotdataLogDegreeConstantForSquaremono) {
    auto rows = plot_rows(run("plotdata squaremono logdegree-over-N --nmax 10").out);
    ASSERT_EQ(rows.size(), 10u);
    for (const auto& [n, v] : rows) EXPECT_NEAR(v, std::log(3.0), 1e-9) << n;
}

TEST(Cli, PlotdataLipschitzIncreases) {
    auto rows = plot_rows(run("plotdata scott-trop lipschitz --nmax 12").out);
    ASSERT_EQ(rows.size(), 12u);
    for (size_t i = 1; i < rows.size(); ++i) EXPECT_GT(rows[i].second, rows[i - 1].second);
    EXPECT_EQ(rows.back().second, 1217.0);
}

TEST(Cli, TropScottSixthIterate) {
    auto r = run("trop scott-trop --n 6");
    ASSERT_EQ(r.rc, 0);
    EXPECT_NE(r.out.find("lipschitz_bound,65"), std::string::npos);
    EXPECT_NE(r.out.find("homogeneity,1"), std::string::npos);
}

TEST(Cli, RecurLiteralAndFile) {
    auto r = run("recur 1,1,2,3,5,8,13,21");
    ASSERT_EQ(r.rc, 0);
    auto ls = lines(r.out);
    EXPECT_EQ(ls[0], "order,2");
    EXPECT_EQ(ls[1], "coeffs,1,1");
    auto f = run("recur " + sample("fibonacci.json"));
    ASSERT_EQ(f.rc, 0);
    EXPECT_EQ(lines(f.out)[0], "order,2");
}

TEST(Cli, LaurentMusiker) {
    auto r = run("laurent musiker --nmax 3");
    ASSERT_EQ(r.rc, 0);
    auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 4u);
    EXPECT_EQ(ls[0], "N,laurent,monomial_denominators");
    EXPECT_EQ(ls[2], "2,true,x;x^2*y");
}

TEST(Cli, SignaturesJsonShape) {
    auto r = run("signatures fibmono --format json");
    ASSERT_EQ(r.rc, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j.contains("bound"));
    EXPECT_TRUE(j.contains("survivors"));
    EXPECT_TRUE(j["orbits"].is_array());
    EXPECT_FALSE(j["orbits"].empty());
}

TEST(Cli, SampleFilesLoad) {
    for (const char* f : {"counterexample.json", "musiker.json", "conjugated-swap.json"})
        EXPECT_EQ(run(std::string("degseq ") + sample(f) + " --nmax 4").rc, 0) << f;
    for (const char* f : {"scott-trop.json", "order5-trop.json"})
        EXPECT_EQ(run(std::string("trop ") + sample(f) + " --n 2").rc, 0) << f;
    EXPECT_EQ(run("iterate " + sample("pl-max2.json") + " --n 6").rc, 0);
}

TEST(Cli, SampleFileMatchesCatalogEntry) {
    EXPECT_EQ(run("degseq " + sample("counterexample.json") + " --nmax 12").out,
              run("degseq counterexample --nmax 12").out);
}

TEST(Cli, OutputIsDeterministic) {
    for (const char* args : {"degseq hone --nmax 6", "entropy inv-gap --format json", "trop musiker-trop --n 3",
                             "signatures counterexample", "recur counterexample --nmax 20"}) {
        auto a = run(args), b = run(args);
        EXPECT_EQ(a.rc, 0) << args;
        EXPECT_EQ(a.out, b.out) << args;
    }
}

TEST(Cli, ExitCodeUsage) {
    EXPECT_EQ(run("").rc, 1);
    EXPECT_EQ(run("degseq no-such-map").rc, 1);
    EXPECT_EQ(run("degseq fibmono --bogus").rc, 1);
    EXPECT_EQ(run("degseq fibmono --nmax 0").rc, 1);
    EXPECT_EQ(run("degseq fibmono --format xml").rc, 1);
    EXPECT_EQ(run("plotdata fibmono no-such-quantity").rc, 1);
    EXPECT_EQ(run("degseq " + sample("fibonacci.json")).rc, 1);
    EXPECT_EQ(run("degseq fibmono", "ALGENT_TERM_BUDGET=abc").rc, 1);
}

TEST(Cli, ExitCodeMalformedJson) {
    std::string path = testing::TempDir() + "algent_truncated.json";
    std::ofstream(path) << "{\"type\":\"monomial\",\"matrix\":[[1,1],";
    EXPECT_EQ(run("degseq \"" + path + "\"").rc, 1);
    std::string ragged = testing::TempDir() + "algent_ragged.json";
    std::ofstream(ragged) << R"({"type":"monomial","matrix":[[1,1],[1]]})";
    EXPECT_EQ(run("degseq \"" + ragged + "\"").rc, 1);
}

TEST(Cli, ExitCodeDomain) {
    EXPECT_EQ(run("degseq " + sample("singular.json")).rc, 2);
    EXPECT_EQ(run("degseq scott-trop").rc, 2);
    EXPECT_EQ(run("signatures musiker").rc, 2);
    EXPECT_EQ(run("degseq scott --nmax 12", "ALGENT_TERM_BUDGET=10").rc, 2);
}
