#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcheb/verify.hpp"
#include "qcheb/serialize.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

using namespace qcheb;

TEST_CASE("identity names are stable and unique") {
    const IdentityId ids[] = {
        IdentityId::QbinomPascalQk, IdentityId::UDualRoute, IdentityId::TNonhomogPrinted,
        IdentityId::MixedDilated,   IdentityId::SchurResidualAltSign,
    };
    CHECK(std::string(identityName(IdentityId::UStep)) == "u-step");
    CHECK(std::string(identityName(IdentityId::TNonhomogPrinted)) == "t-nonhomog-plain");
    std::set<std::string> seen;
    for (IdentityId id : ids) seen.insert(identityName(id));
    CHECK(seen.size() == std::size(ids));
    CHECK(isInformational(IdentityId::TNonhomogPrinted));
    CHECK(isInformational(IdentityId::SeriesTAltSign));
    CHECK(isInformational(IdentityId::SchurResidualAltSign));
    CHECK_FALSE(isInformational(IdentityId::TNonhomogX));
    CHECK_FALSE(isInformational(IdentityId::UStep));
}

TEST_CASE("report order sorts by id then n then k") {
    std::vector<IdentityReport> reports;
    for (int n : {3, 1, 2}) {
        for (int k : {1, 0}) {
            reports.push_back(makeReport(IdentityId::UStep, n, k, MultiPoly()));
            reports.push_back(makeReport(IdentityId::TStep, n, k, MultiPoly()));
        }
    }
    std::shuffle(reports.begin(), reports.end(), std::mt19937(7));
    std::sort(reports.begin(), reports.end(), reportOrder);
    for (std::size_t i = 1; i < reports.size(); ++i) {
        CHECK_FALSE(reportOrder(reports[i], reports[i - 1]));
    }
    CHECK(reports.front().id == IdentityId::UStep);
    CHECK(reports.front().n == 1);
    CHECK(reports.front().k == 0);
    CHECK(reports.back().id == IdentityId::TStep);
    CHECK(reports.back().n == 3);
}

TEST_CASE("parallel sweeps equal the serial reference") {
    CHECK(runQbinomSuite(10, true) == runQbinomSuite(10, false));
    CHECK(runChebSuite(12, true) == runChebSuite(12, false));
    CHECK(runIncompleteSuite(10, true) == runIncompleteSuite(10, false));
}

TEST_CASE("suite composition") {
    const auto all = runSuites("all", 8);
    REQUIRE(all.size() == 4);
    CHECK(all[0].name == "qbinom");
    CHECK(all[1].name == "cheb");
    CHECK(all[2].name == "incomplete");
    CHECK(all[3].name == "genfun");
    CHECK(allPass(all));
    const auto single = runSuites("incomplete", 8);
    REQUIRE(single.size() == 1);
    CHECK(single[0].reports == all[2].reports);
    CHECK_THROWS_AS(runSuites("everything", 8), std::invalid_argument);
}

TEST_CASE("two runs render byte-identical summaries") {
    const auto a = renderSummary(runSuites("all", 10, true));
    const auto b = renderSummary(runSuites("all", 10, true));
    CHECK(a == b);
    CHECK(a.find("overall: PASS") != std::string::npos);
    CHECK(a.find("u-dual-route") != std::string::npos);
    CHECK(a.find("(adjudication)") != std::string::npos);
    CHECK(a.find("note: fixed-k first-kind step") != std::string::npos);
    CHECK(a.find("note: schur operator sign") != std::string::npos);
    CHECK(a.find("FAIL") == std::string::npos);  // adjudication misses are not failures
}

TEST_CASE("informational misses never fail a run, real misses do") {
    SuiteRun run;
    run.name = "synthetic";
    run.reports.push_back(
        makeReport(IdentityId::TNonhomogPrinted, 2, 0, MultiPoly(Rational(1))));
    CHECK(allPass({run}));
    run.reports.push_back(makeReport(IdentityId::UStep, 2, 0, MultiPoly(Rational(1))));
    CHECK_FALSE(allPass({run}));
    const std::string summary = renderSummary({run});
    CHECK(summary.find("FAIL u-step n=2 k=0") != std::string::npos);
    CHECK(summary.find("overall: FAIL") != std::string::npos);
    CHECK(summary.find("FAIL t-nonhomog-plain") == std::string::npos);
}

TEST_CASE("report counts at a small sweep") {
    const auto runs = runSuites("qbinom", 5);
    int pascalQk = 0;
    for (const auto& r : runs[0].reports) {
        if (r.id == IdentityId::QbinomPascalQk) ++pascalQk;
    }
    CHECK(pascalQk == 15);  // one per 1 <= k <= n <= 5
}
