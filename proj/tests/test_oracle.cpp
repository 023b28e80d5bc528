#include <catch2/catch_amalgamated.hpp>

#include <mononorm/oracle.hpp>

#include "box_oracle.hpp"

#include <random>

using namespace mononorm;
using testsupport::randomIdeal;

TEST_CASE("oracle finds no violations for powers of the maximal ideal") {
    auto report = bruteForceCheck({minimalize({{1, 0}, {0, 1}}, 2)}, 4);
    CHECK(report.violations.empty());
    CHECK(report.scannedCount == 5);
}

TEST_CASE("oracle pins every failing power of the cusp") {
    auto report = bruteForceCheck({minimalize({{3, 0}, {0, 3}}, 2)}, 3);
    REQUIRE(report.violations.size() == 3);
    CHECK(report.violations[0].first == MultiIndex{1});
    CHECK(report.violations[0].second == ExponentVector{2, 1});
    CHECK(report.violations[1].first == MultiIndex{2});
    CHECK(report.violations[1].second == ExponentVector{5, 1});
    CHECK(report.violations[2].first == MultiIndex{3});
    CHECK(report.violations[2].second == ExponentVector{8, 1});
}

TEST_CASE("budget zero scans only the unit power") {
    auto report = bruteForceCheck({minimalize({{3, 0}, {0, 3}}, 2)}, 0);
    CHECK(report.violations.empty());
    CHECK(report.scannedCount == 1);
}

TEST_CASE("violations are sorted by total degree then lexicographically") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<MonomialIdeal> ideals{randomIdeal(rng, 2, 4, 6), randomIdeal(rng, 2, 4, 6)};
        auto report = bruteForceCheck(ideals, 3);
        for (std::size_t i = 1; i < report.violations.size(); ++i) {
            const auto& a = report.violations[i - 1].first;
            const auto& b = report.violations[i].first;
            bool ordered = totalDegree(a) < totalDegree(b) ||
                           (totalDegree(a) == totalDegree(b) && a < b);
            CHECK(ordered);
        }
    }
}

TEST_CASE("crossValidate on the spec instances") {
    CHECK(crossValidate({minimalize({{2, 0}, {1, 1}, {0, 2}}, 2)}, 5));
    CHECK(crossValidate({minimalize({{3, 0}, {0, 3}}, 2)}, 5));
    CHECK(crossValidate({minimalize({{1, 0}}, 2)}, 4));
    CHECK_THROWS_AS(crossValidate({minimalize({{3, 0}, {0, 3}}, 2)}, 2),
                    DimensionMismatchError); // budget below lambda + 2
}

TEST_CASE("oracle report is deterministic") {
    std::vector<MonomialIdeal> ideals{minimalize({{3, 0}, {1, 1}}, 2),
                                      minimalize({{0, 2}, {4, 0}}, 2)};
    auto a = bruteForceCheck(ideals, 4);
    auto b = bruteForceCheck(ideals, 4);
    CHECK(a.violations == b.violations);
    CHECK(a.scannedCount == b.scannedCount);
}
