#include <catch2/catch_amalgamated.hpp>

#include <mononorm/spread.hpp>

#include "box_oracle.hpp"

#include <random>

using namespace mononorm;
using testsupport::randomIdeal;

namespace {
struct CatalogEntry {
    const char* label;
    MonomialIdeal ideal;
    long long lambda;
    long long growthWindow;
};

std::vector<CatalogEntry> catalog() {
    return {
        {"(x) in k[x,y]", minimalize({{1, 0}}, 2), 1, 4},
        {"(x,y)", minimalize({{1, 0}, {0, 1}}, 2), 2, 8},
        {"(x2,xy,y2)", minimalize({{2, 0}, {1, 1}, {0, 2}}, 2), 2, 8},
        {"(x3,y3)", minimalize({{3, 0}, {0, 3}}, 2), 2, 8},
        {"(xy,yz,zx)", minimalize({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}, 3), 3, 6},
        {"(x4,x3y,xy3,y4)", minimalize({{4, 0}, {3, 1}, {1, 3}, {0, 4}}, 2), 2, 8},
        {"(x3,xy,y2)", minimalize({{3, 0}, {1, 1}, {0, 2}}, 2), 2, 8},
        {"(xyz)", minimalize({{1, 1, 1}}, 3), 1, 4},
        {"(x,y,z)", minimalize({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3), 3, 6},
        {"(xy,z2)", minimalize({{1, 1, 0}, {0, 0, 2}}, 3), 2, 6},
        {"(x2y,xy3)", minimalize({{2, 1}, {1, 3}}, 2), 2, 8},
        {"(x,y2)", minimalize({{1, 0}, {0, 2}}, 2), 2, 8},
    };
}
} // namespace

TEST_CASE("analytic spread of the spec examples") {
    CHECK(analyticSpread(minimalize({{1, 0}}, 2)) == 1);
    CHECK(analyticSpread(minimalize({{1, 0}, {0, 1}}, 2)) == 2);
    CHECK(analyticSpread(minimalize({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}, 3)) == 3);
    CHECK_THROWS_AS(analyticSpread(unitIdeal(2)), UnitIdealInputError);
}

TEST_CASE("spread of a product family") {
    auto X = minimalize({{1, 0}}, 2);
    auto Y = minimalize({{0, 1}}, 2);
    CHECK(spreadOfProduct({X, Y}).lambda == 1);

    auto m = minimalize({{1, 0}, {0, 1}}, 2);
    auto mm = spreadOfProduct({m, m});
    CHECK(mm.lambda == 2);
    CHECK(mm.method == "compactFace");
    CHECK(mm.productGenerators == 3);

    CHECK(spreadOfProduct({minimalize({{3, 0}, {0, 3}}, 2)}).lambda == 2);
}

TEST_CASE("growth oracle on the spec examples") {
    CHECK(growthExponent(minimalize({{1, 0}, {0, 1}}, 2), 8) == 2);
    CHECK(growthExponent(minimalize({{1, 0}}, 2), 4) == 1);
    CHECK(growthExponent(minimalize({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}, 3), 6) == 3);
    CHECK_THROWS_AS(growthExponent(minimalize({{1, 0}}, 2), 3), WindowTooSmallError);
}

TEST_CASE("compact-face route and growth oracle agree on the catalog") {
    for (const auto& entry : catalog()) {
        INFO(entry.label);
        CHECK(analyticSpread(entry.ideal) == entry.lambda);
        CHECK(growthExponent(entry.ideal, entry.growthWindow) == entry.lambda);
    }
}

TEST_CASE("spread sits between 1 and the ambient dimension") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        int d = 1 + static_cast<int>(rng() % 3);
        auto I = randomIdeal(rng, d, 4, 5);
        long long lambda = analyticSpread(I);
        CHECK(lambda >= 1);
        CHECK(lambda <= d);
    }
}

TEST_CASE("in two variables the spread is 1 exactly for principal ideals") {
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 200; ++trial) {
        auto I = randomIdeal(rng, 2, 5, 9);
        long long expected = I.gens().size() == 1 ? 1 : 2;
        CHECK(analyticSpread(I) == expected);
    }
}

TEST_CASE("spread is invariant under integral closure") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 12; ++trial) {
        int d = 1 + static_cast<int>(rng() % 3);
        auto I = randomIdeal(rng, d, 4, 5);
        auto barI = closureGenerators({I}, {1});
        CHECK(analyticSpread(I) == analyticSpread(barI));
    }
}

TEST_CASE("spread of a product does not depend on factor order") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 10; ++trial) {
        int d = 1 + static_cast<int>(rng() % 3);
        auto I = randomIdeal(rng, d, 3, 4);
        auto J = randomIdeal(rng, d, 3, 4);
        CHECK(spreadOfProduct({I, J}).lambda == spreadOfProduct({J, I}).lambda);
    }
}
