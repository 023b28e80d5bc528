#include <catch2/catch_amalgamated.hpp>

#include <mononorm/monomial_ideal.hpp>

#include <random>

using namespace mononorm;

TEST_CASE("minimalize drops dominated generators") {
    auto I = minimalize({{2, 0}, {2, 1}, {0, 1}}, 2);
    CHECK(I.gens() == std::vector<ExponentVector>{{2, 0}, {0, 1}});

    auto single = minimalize({{1, 1}}, 2);
    CHECK(single.gens() == std::vector<ExponentVector>{{1, 1}});

    auto staircase = minimalize({{3, 0}, {2, 1}, {1, 2}, {0, 3}, {2, 2}}, 2);
    CHECK(staircase.gens() == std::vector<ExponentVector>{{3, 0}, {2, 1}, {1, 2}, {0, 3}});
}

TEST_CASE("minimalize rejects bad input") {
    CHECK_THROWS_AS(minimalize({}, 2), ZeroIdealError);
    CHECK_THROWS_AS(minimalize({{1, 2, 3}}, 2), DimensionMismatchError);
}

TEST_CASE("minimalize is idempotent and yields an antichain") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int d = 1 + static_cast<int>(rng() % 3);
        std::vector<ExponentVector> raw;
        int count = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i < count; ++i) {
            ExponentVector v(static_cast<std::size_t>(d));
            for (auto& e : v) e = static_cast<long long>(rng() % 5);
            raw.push_back(v);
        }
        auto I = minimalize(raw, d);
        auto again = minimalize(I.gens(), d);
        CHECK(I == again);
        for (std::size_t a = 0; a < I.gens().size(); ++a)
            for (std::size_t b = 0; b < I.gens().size(); ++b)
                if (a != b) CHECK_FALSE(divides(I.gens()[a], I.gens()[b]));
    }
}

TEST_CASE("containsMonomial is divisibility by some generator") {
    auto I = minimalize({{2, 0}, {0, 2}}, 2);
    CHECK(containsMonomial(I, {3, 1}));
    CHECK_FALSE(containsMonomial(I, {1, 1}));
    CHECK(containsMonomial(unitIdeal(2), {0, 0}));
    CHECK(containsMonomial(unitIdeal(2), {4, 9}));
    CHECK_THROWS_AS(containsMonomial(I, {1, 1, 1}), DimensionMismatchError);
}

TEST_CASE("containsMonomial agrees with a direct divisibility scan on a box") {
    auto I = minimalize({{3, 0}, {1, 1}, {0, 2}}, 2);
    for (long long a = 0; a <= 5; ++a)
        for (long long b = 0; b <= 5; ++b) {
            bool direct = false;
            for (const auto& g : I.gens())
                direct = direct || (g[0] <= a && g[1] <= b);
            CHECK(containsMonomial(I, {a, b}) == direct);
        }
}

TEST_CASE("product multiplies generator sets and minimalizes") {
    auto X = minimalize({{1, 0}}, 2);
    auto Y = minimalize({{0, 1}}, 2);
    CHECK(product(X, Y).gens() == std::vector<ExponentVector>{{1, 1}});

    auto m = minimalize({{1, 0}, {0, 1}}, 2);
    CHECK(product(m, m).gens() == std::vector<ExponentVector>{{2, 0}, {1, 1}, {0, 2}});

    auto I = minimalize({{3, 0}, {0, 3}}, 2);
    CHECK(product(I, I).gens() == std::vector<ExponentVector>{{6, 0}, {3, 3}, {0, 6}});
}

TEST_CASE("product contains all pairwise generator sums") {
    auto I = minimalize({{2, 1}, {0, 3}}, 2);
    auto J = minimalize({{1, 0}, {0, 2}}, 2);
    auto P = product(I, J);
    for (const auto& g : I.gens())
        for (const auto& h : J.gens())
            CHECK(containsMonomial(P, g + h));
}

TEST_CASE("multiPower matches the spec examples") {
    auto m = minimalize({{1, 0}, {0, 1}}, 2);
    CHECK(multiPower({m}, {2}).gens() ==
          std::vector<ExponentVector>{{2, 0}, {1, 1}, {0, 2}});

    auto X = minimalize({{1, 0}}, 2);
    auto Y = minimalize({{0, 1}}, 2);
    CHECK(multiPower({X, Y}, {2, 3}).gens() == std::vector<ExponentVector>{{2, 3}});

    auto I = minimalize({{3, 0}, {0, 3}}, 2);
    CHECK(multiPower({I}, {2}).gens() ==
          std::vector<ExponentVector>{{6, 0}, {3, 3}, {0, 6}});

    CHECK(multiPower({m}, {0}).isUnit());
    CHECK_THROWS_AS(multiPower({m}, {1, 2}), DimensionMismatchError);
}

TEST_CASE("multiPower is additive in the exponent") {
    auto I = minimalize({{2, 0}, {1, 1}}, 2);
    auto J = minimalize({{0, 2}, {1, 0}}, 2);
    std::vector<MonomialIdeal> ideals{I, J};
    for (long long a1 = 0; a1 <= 3; ++a1)
        for (long long a2 = 0; a1 + a2 <= 3; ++a2)
            for (long long b1 = 0; b1 <= 3; ++b1)
                for (long long b2 = 0; b1 + b2 <= 3; ++b2) {
                    MultiIndex n{a1, a2}, mdx{b1, b2}, sum{a1 + b1, a2 + b2};
                    CHECK(equalsIdeal(multiPower(ideals, sum),
                                      product(multiPower(ideals, n), multiPower(ideals, mdx))));
                }
}

TEST_CASE("equalsIdeal compares canonical generator sets") {
    CHECK(equalsIdeal(minimalize({{1, 0}, {0, 1}}, 2), minimalize({{0, 1}, {1, 0}}, 2)));
    CHECK_FALSE(equalsIdeal(minimalize({{2, 0}, {0, 2}}, 2),
                            minimalize({{2, 0}, {1, 1}, {0, 2}}, 2)));
    auto I = minimalize({{2, 0}, {0, 2}}, 2);
    auto withRedundant = I.gens();
    withRedundant.push_back({3, 0});
    CHECK(equalsIdeal(I, minimalize(withRedundant, 2)));
}
