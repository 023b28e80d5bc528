#include <catch2/catch_amalgamated.hpp>

#include <mononorm/linalg.hpp>

#include <random>

using namespace mononorm;

TEST_CASE("axpy merges sparse vectors and drops zeros") {
    SparseVec a{{0, Rational(1)}, {2, Rational(3)}};
    SparseVec b{{0, Rational(1)}, {1, Rational(2)}, {2, Rational(-3)}};
    auto c = sparse::axpy(a, Rational(1), b);
    REQUIRE(c.size() == 2);
    CHECK(c[0] == std::make_pair(0, Rational(2)));
    CHECK(c[1] == std::make_pair(1, Rational(2)));
}

TEST_CASE("row echelon rank and membership") {
    RowEchelon ech;
    CHECK(ech.insert({{0, Rational(1)}, {1, Rational(1)}}));
    CHECK(ech.insert({{1, Rational(2)}}));
    CHECK_FALSE(ech.insert({{0, Rational(3)}, {1, Rational(3)}})); // dependent
    CHECK(ech.rank() == 2);
    CHECK(ech.contains({{0, Rational(5)}}));
    CHECK_FALSE(ech.contains({{2, Rational(1)}}));
}

TEST_CASE("echelon span is insertion-order independent") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<SparseVec> rows;
        int count = 2 + static_cast<int>(rng() % 5);
        for (int i = 0; i < count; ++i) {
            SparseVec v;
            for (int idx = 0; idx < 6; ++idx) {
                long long c = static_cast<long long>(rng() % 7) - 3;
                if (c != 0) v.emplace_back(idx, Rational(c));
            }
            if (!v.empty()) rows.push_back(std::move(v));
        }
        RowEchelon fwd, rev;
        for (const auto& v : rows) fwd.insert(v);
        for (auto it = rows.rbegin(); it != rows.rend(); ++it) rev.insert(*it);
        CHECK(fwd.rank() == rev.rank());
        SparseVec probe{{0, Rational(1)}, {3, Rational(2)}, {5, Rational(-1)}};
        CHECK(fwd.contains(probe) == rev.contains(probe));
    }
}

TEST_CASE("kernel collector finds exact dependencies") {
    // columns: c0 = e0, c1 = e1, c2 = e0 + e1 gives kernel (1,1,-1)
    KernelCollector kc;
    CHECK_FALSE(kc.offer({{0, Rational(1)}}, {{0, Rational(1)}}).has_value());
    CHECK_FALSE(kc.offer({{1, Rational(1)}}, {{1, Rational(1)}}).has_value());
    auto kernel = kc.offer({{0, Rational(1)}, {1, Rational(1)}}, {{2, Rational(1)}});
    REQUIRE(kernel.has_value());
    // tracker combination must kill the image: t0*c0 + t1*c1 + t2*c2 = 0
    Rational t0(0), t1(0), t2(0);
    for (const auto& [idx, val] : *kernel) {
        if (idx == 0) t0 = val;
        if (idx == 1) t1 = val;
        if (idx == 2) t2 = val;
    }
    CHECK(t0 + t2 == 0);
    CHECK(t1 + t2 == 0);
    CHECK(t2 != 0);
}

TEST_CASE("injective maps yield no kernel vectors") {
    KernelCollector kc;
    std::mt19937_64 rng(9);
    for (int t = 0; t < 5; ++t) {
        SparseVec img{{t, Rational(1 + static_cast<long long>(rng() % 4))},
                      {t + 1, Rational(1)}};
        CHECK_FALSE(kc.offer(img, {{t, Rational(1)}}).has_value());
    }
}
