#include <catch2/catch_amalgamated.hpp>

#include <mononorm/lp.hpp>

#include <random>

using namespace mononorm;

TEST_CASE("contradictory one-variable system is infeasible") {
    // lam >= 0, lam = 1, 3 lam <= 2
    LinearSystem sys(1);
    sys.addGe({Rational(1)}, Rational(0));
    sys.addEq({Rational(1)}, Rational(1));
    sys.addLe({Rational(3)}, Rational(2));
    CHECK_FALSE(lpFeasible(sys).feasible);
}

TEST_CASE("two-variable convex combination has the hand-computed witness") {
    // lam1 + lam2 = 1, lam >= 0, 3 lam1 <= 2, 3 lam2 <= 1 forces (2/3, 1/3)
    LinearSystem sys(2);
    sys.markAllNonnegative();
    sys.addEq({Rational(1), Rational(1)}, Rational(1));
    sys.addLe({Rational(3), Rational(0)}, Rational(2));
    sys.addLe({Rational(0), Rational(3)}, Rational(1));
    auto res = lpFeasible(sys);
    REQUIRE(res.feasible);
    CHECK(res.witness[0] == Rational(2, 3));
    CHECK(res.witness[1] == Rational(1, 3));
}

TEST_CASE("degenerate empty system is feasible") {
    CHECK(lpFeasible(LinearSystem(0)).feasible);
    LinearSystem noRows(3);
    CHECK(lpFeasible(noRows).feasible);
}

TEST_CASE("malformed systems are rejected") {
    LinearSystem sys(2);
    sys.rows.push_back({{Rational(1)}, Rel::Eq, Rational(0)});
    CHECK_THROWS_AS(lpFeasible(sys), MalformedSystemError);
}

TEST_CASE("free variables may take negative values") {
    LinearSystem sys(1);
    sys.addLe({Rational(1)}, Rational(-2));
    auto res = lpFeasible(sys);
    REQUIRE(res.feasible);
    CHECK(res.witness[0] <= Rational(-2));
}

TEST_CASE("witnesses satisfy every constraint exactly") {
    std::mt19937_64 rng(42);
    auto coeff = [&]() { return Rational(static_cast<long long>(rng() % 11) - 5); };
    for (int trial = 0; trial < 60; ++trial) {
        int nv = 1 + static_cast<int>(rng() % 4);
        // target point with small rational coordinates
        std::vector<Rational> point(static_cast<std::size_t>(nv));
        for (auto& p : point)
            p = Rational(static_cast<long long>(rng() % 9) - 4, 1 + static_cast<long long>(rng() % 3));
        LinearSystem sys(nv);
        int m = 1 + static_cast<int>(rng() % 5);
        for (int i = 0; i < m; ++i) {
            std::vector<Rational> row(static_cast<std::size_t>(nv));
            Rational value(0);
            for (int v = 0; v < nv; ++v) {
                row[static_cast<std::size_t>(v)] = coeff();
                value += row[static_cast<std::size_t>(v)] * point[static_cast<std::size_t>(v)];
            }
            switch (rng() % 3) {
                case 0: sys.addEq(std::move(row), value); break;
                case 1: sys.addLe(std::move(row), value + Rational(static_cast<long long>(rng() % 3))); break;
                default: sys.addGe(std::move(row), value - Rational(static_cast<long long>(rng() % 3))); break;
            }
        }
        auto res = lpFeasible(sys);
        REQUIRE(res.feasible); // feasible by construction: `point` satisfies it
        for (const auto& row : sys.rows) {
            Rational lhs(0);
            for (int v = 0; v < nv; ++v)
                lhs += row.coeffs[static_cast<std::size_t>(v)] * res.witness[static_cast<std::size_t>(v)];
            switch (row.rel) {
                case Rel::Eq: CHECK(lhs == row.rhs); break;
                case Rel::Le: CHECK(lhs <= row.rhs); break;
                case Rel::Ge: CHECK(lhs >= row.rhs); break;
            }
        }
    }
}

TEST_CASE("strict separations detected as infeasible") {
    // x >= 1 and x <= 0 padded with harmless rows
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        int nv = 1 + static_cast<int>(rng() % 3);
        LinearSystem sys(nv);
        std::vector<Rational> e1(static_cast<std::size_t>(nv), Rational(0));
        e1[0] = 1;
        sys.addGe(e1, Rational(1));
        sys.addLe(e1, Rational(0));
        for (int i = 0; i < static_cast<int>(rng() % 3); ++i) {
            std::vector<Rational> row(static_cast<std::size_t>(nv));
            for (auto& c : row) c = Rational(static_cast<long long>(rng() % 7) - 3);
            sys.addLe(std::move(row), Rational(100));
        }
        CHECK_FALSE(lpFeasible(sys).feasible);
    }
}
