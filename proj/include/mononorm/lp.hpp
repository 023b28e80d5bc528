#ifndef MONONORM_LP_HPP
#define MONONORM_LP_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace mononorm {

enum class Rel { Eq, Le, Ge };

struct LinearConstraint {
    std::vector<Rational> coeffs;
    Rel rel;
    Rational rhs;
};

/**
 * A system of exact linear equations and inequalities. Variables are free
 * unless marked nonnegative. Feasibility is decided by a phase-1 primal
 * simplex over Rational with Bland's rule, so it terminates and there is
 * no tolerance anywhere: an answer is a certificate.
 */
struct LinearSystem {
    explicit LinearSystem(int numVars_ = 0)
        : numVars(numVars_), nonneg(static_cast<std::size_t>(numVars_), false) {}

    int numVars;
    std::vector<bool> nonneg;
    std::vector<LinearConstraint> rows;

    void markNonnegative(int var) { nonneg[static_cast<std::size_t>(var)] = true; }
    void markAllNonnegative() { nonneg.assign(nonneg.size(), true); }

    void add(std::vector<Rational> coeffs, Rel rel, Rational rhs) {
        rows.push_back({std::move(coeffs), rel, std::move(rhs)});
    }
    void addEq(std::vector<Rational> c, Rational r) { add(std::move(c), Rel::Eq, std::move(r)); }
    void addLe(std::vector<Rational> c, Rational r) { add(std::move(c), Rel::Le, std::move(r)); }
    void addGe(std::vector<Rational> c, Rational r) { add(std::move(c), Rel::Ge, std::move(r)); }
};

struct LpResult {
    bool feasible = false;
    std::vector<Rational> witness; // one value per original variable when feasible
};

inline LpResult lpFeasible(const LinearSystem& sys) {
    if (sys.numVars < 0 || sys.nonneg.size() != static_cast<std::size_t>(sys.numVars))
        throw MalformedSystemError("variable count and sign flags disagree");
    for (const auto& row : sys.rows)
        if (row.coeffs.size() != static_cast<std::size_t>(sys.numVars))
            throw MalformedSystemError("constraint width does not match variable count");

    const std::size_t m = sys.rows.size();
    const std::size_t nv = static_cast<std::size_t>(sys.numVars);

    // Structural columns: one per nonnegative variable, a (+,-) pair per free one.
    std::vector<std::size_t> posCol(nv), negCol(nv, SIZE_MAX);
    std::size_t nCols = 0;
    for (std::size_t v = 0; v < nv; ++v) {
        posCol[v] = nCols++;
        if (!sys.nonneg[v]) negCol[v] = nCols++;
    }
    const std::size_t structCols = nCols;

    // Rows in the form  a.z (<=|=) b ; Ge rows are negated.
    std::vector<std::vector<Rational>> tab(m);
    std::vector<Rational> rhs(m);
    std::vector<bool> isEq(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& row = sys.rows[i];
        Rational sgn = (row.rel == Rel::Ge) ? Rational(-1) : Rational(1);
        tab[i].assign(structCols, Rational(0));
        for (std::size_t v = 0; v < nv; ++v) {
            Rational c = sgn * row.coeffs[v];
            tab[i][posCol[v]] = c;
            if (negCol[v] != SIZE_MAX) tab[i][negCol[v]] = -c;
        }
        rhs[i] = sgn * row.rhs;
        isEq[i] = (row.rel == Rel::Eq);
    }

    // Slacks for inequality rows, then flip rows to make rhs >= 0.
    std::vector<std::size_t> slackCol(m, SIZE_MAX);
    for (std::size_t i = 0; i < m; ++i)
        if (!isEq[i]) slackCol[i] = nCols++;
    for (std::size_t i = 0; i < m; ++i) {
        tab[i].resize(nCols, Rational(0));
        if (slackCol[i] != SIZE_MAX) tab[i][slackCol[i]] = 1;
    }
    std::vector<bool> flipped(m, false);
    for (std::size_t i = 0; i < m; ++i)
        if (rhs[i] < 0) {
            flipped[i] = true;
            rhs[i] = -rhs[i];
            for (auto& c : tab[i]) c = -c;
        }

    // Basis: a +1 slack where available, otherwise an artificial column.
    std::vector<std::size_t> basic(m);
    std::vector<bool> isArtificial;
    std::size_t firstArtificial = nCols;
    for (std::size_t i = 0; i < m; ++i) {
        if (slackCol[i] != SIZE_MAX && !flipped[i]) {
            basic[i] = slackCol[i];
        } else {
            std::size_t art = nCols++;
            for (std::size_t k = 0; k < m; ++k) tab[k].resize(nCols, Rational(0));
            tab[i][art] = 1;
            basic[i] = art;
        }
    }
    const std::size_t N = nCols;
    auto artificial = [&](std::size_t col) { return col >= firstArtificial; };

    // Phase-1: minimize the sum of artificials.
    std::vector<Rational> red(N, Rational(0));
    Rational objVal(0);
    for (std::size_t j = firstArtificial; j < N; ++j) red[j] = 1;
    for (std::size_t i = 0; i < m; ++i) {
        if (!artificial(basic[i])) continue;
        for (std::size_t j = 0; j < N; ++j) red[j] -= tab[i][j];
        objVal += rhs[i];
    }

    for (;;) {
        std::size_t enter = SIZE_MAX;
        for (std::size_t j = 0; j < N; ++j)
            if (red[j] < 0) { enter = j; break; }
        if (enter == SIZE_MAX) break;

        std::size_t leave = SIZE_MAX;
        Rational bestRatio(0);
        for (std::size_t i = 0; i < m; ++i) {
            if (tab[i][enter] <= 0) continue;
            Rational ratio = rhs[i] / tab[i][enter];
            if (leave == SIZE_MAX || ratio < bestRatio ||
                (ratio == bestRatio && basic[i] < basic[leave])) {
                leave = i;
                bestRatio = ratio;
            }
        }
        if (leave == SIZE_MAX)
            throw MalformedSystemError("phase-1 objective unbounded; internal invariant broken");

        Rational piv = tab[leave][enter];
        for (auto& c : tab[leave]) c /= piv;
        rhs[leave] /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || tab[i][enter] == 0) continue;
            Rational f = tab[i][enter];
            for (std::size_t j = 0; j < N; ++j) tab[i][j] -= f * tab[leave][j];
            rhs[i] -= f * rhs[leave];
        }
        if (red[enter] != 0) {
            Rational f = red[enter];
            for (std::size_t j = 0; j < N; ++j) red[j] -= f * tab[leave][j];
            objVal += f * rhs[leave];
        }
        basic[leave] = enter;
    }

    LpResult result;
    result.feasible = (objVal == 0);
    if (result.feasible) {
        std::vector<Rational> z(N, Rational(0));
        for (std::size_t i = 0; i < m; ++i) z[basic[i]] = rhs[i];
        result.witness.resize(nv);
        for (std::size_t v = 0; v < nv; ++v) {
            result.witness[v] = z[posCol[v]];
            if (negCol[v] != SIZE_MAX) result.witness[v] -= z[negCol[v]];
        }
    }
    return result;
}

} // namespace mononorm

#endif
