#ifndef MONONORM_MONOMIAL_IDEAL_HPP
#define MONONORM_MONOMIAL_IDEAL_HPP

#include <algorithm>
#include <vector>

#include "errors.hpp"
#include "exponent.hpp"

namespace mononorm {

/**
 * A monomial ideal in d variables, stored as the antichain of its minimal
 * generator exponents in canonical (descending lexicographic) order. The
 * zero ideal is not representable; the unit ideal {(0,...,0)} is, because
 * it arises as the |n| = 0 power product.
 */
class MonomialIdeal {
public:
    MonomialIdeal(int dim, std::vector<ExponentVector> minimalGens)
        : dim_(dim), gens_(std::move(minimalGens)) {}

    int dim() const { return dim_; }
    const std::vector<ExponentVector>& gens() const { return gens_; }

    bool isUnit() const {
        return gens_.size() == 1 && totalDegree(gens_.front()) == 0;
    }

    long long maxGeneratorDegree() const {
        long long m = 0;
        for (const auto& g : gens_) m = std::max(m, totalDegree(g));
        return m;
    }

    /// Componentwise maximum of the generators (box bound per coordinate).
    ExponentVector coordinateMax() const {
        ExponentVector m(static_cast<std::size_t>(dim_), 0);
        for (const auto& g : gens_)
            for (int k = 0; k < dim_; ++k)
                m[static_cast<std::size_t>(k)] =
                    std::max(m[static_cast<std::size_t>(k)], g[static_cast<std::size_t>(k)]);
        return m;
    }

    bool operator==(const MonomialIdeal& o) const { return dim_ == o.dim_ && gens_ == o.gens_; }

private:
    int dim_;
    std::vector<ExponentVector> gens_;
};

/// Canonical form: keep the componentwise-minimal elements of `raw`, sorted.
/// The generated ideal is unchanged.
inline MonomialIdeal minimalize(std::vector<ExponentVector> raw, int dim) {
    if (raw.empty()) throw ZeroIdealError();
    for (const auto& v : raw)
        if (static_cast<int>(v.size()) != dim)
            throw DimensionMismatchError("generator length does not match ambient dimension");
    std::sort(raw.begin(), raw.end(), [](const ExponentVector& a, const ExponentVector& b) {
        long long da = totalDegree(a), db = totalDegree(b);
        if (da != db) return da < db;
        return canonicalLess(a, b);
    });
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    std::vector<ExponentVector> keep;
    for (const auto& v : raw) {
        bool dominated = false;
        for (const auto& g : keep) {
            // keep is sorted by total degree, so g can only divide v
            if (divides(g, v)) { dominated = true; break; }
        }
        if (!dominated) keep.push_back(v);
    }
    std::sort(keep.begin(), keep.end(), canonicalLess);
    return MonomialIdeal(dim, std::move(keep));
}

inline void requireSameDim(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.dim() != b.dim())
        throw DimensionMismatchError("ideals live in different ambient dimensions");
}

/// True iff x^b lies in I, i.e. some minimal generator divides x^b.
inline bool containsMonomial(const MonomialIdeal& ideal, const ExponentVector& b) {
    if (static_cast<int>(b.size()) != ideal.dim())
        throw DimensionMismatchError("monomial length does not match ideal dimension");
    for (const auto& g : ideal.gens())
        if (divides(g, b)) return true;
    return false;
}

inline MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
    requireSameDim(a, b);
    std::vector<ExponentVector> sums;
    sums.reserve(a.gens().size() * b.gens().size());
    for (const auto& g : a.gens())
        for (const auto& h : b.gens())
            sums.push_back(g + h);
    return minimalize(std::move(sums), a.dim());
}

inline MonomialIdeal unitIdeal(int dim) {
    return MonomialIdeal(dim, {ExponentVector(static_cast<std::size_t>(dim), 0)});
}

/// The power product I_1^{n_1} ... I_r^{n_r}; the unit ideal when |n| = 0.
inline MonomialIdeal multiPower(const std::vector<MonomialIdeal>& ideals, const MultiIndex& n) {
    if (ideals.empty() || ideals.size() != n.size())
        throw DimensionMismatchError("multi-index length does not match the number of ideals");
    int dim = ideals.front().dim();
    for (const auto& ideal : ideals) {
        if (ideal.dim() != dim)
            throw DimensionMismatchError("ideals live in different ambient dimensions");
    }
    MonomialIdeal acc = unitIdeal(dim);
    for (std::size_t i = 0; i < ideals.size(); ++i)
        for (long long p = 0; p < n[i]; ++p)
            acc = product(acc, ideals[i]);
    return acc;
}

inline bool equalsIdeal(const MonomialIdeal& a, const MonomialIdeal& b) {
    requireSameDim(a, b);
    return a.gens() == b.gens();
}

} // namespace mononorm

#endif
