#ifndef MONONORM_EXPONENT_HPP
#define MONONORM_EXPONENT_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace mononorm {

/// Exponent of a monomial x^b in d variables. All entries are >= 0.
using ExponentVector = std::vector<long long>;

/// Element n of N^r selecting the power product I_1^{n_1} ... I_r^{n_r}.
using MultiIndex = std::vector<long long>;

inline long long totalDegree(const std::vector<long long>& v) {
    return std::accumulate(v.begin(), v.end(), 0LL);
}

/// Componentwise a <= b, i.e. x^a divides x^b.
inline bool divides(const ExponentVector& a, const ExponentVector& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

// Canonical order on exponent vectors: descending lexicographic, x-major.
// Under it the generators of (x^3, y^3)-bar list as (3,0),(2,1),(1,2),(0,3).
inline bool canonicalLess(const ExponentVector& a, const ExponentVector& b) {
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

inline ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector s(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) s[k] = a[k] + b[k];
    return s;
}

/// All n in N^r with |n| = total, in ascending lexicographic order.
/// There are C(total + r - 1, r - 1) of them.
inline std::vector<MultiIndex> compositionsOf(long long total, int r) {
    std::vector<MultiIndex> out;
    MultiIndex cur(static_cast<std::size_t>(r), 0);
    auto rec = [&](auto&& self, int pos, long long rest) -> void {
        if (pos == r - 1) {
            cur[static_cast<std::size_t>(pos)] = rest;
            out.push_back(cur);
            return;
        }
        for (long long v = 0; v <= rest; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, rest - v);
        }
    };
    if (r >= 1 && total >= 0) rec(rec, 0, total);
    return out;
}

/// Default variable display names: x,y,z,w for d <= 4, x1..xd beyond.
inline std::vector<std::string> defaultVarNames(int dim) {
    static const char* few[] = {"x", "y", "z", "w"};
    std::vector<std::string> names;
    for (int k = 0; k < dim; ++k)
        names.push_back(dim <= 4 ? few[k] : "x" + std::to_string(k + 1));
    return names;
}

inline std::string renderMonomial(const ExponentVector& b, const std::vector<std::string>& vars) {
    std::string s;
    for (std::size_t k = 0; k < b.size(); ++k) {
        if (b[k] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars[k];
        if (b[k] > 1) s += "^" + std::to_string(b[k]);
    }
    return s.empty() ? "1" : s;
}

inline std::string renderTuple(const std::vector<long long>& v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(v[k]);
    }
    return s + ")";
}

} // namespace mononorm

#endif
