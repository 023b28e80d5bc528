#ifndef MONONORM_NEWTON_HPP
#define MONONORM_NEWTON_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "errors.hpp"
#include "exponent.hpp"
#include "lp.hpp"
#include "monomial_ideal.hpp"
#include "rational.hpp"

namespace mononorm {

/**
 * The Newton polyhedron NP of a monomial ideal: conv(points) + R^d_{>=0},
 * kept implicitly as the generating point set. Standard facts used
 * throughout this header (they are classical for monomial ideals and are
 * exercised against an independent LP route by the test suite):
 *
 *   - x^b lies in the integral closure of J iff b is a lattice point of NP(J);
 *   - NP(I_1^{n_1} ... I_r^{n_r}) = n_1 NP(I_1) + ... + n_r NP(I_r)
 *     (Minkowski sum);
 *   - every valid inequality <w,x> >= c on NP has w >= 0, and NP is cut out
 *     by finitely many such inequalities with h(w) = min over the points.
 *
 * See Huneke & Swanson, "Integral Closure of Ideals, Rings, and Modules",
 * ch. 1 and ch. 5, for the first two.
 */
struct NewtonPolyhedron {
    int dim = 0;
    std::vector<ExponentVector> points;
};

namespace detail {

/// Primitive integer vector orthogonal to the given rows, if the rows have
/// rank exactly rows.size() and the orthogonal line has a sign-definite
/// direction. Mixed-sign normals are useless for Newton polyhedra.
inline std::optional<std::vector<long long>>
signedKernelNormal(const std::vector<std::vector<long long>>& rows, int dim) {
    const std::size_t d = static_cast<std::size_t>(dim);
    std::vector<std::vector<Rational>> mat;
    for (const auto& r : rows) {
        std::vector<Rational> row(d);
        for (std::size_t k = 0; k < d; ++k) row[k] = r[k];
        mat.push_back(std::move(row));
    }
    // Reduced row echelon form.
    std::vector<std::size_t> pivotCol;
    std::size_t prow = 0;
    for (std::size_t col = 0; col < d && prow < mat.size(); ++col) {
        std::size_t sel = SIZE_MAX;
        for (std::size_t i = prow; i < mat.size(); ++i)
            if (mat[i][col] != 0) { sel = i; break; }
        if (sel == SIZE_MAX) continue;
        std::swap(mat[prow], mat[sel]);
        Rational inv = mat[prow][col];
        for (auto& c : mat[prow]) c /= inv;
        for (std::size_t i = 0; i < mat.size(); ++i) {
            if (i == prow || mat[i][col] == 0) continue;
            Rational f = mat[i][col];
            for (std::size_t k = 0; k < d; ++k) mat[i][k] -= f * mat[prow][k];
        }
        pivotCol.push_back(col);
        ++prow;
    }
    if (pivotCol.size() != rows.size()) return std::nullopt; // dependent rows
    if (rows.size() + 1 != d) return std::nullopt;           // nullity must be 1

    std::size_t freeCol = SIZE_MAX;
    for (std::size_t col = 0, p = 0; col < d; ++col) {
        if (p < pivotCol.size() && pivotCol[p] == col) { ++p; continue; }
        freeCol = col;
    }
    std::vector<Rational> w(d, Rational(0));
    w[freeCol] = 1;
    for (std::size_t i = 0; i < pivotCol.size(); ++i)
        w[pivotCol[i]] = -mat[i][freeCol];

    Integer lcmDen = 1;
    for (const auto& q : w) lcmDen = boost::multiprecision::lcm(lcmDen, Integer(denominator(q)));
    std::vector<Integer> wi(d);
    Integer g = 0;
    for (std::size_t k = 0; k < d; ++k) {
        wi[k] = Integer(numerator(w[k])) * (lcmDen / Integer(denominator(w[k])));
        g = boost::multiprecision::gcd(g, wi[k]);
    }
    for (auto& c : wi) c /= g;

    bool anyPos = false, anyNeg = false;
    for (const auto& c : wi) {
        if (c > 0) anyPos = true;
        if (c < 0) anyNeg = true;
    }
    if (anyPos && anyNeg) return std::nullopt;
    if (anyNeg)
        for (auto& c : wi) c = -c;

    std::vector<long long> out(d);
    for (std::size_t k = 0; k < d; ++k) {
        if (wi[k] > Integer(1) << 60) throw Error("support normal exceeds the 64-bit range");
        out[k] = static_cast<long long>(wi[k]);
    }
    return out;
}

inline void forEachSubset(std::size_t n, std::size_t k,
                          const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(k);
    auto rec = [&](auto&& self, std::size_t start, std::size_t pos) -> void {
        if (pos == k) { fn(idx); return; }
        for (std::size_t i = start; i + (k - pos) <= n; ++i) {
            idx[pos] = i;
            self(self, i + 1, pos + 1);
        }
    };
    if (k <= n) rec(rec, 0, 0);
}

} // namespace detail

/// One valid inequality <w,x> >= sum_i n_i * mins[i] for every scaled
/// Minkowski sum of the ideal family's Newton polyhedra.
struct SupportForm {
    std::vector<long long> w;
    std::vector<long long> mins; // min_{p in gens(I_i)} <w,p>, one per ideal
};

/**
 * Complete support description for the family { sum_i n_i NP(I_i) : n }.
 * Candidate facet normals are enumerated once from the generator points:
 * every facet of a Minkowski sum is spanned by difference vectors taken
 * inside the summands' argmin sets together with coordinate rays, so
 * normals orthogonal to (d-1)-element selections of that shape exhaust all
 * facet normals. Redundant valid inequalities are harmless. The normals do
 * not depend on n; only the right-hand sides scale.
 */
class SupportHull {
public:
    explicit SupportHull(const std::vector<MonomialIdeal>& ideals) {
        if (ideals.empty()) throw EmptyPolyhedronError("no ideals");
        dim_ = ideals.front().dim();
        const int r = static_cast<int>(ideals.size());
        const std::size_t d = static_cast<std::size_t>(dim_);

        std::set<std::vector<long long>> seen;
        std::vector<long long> budget(static_cast<std::size_t>(r) + 1, 0);

        // Distribute d-1 difference slots over the r ideals plus coordinate rays.
        auto emit = [&](const std::vector<std::vector<long long>>& rows) {
            auto w = detail::signedKernelNormal(rows, dim_);
            if (!w || !seen.insert(*w).second) return;
            SupportForm form;
            form.w = *w;
            for (const auto& ideal : ideals) {
                long long best = 0;
                bool first = true;
                for (const auto& p : ideal.gens()) {
                    long long dot = 0;
                    for (std::size_t k = 0; k < d; ++k) dot += form.w[k] * p[k];
                    if (first || dot < best) { best = dot; first = false; }
                }
                form.mins.push_back(best);
            }
            forms_.push_back(std::move(form));
        };

        std::vector<std::vector<long long>> rows;
        auto rec = [&](auto&& self, int i, int left) -> void {
            if (i == r) {
                // remaining budget goes to coordinate rays e_k
                detail::forEachSubset(d, static_cast<std::size_t>(left),
                                      [&](const std::vector<std::size_t>& ks) {
                    std::size_t mark = rows.size();
                    for (std::size_t k : ks) {
                        std::vector<long long> e(d, 0);
                        e[k] = 1;
                        rows.push_back(std::move(e));
                    }
                    emit(rows);
                    rows.resize(mark);
                });
                return;
            }
            const auto& gens = ideals[static_cast<std::size_t>(i)].gens();
            for (int take = 0; take <= left; ++take) {
                if (take == 0) { self(self, i + 1, left); continue; }
                if (static_cast<std::size_t>(take) + 1 > gens.size()) break;
                detail::forEachSubset(gens.size(), static_cast<std::size_t>(take) + 1,
                                      [&](const std::vector<std::size_t>& sel) {
                    std::size_t mark = rows.size();
                    for (std::size_t j = 1; j < sel.size(); ++j) {
                        std::vector<long long> diff(d);
                        for (std::size_t k = 0; k < d; ++k)
                            diff[k] = gens[sel[j]][k] - gens[sel[0]][k];
                        rows.push_back(std::move(diff));
                    }
                    self(self, i + 1, left - take);
                    rows.resize(mark);
                });
            }
        };
        rec(rec, 0, dim_ - 1);

        // Axis normals are always among the candidates; assert cheaply.
        if (forms_.empty()) throw Error("support hull enumeration produced no inequalities");
    }

    int dim() const { return dim_; }
    const std::vector<SupportForm>& forms() const { return forms_; }

    /// Right-hand sides of all inequalities for the Minkowski sum scaled by n.
    std::vector<long long> rhsFor(const MultiIndex& n) const {
        std::vector<long long> rhs(forms_.size());
        for (std::size_t f = 0; f < forms_.size(); ++f) {
            long long acc = 0;
            for (std::size_t i = 0; i < n.size(); ++i) acc += n[i] * forms_[f].mins[i];
            rhs[f] = acc;
        }
        return rhs;
    }

    /// b in sum_i n_i NP(I_i), decided against the precomputed inequalities.
    bool member(const std::vector<long long>& rhs, const ExponentVector& b) const {
        for (std::size_t f = 0; f < forms_.size(); ++f) {
            __int128 acc = 0;
            const auto& w = forms_[f].w;
            for (std::size_t k = 0; k < w.size(); ++k)
                acc += static_cast<__int128>(w[k]) * b[k];
            if (acc < rhs[f]) return false;
        }
        return true;
    }

private:
    int dim_ = 0;
    std::vector<SupportForm> forms_;
};

/// Outcome of an integral-closedness check for one power product.
struct ClosureCheck {
    bool closed = false;
    std::optional<ExponentVector> witness; // in the closure, not in the power
};

/**
 * Shared state for repeated closure computations over a fixed ideal family:
 * the support hull is built once and power products are cached. All methods
 * are const-correct and deterministic; instances are cheap to create per
 * ideal family.
 */
class ClosureEngine {
public:
    explicit ClosureEngine(std::vector<MonomialIdeal> ideals)
        : ideals_(std::move(ideals)), hull_(ideals_) {
        dim_ = ideals_.front().dim();
        for (const auto& ideal : ideals_) {
            if (ideal.dim() != dim_)
                throw DimensionMismatchError("ideals live in different ambient dimensions");
            if (ideal.isUnit()) throw UnitIdealInputError();
        }
    }

    int dim() const { return dim_; }
    int arity() const { return static_cast<int>(ideals_.size()); }
    const std::vector<MonomialIdeal>& ideals() const { return ideals_; }
    const SupportHull& hull() const { return hull_; }

    const MonomialIdeal& power(const MultiIndex& n) {
        checkIndex(n);
        auto it = powers_.find(n);
        if (it != powers_.end()) return it->second;
        MonomialIdeal value = [&]() {
            for (std::size_t i = 0; i < n.size(); ++i) {
                if (n[i] == 0) continue;
                MultiIndex prev = n;
                --prev[i];
                return product(power(prev), ideals_[i]);
            }
            return unitIdeal(dim_);
        }();
        return powers_.emplace(n, std::move(value)).first->second;
    }

    /**
     * Membership of x^b in the integral closure of I^n, decided by exact LP
     * feasibility of the defining system: rationals lam_{ij} >= 0 with
     * sum_j lam_{ij} = n_i and sum lam_{ij} a_{ij} <= b componentwise.
     * |n| = 0 means the unit ideal, where every b >= 0 is a member.
     */
    bool npMembership(const MultiIndex& n, const ExponentVector& b) const {
        checkIndex(n);
        if (static_cast<int>(b.size()) != dim_)
            throw DimensionMismatchError("monomial length does not match ambient dimension");
        if (totalDegree(n) == 0) return true;

        int numVars = 0;
        for (const auto& ideal : ideals_) numVars += static_cast<int>(ideal.gens().size());
        LinearSystem sys(numVars);
        sys.markAllNonnegative();
        int base = 0;
        for (std::size_t i = 0; i < ideals_.size(); ++i) {
            std::vector<Rational> row(static_cast<std::size_t>(numVars), Rational(0));
            for (std::size_t j = 0; j < ideals_[i].gens().size(); ++j)
                row[static_cast<std::size_t>(base) + j] = 1;
            sys.addEq(std::move(row), Rational(n[i]));
            base += static_cast<int>(ideals_[i].gens().size());
        }
        for (int k = 0; k < dim_; ++k) {
            std::vector<Rational> row(static_cast<std::size_t>(numVars), Rational(0));
            int col = 0;
            for (const auto& ideal : ideals_)
                for (const auto& g : ideal.gens())
                    row[static_cast<std::size_t>(col++)] = g[static_cast<std::size_t>(k)];
            sys.addLe(std::move(row), Rational(b[static_cast<std::size_t>(k)]));
        }
        return lpFeasible(sys).feasible;
    }

    /// Same predicate through the support-hull route. The test suite pins
    /// agreement with npMembership on whole boxes.
    bool supportMembership(const MultiIndex& n, const ExponentVector& b) const {
        checkIndex(n);
        if (totalDegree(n) == 0) return true;
        return hull_.member(hull_.rhsFor(n), b);
    }

    /**
     * Minimal generators of the integral closure of I^n, by scanning the
     * lattice box bounded by the coordinate maxima of the power's minimal
     * generators. If b is in NP with b_k > M_k then b - e_k is in NP as
     * well, so every minimal lattice point lies inside the box; boxMargin
     * widens the box for the soundness cross-check.
     */
    MonomialIdeal closureGenerators(const MultiIndex& n, long long boxMargin = 0) {
        checkIndex(n);
        if (totalDegree(n) == 0)
            throw ZeroTotalDegreeError("closure of the |n| = 0 power is the unit ideal");
        const MonomialIdeal& J = power(n);
        ExponentVector box = J.coordinateMax();
        for (auto& m : box) m += boxMargin;

        const std::size_t d = static_cast<std::size_t>(dim_);
        std::vector<std::size_t> stride(d);
        std::size_t volume = 1;
        for (std::size_t k = d; k-- > 0;) {
            stride[k] = volume;
            volume *= static_cast<std::size_t>(box[k] + 1);
        }
        std::vector<char> inNP(volume, 0);
        std::vector<long long> rhs = hull_.rhsFor(n);
        std::vector<ExponentVector> minimal;

        ExponentVector b(d, 0);
        for (std::size_t idx = 0; idx < volume; ++idx) {
            bool viaPredecessor = false;
            for (std::size_t k = 0; k < d && !viaPredecessor; ++k)
                if (b[k] > 0 && inNP[idx - stride[k]]) viaPredecessor = true;
            if (viaPredecessor) {
                inNP[idx] = 1; // membership is monotone under adding e_k
            } else if (hull_.member(rhs, b)) {
                inNP[idx] = 1;
                minimal.push_back(b); // all predecessors are outside NP
            }
            for (std::size_t k = d; k-- > 0;) {
                if (b[k] < box[k]) { ++b[k]; break; }
                b[k] = 0;
            }
        }
        return minimalize(std::move(minimal), dim_);
    }

    /// Per-index check behind the certifier. |n| = 0 is closed by definition.
    ClosureCheck isIntegrallyClosed(const MultiIndex& n) {
        checkIndex(n);
        ClosureCheck out;
        if (totalDegree(n) == 0) {
            out.closed = true;
            return out;
        }
        const MonomialIdeal closure = closureGenerators(n);
        const MonomialIdeal& J = power(n);
        for (const auto& g : closure.gens()) {
            if (!containsMonomial(J, g)) {
                out.closed = false;
                out.witness = g; // first violation in canonical order
                return out;
            }
        }
        out.closed = true;
        return out;
    }

private:
    void checkIndex(const MultiIndex& n) const {
        if (n.size() != ideals_.size())
            throw DimensionMismatchError("multi-index length does not match the number of ideals");
        for (long long v : n)
            if (v < 0) throw DimensionMismatchError("multi-index entries must be nonnegative");
    }

    std::vector<MonomialIdeal> ideals_;
    SupportHull hull_;
    int dim_ = 0;
    std::map<MultiIndex, MonomialIdeal> powers_;
};

// Free-function views of the engine, for one-shot callers.

inline bool npMembership(const std::vector<MonomialIdeal>& ideals, const MultiIndex& n,
                         const ExponentVector& b) {
    return ClosureEngine(ideals).npMembership(n, b);
}

inline MonomialIdeal closureGenerators(const std::vector<MonomialIdeal>& ideals,
                                       const MultiIndex& n) {
    return ClosureEngine(ideals).closureGenerators(n);
}

inline ClosureCheck isIntegrallyClosed(const std::vector<MonomialIdeal>& ideals,
                                       const MultiIndex& n) {
    return ClosureEngine(ideals).isIntegrallyClosed(n);
}

/**
 * Maximum dimension of a compact face of the Newton polyhedron. A face is
 * compact exactly when it is supported by a strictly positive normal, so
 * candidate faces are the subsets S = points `intersect` aff(T) over small
 * affinely independent T, tested by exact LP: does some w with w_k >= 1 and
 * offset c satisfy <w,a> = c on S and <w,a> >= c + 1 off S? Enumeration is
 * by descending affine rank, so the first supported candidate is maximal.
 */
inline int maxCompactFaceDim(const NewtonPolyhedron& np) {
    if (np.points.empty()) throw EmptyPolyhedronError();
    std::vector<ExponentVector> pts = np.points;
    std::sort(pts.begin(), pts.end(), canonicalLess);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t m = pts.size();
    const std::size_t d = static_cast<std::size_t>(np.dim);

    // Row echelon over Q of difference vectors; rows keep distinct leading
    // columns, so forward reduction below is a plain walk.
    auto reduceVec = [&](std::vector<Rational> v, const std::vector<std::vector<Rational>>& rows) {
        for (;;) {
            std::size_t vlead = 0;
            while (vlead < d && v[vlead] == 0) ++vlead;
            if (vlead == d) return v;
            bool hit = false;
            for (const auto& r : rows) {
                std::size_t rlead = 0;
                while (rlead < d && r[rlead] == 0) ++rlead;
                if (rlead == vlead) {
                    Rational f = v[vlead] / r[rlead];
                    for (std::size_t k = vlead; k < d; ++k) v[k] -= f * r[k];
                    hit = true;
                    break;
                }
            }
            if (!hit) return v;
        }
    };
    auto echelonOf = [&](const std::vector<std::size_t>& sel) {
        std::vector<std::vector<Rational>> rows;
        for (std::size_t j = 1; j < sel.size(); ++j) {
            std::vector<Rational> v(d);
            for (std::size_t k = 0; k < d; ++k) v[k] = pts[sel[j]][k] - pts[sel[0]][k];
            v = reduceVec(std::move(v), rows);
            if (std::any_of(v.begin(), v.end(), [](const Rational& q) { return q != 0; }))
                rows.push_back(std::move(v));
        }
        return rows;
    };
    auto inSpan = [&](const std::vector<std::vector<Rational>>& rows, std::size_t p0,
                      std::size_t q) {
        std::vector<Rational> v(d);
        for (std::size_t k = 0; k < d; ++k) v[k] = pts[q][k] - pts[p0][k];
        v = reduceVec(std::move(v), rows);
        return std::all_of(v.begin(), v.end(), [](const Rational& q_) { return q_ == 0; });
    };
    auto supportedBy = [&](const std::vector<bool>& inS) {
        LinearSystem sys(np.dim + 1); // w_1..w_d, then the offset c (free)
        for (int k = 0; k < np.dim; ++k) {
            sys.markNonnegative(k);
            std::vector<Rational> row(d + 1, Rational(0));
            row[static_cast<std::size_t>(k)] = 1;
            sys.addGe(std::move(row), Rational(1));
        }
        for (std::size_t p = 0; p < m; ++p) {
            std::vector<Rational> row(d + 1);
            for (std::size_t k = 0; k < d; ++k) row[k] = pts[p][k];
            row[d] = -1;
            if (inS[p]) sys.addEq(std::move(row), Rational(0));
            else sys.addGe(std::move(row), Rational(1));
        }
        return lpFeasible(sys).feasible;
    };

    std::set<std::vector<bool>> tested;
    for (std::size_t k = std::min(d, m); k >= 1; --k) {
        bool anyFeasible = false;
        detail::forEachSubset(m, k, [&](const std::vector<std::size_t>& sel) {
            if (anyFeasible) return;
            auto rows = echelonOf(sel);
            if (rows.size() != k - 1) return; // affinely dependent selection
            std::vector<bool> inS(m, false);
            for (std::size_t q = 0; q < m; ++q)
                inS[q] = (q == sel[0]) || inSpan(rows, sel[0], q);
            if (!tested.insert(inS).second) return;
            if (supportedBy(inS)) anyFeasible = true;
        });
        if (anyFeasible) return static_cast<int>(k) - 1;
    }
    throw Error("no compact face found; internal invariant broken");
}

} // namespace mononorm

#endif
