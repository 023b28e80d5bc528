#ifndef MONONORM_LINALG_HPP
#define MONONORM_LINALG_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace mononorm {

/// Sparse vector over Q: (index, value) pairs sorted by index, values nonzero.
using SparseVec = std::vector<std::pair<int, Rational>>;

namespace sparse {

/// a + c * b, merged in one pass.
inline SparseVec axpy(const SparseVec& a, const Rational& c, const SparseVec& b) {
    SparseVec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            Rational v = c * b[j].second;
            if (v != 0) out.emplace_back(b[j].first, std::move(v));
            ++j;
        } else {
            Rational v = a[i].second + c * b[j].second;
            if (v != 0) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace sparse

/**
 * Incremental row echelon basis over Q. Rows are pivoted on their leading
 * index and normalized to a leading 1; membership of a vector in the row
 * span is decided by forward reduction. Exact and order-independent in the
 * answers it gives, which is what the truncated module computations in the
 * reductions lab need.
 */
class RowEchelon {
public:
    /// Forward-reduce v against the stored rows.
    SparseVec reduce(SparseVec v) const {
        while (!v.empty()) {
            auto it = rows_.find(v.front().first);
            if (it == rows_.end()) return v;
            v = sparse::axpy(v, -v.front().second, it->second);
        }
        return v;
    }

    /// Insert v; returns true when the rank grew.
    bool insert(SparseVec v) {
        v = reduce(std::move(v));
        if (v.empty()) return false;
        Rational lead = v.front().second;
        for (auto& [idx, val] : v) val /= lead;
        int pivot = v.front().first;
        rows_.emplace(pivot, std::move(v));
        return true;
    }

    bool contains(SparseVec v) const { return reduce(std::move(v)).empty(); }
    std::size_t rank() const { return rows_.size(); }

private:
    std::map<int, SparseVec> rows_;
};

/**
 * Kernel extraction for a linear map given column by column. Each offered
 * column carries a tracker in the domain; when the image column reduces to
 * zero against the previously stored ones, the accumulated tracker is a
 * kernel vector of the map.
 */
class KernelCollector {
public:
    std::optional<SparseVec> offer(SparseVec image, SparseVec tracker) {
        while (!image.empty()) {
            auto it = rows_.find(image.front().first);
            if (it == rows_.end()) break;
            Rational f = -image.front().second;
            image = sparse::axpy(image, f, it->second.first);
            tracker = sparse::axpy(tracker, f, it->second.second);
        }
        if (image.empty()) return tracker;
        Rational lead = image.front().second;
        for (auto& [idx, val] : image) val /= lead;
        for (auto& [idx, val] : tracker) val /= lead;
        int pivot = image.front().first;
        rows_.emplace(pivot, std::make_pair(std::move(image), std::move(tracker)));
        return std::nullopt;
    }

private:
    std::map<int, std::pair<SparseVec, SparseVec>> rows_; // image pivot -> (image, tracker)
};

} // namespace mononorm

#endif
