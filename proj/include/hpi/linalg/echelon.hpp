#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hpi/linalg/matrix.hpp"

namespace hpi {

template <typename K>
using SparseRow = std::vector<std::pair<std::uint32_t, K>>;

template <typename K>
SparseRow<K> to_sparse(const Vec<K>& v) {
    SparseRow<K> r;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!is_zero(v[i])) r.emplace_back(static_cast<std::uint32_t>(i), v[i]);
    return r;
}

namespace detail {

/// Scales a nonzero sparse row so its first entry is 1.
template <typename K>
void normalize_leading(SparseRow<K>& r) {
    K inv = K(1) / r.front().second;
    for (auto& e : r) e.second *= inv;
}

template <typename K>
struct SparseRowHash {
    std::size_t operator()(const SparseRow<K>& r) const {
        std::size_t h = r.size();
        for (const auto& [c, v] : r) h = (h * 1000003U) ^ (static_cast<std::size_t>(c) * 0x9e3779b97f4a7c15ULL) ^ v.hash();
        return h;
    }
};

} // namespace detail

/// Streaming rank over a fixed column space. Rows arrive one at a time and are reduced
/// against a maintained echelon basis (pivot entries 1); memory is bounded by the
/// basis, never by the number of rows seen. Rank is independent of arrival order.
template <typename K>
class RankAccumulator {
public:
    explicit RankAccumulator(std::size_t cols, bool deduplicate = true)
        : cols_(cols), pivot_row_(cols, -1), scratch_(cols, K(0)), dedup_(deduplicate) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }
    bool full() const { return rows_.size() == cols_; }
    std::size_t rows_seen() const { return seen_; }

    bool add(const Vec<K>& row) {
        require(row.size() == cols_, ErrorCode::dimension_mismatch, "row length differs from column count");
        return add(to_sparse(row));
    }

    /// Returns true iff the row was independent of everything added before.
    bool add(SparseRow<K> row) {
        ++seen_;
        if (row.empty() || full()) return false;
        if (dedup_) {
            // proportional rows are common in evaluation families; drop them before elimination
            detail::normalize_leading(row);
            if (seen_rows_.count(row)) return false;
            if (seen_rows_.size() < dedup_limit) seen_rows_.insert(row);
        }
        require(row.back().first < cols_, ErrorCode::dimension_mismatch, "sparse row column out of range");
        std::size_t lo = row.front().first;
        for (auto& [c, v] : row) scratch_[c] = std::move(v);
        for (std::size_t c = lo; c < cols_; ++c) {
            if (is_zero(scratch_[c])) continue;
            int p = pivot_row_[c];
            if (p < 0) {
                insert_from(c);
                return true;
            }
            K f = scratch_[c];
            for (const auto& [j, v] : rows_[static_cast<std::size_t>(p)]) scratch_[j] -= f * v;
        }
        return false;
    }

    /// Adds every basis row of another accumulator over the same columns.
    void merge(const RankAccumulator& other) {
        require(other.cols_ == cols_, ErrorCode::dimension_mismatch, "merging accumulators of different widths");
        for (const auto& r : other.rows_) add(r);
    }

    std::vector<Vec<K>> basis_rows() const {
        std::vector<Vec<K>> out;
        for (const auto& r : rows_) {
            auto v = zero_vec<K>(cols_);
            for (const auto& [c, x] : r) v[c] = x;
            out.push_back(std::move(v));
        }
        return out;
    }

private:
    void insert_from(std::size_t c) {
        SparseRow<K> r;
        K inv = K(1) / scratch_[c];
        for (std::size_t j = c; j < cols_; ++j) {
            if (is_zero(scratch_[j])) continue;
            r.emplace_back(static_cast<std::uint32_t>(j), j == c ? K(1) : scratch_[j] * inv);
            scratch_[j] = K(0);
        }
        pivot_row_[c] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(r));
    }

    static constexpr std::size_t dedup_limit = std::size_t{1} << 18;

    std::size_t cols_;
    std::vector<int> pivot_row_;
    std::vector<SparseRow<K>> rows_;
    Vec<K> scratch_;
    bool dedup_;
    std::unordered_set<SparseRow<K>, detail::SparseRowHash<K>> seen_rows_;
    std::size_t seen_ = 0;
};

} // namespace hpi
