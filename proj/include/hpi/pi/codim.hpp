#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "hpi/hopfzoo/zoo.hpp"
#include "hpi/linalg/echelon.hpp"
#include "hpi/pi/hpoly.hpp"

namespace hpi {

struct CodimOptions {
    double row_cap = 2e6;          ///< refuse jobs whose monomial count exceeds this
    double wall_seconds = 600.0;   ///< abort with resource_cap after this long
    unsigned threads = 1;
};

struct CodimResult {
    std::size_t value = 0;
    double rows = 0;           ///< monomials streamed
    std::size_t columns = 0;   ///< (dim A)^{n+1}
    std::size_t blocks = 0;    ///< independent column blocks the rank split into
};

namespace detail {

inline double estimate_rows(std::size_t n, std::size_t labels) {
    double r = 1;
    for (std::size_t i = 2; i <= n; ++i) r *= static_cast<double>(i);
    for (std::size_t i = 0; i < n; ++i) r *= static_cast<double>(labels);
    return r;
}

inline std::size_t checked_power(std::size_t base, std::size_t e) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        require(r <= std::numeric_limits<std::uint32_t>::max() / std::max<std::size_t>(base, 1), ErrorCode::resource_cap,
                "column space too large");
        r *= base;
    }
    return r;
}

class Deadline {
public:
    explicit Deadline(double seconds)
        : end_(std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                                       std::chrono::duration<double>(seconds))) {}
    bool passed() const { return std::chrono::steady_clock::now() > end_; }

private:
    std::chrono::steady_clock::time_point end_;
};

struct UnionFind {
    std::vector<std::uint32_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<std::uint32_t>(i);
    }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a), b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

/// Streams the evaluation rows of every monomial (sigma, labels) of degree n.
/// The prefix product over positions 1..j is a tensor indexed by the basis indices fed
/// to the variables at those positions, so monomials sharing a prefix share its work.
template <typename K>
class MonomialRows {
public:
    MonomialRows(const StructAlgebra<K>& a, const std::vector<Matrix<K>>& ops, std::size_t n)
        : a_(a), n_(n), d_(a.dim()), h_(ops.size()) {
        for (const auto& op : ops) {
            std::vector<Vec<K>> cols;
            for (std::size_t i = 0; i < d_; ++i) cols.push_back(op.column(i));
            images_.push_back(std::move(cols));
        }
        stride_.resize(n_);
        for (std::size_t v = 0; v < n_; ++v) stride_[v] = checked_power(d_, n_ - v);  // includes the output digit
    }

    std::size_t first_level_branches() const { return n_ * h_; }

    /// Calls emit(row) for every monomial whose first position is branch (var, label) with
    /// branch index = var * h + label. Stops early if stop() becomes true.
    template <typename Emit, typename Stop>
    void run_branch(std::size_t branch, Emit&& emit, Stop&& stop) {
        std::vector<std::size_t> sigma{branch / h_};
        std::uint64_t used = std::uint64_t{1} << sigma[0];
        const auto& first = images_[branch % h_];
        std::vector<Vec<K>> tensor(first.begin(), first.end());
        dfs(sigma, used, tensor, emit, stop);
    }

private:
    template <typename Emit, typename Stop>
    void dfs(std::vector<std::size_t>& sigma, std::uint64_t used, const std::vector<Vec<K>>& tensor, Emit& emit, Stop& stop) {
        if (stop()) return;
        if (sigma.size() == n_) {
            emit(make_row(sigma, tensor));
            return;
        }
        for (std::size_t v = 0; v < n_; ++v) {
            if (used & (std::uint64_t{1} << v)) continue;
            sigma.push_back(v);
            for (std::size_t l = 0; l < h_; ++l) {
                std::vector<Vec<K>> next;
                next.reserve(tensor.size() * d_);
                for (const auto& u : tensor)
                    for (std::size_t i = 0; i < d_; ++i)
                        next.push_back(is_zero_vec(u) || is_zero_vec(images_[l][i]) ? zero_vec<K>(d_) : a_.mul(u, images_[l][i]));
                dfs(sigma, used | (std::uint64_t{1} << v), next, emit, stop);
            }
            sigma.pop_back();
        }
    }

    SparseRow<K> make_row(const std::vector<std::size_t>& sigma, const std::vector<Vec<K>>& tensor) const {
        SparseRow<K> row;
        std::vector<std::size_t> digit(n_, 0);
        std::size_t base = 0;  // column offset of the current tuple
        for (std::size_t t = 0; t < tensor.size(); ++t) {
            const auto& v = tensor[t];
            for (std::size_t k = 0; k < d_; ++k)
                if (!is_zero(v[k])) row.emplace_back(static_cast<std::uint32_t>(base + k), v[k]);
            // increment the position-ordered tuple, last position fastest
            for (std::size_t p = n_; p-- > 0;) {
                base += stride_[sigma[p]];
                if (++digit[p] < d_) break;
                base -= d_ * stride_[sigma[p]];
                digit[p] = 0;
            }
        }
        std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        return row;
    }

    const StructAlgebra<K>& a_;
    std::size_t n_, d_, h_;
    std::vector<std::vector<Vec<K>>> images_;  ///< images_[l][i] = h_l e_i
    std::vector<std::size_t> stride_;          ///< d^{n - v}: column weight of variable v's digit
};

/// Rank of a row family streamed twice: the first pass links columns that share a row,
/// the second eliminates each linked block separately in local coordinates.
template <typename K, typename Source>
CodimResult blocked_rank(std::size_t columns, std::size_t branches, Source&& run_branch, const CodimOptions& opts) {
    CodimResult res;
    res.columns = columns;
    const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(std::max<std::size_t>(branches, 1))));
    Deadline deadline(opts.wall_seconds);
    std::atomic<bool> timed_out{false};
    auto parallel = [&](auto&& body) {
        std::vector<std::exception_ptr> errors(threads);
        auto guarded = [&](unsigned t) {
            try {
                body(t);
            } catch (...) {
                errors[t] = std::current_exception();
                timed_out = true;  // stops the other workers
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(guarded, t);
        guarded(0u);
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
        if (timed_out) fail(ErrorCode::resource_cap, "wall-clock budget of " + std::to_string(opts.wall_seconds) + " s exceeded");
    };

    // pass 1: column blocks
    std::vector<UnionFind> ufs(threads, UnionFind(0));
    std::vector<std::vector<char>> touched(threads);
    std::vector<double> counts(threads, 0);
    parallel([&](unsigned t) {
        UnionFind uf(columns);
        std::vector<char> seen(columns, 0);
        std::size_t ticks = 0;
        auto stop = [&] {
            if (++ticks % 1024 == 0 && deadline.passed()) timed_out = true;
            return timed_out.load();
        };
        for (std::size_t b = t; b < branches; b += threads)
            run_branch(b,
                       [&](const SparseRow<K>& row) {
                           counts[t] += 1;
                           for (std::size_t i = 0; i < row.size(); ++i) {
                               seen[row[i].first] = 1;
                               if (i) uf.unite(row[0].first, row[i].first);
                           }
                       },
                       stop);
        ufs[t] = std::move(uf);
        touched[t] = std::move(seen);
    });
    UnionFind uf(columns);
    std::vector<char> seen(columns, 0);
    for (unsigned t = 0; t < threads; ++t)
        for (std::uint32_t c = 0; c < columns; ++c) {
            if (!touched[t][c]) continue;
            seen[c] = 1;
            uf.unite(c, ufs[t].find(c));
        }
    ufs.clear();
    touched.clear();
    for (auto c : counts) res.rows += c;

    // local coordinates within each block
    std::vector<std::uint32_t> block_of(columns, 0), local(columns, 0);
    std::vector<std::size_t> block_size;
    std::map<std::uint32_t, std::uint32_t> root_block;
    for (std::uint32_t c = 0; c < columns; ++c) {
        if (!seen[c]) continue;
        auto r = uf.find(c);
        auto [it, fresh] = root_block.emplace(r, static_cast<std::uint32_t>(block_size.size()));
        if (fresh) block_size.push_back(0);
        block_of[c] = it->second;
        local[c] = static_cast<std::uint32_t>(block_size[it->second]++);
    }
    res.blocks = block_size.size();

    // pass 2: per-block elimination, one accumulator set per thread, merged in thread order
    using Acc = std::map<std::uint32_t, RankAccumulator<K>>;
    std::vector<Acc> accs(threads);
    parallel([&](unsigned t) {
        Acc& mine = accs[t];
        std::size_t ticks = 0;
        auto stop = [&] {
            if (++ticks % 1024 == 0 && deadline.passed()) timed_out = true;
            return timed_out.load();
        };
        for (std::size_t b = t; b < branches; b += threads)
            run_branch(b,
                       [&](const SparseRow<K>& row) {
                           if (row.empty()) return;
                           auto blk = block_of[row.front().first];
                           auto it = mine.find(blk);
                           if (it == mine.end()) it = mine.emplace(blk, RankAccumulator<K>(block_size[blk])).first;
                           if (it->second.full()) return;
                           SparseRow<K> lr;
                           lr.reserve(row.size());
                           for (const auto& [c, v] : row) lr.emplace_back(local[c], v);
                           std::sort(lr.begin(), lr.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
                           it->second.add(std::move(lr));
                       },
                       stop);
    });
    for (unsigned t = 1; t < threads; ++t)
        for (auto& [blk, acc] : accs[t]) {
            auto it = accs[0].find(blk);
            if (it == accs[0].end()) accs[0].emplace(blk, std::move(acc));
            else it->second.merge(acc);
        }
    for (const auto& [blk, acc] : accs[0]) res.value += acc.rank();
    return res;
}

} // namespace detail

/// c_n^H(A): rank of the evaluation tensors of all n! (dim H~)^n monomials built on the
/// effective-image basis.
template <typename K>
CodimResult codimension_stats(const HAction<K>& act, std::size_t n, const CodimOptions& opts = {}) {
    require(n >= 1, ErrorCode::precondition, "codimension degree must be at least 1");
    require(n <= 62, ErrorCode::resource_cap, "degree too large");
    const auto& ops = act.effective_image().operators;
    double est = detail::estimate_rows(n, ops.size());
    if (est > opts.row_cap)
        fail(ErrorCode::resource_cap, "estimated " + std::to_string(static_cast<long long>(est)) + " monomials exceeds the row cap of " +
                                          std::to_string(static_cast<long long>(opts.row_cap)));
    const std::size_t d = act.algebra().dim();
    if (d == 0) return {};
    std::size_t columns = detail::checked_power(d, n + 1);
    detail::MonomialRows<K> gen(act.algebra(), ops, n);
    auto res = detail::blocked_rank<K>(
        columns, gen.first_level_branches(),
        [&](std::size_t b, auto&& emit, auto&& stop) { gen.run_branch(b, emit, stop); }, opts);
    return res;
}

template <typename K>
std::size_t codimension(const HAction<K>& act, std::size_t n, const CodimOptions& opts = {}) {
    return codimension_stats(act, n, opts).value;
}

/// Codimension of multilinear graded polynomials: for every assignment of components to
/// x_1..x_n, the n! products x_{s(1)}...x_{s(n)} evaluated only at homogeneous basis points
/// of the assigned components. The assignments give disjoint column sets, so ranks add.
template <typename K>
std::size_t graded_codimension(const StructAlgebra<K>& a, const Grading& gr, std::size_t n, const CodimOptions& opts = {}) {
    validate_grading(a, gr);
    require(n >= 1, ErrorCode::precondition, "codimension degree must be at least 1");
    const std::size_t t = gr.elements.size(), d = a.dim();
    double est = detail::estimate_rows(n, t);
    if (est > opts.row_cap)
        fail(ErrorCode::resource_cap, "estimated " + std::to_string(static_cast<long long>(est)) + " graded monomials exceeds the row cap");
    detail::Deadline deadline(opts.wall_seconds);
    std::vector<std::vector<std::size_t>> component(t);
    for (std::size_t i = 0; i < d; ++i) component[gr.degrees[i]].push_back(i);
    std::size_t total = 0;
    std::vector<std::size_t> assign(n, 0);
    while (true) {
        // homogeneous tuples for this assignment
        std::size_t tuples = 1;
        for (auto g : assign) tuples *= component[g].size();
        if (tuples > 0) {
            RankAccumulator<K> acc(tuples * d);
            std::vector<std::size_t> sigma(n);
            std::iota(sigma.begin(), sigma.end(), 0);
            do {
                if (deadline.passed()) fail(ErrorCode::resource_cap, "wall-clock budget exceeded");
                Vec<K> row(tuples * d, K(0));
                std::vector<std::size_t> pick(n, 0);
                for (std::size_t tu = 0; tu < tuples; ++tu) {
                    Vec<K> prod = unit_vec<K>(d, component[assign[sigma[0]]][pick[sigma[0]]]);
                    for (std::size_t j = 1; j < n && !is_zero_vec(prod); ++j)
                        prod = a.mul(prod, unit_vec<K>(d, component[assign[sigma[j]]][pick[sigma[j]]]));
                    for (std::size_t k = 0; k < d; ++k) row[tu * d + k] = prod[k];
                    for (std::size_t p = n; p-- > 0;) {
                        if (++pick[p] < component[assign[p]].size()) break;
                        pick[p] = 0;
                    }
                }
                acc.add(row);
            } while (std::next_permutation(sigma.begin(), sigma.end()));
            total += acc.rank();
        }
        std::size_t p = n;
        while (p-- > 0) {
            if (++assign[p] < t) break;
            assign[p] = 0;
        }
        if (p == static_cast<std::size_t>(-1)) break;
    }
    return total;
}

} // namespace hpi
