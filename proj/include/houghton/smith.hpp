#ifndef HOUGHTON_SMITH_HPP
#define HOUGHTON_SMITH_HPP

#include <algorithm>
#include <queue>
#include <tuple>
#include <vector>

#include "houghton/sparse_matrix.hpp"

namespace houghton {

struct SmithResult {
    std::vector<BigInt> factors; // divisibility chain d_1 | d_2 | ..., all >= 1
    int rank = 0;
};

/// Smith normal form of a sparse integer matrix: invariant factors plus rank.
/// Pivoting prefers units, then smallest absolute value with least fill.
SmithResult smith_normal_form(const IntegerMatrix& M);

namespace detail {

/// Sort a diagonal into a divisibility chain via pairwise gcd/lcm exchanges.
/// diag(a, b) is unimodularly equivalent to diag(gcd, lcm), so this preserves
/// the matrix class while normalizing.
template <class T>
void divisibility_fixup(std::vector<T>& d)
{
    for (auto& v : d) v = abs_of(v);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < d.size(); ++i) {
            for (std::size_t j = i + 1; j < d.size(); ++j) {
                if (d[j] % d[i] != 0) {
                    T g = gcd_of(d[i], d[j]);
                    T l = chk_mul(T(d[i] / g), d[j]);
                    d[i] = g;
                    d[j] = l;
                    changed = true;
                }
            }
        }
    }
    std::sort(d.begin(), d.end());
}

/// Diagonalize by unimodular row/column operations and return the diagonal
/// entries (unnormalized). Unit pivots are processed first through a lazy
/// heap keyed by Markowitz cost; the residual dense-ish core falls back to
/// remainder reduction on the globally smallest entry.
template <class T>
std::vector<T> diagonalize(const SparseMat<T>& M)
{
    const int rows = M.rows(), cols = M.cols();
    std::vector<std::map<int, T>> col(cols);
    std::vector<std::set<int>> row(rows);
    M.for_each([&](int r, int c, const T& v) {
        col[c].emplace(r, v);
        row[r].insert(c);
    });

    std::vector<char> row_done(rows, 0), col_done(cols, 0);
    std::vector<T> diag;

    auto entry = [&](int r, int c) -> T {
        auto it = col[c].find(r);
        return it == col[c].end() ? T(0) : it->second;
    };
    auto put = [&](int r, int c, const T& v) {
        if (v == 0) {
            col[c].erase(r);
            row[r].erase(c);
        } else {
            col[c][r] = v;
            row[r].insert(c);
        }
    };

    // dst -= q * src, as columns.
    auto col_axpy = [&](int dst, int src, const T& q) {
        if (q == 0) return;
        for (const auto& [r, v] : col[src]) {
            if (row_done[r]) continue;
            put(r, dst, chk_sub(entry(r, dst), chk_mul(q, v)));
        }
    };

    using Cand = std::tuple<std::size_t, int, int>; // (cost, row, col), min-heap
    std::priority_queue<Cand, std::vector<Cand>, std::greater<>> units;
    auto push_if_unit = [&](int r, int c, const T& v) {
        if (v == 1 || v == -1) units.emplace(row[r].size() * col[c].size(), r, c);
    };
    for (int c = 0; c < cols; ++c)
        for (const auto& [r, v] : col[c]) push_if_unit(r, c, v);

    // Clear the pivot row by column operations; afterwards the pivot column
    // clears for free because row ops against a singleton row cause no fill.
    auto eliminate = [&](int pr, int pc) {
        const T piv = entry(pr, pc);
        const std::vector<int> row_cols(row[pr].begin(), row[pr].end());
        for (int c2 : row_cols) {
            if (c2 == pc || col_done[c2]) continue;
            T q = entry(pr, c2) / piv; // exact: piv is a unit here
            col_axpy(c2, pc, q);
            for (const auto& [r2, v2] : col[c2])
                if (!row_done[r2]) push_if_unit(r2, c2, v2);
        }
        for (const auto& [r2, v2] : col[pc]) {
            (void)v2;
            if (r2 != pr) row[r2].erase(pc);
        }
        diag.push_back(piv);
        row_done[pr] = 1;
        col_done[pc] = 1;
        col[pc].clear();
        row[pr].clear();
    };

    // Phase 1: unit pivots.
    while (!units.empty()) {
        auto [cost, r, c] = units.top();
        units.pop();
        if (row_done[r] || col_done[c]) continue;
        const T v = entry(r, c);
        if (v != 1 && v != -1) continue;
        const std::size_t now = row[r].size() * col[c].size();
        if (now > cost && !units.empty()) {
            units.emplace(now, r, c); // stale cost, re-queue
            continue;
        }
        eliminate(r, c);
    }

    // Phase 2: whatever is left has no unit entries; use remainder reduction.
    while (true) {
        int pr = -1, pc = -1;
        T best(0);
        for (int c = 0; c < cols; ++c) {
            if (col_done[c]) continue;
            for (const auto& [r, v] : col[c]) {
                if (row_done[r]) continue;
                T a = abs_of(v);
                if (pr < 0 || a < best) {
                    best = a;
                    pr = r;
                    pc = c;
                }
            }
        }
        if (pr < 0) break;

        // Shrink the pivot until it divides its whole row and column.
        bool again = true;
        while (again) {
            again = false;
            const T piv = entry(pr, pc);
            std::vector<int> row_cols(row[pr].begin(), row[pr].end());
            for (int c2 : row_cols) {
                if (c2 == pc || col_done[c2]) continue;
                const T w = entry(pr, c2);
                if (w % piv != 0) {
                    col_axpy(c2, pc, T(w / piv));
                    pc = c2; // remainder is strictly smaller
                    again = true;
                    break;
                }
            }
            if (again) continue;
            std::vector<std::pair<int, T>> col_rows(col[pc].begin(), col[pc].end());
            for (const auto& [r2, w] : col_rows) {
                if (r2 == pr || row_done[r2]) continue;
                if (w % piv != 0) {
                    // row_{r2} -= q * row_{pr}
                    const T q = w / piv;
                    std::vector<int> cs(row[pr].begin(), row[pr].end());
                    for (int c3 : cs) {
                        if (col_done[c3]) continue;
                        put(r2, c3, chk_sub(entry(r2, c3), chk_mul(q, entry(pr, c3))));
                    }
                    pr = r2;
                    again = true;
                    break;
                }
            }
        }
        // Pivot divides everything adjacent; clear row then column.
        const T piv = entry(pr, pc);
        std::vector<int> row_cols(row[pr].begin(), row[pr].end());
        for (int c2 : row_cols) {
            if (c2 == pc || col_done[c2]) continue;
            col_axpy(c2, pc, T(entry(pr, c2) / piv));
        }
        std::vector<std::pair<int, T>> col_rows(col[pc].begin(), col[pc].end());
        for (const auto& [r2, w] : col_rows) {
            if (r2 == pr || row_done[r2]) continue;
            // row r has only the pivot left, so this merely zeroes (r2, pc).
            (void)w;
            put(r2, pc, T(0));
        }
        diag.push_back(piv);
        row_done[pr] = 1;
        col_done[pc] = 1;
        col[pc].clear();
        row[pr].clear();
    }

    return diag;
}

template <class T>
std::pair<std::vector<T>, int> smith_factors(const SparseMat<T>& M)
{
    std::vector<T> diag = diagonalize(M);
    divisibility_fixup(diag);
    return {diag, static_cast<int>(diag.size())};
}

} // namespace detail

/// Rank of an integer matrix (over Q; exact).
template <class T>
int integer_rank(const SparseMat<T>& M)
{
    return static_cast<int>(detail::diagonalize(M).size());
}

} // namespace houghton

#endif
