#include "houghton/smith.hpp"

#include <optional>

#include "houghton/dense_snf.hpp"

namespace houghton {

SmithResult smith_normal_form(const IntegerMatrix& M)
{
    auto [factors, rank] = detail::smith_factors(M);
    return {std::move(factors), rank};
}

// ---------------------------------------------------------------------------
// Dense SNF with transforms.

BigInt DenseSnf::diag(int k) const
{
    if (k < 0 || k >= static_cast<int>(D.size()) || k >= static_cast<int>(D.empty() ? 0 : D[0].size()))
        return 0;
    return D[k][k];
}

DenseMat dense_identity(int n)
{
    DenseMat I(n, std::vector<BigInt>(n, 0));
    for (int i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

DenseMat dense_mul(const DenseMat& A, const DenseMat& B)
{
    const int n = static_cast<int>(A.size());
    const int k = n ? static_cast<int>(A[0].size()) : 0;
    const int m = B.empty() ? 0 : static_cast<int>(B[0].size());
    DenseMat C(n, std::vector<BigInt>(m, 0));
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < k; ++t) {
            if (A[i][t] == 0) continue;
            for (int j = 0; j < m; ++j) C[i][j] += A[i][t] * B[t][j];
        }
    return C;
}

std::vector<BigInt> dense_apply(const DenseMat& A, const std::vector<BigInt>& x)
{
    std::vector<BigInt> y(A.size(), 0);
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            if (A[i][j] != 0 && x[j] != 0) y[i] += A[i][j] * x[j];
    return y;
}

namespace {

void swap_rows(DenseMat& M, DenseMat& U, int a, int b)
{
    std::swap(M[a], M[b]);
    std::swap(U[a], U[b]);
}
void swap_cols(DenseMat& M, DenseMat& V, int a, int b)
{
    for (auto& row : M) std::swap(row[a], row[b]);
    for (auto& row : V) std::swap(row[a], row[b]);
}
// row_a -= q * row_b
void row_op(DenseMat& M, DenseMat& U, int a, int b, const BigInt& q)
{
    if (q == 0) return;
    for (std::size_t j = 0; j < M[a].size(); ++j) M[a][j] -= q * M[b][j];
    for (std::size_t j = 0; j < U[a].size(); ++j) U[a][j] -= q * U[b][j];
}
// col_a -= q * col_b
void col_op(DenseMat& M, DenseMat& V, int a, int b, const BigInt& q)
{
    if (q == 0) return;
    for (auto& row : M) row[a] -= q * row[b];
    for (auto& row : V) row[a] -= q * row[b];
}

} // namespace

DenseSnf snf_with_transforms(const DenseMat& M0)
{
    DenseSnf s;
    s.D = M0;
    const int rows = static_cast<int>(M0.size());
    const int cols = rows ? static_cast<int>(M0[0].size()) : 0;
    s.U = dense_identity(rows);
    s.V = dense_identity(cols);
    DenseMat& D = s.D;

    const int steps = std::min(rows, cols);
    int k = 0;
    for (; k < steps; ++k) {
        // Locate a pivot: smallest nonzero absolute value in the submatrix.
        int pr = -1, pc = -1;
        BigInt best = 0;
        for (int i = k; i < rows; ++i)
            for (int j = k; j < cols; ++j) {
                if (D[i][j] == 0) continue;
                BigInt a = abs_of(D[i][j]);
                if (pr < 0 || a < best) {
                    best = a;
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) break; // submatrix is zero
        swap_rows(D, s.U, k, pr);
        swap_cols(D, s.V, k, pc);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = k + 1; i < rows; ++i) {
                if (D[i][k] == 0) continue;
                const BigInt q = D[i][k] / D[k][k];
                row_op(D, s.U, i, k, q);
                if (D[i][k] != 0) { // remainder became the smaller pivot
                    swap_rows(D, s.U, k, i);
                    clean = false;
                }
            }
            if (!clean) continue;
            for (int j = k + 1; j < cols; ++j) {
                if (D[k][j] == 0) continue;
                const BigInt q = D[k][j] / D[k][k];
                col_op(D, s.V, j, k, q);
                if (D[k][j] != 0) {
                    swap_cols(D, s.V, k, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Enforce divisibility of the remaining submatrix by the pivot.
            for (int i = k + 1; i < rows && clean; ++i)
                for (int j = k + 1; j < cols && clean; ++j)
                    if (D[i][j] % D[k][k] != 0) {
                        row_op(D, s.U, k, i, BigInt(-1)); // row_k += row_i
                        clean = false;
                    }
        }
        if (D[k][k] < 0) {
            for (int j = 0; j < cols; ++j) D[k][j] = -D[k][j];
            for (int j = 0; j < rows; ++j) s.U[k][j] = -s.U[k][j];
        }
    }
    s.rank = 0;
    for (int i = 0; i < steps; ++i)
        if (s.diag(i) != 0) ++s.rank;
    return s;
}

std::optional<std::vector<BigInt>> solve_integer(const DenseSnf& snf, const std::vector<BigInt>& b)
{
    const int rows = static_cast<int>(snf.U.size());
    const int cols = static_cast<int>(snf.V.size());
    if (static_cast<int>(b.size()) != rows) throw DimensionError("solve_integer: bad rhs length");
    const std::vector<BigInt> ub = dense_apply(snf.U, b);
    std::vector<BigInt> y(cols, 0);
    for (int i = 0; i < rows; ++i) {
        const BigInt d = snf.diag(i);
        if (i < cols && d != 0) {
            if (ub[i] % d != 0) return std::nullopt;
            y[i] = ub[i] / d;
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return dense_apply(snf.V, y);
}

std::vector<std::vector<BigInt>> kernel_basis(const DenseSnf& snf)
{
    const int cols = static_cast<int>(snf.V.size());
    std::vector<std::vector<BigInt>> basis;
    for (int j = snf.rank; j < cols; ++j) {
        std::vector<BigInt> v(cols);
        for (int i = 0; i < cols; ++i) v[i] = snf.V[i][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace houghton
