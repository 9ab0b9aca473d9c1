#ifndef HOUGHTON_DENSE_SNF_HPP
#define HOUGHTON_DENSE_SNF_HPP

#include <optional>
#include <vector>

#include "houghton/sparse_matrix.hpp"

namespace houghton {

using DenseMat = std::vector<std::vector<BigInt>>; // row major

/// U * M * V = D with U, V unimodular and D in Smith normal form. Dense,
/// arbitrary precision; intended for the small matrices that induced-map
/// computations see. Exposes enough to solve integer systems and extract
/// kernel bases.
struct DenseSnf {
    DenseMat D, U, V;
    int rank = 0;

    /// Diagonal entry d_k (0 beyond rank).
    BigInt diag(int k) const;
};

DenseSnf snf_with_transforms(const DenseMat& M);

DenseMat dense_identity(int n);
DenseMat dense_mul(const DenseMat& A, const DenseMat& B);
std::vector<BigInt> dense_apply(const DenseMat& A, const std::vector<BigInt>& x);

/// Solve M x = b over the integers via a precomputed SNF of M.
/// Returns nullopt when no integer solution exists.
std::optional<std::vector<BigInt>> solve_integer(const DenseSnf& snf, const std::vector<BigInt>& b);

/// Basis of the integer kernel of M (columns of V past the rank).
std::vector<std::vector<BigInt>> kernel_basis(const DenseSnf& snf);

} // namespace houghton

#endif
