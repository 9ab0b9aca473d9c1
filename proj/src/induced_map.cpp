#include "houghton/induced_map.hpp"

#include <optional>

#include "houghton/dense_snf.hpp"
#include "houghton/errors.hpp"

namespace houghton {

namespace {

DenseMat to_dense(const SparseMat<std::int64_t>& M)
{
    DenseMat D(M.rows(), std::vector<BigInt>(M.cols(), 0));
    M.for_each([&](int r, int c, std::int64_t v) { D[r][c] = v; });
    return D;
}

DenseMat injection_matrix(int sup_cells, const std::vector<int>& map)
{
    DenseMat D(sup_cells, std::vector<BigInt>(map.size(), 0));
    for (std::size_t i = 0; i < map.size(); ++i) {
        if (map[i] < 0 || map[i] >= sup_cells) throw IndexError("cell map index out of range");
        D[map[i]][i] = 1;
    }
    return D;
}

DenseMat columns(const DenseMat& M, const std::vector<int>& which)
{
    const int rows = static_cast<int>(M.size());
    DenseMat out(rows, std::vector<BigInt>(which.size(), 0));
    for (int r = 0; r < rows; ++r)
        for (std::size_t j = 0; j < which.size(); ++j) out[r][j] = M[r][which[j]];
    return out;
}

/// Generators and relations for H_k = ker d_k / im d_{k+1}: columns of Z span
/// the cycle lattice, X expresses the boundaries in that basis.
struct Presentation {
    DenseMat Z;       // c_k x z_k, columns = cycle basis
    DenseSnf Zsnf;    // SNF of Z, for solving Z y = v
    DenseMat X;       // z_k x b_{k+1}, relations
    DenseSnf Xsnf;    // SNF of X, for membership in im X
    int gens = 0;
};

Presentation presentation(const ChainComplex& C, int k)
{
    Presentation P;
    const int ck = static_cast<int>(C.cells(k));
    if (k >= 1) {
        const DenseSnf s = snf_with_transforms(to_dense(C.boundary(k)));
        const auto basis = kernel_basis(s);
        P.Z = DenseMat(ck, std::vector<BigInt>(basis.size(), 0));
        for (std::size_t j = 0; j < basis.size(); ++j)
            for (int i = 0; i < ck; ++i) P.Z[i][j] = basis[j][i];
    } else {
        P.Z = dense_identity(ck); // d_0 = 0
    }
    P.gens = P.Z.empty() ? 0 : static_cast<int>(P.Z[0].size());
    P.Zsnf = snf_with_transforms(P.Z);

    const int bk = (k + 1 <= C.top_degree()) ? static_cast<int>(C.cells(k + 1)) : 0;
    P.X = DenseMat(P.gens, std::vector<BigInt>(bk, 0));
    if (bk > 0) {
        const DenseMat dk1 = to_dense(C.boundary(k + 1));
        for (int c = 0; c < bk; ++c) {
            std::vector<BigInt> col(C.cells(k));
            for (int r = 0; r < static_cast<int>(C.cells(k)); ++r) col[r] = dk1[r][c];
            auto y = solve_integer(P.Zsnf, col);
            if (!y) throw VerificationError("boundary column not a cycle (d∘d != 0?)");
            for (int r = 0; r < P.gens; ++r) P.X[r][c] = (*y)[r];
        }
    }
    P.Xsnf = snf_with_transforms(P.X);
    return P;
}

bool in_image(const DenseSnf& snf, const std::vector<BigInt>& v)
{
    return solve_integer(snf, v).has_value();
}

} // namespace

std::vector<DegreeVerdict> induced_inclusion_map(const ChainComplex& sub, const ChainComplex& sup,
                                                 const std::vector<std::vector<int>>& cell_maps)
{
    const int top = std::min(sub.top_degree(), sup.top_degree());
    if (static_cast<int>(cell_maps.size()) < sub.top_degree() + 1)
        throw DimensionError("induced_inclusion_map: need one cell map per degree of sub");

    // Chain-map check: d_sup * iota_k = iota_{k-1} * d_sub for all k.
    for (int k = 1; k <= sub.top_degree(); ++k) {
        const auto& dsub = sub.boundary(k);
        const auto& dsup = (k <= sup.top_degree()) ? sup.boundary(k) : SparseMat<std::int64_t>();
        if (k > sup.top_degree() && sub.cells(k) > 0)
            throw VerificationError("cell injection maps into missing degree of sup");
        for (int c = 0; c < static_cast<int>(sub.cells(k)); ++c) {
            std::vector<BigInt> lhs(sup.cells(k - 1), 0), rhs(sup.cells(k - 1), 0);
            for (const auto& [r, v] : dsup.column(cell_maps[k][c])) lhs[r] = v;
            for (const auto& [r, v] : dsub.column(c)) rhs[cell_maps[k - 1][r]] += v;
            if (lhs != rhs) throw VerificationError("cell injection is not a chain map");
        }
    }

    std::vector<DegreeVerdict> verdicts(top + 1);
    for (int k = 0; k <= top; ++k) {
        const Presentation A = presentation(sub, k);
        const Presentation B = presentation(sup, k);

        // Y: generators of H_k(sub) written in sup's cycle basis.
        DenseMat iota = injection_matrix(static_cast<int>(sup.cells(k)), cell_maps[k]);
        DenseMat img = dense_mul(iota, A.Z); // c_k(sup) x gens(A)
        DenseMat Y(B.gens, std::vector<BigInt>(A.gens, 0));
        for (int j = 0; j < A.gens; ++j) {
            std::vector<BigInt> col(sup.cells(k));
            for (int i = 0; i < static_cast<int>(sup.cells(k)); ++i) col[i] = img[i][j];
            auto y = solve_integer(B.Zsnf, col);
            if (!y) throw VerificationError("image of a cycle is not a cycle");
            for (int i = 0; i < B.gens; ++i) Y[i][j] = (*y)[i];
        }

        // Surjective iff im Y + im X_sup is everything: SNF of [Y | X_sup]
        // has full rank with unit factors.
        const int bcols = B.X.empty() ? 0 : static_cast<int>(B.X[0].size());
        DenseMat YX(B.gens, std::vector<BigInt>(A.gens + bcols, 0));
        for (int i = 0; i < B.gens; ++i) {
            for (int j = 0; j < A.gens; ++j) YX[i][j] = Y[i][j];
            for (int j = 0; j < bcols; ++j) YX[i][A.gens + j] = B.X[i][j];
        }
        const DenseSnf yx = snf_with_transforms(YX);
        bool surj = (yx.rank == B.gens);
        for (int i = 0; i < yx.rank && surj; ++i)
            if (yx.diag(i) != 1) surj = false;
        verdicts[k].surjective = surj;

        // Injective iff every v with Y v ∈ im X_sup lies in im X_sub:
        // project ker [Y | -X_sup] to the v block and test membership.
        DenseMat K(B.gens, std::vector<BigInt>(A.gens + bcols, 0));
        for (int i = 0; i < B.gens; ++i) {
            for (int j = 0; j < A.gens; ++j) K[i][j] = Y[i][j];
            for (int j = 0; j < bcols; ++j) K[i][A.gens + j] = -B.X[i][j];
        }
        bool inj = true;
        if (A.gens > 0) {
            const DenseSnf ks = snf_with_transforms(K);
            for (const auto& kvec : kernel_basis(ks)) {
                std::vector<BigInt> v(kvec.begin(), kvec.begin() + A.gens);
                if (!in_image(A.Xsnf, v)) {
                    inj = false;
                    break;
                }
            }
        }
        verdicts[k].injective = inj;
    }
    return verdicts;
}

} // namespace houghton
