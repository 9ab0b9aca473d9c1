#ifndef HOUGHTON_CHAIN_COMPLEX_HPP
#define HOUGHTON_CHAIN_COMPLEX_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "houghton/parallel.hpp"
#include "houghton/sparse_matrix.hpp"

namespace houghton {

/// Integer cellular chain complex: cell counts per degree and boundary
/// matrices d_k : C_k -> C_{k-1}. d_{k-1} * d_k = 0 is asserted on seal.
class ChainComplex {
public:
    ChainComplex() = default;

    /// dims[k] = number of k-cells; boundaries[k-1] is d_k (so boundaries has
    /// one entry per degree 1..top).
    ChainComplex(std::vector<std::int64_t> dims, std::vector<SparseMat<std::int64_t>> boundaries);

    int top_degree() const { return static_cast<int>(dims_.size()) - 1; }
    std::int64_t cells(int k) const;
    std::int64_t total_cells() const;
    const SparseMat<std::int64_t>& boundary(int k) const; // d_k, 1 <= k <= top

    /// d_{k-1} d_k == 0 for all k; throws VerificationError otherwise.
    void verify_dd_zero() const;

private:
    std::vector<std::int64_t> dims_;
    std::vector<SparseMat<std::int64_t>> boundary_;
};

struct HomologyResult {
    bool reduced = false;
    int computed_through = -1;                        // degrees 0..computed_through are valid
    std::vector<std::int64_t> cell_counts;
    std::vector<std::int64_t> betti;                  // per computed degree
    std::vector<std::vector<std::int64_t>> torsion;   // invariant factors > 1, per degree

    bool trivial_through(int k) const;               // H_i = 0 for all i <= k
    std::string to_string() const;
    friend bool operator==(const HomologyResult&, const HomologyResult&) = default;
};

/// Exact integer homology. Betti_k = dim C_k - rank d_k - rank d_{k+1};
/// torsion from the invariant factors of d_{k+1}. Runs an int64 fast path and
/// retries with arbitrary precision on overflow. Distinct degrees reduce
/// independently under the given policy.
HomologyResult homology(const ChainComplex& C, bool reduced,
                        const ExecutionPolicy& policy = ExecutionPolicy::serial());

/// Same, but only reduces the boundary matrices needed for degrees
/// 0..max_degree.
HomologyResult homology_through(const ChainComplex& C, bool reduced, int max_degree,
                                const ExecutionPolicy& policy = ExecutionPolicy::serial());

/// Largest k such that reduced H_i vanishes for all i <= k, capped at the
/// complex dimension. Empty complex: -2. Nonempty but reduced H_0 != 0: -1.
int acyclicity_bound(const HomologyResult& H);

/// Chain complex of an explicit face-closed cube list. Cubes are keyed by
/// (base vertex, direction mask); `up(base, ray)` resolves the far corner of
/// an edge. Boundary of a cube = sum over its directions i (rank r inside the
/// sorted direction set) of (-1)^r (top_i - bottom_i).
ChainComplex cubes_to_chain_complex(const std::vector<std::pair<std::int64_t, std::uint16_t>>& cubes,
                                    int ndirs,
                                    const std::function<std::int64_t(std::int64_t, int)>& up);

} // namespace houghton

#endif
