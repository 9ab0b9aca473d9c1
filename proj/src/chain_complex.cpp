#include "houghton/chain_complex.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "houghton/smith.hpp"

namespace houghton {

ChainComplex::ChainComplex(std::vector<std::int64_t> dims,
                           std::vector<SparseMat<std::int64_t>> boundaries)
    : dims_(std::move(dims)), boundary_(std::move(boundaries))
{
    while (dims_.size() > 1 && dims_.back() == 0) {
        dims_.pop_back();
        if (boundary_.size() >= dims_.size()) boundary_.pop_back();
    }
    if (dims_.empty()) dims_.push_back(0);
    if (boundary_.size() + 1 != dims_.size())
        throw DimensionError("chain complex needs one boundary matrix per degree >= 1");
    for (std::size_t k = 0; k < boundary_.size(); ++k) {
        if (boundary_[k].rows() != dims_[k] || boundary_[k].cols() != dims_[k + 1])
            throw DimensionError("boundary matrix shape mismatch at degree " + std::to_string(k + 1));
    }
    verify_dd_zero();
}

std::int64_t ChainComplex::cells(int k) const
{
    if (k < 0 || k > top_degree()) return 0;
    return dims_[k];
}

std::int64_t ChainComplex::total_cells() const
{
    std::int64_t t = 0;
    for (auto d : dims_) t += d;
    return t;
}

const SparseMat<std::int64_t>& ChainComplex::boundary(int k) const
{
    if (k < 1 || k > top_degree()) throw IndexError("boundary degree out of range");
    return boundary_[k - 1];
}

void ChainComplex::verify_dd_zero() const
{
    for (std::size_t k = 0; k + 1 < boundary_.size(); ++k) {
        if (!boundary_[k].multiply(boundary_[k + 1]).is_zero())
            throw VerificationError("d∘d != 0 at degree " + std::to_string(k + 2));
    }
}

namespace {

struct DegreeReduction {
    int rank = 0;
    std::vector<std::int64_t> torsion; // factors > 1 (small by construction)
};

DegreeReduction reduce_boundary(const SparseMat<std::int64_t>& d)
{
    DegreeReduction out;
    try {
        auto [factors, rank] = detail::smith_factors(d);
        out.rank = rank;
        for (const auto& f : factors)
            if (f > 1) out.torsion.push_back(f);
    } catch (const OverflowError&) {
        // Entry growth escaped int64; redo the reduction in cpp_int.
        auto big = d.cast<BigInt>();
        auto [factors, rank] = detail::smith_factors(big);
        out.rank = rank;
        for (const auto& f : factors)
            if (f > 1) out.torsion.push_back(f.convert_to<std::int64_t>());
    }
    return out;
}

} // namespace

HomologyResult homology_through(const ChainComplex& C, bool reduced, int max_degree,
                                const ExecutionPolicy& policy)
{
    const int top = C.top_degree();
    const int D = (max_degree < 0) ? top : std::min(top, max_degree);
    HomologyResult H;
    H.reduced = reduced;
    H.computed_through = D;
    H.cell_counts.resize(top + 1);
    for (int k = 0; k <= top; ++k) H.cell_counts[k] = C.cells(k);

    // by_degree[k] reduces d_k; degrees above D+1 are not needed.
    const int kmax = std::min(top, D + 1);
    std::vector<DegreeReduction> by_degree(kmax + 1);
    for_each_index(kmax, policy, [&](std::int64_t i) {
        const int k = static_cast<int>(i) + 1;
        by_degree[k] = reduce_boundary(C.boundary(k));
    });

    H.betti.assign(D + 1, 0);
    H.torsion.assign(D + 1, {});
    for (int k = 0; k <= D; ++k) {
        const std::int64_t rk = (k == 0) ? (reduced && C.cells(0) > 0 ? 1 : 0) : by_degree[k].rank;
        const std::int64_t rk1 = (k + 1 <= kmax) ? by_degree[k + 1].rank : 0;
        H.betti[k] = C.cells(k) - rk - rk1;
        if (k + 1 <= kmax) H.torsion[k] = by_degree[k + 1].torsion;
    }
    return H;
}

HomologyResult homology(const ChainComplex& C, bool reduced, const ExecutionPolicy& policy)
{
    return homology_through(C, reduced, -1, policy);
}

bool HomologyResult::trivial_through(int k) const
{
    for (int i = 0; i <= k && i < static_cast<int>(betti.size()); ++i) {
        if (betti[i] != 0) return false;
        if (!torsion[i].empty()) return false;
    }
    return true;
}

std::string HomologyResult::to_string() const
{
    std::ostringstream os;
    os << (reduced ? "reduced betti=(" : "betti=(");
    for (std::size_t k = 0; k < betti.size(); ++k) os << (k ? "," : "") << betti[k];
    os << ")";
    for (std::size_t k = 0; k < torsion.size(); ++k) {
        if (torsion[k].empty()) continue;
        os << " T" << k << "=[";
        for (std::size_t j = 0; j < torsion[k].size(); ++j) os << (j ? "," : "") << torsion[k][j];
        os << "]";
    }
    return os.str();
}

ChainComplex cubes_to_chain_complex(const std::vector<std::pair<std::int64_t, std::uint16_t>>& cubes,
                                    int ndirs,
                                    const std::function<std::int64_t(std::int64_t, int)>& up)
{
    // Cells per degree, sorted by (base, mask) for a stable basis.
    std::vector<std::vector<std::pair<std::int64_t, std::uint16_t>>> cells(ndirs + 1);
    for (const auto& c : cubes) cells[__builtin_popcount(c.second)].push_back(c);
    std::vector<std::map<std::pair<std::int64_t, std::uint16_t>, int>> index(ndirs + 1);
    std::vector<std::int64_t> dims(ndirs + 1, 0);
    for (int k = 0; k <= ndirs; ++k) {
        std::sort(cells[k].begin(), cells[k].end());
        cells[k].erase(std::unique(cells[k].begin(), cells[k].end()), cells[k].end());
        dims[k] = static_cast<std::int64_t>(cells[k].size());
        for (std::size_t i = 0; i < cells[k].size(); ++i)
            index[k].emplace(cells[k][i], static_cast<int>(i));
    }
    int top = ndirs;
    while (top > 0 && dims[top] == 0) --top;
    dims.resize(top + 1);

    std::vector<SparseMat<std::int64_t>> boundaries;
    for (int k = 1; k <= top; ++k) {
        SparseMat<std::int64_t> d(static_cast<int>(dims[k - 1]), static_cast<int>(dims[k]));
        for (std::size_t c = 0; c < cells[k].size(); ++c) {
            const auto [base, mask] = cells[k][c];
            int rank = 0;
            for (int i = 0; i < ndirs; ++i) {
                const std::uint16_t bit = std::uint16_t(1) << i;
                if (!(mask & bit)) continue;
                const std::uint16_t rest = static_cast<std::uint16_t>(mask ^ bit);
                const int sign = (rank % 2 == 0) ? 1 : -1;
                const auto bottom = index[k - 1].find({base, rest});
                const auto topf = index[k - 1].find({up(base, i + 1), rest});
                if (bottom == index[k - 1].end() || topf == index[k - 1].end())
                    throw VerificationError("cube list is not face-closed");
                d.add_to(topf->second, static_cast<int>(c), sign);
                d.add_to(bottom->second, static_cast<int>(c), -sign);
                ++rank;
            }
        }
        boundaries.push_back(std::move(d));
    }
    return ChainComplex(std::move(dims), std::move(boundaries));
}

int acyclicity_bound(const HomologyResult& H)
{
    if (!H.reduced) throw ConfigError("acyclicity_bound requires a reduced homology result");
    std::int64_t total = 0;
    int dim = 0;
    for (std::size_t k = 0; k < H.cell_counts.size(); ++k) {
        total += H.cell_counts[k];
        if (H.cell_counts[k] > 0) dim = static_cast<int>(k);
    }
    if (total == 0) return -2;
    if (H.computed_through < dim)
        throw ConfigError("acyclicity_bound needs homology computed through the top dimension");
    int bound = -1;
    for (int k = 0; k <= dim; ++k) {
        if (H.betti[k] != 0 || !H.torsion[k].empty()) break;
        bound = k;
    }
    return bound;
}

} // namespace houghton
