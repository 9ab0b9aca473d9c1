#ifndef HOUGHTON_INDUCED_MAP_HPP
#define HOUGHTON_INDUCED_MAP_HPP

#include <string>
#include <vector>

#include "houghton/chain_complex.hpp"

namespace houghton {

struct DegreeVerdict {
    bool injective = false;
    bool surjective = false;
    bool isomorphism() const { return injective && surjective; }
};

/// Per-degree verdicts for the map on (unreduced) integer homology induced by
/// a degreewise cell injection sub -> sup. cell_maps[k][i] is the index in
/// C_k(sup) of the i-th k-cell of sub. The injection must be a chain map
/// (checked; VerificationError otherwise). Verdicts account for torsion: they
/// are computed from Smith-based presentations of the homology groups.
std::vector<DegreeVerdict> induced_inclusion_map(const ChainComplex& sub, const ChainComplex& sup,
                                                 const std::vector<std::vector<int>>& cell_maps);

} // namespace houghton

#endif
