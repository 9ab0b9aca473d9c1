#ifndef HOUGHTON_BLANKETS_HPP
#define HOUGHTON_BLANKETS_HPP

#include <vector>

#include "houghton/cubical_complex.hpp"

namespace houghton {

/// Connected component of the full subcomplex on {v : chi_i(v) <= 0 for all
/// i in K}, cut inside an ambient region.
struct Blanket {
    DirMask K = 0;
    int index = 0;                      // position in least-key order
    std::vector<VertexId> vertices;     // key order
    std::string label;                  // canonical text of the least vertex
};

/// K-blankets of the region, ordered by least vertex encoding. K = 0 yields
/// the components of the whole region.
std::vector<Blanket> blanket_components(const CubicalComplex& X, DirMask K);

/// The full subcomplex the K-blankets decompose.
CubicalComplex blanket_subcomplex(const CubicalComplex& X, DirMask K);

/// Canonical descriptor of the restriction of v to ray i. Constant across
/// every edge not labelled t_i; separates identity from tau_i.
RayGerm ray_germ_invariant(const EventualInjection& v, int ray);

} // namespace houghton

#endif
