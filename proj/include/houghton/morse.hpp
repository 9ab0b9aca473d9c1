#ifndef HOUGHTON_MORSE_HPP
#define HOUGHTON_MORSE_HPP

#include <optional>

#include "houghton/cubical_complex.hpp"
#include "houghton/morse_height.hpp"

namespace houghton {

/// Directions with strictly negative character coefficient. On a cube, the
/// lexicographic (chi, f) minimum sits at the corner descending exactly these
/// directions; with no character (pure f) it sits at the base.
DirMask negative_dirs(const std::optional<Character>& chi, int n);

/// The (chi,f)-ascending (descending) star of v is untruncated in X.
bool ascending_star_complete(const CubicalComplex& X, const std::optional<Character>& chi, VertexId v);
bool descending_star_complete(const CubicalComplex& X, const std::optional<Character>& chi, VertexId v);

/// Subcomplex of link(X, v) spanned by corner placements at which (chi, f)
/// attains its minimum (maximum) on the cube. Pass no character for the plain
/// f Morse function. Throws BoundaryVertexError when the corresponding star
/// is cut by the truncation, so results always match the infinite complex.
SimplicialComplex ascending_link(const CubicalComplex& X, const std::optional<Character>& chi, VertexId v);
SimplicialComplex descending_link(const CubicalComplex& X, const std::optional<Character>& chi, VertexId v);

/// Full subcomplex on the vertices with chi(v) >= t.
CubicalComplex superlevel_region(const CubicalComplex& X, const Character& chi, std::int64_t t);

} // namespace houghton

#endif
