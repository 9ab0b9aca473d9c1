#include "houghton/morse.hpp"

#include "houghton/errors.hpp"

namespace houghton {

DirMask negative_dirs(const std::optional<Character>& chi, int n)
{
    DirMask neg = 0;
    if (chi) {
        if (chi->n() != n) throw DimensionError("negative_dirs: character dimension mismatch");
        for (int i = 0; i < n; ++i)
            if (chi->coeffs()[i] < 0) neg |= DirMask(1) << i;
    }
    return neg;
}

bool ascending_star_complete(const CubicalComplex& X, const std::optional<Character>& chi, VertexId v)
{
    const DirMask neg = negative_dirs(chi, X.n());
    const DirMask nonneg = static_cast<DirMask>(full_mask(X.n()) & ~neg);
    return star_complete(X, v, neg, nonneg);
}

bool descending_star_complete(const CubicalComplex& X, const std::optional<Character>& chi, VertexId v)
{
    const DirMask neg = negative_dirs(chi, X.n());
    const DirMask nonneg = static_cast<DirMask>(full_mask(X.n()) & ~neg);
    return star_complete(X, v, nonneg, neg);
}

namespace {

SimplicialComplex morse_link(const CubicalComplex& X, const std::optional<Character>& chi,
                             VertexId v, bool ascending)
{
    const DirMask neg = negative_dirs(chi, X.n());
    const DirMask nonneg = static_cast<DirMask>(full_mask(X.n()) & ~neg);
    const bool complete = ascending ? ascending_star_complete(X, chi, v)
                                    : descending_star_complete(X, chi, v);
    if (!complete)
        throw BoundaryVertexError(std::string(ascending ? "ascending" : "descending") +
                                  " star of vertex is cut by the region truncation");
    // The extreme corner of a cube (b, K): descend the negative directions of
    // K for the minimum, the non-negative ones for the maximum (f breaks chi
    // ties, so zero-coefficient directions count as ascending).
    return link_filtered(X, v, [&](Cube cube, DirMask I) {
        if (cube.dirs == 0) return false;
        const DirMask want = ascending ? static_cast<DirMask>(cube.dirs & neg)
                                       : static_cast<DirMask>(cube.dirs & nonneg);
        return I == want;
    });
}

} // namespace

SimplicialComplex ascending_link(const CubicalComplex& X, const std::optional<Character>& chi, VertexId v)
{
    return morse_link(X, chi, v, true);
}

SimplicialComplex descending_link(const CubicalComplex& X, const std::optional<Character>& chi, VertexId v)
{
    return morse_link(X, chi, v, false);
}

CubicalComplex superlevel_region(const CubicalComplex& X, const Character& chi, std::int64_t t)
{
    if (chi.n() != X.n()) throw DimensionError("superlevel_region: character dimension mismatch");
    return full_subcomplex(X, [&](const EventualInjection& v) { return chi.eval(v) >= t; });
}

} // namespace houghton
