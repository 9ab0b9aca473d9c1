#ifndef HOUGHTON_CUBICAL_COMPLEX_HPP
#define HOUGHTON_CUBICAL_COMPLEX_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "houghton/character.hpp"
#include "houghton/injection.hpp"
#include "houghton/simplicial_complex.hpp"

namespace houghton {

using VertexId = std::int32_t;
using DirMask = std::uint16_t; // bit (i-1) = direction t_i

/// Finite truncation parameters for a region of the cube complex X_n.
/// A vertex is admitted to the traversal universe iff its canonical encoding
/// fits the window: B_i <= W, |m_i| <= W, and every exception image position
/// <= W. The f-bound and the optional chi-superlevel threshold act as keep
/// filters on top of the traversal.
struct RegionSpec {
    int n = 2;
    int f_bound = 3;
    std::optional<Character> chi;
    std::int64_t chi_threshold = 0;
    int window = 2;
    std::int64_t max_vertices = 5'000'000; // traversal size guard

    static RegionSpec defaults(int n); // f_bound = 3n-3, window = 2
    void validate() const;

    bool in_window(const EventualInjection& v) const;
    bool keeps(const EventualInjection& v) const; // in_window plus f/chi filters
};

/// The BFS-reachable part of the window universe: vertex registry plus the
/// up/down edge structure. Built single-writer, immutable afterwards, shared
/// between all subcomplexes cut from one region.
class VertexUniverse {
public:
    int n = 0;
    int window = 0;
    std::vector<EventualInjection> verts; // by id, discovery order
    std::unordered_map<std::string, VertexId> index; // canonical byte key -> id
    std::vector<VertexId> up;             // n per vertex; -1 = leaves the window
    std::vector<std::int64_t> down_off;   // CSR offsets, size n*V()+1
    std::vector<VertexId> down_dat;

    // up_of(v, i) = id of t_i∘v, or -1 when t_i∘v leaves the window.
    VertexId up_of(VertexId v, int ray) const { return up[static_cast<std::size_t>(v) * n + ray - 1]; }
    // In-window down options along `ray` (ids b with up(b, ray) == v), ascending.
    std::pair<const VertexId*, const VertexId*> down_of(VertexId v, int ray) const;

    VertexId id_of(const EventualInjection& v) const; // -1 if not reached
    std::int64_t size() const { return static_cast<std::int64_t>(verts.size()); }

    /// Walk up-pointers along all directions in `mask`; -1 if any step leaves
    /// the window.
    VertexId vertex_at(VertexId base, DirMask mask) const;

    void build_down_csr();
};

struct Cube {
    VertexId base = -1;
    DirMask dirs = 0;
    int dim() const { return __builtin_popcount(dirs); }
    friend auto operator<=>(const Cube&, const Cube&) = default;
};

/// A finite full-subcomplex region of X_n: member vertex set plus, per member
/// vertex, the bitmask of direction sets spanning a fully-present cube based
/// there. Immutable once built; queries are safe to run concurrently.
class CubicalComplex {
public:
    std::shared_ptr<const VertexUniverse> uni;
    RegionSpec spec;
    std::vector<char> member;
    std::vector<DirMask> cube_bits; // bit K set iff cube (v, K) present; bit 0 = member

    int n() const { return uni->n; }
    std::int64_t universe_size() const { return uni->size(); }
    std::int64_t vertex_count() const;
    std::vector<std::int64_t> cube_counts() const; // per dimension 0..n
    bool is_member(VertexId v) const { return v >= 0 && member[v]; }
    const EventualInjection& vertex(VertexId v) const { return uni->verts[v]; }
    bool has_cube(VertexId base, DirMask dirs) const
    {
        return base >= 0 && ((cube_bits[base] >> dirs) & 1) != 0;
    }

    std::vector<VertexId> members() const;

    /// Members sorted by canonical key order (the deterministic report order).
    std::vector<VertexId> members_in_key_order() const;

    void seal(); // recompute cube_bits from member

private:
    bool cube_present(VertexId base, DirMask dirs) const;
};

/// Breadth-first region construction: traverses the window universe from the
/// seeds, keeps vertices passing the f / chi filters, and takes the full
/// subcomplex on them. Errors on an empty seed list or a seed violating the
/// spec predicates.
CubicalComplex enumerate_region(const std::vector<EventualInjection>& seeds, const RegionSpec& spec);

/// Region used by descending-link experiments: the full subcomplex on all
/// lower corners of the seeds along every direction subset (no window cut).
/// Contains the complete descending star of every seed.
CubicalComplex descending_star_region(const std::vector<EventualInjection>& seeds, const RegionSpec& spec);

/// Full subcomplex on the member vertices passing `keep`.
CubicalComplex full_subcomplex(const CubicalComplex& X, const std::function<bool(const EventualInjection&)>& keep);
CubicalComplex full_subcomplex_ids(const CubicalComplex& X, const std::vector<char>& keep);

/// Every cube of X having v as a vertex, with the corner subset placing v.
std::vector<std::pair<Cube, DirMask>> cubes_containing_vertex(const CubicalComplex& X, VertexId v);

/// Link of v: one vertex per edge at v (labels "u<i>" / "d<i>@<id>"), one
/// simplex per corner placement realized by a cube of X.
SimplicialComplex link(const CubicalComplex& X, VertexId v);

/// Link restricted to the cubes (with v's corner placement) passing `keep`;
/// the Morse links are carved out this way.
SimplicialComplex link_filtered(const CubicalComplex& X, VertexId v,
                                const std::function<bool(Cube, DirMask)>& keep);

/// True iff the link of v in S is a full subcomplex of the link of v in X.
/// S must share X's universe and v must belong to S.
bool is_locally_full(const CubicalComplex& X, const CubicalComplex& S, VertexId v);

/// Partition of the member vertices into 1-skeleton components, ordered by
/// least canonical key; vertices inside each component in key order.
std::vector<std::vector<VertexId>> connected_components(const CubicalComplex& X);

/// All cubes of the infinite complex X_n containing v lie fully inside the
/// region when restricted to descents along `down_dirs` and ascents along
/// `up_dirs`. Full interiority = both masks full.
bool star_complete(const CubicalComplex& X, VertexId v, DirMask down_dirs, DirMask up_dirs);
bool is_interior(const CubicalComplex& X, VertexId v);

DirMask full_mask(int n);

/// Cellular chain complex of the region (cells = cubes by dimension).
ChainComplex cubical_chain_complex(const CubicalComplex& X);

} // namespace houghton

#endif
