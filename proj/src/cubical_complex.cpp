#include "houghton/cubical_complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "houghton/errors.hpp"

namespace houghton {

DirMask full_mask(int n)
{
    return static_cast<DirMask>((1u << n) - 1);
}

std::int64_t CubicalComplex::vertex_count() const
{
    return std::count(member.begin(), member.end(), char(1));
}

std::vector<VertexId> CubicalComplex::members() const
{
    std::vector<VertexId> out;
    for (std::size_t v = 0; v < member.size(); ++v)
        if (member[v]) out.push_back(static_cast<VertexId>(v));
    return out;
}

std::vector<VertexId> CubicalComplex::members_in_key_order() const
{
    std::vector<VertexId> out = members();
    std::sort(out.begin(), out.end(), [&](VertexId a, VertexId b) {
        return uni->verts[a].key() < uni->verts[b].key();
    });
    return out;
}

bool CubicalComplex::cube_present(VertexId base, DirMask dirs) const
{
    // Every corner (∏_{i∈I} t_i)∘base for I ⊆ dirs must be a member.
    for (DirMask sub = dirs;; sub = (sub - 1) & dirs) {
        const VertexId w = uni->vertex_at(base, sub);
        if (w < 0 || !member[w]) return false;
        if (sub == 0) break;
    }
    return true;
}

void CubicalComplex::seal()
{
    const DirMask all = full_mask(n());
    cube_bits.assign(member.size(), 0);
    for (std::size_t v = 0; v < member.size(); ++v) {
        if (!member[v]) continue;
        DirMask bits = 1; // the 0-cube
        for (DirMask K = 1; K <= all; ++K) {
            // present iff both facets at the lowest direction are present
            const DirMask low = K & static_cast<DirMask>(-K);
            const DirMask rest = static_cast<DirMask>(K ^ low);
            bool ok;
            if ((bits >> rest) & 1) {
                int ray = __builtin_ctz(low) + 1;
                const VertexId u = uni->up_of(static_cast<VertexId>(v), ray);
                ok = u >= 0 && member[u] && cube_present(static_cast<VertexId>(v), K);
            } else {
                ok = false;
            }
            if (ok) bits |= static_cast<DirMask>(DirMask(1) << K);
        }
        cube_bits[v] = bits;
    }
}

std::vector<std::int64_t> CubicalComplex::cube_counts() const
{
    std::vector<std::int64_t> counts(n() + 1, 0);
    const DirMask all = full_mask(n());
    for (std::size_t v = 0; v < member.size(); ++v) {
        if (!member[v]) continue;
        for (DirMask K = 0; K <= all; ++K)
            if ((cube_bits[v] >> K) & 1) ++counts[__builtin_popcount(K)];
    }
    return counts;
}

CubicalComplex full_subcomplex(const CubicalComplex& X,
                               const std::function<bool(const EventualInjection&)>& keep)
{
    CubicalComplex S = X;
    for (std::size_t v = 0; v < S.member.size(); ++v)
        if (S.member[v] && !keep(S.uni->verts[v])) S.member[v] = 0;
    S.seal();
    return S;
}

CubicalComplex full_subcomplex_ids(const CubicalComplex& X, const std::vector<char>& keep)
{
    if (keep.size() != X.member.size())
        throw DimensionError("full_subcomplex_ids: keep mask has wrong size");
    CubicalComplex S = X;
    for (std::size_t v = 0; v < S.member.size(); ++v) S.member[v] = S.member[v] && keep[v];
    S.seal();
    return S;
}

namespace {

/// Lower corners of v along the direction set `dirs`, i.e. all b with
/// v = (∏_{i∈dirs} t_i)∘b, restricted to the universe (and member set when
/// `members_only`). Sets `complete` to false when any in-math option is
/// missing from the traversal universe or fails membership.
std::vector<VertexId> lower_corners(const CubicalComplex& X, VertexId v, DirMask dirs,
                                    bool members_only, bool* complete)
{
    std::vector<VertexId> frontier = {v};
    const auto& uni = *X.uni;
    for (int i = 0; i < uni.n; ++i) {
        if (!(dirs & (DirMask(1) << i))) continue;
        std::set<VertexId> next;
        for (VertexId w : frontier) {
            auto [lo, hi] = uni.down_of(w, i + 1);
            const std::int64_t want = uni.verts[w].deficiency_f();
            if (complete && hi - lo < want) *complete = false;
            for (const VertexId* p = lo; p != hi; ++p) {
                if (members_only && !X.member[*p]) {
                    if (complete) *complete = false;
                    continue;
                }
                next.insert(*p);
            }
        }
        frontier.assign(next.begin(), next.end());
    }
    return frontier;
}

std::string up_label(int ray)
{
    return "u" + std::to_string(ray);
}

std::string down_label(int ray, VertexId neighbor)
{
    char buf[24];
    std::snprintf(buf, sizeof buf, "d%d@%09d", ray, neighbor);
    return buf;
}

} // namespace

std::vector<std::pair<Cube, DirMask>> cubes_containing_vertex(const CubicalComplex& X, VertexId v)
{
    if (!X.is_member(v)) throw IndexError("cubes_containing_vertex: unknown vertex");
    std::vector<std::pair<Cube, DirMask>> out;
    const DirMask all = full_mask(X.n());
    for (DirMask I = 0; I <= all; ++I) {
        for (VertexId b : lower_corners(X, v, I, true, nullptr)) {
            for (DirMask K = 0; K <= all; ++K) {
                if ((K & I) != I) continue;
                if (X.has_cube(b, K)) out.push_back({Cube{b, K}, I});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

SimplicialComplex link_filtered(const CubicalComplex& X, VertexId v,
                                const std::function<bool(Cube, DirMask)>& keep)
{
    if (!X.is_member(v)) throw IndexError("link: unknown vertex");
    SimplicialComplex L;
    const int n = X.n();
    for (const auto& [cube, I] : cubes_containing_vertex(X, v)) {
        if (cube.dirs == 0) continue;
        if (!keep(cube, I)) continue;
        std::vector<int> simplex;
        for (int i = 0; i < n; ++i) {
            const DirMask bit = DirMask(1) << i;
            if (!(cube.dirs & bit)) continue;
            if (I & bit) {
                // Neighbour across direction i+1: walk up from the base along
                // the remaining descent directions.
                const VertexId w = X.uni->vertex_at(cube.base, static_cast<DirMask>(I ^ bit));
                simplex.push_back(L.add_vertex(down_label(i + 1, w)));
            } else {
                simplex.push_back(L.add_vertex(up_label(i + 1)));
            }
        }
        L.insert_simplex(std::move(simplex));
    }
    return L;
}

SimplicialComplex link(const CubicalComplex& X, VertexId v)
{
    return link_filtered(X, v, [](Cube, DirMask) { return true; });
}

bool is_locally_full(const CubicalComplex& X, const CubicalComplex& S, VertexId v)
{
    if (X.uni != S.uni) throw ConfigError("is_locally_full: complexes must share a universe");
    if (!S.is_member(v)) throw IndexError("is_locally_full: vertex not in the subcomplex");
    const SimplicialComplex Lx = link(X, v);
    const SimplicialComplex Ls = link(S, v);
    for (const auto& face : Lx.faces()) {
        // Translate to Ls ids; the face must be present there whenever all of
        // its vertices are.
        std::vector<int> mapped;
        bool all_vertices_in_s = true;
        for (int u : face) {
            const int id = Ls.vertex_id(Lx.label(u));
            if (id < 0 || !Ls.has_face({id})) {
                all_vertices_in_s = false;
                break;
            }
            mapped.push_back(id);
        }
        if (all_vertices_in_s && !Ls.has_face(mapped)) return false;
    }
    return true;
}

std::vector<std::vector<VertexId>> connected_components(const CubicalComplex& X)
{
    const auto ids = X.members();
    std::vector<VertexId> parent(X.member.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<VertexId(VertexId)> find = [&](VertexId a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };
    auto unite = [&](VertexId a, VertexId b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[a] = b;
    };
    for (VertexId v : ids)
        for (int i = 1; i <= X.n(); ++i) {
            const VertexId u = X.uni->up_of(v, i);
            if (u >= 0 && X.member[u]) unite(v, u);
        }

    std::unordered_map<VertexId, std::vector<VertexId>> buckets;
    for (VertexId v : ids) buckets[find(v)].push_back(v);

    std::vector<std::vector<VertexId>> comps;
    comps.reserve(buckets.size());
    for (auto& [root, vec] : buckets) {
        std::sort(vec.begin(), vec.end(), [&](VertexId a, VertexId b) {
            return X.uni->verts[a].key() < X.uni->verts[b].key();
        });
        comps.push_back(std::move(vec));
    }
    std::sort(comps.begin(), comps.end(), [&](const auto& a, const auto& b) {
        return X.uni->verts[a.front()].key() < X.uni->verts[b.front()].key();
    });
    return comps;
}

bool star_complete(const CubicalComplex& X, VertexId v, DirMask down_dirs, DirMask up_dirs)
{
    if (!X.is_member(v)) throw IndexError("star_complete: unknown vertex");
    const auto& uni = *X.uni;
    const DirMask all = full_mask(X.n());
    for (DirMask I = 0; I <= all; ++I) {
        if ((I & down_dirs) != I) continue;
        bool complete = true;
        const std::vector<VertexId> corners = lower_corners(X, v, I, true, &complete);
        if (!complete) return false;
        const DirMask span = static_cast<DirMask>(I | up_dirs);
        for (VertexId b : corners) {
            for (DirMask J = 0; J <= all; ++J) {
                if ((J & span) != J) continue;
                const VertexId w = uni.vertex_at(b, J);
                if (w < 0 || !X.member[w]) return false;
            }
        }
    }
    return true;
}

bool is_interior(const CubicalComplex& X, VertexId v)
{
    const DirMask all = full_mask(X.n());
    return star_complete(X, v, all, all);
}

ChainComplex cubical_chain_complex(const CubicalComplex& X)
{
    std::vector<std::pair<std::int64_t, std::uint16_t>> cubes;
    const DirMask all = full_mask(X.n());
    for (std::size_t v = 0; v < X.member.size(); ++v) {
        if (!X.member[v]) continue;
        for (DirMask K = 0; K <= all; ++K)
            if ((X.cube_bits[v] >> K) & 1)
                cubes.push_back({static_cast<std::int64_t>(v), K});
    }
    return cubes_to_chain_complex(cubes, X.n(), [&](std::int64_t b, int ray) {
        return static_cast<std::int64_t>(X.uni->up_of(static_cast<VertexId>(b), ray));
    });
}

} // namespace houghton
