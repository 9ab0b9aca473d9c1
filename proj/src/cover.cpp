#include "houghton/cover.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "houghton/errors.hpp"

namespace houghton {

namespace {

void require_shared_universe(const CubicalComplex& a, const CubicalComplex& b, const char* who)
{
    if (a.uni != b.uni) throw ConfigError(std::string(who) + ": complexes must share a universe");
}

} // namespace

CoverDecomposition cover_pieces(const CubicalComplex& ambient, const CubicalComplex& region0,
                                const Character& chi)
{
    require_shared_universe(ambient, region0, "cover_pieces");
    if (chi.n() != ambient.n()) throw DimensionError("cover_pieces: character dimension mismatch");
    if (!chi.is_ascending_standard())
        throw ConfigError("cover_pieces: character must be in ascending standard form");

    CoverDecomposition out;
    out.chi = chi;
    out.m = chi.m_of_chi();
    for (int type = 1; type <= out.m; ++type) {
        const DirMask K = DirMask(1) << (type - 1);
        int alpha = 0;
        for (const Blanket& blanket : blanket_components(ambient, K)) {
            CoverPiece piece;
            piece.type = type;
            for (VertexId v : blanket.vertices)
                if (region0.member[v]) piece.vertices.push_back(v);
            if (piece.vertices.empty()) continue;
            std::sort(piece.vertices.begin(), piece.vertices.end());
            piece.alpha = alpha++;
            piece.label = "Y" + std::to_string(type) + "^" + std::to_string(piece.alpha);
            out.pieces.push_back(std::move(piece));
        }
    }
    return out;
}

std::vector<VertexId> cover_defect(const CoverDecomposition& cover, const CubicalComplex& region0)
{
    std::vector<char> covered(region0.member.size(), 0);
    for (const auto& piece : cover.pieces)
        for (VertexId v : piece.vertices) covered[v] = 1;
    std::vector<VertexId> missing;
    for (std::size_t v = 0; v < region0.member.size(); ++v)
        if (region0.member[v] && !covered[v]) missing.push_back(static_cast<VertexId>(v));
    return missing;
}

Nerve nerve(const CoverDecomposition& cover, const CubicalComplex& region0)
{
    if (!cover_defect(cover, region0).empty())
        throw VerificationError("nerve: pieces do not cover the region");

    Nerve L;
    L.vertex_piece.resize(cover.pieces.size());
    std::vector<int> nerve_vertex(cover.pieces.size());
    for (std::size_t p = 0; p < cover.pieces.size(); ++p) {
        const int id = L.complex.add_vertex(cover.pieces[p].label);
        nerve_vertex[p] = id;
        L.vertex_piece[id] = {cover.pieces[p].type, cover.pieces[p].alpha};
        L.complex.insert_simplex({id});
    }

    // Pieces of one type are disjoint, so each region vertex selects at most
    // one piece per type; its piece set spans a simplex.
    std::vector<std::vector<int>> pieces_at(region0.member.size());
    for (std::size_t p = 0; p < cover.pieces.size(); ++p)
        for (VertexId v : cover.pieces[p].vertices) pieces_at[v].push_back(static_cast<int>(p));

    std::set<std::vector<int>> seen;
    for (std::size_t v = 0; v < pieces_at.size(); ++v) {
        if (pieces_at[v].empty()) continue;
        std::vector<int> simplex;
        for (int p : pieces_at[v]) simplex.push_back(nerve_vertex[p]);
        std::sort(simplex.begin(), simplex.end());
        if (seen.insert(simplex).second) L.complex.insert_simplex(simplex);
    }
    return L;
}

CubicalComplex piece_intersection(const CoverDecomposition& cover, const CubicalComplex& region0,
                                  const std::vector<int>& piece_indices)
{
    std::vector<char> keep(region0.member.size(), 0);
    bool first = true;
    for (int p : piece_indices) {
        const auto& verts = cover.pieces.at(p).vertices;
        if (first) {
            for (VertexId v : verts) keep[v] = 1;
            first = false;
        } else {
            std::vector<char> next(region0.member.size(), 0);
            for (VertexId v : verts)
                if (keep[v]) next[v] = 1;
            keep.swap(next);
        }
    }
    if (first) throw ConfigError("piece_intersection: empty index list");
    return full_subcomplex_ids(region0, keep);
}

SphereWitness sphere_witness(const CubicalComplex& ambient, const CubicalComplex& region0,
                             const CoverDecomposition& cover, const Nerve& L,
                             const ExecutionPolicy& policy)
{
    require_shared_universe(ambient, region0, "sphere_witness");
    const int n = ambient.n();
    const int m = cover.m;

    SphereWitness w;
    const EventualInjection id = EventualInjection::identity(n);

    // Locate the piece of a given type containing a given element.
    auto piece_containing = [&](int type, const EventualInjection& g) -> int {
        const VertexId v = ambient.uni->id_of(g);
        if (v < 0 || !region0.member[v])
            throw VerificationError("sphere_witness: witness element missing from the region");
        for (std::size_t p = 0; p < cover.pieces.size(); ++p) {
            if (cover.pieces[p].type != type) continue;
            if (std::binary_search(cover.pieces[p].vertices.begin(),
                                   cover.pieces[p].vertices.end(), v))
                return static_cast<int>(p);
        }
        throw VerificationError("sphere_witness: witness element not covered at its type");
    };

    w.all_distinct = true;
    for (int i = 1; i <= m; ++i) {
        const EventualInjection tau = EventualInjection::transposition_tau(i, n);
        const int p_id = piece_containing(i, id);
        const int p_tau = piece_containing(i, tau);
        w.pieces_per_type.push_back({p_id, p_tau});

        // Two certification routes: component membership and the ray germ.
        const bool components_distinct = (p_id != p_tau);
        const bool germs_distinct = !(ray_germ_invariant(id, i) == ray_germ_invariant(tau, i));
        if (components_distinct != germs_distinct)
            throw VerificationError(
                "sphere_witness: component and germ certificates disagree at type " +
                std::to_string(i));
        if (!components_distinct) w.all_distinct = false;
    }

    // The 2^m products of transpositions witness every mixed intersection.
    w.all_intersections_nonempty = true;
    for (std::uint32_t eps = 0; eps < (1u << m); ++eps) {
        EventualInjection g = id;
        for (int i = 1; i <= m; ++i)
            if (eps & (1u << (i - 1))) g = g.compose(EventualInjection::transposition_tau(i, n));
        w.elements.push_back(g);
        const VertexId v = ambient.uni->id_of(g);
        std::vector<int> face;
        for (int i = 1; i <= m; ++i) {
            const int p = w.pieces_per_type[i - 1][(eps >> (i - 1)) & 1];
            const auto& verts = cover.pieces[p].vertices;
            if (v < 0 || !std::binary_search(verts.begin(), verts.end(), v)) {
                w.all_intersections_nonempty = false;
            }
            face.push_back(L.complex.vertex_id(cover.pieces[p].label));
        }
        w.sphere_faces.push_back(std::move(face));
    }

    const HomologyResult H = homology(simplicial_chain_complex(L.complex), true, policy);
    const int deg = m - 1;
    w.nerve_nonacyclic = deg < static_cast<int>(H.betti.size()) &&
                         (H.betti[deg] != 0 || !H.torsion[deg].empty());
    return w;
}

StrongNerveReport strong_nerve_hypotheses(const CubicalComplex& region0,
                                          const CoverDecomposition& cover, const Nerve& L,
                                          int up_to, const ExecutionPolicy& policy)
{
    StrongNerveReport report;
    report.up_to = up_to;

    // Nonempty intersections = faces of the nerve.
    std::map<std::string, int> piece_by_label;
    for (std::size_t p = 0; p < cover.pieces.size(); ++p)
        piece_by_label[cover.pieces[p].label] = static_cast<int>(p);
    for (const auto& face : L.complex.faces()) {
        const int r = static_cast<int>(face.size());
        if (r > up_to) continue;
        IntersectionCheck check;
        check.r = r;
        check.required_degree = up_to - r;
        for (int v : face) check.piece_indices.push_back(piece_by_label.at(L.complex.label(v)));
        std::sort(check.piece_indices.begin(), check.piece_indices.end());
        report.checks.push_back(std::move(check));
    }
    std::sort(report.checks.begin(), report.checks.end(),
              [](const IntersectionCheck& a, const IntersectionCheck& b) {
                  if (a.r != b.r) return a.r < b.r;
                  return a.piece_indices < b.piece_indices;
              });

    for_each_index(static_cast<std::int64_t>(report.checks.size()), policy, [&](std::int64_t i) {
        IntersectionCheck& check = report.checks[i];
        const CubicalComplex Y = piece_intersection(cover, region0, check.piece_indices);
        check.vertex_count = Y.vertex_count();
        check.reduced_homology =
            homology_through(cubical_chain_complex(Y), true, check.required_degree);
        check.pass =
            check.vertex_count > 0 && check.reduced_homology.trivial_through(check.required_degree);
    });
    report.hypotheses_pass =
        std::all_of(report.checks.begin(), report.checks.end(),
                    [](const IntersectionCheck& c) { return c.pass; });

    report.region_homology =
        homology_through(cubical_chain_complex(region0), true, up_to - 1, policy);
    report.nerve_homology =
        homology_through(simplicial_chain_complex(L.complex), true, up_to - 1, policy);
    report.conclusion_h_match = true;
    for (int k = 0; k <= up_to - 1; ++k) {
        const auto betti_of = [&](const HomologyResult& H) {
            return k < static_cast<int>(H.betti.size()) ? H.betti[k] : 0;
        };
        const auto torsion_of = [&](const HomologyResult& H) {
            return k < static_cast<int>(H.torsion.size()) ? H.torsion[k]
                                                          : std::vector<std::int64_t>{};
        };
        if (betti_of(report.region_homology) != betti_of(report.nerve_homology) ||
            torsion_of(report.region_homology) != torsion_of(report.nerve_homology))
            report.conclusion_h_match = false;
    }
    return report;
}

} // namespace houghton
