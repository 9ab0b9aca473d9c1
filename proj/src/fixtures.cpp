#include "houghton/fixtures.hpp"

#include <set>
#include <sstream>

namespace houghton {

namespace {

SimplicialComplex from_faces(int nverts, const std::vector<std::vector<int>>& faces)
{
    SimplicialComplex L;
    for (int v = 0; v < nverts; ++v) L.add_vertex("v" + std::string(1, char('0' + v)));
    for (const auto& f : faces) L.insert_simplex(f);
    return L;
}

} // namespace

SimplicialComplex fixture_point()
{
    return from_faces(1, {{0}});
}

SimplicialComplex fixture_two_points()
{
    return from_faces(2, {{0}, {1}});
}

SimplicialComplex fixture_circle()
{
    return from_faces(3, {{0, 1}, {1, 2}, {0, 2}});
}

SimplicialComplex fixture_full_triangle()
{
    return from_faces(3, {{0, 1, 2}});
}

SimplicialComplex fixture_projective_plane()
{
    // Antipodal quotient of the icosahedron; every edge of K6 lies in exactly
    // two of the ten triangles.
    return from_faces(6, {{0, 1, 2},
                          {0, 2, 3},
                          {0, 3, 4},
                          {0, 4, 5},
                          {0, 1, 5},
                          {1, 2, 4},
                          {2, 3, 5},
                          {3, 4, 1},
                          {4, 5, 2},
                          {5, 1, 3}});
}

SimplicialComplex fixture_torus()
{
    // Cyclic 7-vertex triangulation: faces {i, i+1, i+3} and {i, i+2, i+3}.
    std::vector<std::vector<int>> faces;
    for (int i = 0; i < 7; ++i) {
        faces.push_back({i, (i + 1) % 7, (i + 3) % 7});
        faces.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return from_faces(7, faces);
}

ChainComplex fixture_hollow_cube()
{
    // Vertices = corners of the 3-cube (coordinate bits); cells = the six
    // boundary squares plus their faces.
    auto up = [](std::int64_t v, int ray) { return v | (std::int64_t(1) << (ray - 1)); };
    std::set<std::pair<std::int64_t, std::uint16_t>> cells;
    for (int axis = 0; axis < 3; ++axis)
        for (int side = 0; side < 2; ++side) {
            const std::int64_t base = std::int64_t(side) << axis;
            const std::uint16_t dirs = static_cast<std::uint16_t>(0b111 ^ (1 << axis));
            cells.insert({base, dirs});
        }
    // Close under faces.
    std::vector<std::pair<std::int64_t, std::uint16_t>> queue(cells.begin(), cells.end());
    while (!queue.empty()) {
        auto [base, dirs] = queue.back();
        queue.pop_back();
        for (int i = 0; i < 3; ++i) {
            const std::uint16_t bit = std::uint16_t(1) << i;
            if (!(dirs & bit)) continue;
            const std::uint16_t rest = static_cast<std::uint16_t>(dirs ^ bit);
            for (auto face : {std::pair<std::int64_t, std::uint16_t>{base, rest},
                              {up(base, i + 1), rest}})
                if (cells.insert(face).second) queue.push_back(face);
        }
    }
    return cubes_to_chain_complex({cells.begin(), cells.end()}, 3, up);
}

std::vector<Fixture> classical_fixtures()
{
    std::vector<Fixture> out;
    out.push_back({"point", simplicial_chain_complex(fixture_point()), {1}, {{}}});
    out.push_back({"two-points", simplicial_chain_complex(fixture_two_points()), {2}, {{}}});
    out.push_back({"circle", simplicial_chain_complex(fixture_circle()), {1, 1}, {{}, {}}});
    out.push_back(
        {"full-triangle", simplicial_chain_complex(fixture_full_triangle()), {1, 0, 0}, {{}, {}, {}}});
    out.push_back({"hollow-cube", fixture_hollow_cube(), {1, 0, 1}, {{}, {}, {}}});
    out.push_back({"projective-plane", simplicial_chain_complex(fixture_projective_plane()),
                   {1, 0, 0},
                   {{}, {2}, {}}});
    out.push_back(
        {"torus", simplicial_chain_complex(fixture_torus()), {1, 2, 1}, {{}, {}, {}}});
    return out;
}

std::vector<FixtureOutcome> run_fixture_suite(const ExecutionPolicy& policy)
{
    std::vector<Fixture> fixtures = classical_fixtures();
    std::vector<FixtureOutcome> out(fixtures.size());
    for_each_index(static_cast<std::int64_t>(fixtures.size()), policy, [&](std::int64_t i) {
        const Fixture& fx = fixtures[i];
        const HomologyResult H = homology(fx.complex, false);
        FixtureOutcome& o = out[i];
        o.name = fx.name;
        o.pass = H.betti == fx.expected_betti && H.torsion == fx.expected_torsion;
        o.computed = H.to_string();
        HomologyResult want;
        want.reduced = false;
        want.betti = fx.expected_betti;
        want.torsion = fx.expected_torsion;
        o.expected = want.to_string();
    });
    return out;
}

} // namespace houghton
