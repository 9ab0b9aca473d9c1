#ifndef HOUGHTON_FIXTURES_HPP
#define HOUGHTON_FIXTURES_HPP

#include <string>
#include <vector>

#include "houghton/chain_complex.hpp"
#include "houghton/simplicial_complex.hpp"

namespace houghton {

/// Classical complexes with known homology, used as the oracle suite for the
/// reduction backend.
struct Fixture {
    std::string name;
    ChainComplex complex;
    std::vector<std::int64_t> expected_betti;                // unreduced
    std::vector<std::vector<std::int64_t>> expected_torsion; // per degree
};

SimplicialComplex fixture_point();
SimplicialComplex fixture_two_points();
SimplicialComplex fixture_circle();
SimplicialComplex fixture_full_triangle();
SimplicialComplex fixture_projective_plane(); // minimal 6-vertex triangulation
SimplicialComplex fixture_torus();            // cyclic 7-vertex triangulation
ChainComplex fixture_hollow_cube();           // boundary of the 3-cube, cubical

std::vector<Fixture> classical_fixtures();

struct FixtureOutcome {
    std::string name;
    bool pass = false;
    std::string computed;
    std::string expected;
};

std::vector<FixtureOutcome> run_fixture_suite(const ExecutionPolicy& policy = ExecutionPolicy::serial());

} // namespace houghton

#endif
