#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>

#include "cmvf/construct.hpp"
#include "cmvf/mvf.hpp"

namespace cmvf::testing {

/// Segment a--ab--b with the field {{a,ab},{b}}: everything slides into the
/// critical vertex b.
struct SegmentFixture {
    LefschetzComplex cx;
    MultivectorField field;
    SegmentFixture();
};

/// Triangle with the black subset A = {AB, AC, ABC, B, BC} whose invariant
/// part is {AB, AC, ABC, B}; the field is {A}, {B}, {C,BC}, {AB,AC,ABC}.
struct TriangleFixture {
    LefschetzComplex cx;
    MultivectorField field;
    TriangleFixture();
};

/// Annulus of ten squares with one flap square glued on the outside and a
/// contractible closed piece removed, carrying a field with two attractors
/// (a critical vertex and the inner circle), two repellers (the flap square
/// and the ring of squares) and two saddle-type sets. Reproduces the
/// pointed-annulus homology and the six-set Morse data used by the
/// acceptance suite.
struct RingFixture {
    LefschetzComplex cx;
    MultivectorField field;
    // The six-set decomposition: dot (vertex), minus (edge), circ (flap
    // square), times (two edges), triangle (square ring), diamond (inner circle).
    CellSet m_dot, m_minus, m_circ, m_times, m_triangle, m_diamond;
    RingFixture();
};

/// Unit square carrying the strict multivector {corner, two edges, square}
/// and its two Forman refinements.
struct RefinementFixture {
    LefschetzComplex cx;
    MultivectorField coarse, fine1, fine2;
    RefinementFixture();
};

/// Independent dense-elimination rank oracle for Betti numbers; shares no
/// code with the sparse reduction in the library.
std::vector<std::int64_t> betti_dense_oracle(const LefschetzComplex& cx, const CellSet& a);

/// Literal transcription of the three-phase construction, working directly
/// on coordinate pairs with its own normalization; returns the map as
/// label -> label. The oracle for the grid construction.
std::map<std::string, std::string> table1_oracle(const VectorCloud& cloud, double mu, double eps);

/// Random subsets for property tests.
CellSet random_subset(const LefschetzComplex& cx, std::mt19937_64& rng, double density = 0.4);
/// Difference of two closed sets: always proper.
CellSet random_proper_subset(const LefschetzComplex& cx, std::mt19937_64& rng);

/// Random multivector field grown from singletons by greedy valid merges.
MultivectorField random_field(const LefschetzComplex& cx, std::mt19937_64& rng, int merge_attempts);

} // namespace cmvf::testing
