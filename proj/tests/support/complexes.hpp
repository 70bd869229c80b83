#pragma once

// Named complexes and a seeded random generator shared by the test suites.

#include <cstdint>
#include <random>
#include <vector>

#include "wsh/complex.hpp"

namespace wsh::testing {

/// Hollow tetrahedron on A..D: vertices weight 5, edges 2 except {A,B} = 4,
/// triangles 1.
WeightedComplex tetrahedron_boundary();

/// Filled triangle {a,b,c} glued to the hollow triangle {b,c,d} along {b,c}.
WeightedComplex glued_triangles();

/// Filled triangle on a,b,c with the given per-dimension weights.
WeightedComplex filled_triangle(Weight vertex, Weight edge, Weight face);

/// Edges ab, ac, bc and their vertices, all with weight `w`.
WeightedComplex hollow_triangle(Weight w);

/// 3x3 grid torus: 9 vertices, 27 edges, 18 triangles, all weight `w`.
WeightedComplex torus(Weight w = 0);

/// Six-vertex projective plane: 6 vertices, 15 edges, 10 triangles.
WeightedComplex projective_plane(Weight w = 0);

struct RandomComplexOptions {
    std::size_t max_simplices = 30;
    int max_dim = 3;
    Weight max_weight = 5;
    int max_vertices = 7;
};

/// Random face-closed monotone complex; faces get at least the largest
/// coface weight plus a small random increment, clipped to max_weight.
WeightedComplex random_complex(std::mt19937_64& rng, const RandomComplexOptions& opts = {});

/// Same complex with vertex labels permuted at random (changes tie-breaks).
WeightedComplex relabeled(const WeightedComplex& complex, std::mt19937_64& rng);

}  // namespace wsh::testing
