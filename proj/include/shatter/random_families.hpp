#pragma once

#include <cstdint>

#include "shatter/geom.hpp"

namespace shatter {

// Seeded generators for randomized test families and for the shattering
// search. All output is in strict general position (distinct vertices, no
// three collinear); violations are repaired by deterministic nudges.

/// Pairwise-disjoint bodies (mix of points, segments and triangles) placed on
/// a coarse grid of cells with margins.
Family random_disjoint_family(int n, uint64_t seed);

/// Segments with shared extent, crossings allowed.
Family random_segment_family(int n, uint64_t seed);

/// Convex polygons with 3..max_vertices vertices; disjoint on a cell grid
/// when `disjoint`, overlapping in a shared box otherwise.
Family random_polygon_family(int n, uint64_t seed, bool disjoint, int max_vertices = 6);

/// A family whose last body lies strictly inside the convex hull of the
/// others (the hull-lemma counterexample shape).
Family random_family_with_interior_body(int n_outer, uint64_t seed);

}  // namespace shatter
