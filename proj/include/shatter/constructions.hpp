#pragma once

#include <optional>
#include <string>

#include "shatter/hypergraph.hpp"

namespace shatter {

/// A generated family together with its machine-checked certificate. Never
/// constructed unverified: every generator recomputes the certificate from
/// scratch and throws std::logic_error if verification fails.
struct ConstructionResult {
  Family family;
  Bitmask shattered_subset;
  long long edge_count = 0;
  int intersecting_pairs = 0;
  std::vector<Witness> witnesses;  // one verified halfplane per realized subset of the certificate
  std::string provenance;
};

/// The unbounded-VC construction: 2^n - 2 points on the unit circle at the
/// rational parameters 1..2^n-2 (one per proper nontrivial index set, ordered
/// by binary value); body j is the hull of the points whose index set
/// contains j. Bodies share circle points, so the certificate is verified
/// through explicit tangent-line witnesses per subset rather than the sweep.
ConstructionResult gen_unbounded(int n, int cap = 5);

struct LiftReport {
  bool pairwise_disjoint = false;
  bool shattering_preserved = false;
  int witnesses_checked = 0;
};

struct LiftResult {
  Family family;  // lifted-3d ambient, body i at level i
  LiftReport report;
};

/// Stacks the planar construction at distinct integer heights. A vertical
/// halfspace contains a lifted body iff the planar halfplane contains its
/// projection, so the planar certificate transfers verbatim; the report
/// re-checks every witness against the projections.
LiftResult lift_to_3d(const ConstructionResult& planar);

/// Three pairwise-disjoint convex polygons shattered by halfplanes.
ConstructionResult gen_three_disjoint();

/// Five segments with VC-dimension exactly 5 (the tight example). Coordinates
/// were found once by search_shattered and committed with their certificate.
ConstructionResult gen_five_segments();

/// Four shattered segments with exactly one intersecting pair.
ConstructionResult gen_four_one_intersection();

enum class SearchClass { Segments, DisjointConvex, Convex };

struct SearchConstraints {
  std::optional<int> max_intersections;
  std::optional<int> symmetry;  // seed candidates from near-m-fold rotational templates
};

/// Randomized restarts plus grid-local hill climbing on the number of realized
/// traces. Returns the first family (by candidate index) that is fully
/// shattered and meets the constraints, or nullopt once `budget` candidates
/// have been evaluated. Deterministic for a fixed seed.
std::optional<ConstructionResult> search_shattered(int n, SearchClass cls,
                                                   const SearchConstraints& constraints,
                                                   uint64_t seed, long long budget);

}  // namespace shatter
