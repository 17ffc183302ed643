#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "shatter/bitmask.hpp"
#include "shatter/geom.hpp"

namespace shatter {

/// The hyperedge set of the containment hypergraph: sorted, deduplicated
/// bitmasks over body ids. Always contains the empty and the full mask.
class EdgeSet {
 public:
  EdgeSet() = default;
  EdgeSet(int n, std::vector<Bitmask> edges);

  int family_size() const { return n_; }
  size_t size() const { return edges_.size(); }
  const std::vector<Bitmask>& edges() const { return edges_; }
  bool contains(const Bitmask& m) const;

 private:
  int n_ = 0;
  std::vector<Bitmask> edges_;
};

/// A halfplane certifying that `subset` is realized, together with the
/// terminal configuration it was rotated out of (tail vertex of an excluded
/// body, head vertex of an included one) when one exists.
struct Witness {
  Bitmask subset;
  Halfplane halfplane;
  std::optional<std::pair<Pt, Pt>> anchor;
};

/// Exact enumeration of all realized subsets via the rotation sweep: for every
/// ordered pair of vertices of distinct bodies, the line through them is a
/// terminal configuration candidate; an exact infinitesimal rotation around
/// the head vertex certifies each emitted subset. Requires no three distinct
/// vertex values collinear (throws GeneralPositionViolation otherwise).
EdgeSet enumerate_realized(const Family& f);

/// As enumerate_realized but pairs every edge with a verified witness
/// halfplane. Intended for desk-scale families.
std::vector<Witness> enumerate_with_witnesses(const Family& f);

/// Exact witness for one subset, or nullopt when the subset is not realized.
std::optional<Witness> realize_witness(const Family& f, const Bitmask& subset);

struct ShatterResult {
  bool shattered = false;
  Bitmask missing;  // lexicographically smallest missing trace when not shattered
};

/// Projects every realized subset onto X and checks that all 2^|X| traces
/// occur.
ShatterResult is_shattered(const Family& f, const Bitmask& x);

struct VcResult {
  int dim = 0;
  Bitmask witness;
};

/// Largest k <= cap with a shattered k-subset; witness is the
/// lexicographically smallest maximum shattered subset.
VcResult vc_dimension(const Family& f, int cap);

/// Unordered pairs of bodies with a common point.
int count_intersecting_pairs(const Family& f);

/// n(n-3)/6, the minimum number of intersecting pairs in any shattered family
/// of n convex sets.
Rat turan_lower_bound(long long n);

struct HullLemmaResult {
  bool ok = true;
  int offender = -1;  // body with no vertex on the hull boundary
};

/// Shattered families must have every body touching the boundary of the
/// convex hull of all vertices; reports the first body that does not.
HullLemmaResult hull_lemma_check(const Family& f);

/// Randomized halfplanes (perturbed vertex-pair lines and random directions
/// through the bounding box), classified exactly. The result is a subset of
/// the true edge set with probability 1; it is used as an independent oracle
/// against enumerate_realized.
EdgeSet sampled_oracle(const Family& f, long long trials, uint64_t seed);

}  // namespace shatter
