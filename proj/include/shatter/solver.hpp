#pragma once

#include <cstdint>
#include <optional>

#include "shatter/hypergraph.hpp"

namespace shatter {

/// Halfspace-segment hitting set instance. Rejected at construction when some
/// halfplane contains no segment (the optimization problem is undefined).
struct HittingInstance {
  Family segments;                    // planar, every body a segment
  std::vector<Halfplane> halfplanes;
  std::vector<Bitmask> ranges;        // per halfplane: segments fully contained
};

HittingInstance make_hitting_instance(Family segments, std::vector<Halfplane> halfplanes);

struct SolverTrace {
  int final_k = 0;
  std::vector<int> rounds_per_k;
  long long doublings = 0;
  Bitmask solution;
};

/// Iterative-reweighting hitting-set approximation: for k = 1, 2, 4, ...
/// repeatedly draw a weighted 1/(2k)-net over the finite range list (resampled
/// until every heavy range is hit), return it once it hits every range, else
/// double the weights of the unhit range (provably light) and continue; the
/// round budget per k is ceil(4k * log2(max(2, n/k))). The returned set is
/// always verifier-checked.
SolverTrace bg_hitting_set(const HittingInstance& inst, uint64_t seed);

/// nullopt when every halfplane fully contains a member of T, else the
/// smallest unhit halfplane index.
std::optional<int> verify_hitting_set(const HittingInstance& inst, const Bitmask& t);

struct ExactHit {
  Bitmask t;
  int size = 0;
};

/// Exhaustive search over subset sizes 0..cap in lexicographic order; nullopt
/// when the transversal number exceeds cap.
std::optional<ExactHit> exact_min_hitting_set(const HittingInstance& inst, int cap);

struct RangeCountResult {
  long long count = 0;
  Rat ratio;
};

/// Number (and fraction) of bodies fully contained in h.
RangeCountResult range_count(const Family& f, const Halfplane& h);

}  // namespace shatter
