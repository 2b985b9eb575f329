#pragma once

#include <functional>
#include <vector>

#include "veld/geom/plane_set.hpp"
#include "veld/rational.hpp"

namespace veld::geom {

// One vertically convex strip: y in [lo(x), hi(x)) for x in [x0, x1).
// Requires lo <= hi throughout [x0, x1].
struct Track {
  Rat x0, x1;
  Affine lo, hi;
  int tag = 0;
};

Track track_of(const Parallelogram& r, int tag = 0);
std::vector<Track> tracks_of(const PlaneSet& s, int tag = 0);

// Exact integral of (sum of track indicators)^q for each exponent in qs.
// The arrangement is refined at every pairwise crossing of band edges, so
// within a slab the overlay has constant combinatorics and each region
// length is affine in x.
std::vector<Rat> sweep_power_integrals(const std::vector<Track>& tracks, const std::vector<int>& qs);

// Region {pred(per-tag cover counts)} as a PlaneSet. pred must be false on
// the all-zero vector (the engine only represents bounded sets).
PlaneSet sweep_region(const std::vector<Track>& tracks, int ntags,
                      const std::function<bool(const std::vector<int>&)>& pred);

}  // namespace veld::geom
