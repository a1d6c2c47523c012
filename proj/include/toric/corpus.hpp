#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "toric/geometry.hpp"
#include "toric/invariants.hpp"

namespace toric {

using Rng = std::mt19937_64;

/// Polygon with 1..8 interior vertices at sorted random angles and radii in [0.6, 1.4].
MomentProfile random_star_polygon(Rng& rng);
/// As above with every vertex snapped to the 1/16 lattice, so many normals are rational.
MomentProfile random_grid_polygon(Rng& rng);
/// 4..12 vertices with w1 strictly decreasing and w2 strictly increasing.
MomentProfile random_monotone_profile(Rng& rng);
/// Vertices on a random concave decreasing chain in mu = sqrt(w), mapped back by squaring.
MomentProfile random_convex4d_profile(Rng& rng);

std::vector<MomentProfile> star_corpus(std::uint64_t seed, int count);
std::vector<MomentProfile> monotone_corpus(std::uint64_t seed, int count);
std::vector<MomentProfile> convex4d_corpus(std::uint64_t seed, int count);

/// report() over a batch; the parallel kernel distributes profiles over threads.
std::vector<InvariantReport> batch_reports_serial(const std::vector<MomentProfile>& ps);
std::vector<InvariantReport> batch_reports_parallel(const std::vector<MomentProfile>& ps);

}  // namespace toric
