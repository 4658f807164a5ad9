#pragma once

#include <cstdint>
#include <random>

#include "wcr/core.hpp"
#include "wcr/matching.hpp"
#include "wcr/minsum.hpp"
#include "wcr/sat.hpp"

namespace wcr::random {

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi);

/// n sensors at uniformly random grid points of an a x b integer grid.
Configuration grid_configuration(Rng& rng, std::int64_t a, std::int64_t b, std::size_t n,
                                 Metric metric = Metric::manhattan);

/// Random grid no larger than max_grid per side with max(a,b) <= n <=
/// max_sensors sensors.
Configuration coverable_grid(Rng& rng, std::int64_t max_grid, std::size_t max_sensors,
                             Metric metric = Metric::manhattan);

/// Integer points on [0, length] with radius diameter/2 and enough total
/// diameter to span the segment.
minsum::Line1DInstance line_instance(Rng& rng, std::size_t max_points, std::int64_t max_length,
                                     std::int64_t diameter);

/// Continuous rectangle with equal-range sensors at integer coordinates
/// whose diameters together span both sides.
Configuration homogeneous_configuration(Rng& rng, std::size_t max_sensors,
                                        std::int64_t max_side);

/// Random subsets of columns and rows required, move bound 0..max_move.
VHInstance vh_instance(Rng& rng, std::int64_t max_grid, std::size_t max_sensors,
                       std::int64_t max_move);

/// Random multigraph on 2..max_vertices vertices without isolated vertices.
matching::Graph graph(Rng& rng, int max_vertices);

/// Each variable twice positive and twice negated, n divisible by 3.
sat::Formula sat22_formula(Rng& rng, int n);

/// Each variable in three clauses with both signs and two distinct
/// variables per clause; n even. target is left at 0.
sat::Formula max2sat_formula(Rng& rng, int n);

}  // namespace wcr::random
