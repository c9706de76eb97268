#pragma once

#include <cstdint>

#include "teamind/team.hpp"

namespace teamind {

/// Deterministic benchmark team over schema (z, x, y, u, v): for each of
/// `groups` z-values the full x_values * y_values product is present, so
/// z ->> x | y holds by construction. Value labels are salted from the
/// seed; u and v are derived columns that only widen the rows. Row count
/// is exactly groups * x_values * y_values.
Team bench_team(std::uint64_t seed, std::size_t groups, std::size_t x_values,
                std::size_t y_values);

/// Seeded Fisher-Yates selection of `count` distinct rows, kept in row-id
/// order. count >= |team| returns the team unchanged.
Team subsample(const Team& team, std::size_t count, std::uint64_t seed);

}  // namespace teamind
