#pragma once

#include "occ/util/report.hpp"

#include <cstdint>

namespace occ::families {

/// Exact Γ search at n = 4 with a shuffled rerun, the n = 5 bounds, and
/// seeded compression and Hoffman checks on `samples` random agreeing
/// families on K_4.
Report verify_families(std::uint64_t seed, int samples = 1000, int workers = 1);

}  // namespace occ::families
