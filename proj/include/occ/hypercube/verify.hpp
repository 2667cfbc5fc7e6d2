#pragma once

#include "occ/util/report.hpp"

#include <cstdint>

namespace occ::hypercube {

/// Exhaustive tensor-operator checks on K_3 and K_4 plus seeded transform
/// identities.
Report verify_tensor_operators(std::uint64_t seed);

}  // namespace occ::hypercube
