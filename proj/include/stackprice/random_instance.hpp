#pragma once

#include <cstdint>

#include "stackprice/instance.hpp"

namespace stackprice {

/// Weights uniform in [1, max_weight]; deterministic for a given seed.
Instance random_instance(Model model, std::size_t leader_count, std::size_t follower_count,
                         std::int64_t max_weight, std::int64_t capacity, std::uint64_t seed);

}  // namespace stackprice
