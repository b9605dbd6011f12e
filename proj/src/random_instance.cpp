#include "stackprice/random_instance.hpp"

#include <random>

namespace stackprice {

Instance random_instance(Model model, std::size_t leader_count, std::size_t follower_count,
                         std::int64_t max_weight, std::int64_t capacity, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> weight(1, max_weight);
  Instance inst;
  inst.model = model;
  inst.capacity = capacity;
  for (std::size_t i = 0; i < leader_count; ++i) inst.leader_weights.push_back(weight(rng));
  for (std::size_t i = 0; i < follower_count; ++i) inst.follower_weights.push_back(weight(rng));
  return inst;
}

}  // namespace stackprice
