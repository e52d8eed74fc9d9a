#include "brick/partition.hpp"

#include <numeric>

namespace brick {

using ganita::math_error;

BrickCollection split_collection(const BrickCollection& c, std::int64_t k) {
  if (k < 1) throw math_error("need at least one body");
  std::vector<std::int64_t> bodies(static_cast<size_t>(k), 0);
  // Deal the heap out one brick at a time, round-robin.
  for (std::int64_t brick = 0; brick < c.total; ++brick) ++bodies[static_cast<size_t>(brick % k)];
  for (const auto b : bodies)
    if (b != bodies[0]) throw math_error("no equal split exists");
  return BrickCollection{c.total, std::move(bodies)};
}

std::vector<Partition> equal_partitions_of(std::int64_t total, bool sb_filter) {
  if (total < 1) throw math_error("need at least one brick");
  std::vector<Partition> out;
  const BrickCollection heap{total, {total}};
  for (std::int64_t k = 1; k <= total; ++k) {
    try {
      const BrickCollection split = split_collection(heap, k);
      const std::int64_t size = split.bodies[0];
      if (sb_filter && size < 30) continue;
      out.push_back(Partition{k, size});
    } catch (const math_error&) {
      // k does not divide the heap
    }
  }
  return out;
}

}  // namespace brick
