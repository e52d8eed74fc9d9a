#pragma once

#include <cstdint>
#include <vector>

#include "ganita/errors.hpp"

namespace brick {

/// A heap of bricks split into bodies. Bodies always sum to the total.
struct BrickCollection {
  std::int64_t total = 0;
  std::vector<std::int64_t> bodies;
};

struct Partition {
  std::int64_t bodies = 0;
  std::int64_t size = 0;
};

/// Re-distribute a collection into k equal bodies, one brick per body in
/// rounds, the way a heap is physically dealt out. A leftover brick means
/// no equal split exists.
BrickCollection split_collection(const BrickCollection& c, std::int64_t k);

/// All equal splits of `total`. With sb_filter (meaningful for 720) only
/// bodies of at least 30 bricks are kept, which is exactly the attested
/// fifteen-divisor list.
std::vector<Partition> equal_partitions_of(std::int64_t total, bool sb_filter = false);

}  // namespace brick
