#pragma once

#include <array>
#include <vector>

#include "loopsmith/loop_table.hpp"

namespace loopsmith {

/// A Steiner triple system on points 1..v: every unordered pair of
/// distinct points lies in exactly one block. Blocks are stored in
/// canonical form (each ascending, the list lexicographic) so equality
/// is literal.
struct TripleSystem {
  int points = 0;
  std::vector<std::array<int, 3>> blocks;

  bool operator==(const TripleSystem&) const = default;
};

/// Checks block shape and exact pair coverage, then canonicalizes.
/// Throws Error on BAD_BLOCK, PAIR_DUPLICATED or PAIR_UNCOVERED.
TripleSystem validate_sts(int points, const std::vector<std::vector<int>>& blocks);

/// True when a system on v points can exist: v >= 1 and v = 1 or 3 (mod 6).
bool admissible_order(long v);

/// The Steiner loop of order v+1: element 1 is the adjoined identity,
/// point p becomes element p+1, x*x = 1 and the product of two distinct
/// points is the third point of their block.
LoopTable sts_to_loop(const TripleSystem& T);

/// Inverse of sts_to_loop. Throws NOT_STEINER when the table is not a
/// Steiner loop.
TripleSystem loop_to_sts(const LoopTable& L);

}  // namespace loopsmith
