#pragma once

#include <cstdint>
#include <vector>

#include "blockwitness/factored.hpp"
#include "blockwitness/partition.hpp"

namespace blockwitness {

// Nakayama label of a p-block of S_n: the common p-core of its partitions.
struct BlockLabel {
  Partition core;
  Natural prime = 0;

  friend bool operator==(const BlockLabel&, const BlockLabel&) = default;
};

BlockLabel block_label(const Partition& lambda, Natural p);

// The p-core of the principal block of S_n: the row (n mod p). When p > n
// this is (n) itself and the block has weight 0.
Partition principal_core(std::uint32_t n, Natural p);

bool principal_block_contains(const Partition& lambda, Natural p);

// Members of B_p(S_n), in partitions_of order.
std::vector<Partition> principal_block_members(std::uint32_t n, Natural p);

// Members of B_p(S_n) whose degree is prime to p, in partitions_of order.
std::vector<Partition> irr_p_prime_principal(std::uint32_t n, Natural p);

}  // namespace blockwitness
