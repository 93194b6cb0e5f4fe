#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace blockwitness {

using Part = std::uint32_t;

// A partition in canonical (weakly decreasing) order. The empty partition is
// the unique partition of 0.
class Partition {
 public:
  Partition() = default;

  // Throws InvalidPartition unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<Part> parts);

  // Single row (k); the empty partition for k == 0.
  static Partition row(Part k);
  // Single column (1^k).
  static Partition column(Part k);

  std::span<const Part> parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  std::uint32_t size() const noexcept { return size_; }
  bool empty() const noexcept { return parts_.empty(); }

  // Part i (0-based); 0 past the end.
  Part operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  friend bool operator==(const Partition&, const Partition&) = default;
  // Lexicographic on the part sequence.
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<Part> parts_;
  std::uint32_t size_ = 0;
};

// One block (value^multiplicity) in ascending block notation such as
// (1^{k}, a, b).
struct AscendingBlock {
  Part value = 1;
  std::uint32_t multiplicity = 1;

  friend bool operator==(const AscendingBlock&, const AscendingBlock&) = default;
};

struct AscendingSpec {
  std::vector<AscendingBlock> blocks;

  std::uint64_t total() const;
  friend bool operator==(const AscendingSpec&, const AscendingSpec&) = default;
};

// Canonicalizes ascending notation. Part values must be weakly increasing
// and multiplicities positive, except that a leading 1-block may be empty.
// Throws NonMonotoneSpec otherwise.
Partition from_ascending_spec(const AscendingSpec& spec);

// Renders "(1^7,2)".
std::string to_string(const AscendingSpec& spec);

// Enumerates the partitions of n in lexicographically decreasing order,
// starting at (n) and ending at (1^n).
class PartitionGenerator {
 public:
  explicit PartitionGenerator(std::uint32_t n);

  // The next partition, or nullopt once exhausted.
  std::optional<Partition> next();

 private:
  std::vector<Part> current_;
  bool started_ = false;
  bool done_ = false;
  std::uint32_t n_;
};

std::vector<Partition> partitions_of(std::uint32_t n);

Partition conjugate(const Partition& lambda);
bool is_self_conjugate(const Partition& lambda);

// Hook length of every cell, row by row.
std::vector<std::uint32_t> hook_lengths(const Partition& lambda);

// beta_i = lambda_i + (length - i), i = 1..length, strictly decreasing.
// Throws LengthTooSmall if length < lambda.length().
std::vector<std::uint32_t> beta_set(const Partition& lambda, std::size_t length);

// Inverse of beta_set: any finite set of distinct naturals.
Partition from_beta_set(std::vector<std::uint32_t> beta);

// p-core by sliding beads down each runner of a p-abacus whose bead count is
// the least multiple of p that is >= lambda.length().
Partition p_core(const Partition& lambda, std::uint32_t p);

// Same, with a caller-chosen bead count (>= lambda.length()).
Partition p_core_with_length(const Partition& lambda, std::uint32_t p, std::size_t length);

// Runner partitions of the p-abacus, runner 0 first, using the same bead
// count as p_core.
std::vector<Partition> p_quotient(const Partition& lambda, std::uint32_t p);

// "[4,3,1]"; "[]" for the empty partition.
std::string to_string(const Partition& lambda);

// Accepts "[a1,a2,...]" (descending) or ascending block notation
// "(1^k,a,b)". Throws InvalidPartition / NonMonotoneSpec on malformed input.
Partition parse_partition(std::string_view text);

}  // namespace blockwitness
