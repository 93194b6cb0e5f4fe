#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "blockwitness/factored.hpp"
#include "blockwitness/partition.hpp"
#include "blockwitness/witness.hpp"

namespace blockwitness {

// Brute-force ground truth over every partition of n. Nothing here calls the
// witness engine: memberships and valuations come straight from the abacus
// and the hook-length formula.

enum class GroupKind { Sn, An };

std::string_view to_string(GroupKind g);
std::optional<GroupKind> parse_group_kind(std::string_view text);

// Per-partition facts of S_n for every prime <= n, computed once.
class SymmetricGroupData {
 public:
  explicit SymmetricGroupData(std::uint32_t n);

  std::uint32_t n() const noexcept { return n_; }
  const std::vector<Partition>& partitions() const noexcept { return partitions_; }
  const std::vector<Natural>& primes() const noexcept { return primes_; }

  bool in_principal_block(std::size_t index, Natural p) const;
  std::uint32_t valuation(std::size_t index, Natural p) const;
  bool self_conjugate(std::size_t index) const { return self_conjugate_[index]; }

  // Indices of Irr_{p'}(B_p(S_n)), optionally without self-conjugate labels.
  std::vector<std::size_t> p_prime_principal(Natural p, GroupKind kind) const;

 private:
  std::size_t prime_slot(Natural p) const;

  std::uint32_t n_;
  std::vector<Partition> partitions_;
  std::vector<Natural> primes_;
  std::vector<bool> self_conjugate_;
  // [prime slot][partition index]
  std::vector<std::vector<bool>> principal_;
  std::vector<std::vector<std::uint32_t>> valuation_;
};

struct ConjectureReport {
  GroupKind group_kind = GroupKind::Sn;
  std::uint32_t n = 0;
  Natural p = 0;
  Natural q = 0;
  bool condition_holds = false;
  std::vector<Partition> witnesses_p_block;  // Irr_{p'}(B_p) with q | degree
  std::vector<Partition> witnesses_q_block;  // Irr_{q'}(B_q) with p | degree
  std::vector<Partition> set_b_p;            // Irr_{p'}(B_p)
  std::vector<Partition> set_b_q;            // Irr_{q'}(B_q)
  bool sets_equal = false;
  // Only meaningful for the B check: equal sets for distinct primes.
  bool violation = false;
};

struct WitnessSets {
  std::vector<Partition> p_block;
  std::vector<Partition> q_block;
};

// Throws InputError unless p != q are primes <= n.
WitnessSets witness_sets(const SymmetricGroupData& data, Natural p, Natural q, GroupKind kind);
WitnessSets witness_sets(std::uint32_t n, Natural p, Natural q, GroupKind kind);

ConjectureReport check_conj_c(const SymmetricGroupData& data, Natural p, Natural q, GroupKind kind);
ConjectureReport check_conj_c(std::uint32_t n, Natural p, Natural q, GroupKind kind);

ConjectureReport check_conj_b(const SymmetricGroupData& data, Natural p, Natural q);
ConjectureReport check_conj_b(std::uint32_t n, Natural p, Natural q);

// construct_witness raised CaseTreeFalsified for this tuple.
struct ConstructionFailure {
  std::string message;
};

struct CrossValidation {
  std::uint32_t n = 0;
  Natural p = 0;
  Natural q = 0;
  std::variant<Witness, Deferral, ConstructionFailure> constructor;
  // Set when the constructor produced a witness.
  std::optional<bool> oracle_agrees;
  // The oracle's own existence verdicts (both group kinds).
  bool oracle_holds_sn = false;
  bool oracle_holds_an = false;

  std::optional<CaseId> case_id() const;
};

// Runs construct_witness and checks its partition against the oracle's
// A_n witness set for the witness's host prime. A falsified case tree is
// recorded, not thrown, so a scan can report every tuple.
CrossValidation cross_validate(const SymmetricGroupData& data, Natural p, Natural q);
CrossValidation cross_validate(std::uint32_t n, Natural p, Natural q);

}  // namespace blockwitness
