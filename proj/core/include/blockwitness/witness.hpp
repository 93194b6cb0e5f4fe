#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "blockwitness/case_parameters.hpp"
#include "blockwitness/error.hpp"
#include "blockwitness/factored.hpp"
#include "blockwitness/partition.hpp"

namespace blockwitness {

// Branches of the witness construction. I: r > 0; II: r = 0 and the lowest
// q-adic term of mp is below the lowest p-adic term; III: the reverse.
enum class CaseId {
  IA,
  IB,
  IBFallback,
  IC,
  ICFallback1,
  ICFallback2QOdd,
  ICFallback2Q2,
  IIA,
  IIB,
  IIBFallback,
  IIC,
  IICAlt,
  IICAltQ2,
  IIIA,
  IIIB,
  IIIBAlt1,
  IIIBAlt2,
  IIIBFinal,
};

// "I.a", "I.c-fallback2-q2", ...
std::string_view to_string(CaseId id);
std::optional<CaseId> parse_case_id(std::string_view text);

struct WitnessCandidate {
  CaseId case_id = CaseId::IA;
  AscendingSpec spec;
  Natural host_prime = 0;     // principal block must contain the character
  Natural divisor_prime = 0;  // must divide the degree

  friend bool operator==(const WitnessCandidate&, const WitnessCandidate&) = default;
};

// A candidate whose defining facts were all recomputed and hold: the
// partition lies in B_host(S_n), has degree prime to host and divisible by
// divisor, and is not self-conjugate (so it also restricts irreducibly to
// A_n).
struct Witness {
  WitnessCandidate candidate;
  std::size_t candidate_index = 0;
  Partition partition;
  FactoredNatural degree;
  std::uint32_t host_valuation = 0;
  std::uint32_t divisor_valuation = 0;
  bool self_conjugate = false;
};

enum class Violation {
  NotInHostPrincipalBlock,
  HostDividesDegree,
  DivisorDoesNotDivide,
  SelfConjugate,
};

std::string_view to_string(Violation v);

struct VerificationFailure {
  WitnessCandidate candidate;
  Violation violation = Violation::NotInHostPrincipalBlock;
  std::string detail;
};

enum class DeferralReason {
  SmallN,        // n < 9: settled from stored character tables instead
  AbelianSylow,  // m <= 1: Sylow p-subgroup abelian, settled by other means
};

std::string_view to_string(DeferralReason r);

struct Deferral {
  DeferralReason reason = DeferralReason::SmallN;
  std::string message;
};

// Thrown by candidate_list for parameters outside the construction's range.
class DeferredCase : public InputError {
 public:
  explicit DeferredCase(Deferral d) : InputError(d.message), deferral_(std::move(d)) {}
  const Deferral& deferral() const noexcept { return deferral_; }

 private:
  Deferral deferral_;
};

std::optional<Deferral> deferral_for(const CaseParameters& params);

// Candidates of the active branch in fallback order. Throws DeferredCase
// when deferral_for(params) is set, CaseTreeFalsified if a routing
// invariant fails.
std::vector<WitnessCandidate> candidate_list(const CaseParameters& params);

// Throws SpecSumMismatch if the spec does not sum to n.
std::variant<Witness, VerificationFailure> verify_candidate(const WitnessCandidate& c, Natural n);

using WitnessOutcome = std::variant<Witness, Deferral>;

// First candidate that verifies. Throws CaseTreeFalsified if none does.
WitnessOutcome construct_witness(Natural n, Natural p, Natural q);

}  // namespace blockwitness
