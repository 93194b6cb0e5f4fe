#include "blockwitness/oracle.hpp"

#include <algorithm>

#include "blockwitness/blocks.hpp"
#include "blockwitness/error.hpp"

namespace blockwitness {

std::string_view to_string(GroupKind g) { return g == GroupKind::Sn ? "sn" : "an"; }

std::optional<GroupKind> parse_group_kind(std::string_view text) {
  if (text == "sn") return GroupKind::Sn;
  if (text == "an") return GroupKind::An;
  return std::nullopt;
}

SymmetricGroupData::SymmetricGroupData(std::uint32_t n)
    : n_(n), partitions_(partitions_of(n)), primes_(primes_up_to(n)) {
  const auto count = partitions_.size();
  self_conjugate_.resize(count);
  principal_.assign(primes_.size(), std::vector<bool>(count));
  valuation_.assign(primes_.size(), std::vector<std::uint32_t>(count));

  std::vector<std::uint64_t> factorial_v(primes_.size());
  for (std::size_t s = 0; s < primes_.size(); ++s) factorial_v[s] = factorial_valuation(n, primes_[s]);

  for (std::size_t i = 0; i < count; ++i) {
    const auto& lambda = partitions_[i];
    self_conjugate_[i] = is_self_conjugate(lambda);
    const auto hooks = hook_lengths(lambda);
    for (std::size_t s = 0; s < primes_.size(); ++s) {
      const auto p = primes_[s];
      std::uint64_t hv = 0;
      for (auto h : hooks) hv += natural_valuation(h, p);
      if (hv > factorial_v[s]) throw NotDivisible("hook product exceeds n! at " + to_string(lambda));
      valuation_[s][i] = static_cast<std::uint32_t>(factorial_v[s] - hv);
      principal_[s][i] = principal_block_contains(lambda, p);
    }
  }
}

std::size_t SymmetricGroupData::prime_slot(Natural p) const {
  auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
  if (it == primes_.end() || *it != p) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
    throw PrimeExceedsN("prime " + std::to_string(p) + " exceeds n = " + std::to_string(n_));
  }
  return static_cast<std::size_t>(it - primes_.begin());
}

bool SymmetricGroupData::in_principal_block(std::size_t index, Natural p) const {
  return principal_[prime_slot(p)][index];
}

std::uint32_t SymmetricGroupData::valuation(std::size_t index, Natural p) const {
  return valuation_[prime_slot(p)][index];
}

std::vector<std::size_t> SymmetricGroupData::p_prime_principal(Natural p, GroupKind kind) const {
  const auto s = prime_slot(p);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < partitions_.size(); ++i) {
    if (!principal_[s][i] || valuation_[s][i] != 0) continue;
    if (kind == GroupKind::An && self_conjugate_[i]) continue;
    out.push_back(i);
  }
  return out;
}

namespace {

void check_pair(const SymmetricGroupData& data, Natural p, Natural q) {
  for (Natural x : {p, q}) {
    if (!is_prime(x)) throw NotPrime(std::to_string(x) + " is not prime");
    if (x > data.n()) throw PrimeExceedsN("prime " + std::to_string(x) + " exceeds n = " + std::to_string(data.n()));
  }
  if (p == q) throw InputError("the two primes must differ");
}

std::vector<Partition> labels(const SymmetricGroupData& data, const std::vector<std::size_t>& idx) {
  std::vector<Partition> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(data.partitions()[i]);
  return out;
}

std::vector<Partition> divisible_by(const SymmetricGroupData& data, const std::vector<std::size_t>& idx,
                                    Natural prime) {
  std::vector<Partition> out;
  for (auto i : idx) {
    if (data.valuation(i, prime) > 0) out.push_back(data.partitions()[i]);
  }
  return out;
}

ConjectureReport base_report(const SymmetricGroupData& data, Natural p, Natural q, GroupKind kind) {
  check_pair(data, p, q);
  ConjectureReport r;
  r.group_kind = kind;
  r.n = data.n();
  r.p = p;
  r.q = q;
  const auto sp = data.p_prime_principal(p, kind);
  const auto sq = data.p_prime_principal(q, kind);
  r.witnesses_p_block = divisible_by(data, sp, q);
  r.witnesses_q_block = divisible_by(data, sq, p);
  r.set_b_p = labels(data, sp);
  r.set_b_q = labels(data, sq);
  // Both lists follow partitions_of order, so equality is set equality.
  r.sets_equal = sp == sq;
  return r;
}

}  // namespace

WitnessSets witness_sets(const SymmetricGroupData& data, Natural p, Natural q, GroupKind kind) {
  auto r = base_report(data, p, q, kind);
  return {std::move(r.witnesses_p_block), std::move(r.witnesses_q_block)};
}

WitnessSets witness_sets(std::uint32_t n, Natural p, Natural q, GroupKind kind) {
  return witness_sets(SymmetricGroupData(n), p, q, kind);
}

ConjectureReport check_conj_c(const SymmetricGroupData& data, Natural p, Natural q, GroupKind kind) {
  auto r = base_report(data, p, q, kind);
  r.condition_holds = !r.witnesses_p_block.empty() || !r.witnesses_q_block.empty();
  return r;
}

ConjectureReport check_conj_c(std::uint32_t n, Natural p, Natural q, GroupKind kind) {
  return check_conj_c(SymmetricGroupData(n), p, q, kind);
}

ConjectureReport check_conj_b(const SymmetricGroupData& data, Natural p, Natural q) {
  auto r = base_report(data, p, q, GroupKind::Sn);
  r.violation = r.sets_equal;
  r.condition_holds = !r.violation;
  return r;
}

ConjectureReport check_conj_b(std::uint32_t n, Natural p, Natural q) {
  return check_conj_b(SymmetricGroupData(n), p, q);
}

std::optional<CaseId> CrossValidation::case_id() const {
  if (const auto* w = std::get_if<Witness>(&constructor)) return w->candidate.case_id;
  return std::nullopt;
}

CrossValidation cross_validate(const SymmetricGroupData& data, Natural p, Natural q) {
  CrossValidation cv;
  cv.n = data.n();
  cv.p = p;
  cv.q = q;
  const auto sn = check_conj_c(data, p, q, GroupKind::Sn);
  const auto an = check_conj_c(data, p, q, GroupKind::An);
  cv.oracle_holds_sn = sn.condition_holds;
  cv.oracle_holds_an = an.condition_holds;
  try {
    auto outcome = construct_witness(data.n(), p, q);
    if (auto* w = std::get_if<Witness>(&outcome)) {
      cv.constructor = std::move(*w);
    } else {
      cv.constructor = std::get<Deferral>(std::move(outcome));
    }
  } catch (const CaseTreeFalsified& e) {
    cv.constructor = ConstructionFailure{e.what()};
  }
  if (const auto* w = std::get_if<Witness>(&cv.constructor)) {
    const auto& pool = w->candidate.host_prime == p ? an.witnesses_p_block : an.witnesses_q_block;
    cv.oracle_agrees = std::find(pool.begin(), pool.end(), w->partition) != pool.end();
  }
  return cv;
}

CrossValidation cross_validate(std::uint32_t n, Natural p, Natural q) {
  return cross_validate(SymmetricGroupData(n), p, q);
}

}  // namespace blockwitness
