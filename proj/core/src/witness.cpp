#include "blockwitness/witness.hpp"

#include <array>
#include <cstdint>
#include <utility>

#include "blockwitness/blocks.hpp"
#include "blockwitness/degrees.hpp"
#include "blockwitness/error.hpp"

namespace blockwitness {

namespace {

constexpr std::array<std::pair<CaseId, std::string_view>, 18> kCaseNames{{
    {CaseId::IA, "I.a"},
    {CaseId::IB, "I.b"},
    {CaseId::IBFallback, "I.b-fallback"},
    {CaseId::IC, "I.c"},
    {CaseId::ICFallback1, "I.c-fallback1"},
    {CaseId::ICFallback2QOdd, "I.c-fallback2-qodd"},
    {CaseId::ICFallback2Q2, "I.c-fallback2-q2"},
    {CaseId::IIA, "II.a"},
    {CaseId::IIB, "II.b"},
    {CaseId::IIBFallback, "II.b-fallback"},
    {CaseId::IIC, "II.c"},
    {CaseId::IICAlt, "II.c-alt"},
    {CaseId::IICAltQ2, "II.c-alt-q2"},
    {CaseId::IIIA, "III.a"},
    {CaseId::IIIB, "III.b"},
    {CaseId::IIIBAlt1, "III.b-alt1"},
    {CaseId::IIIBAlt2, "III.b-alt2"},
    {CaseId::IIIBFinal, "III.b-final"},
}};

// Builder for ascending specs written as (1^k, a, b, ...). Counts are taken
// signed so that a negative multiplicity surfaces as a routing bug instead
// of wrapping around.
struct SpecBuilder {
  AscendingSpec spec;

  SpecBuilder& ones(std::int64_t k) { return block(1, k); }
  SpecBuilder& part(std::int64_t v) { return block(v, 1); }
  SpecBuilder& block(std::int64_t v, std::int64_t k) {
    if (v <= 0 || k < 0 || v > UINT32_MAX || k > UINT32_MAX) {
      throw CaseTreeFalsified("candidate block " + std::to_string(v) + "^" + std::to_string(k) +
                              " is out of range");
    }
    spec.blocks.push_back({static_cast<Part>(v), static_cast<std::uint32_t>(k)});
    return *this;
  }
};

void require(bool condition, const CaseParameters& c, const std::string& what) {
  if (!condition) {
    throw CaseTreeFalsified(what + " at n=" + std::to_string(c.n) + " p=" + std::to_string(c.p) +
                            " q=" + std::to_string(c.q));
  }
}

}  // namespace

std::string_view to_string(CaseId id) {
  for (const auto& [k, name] : kCaseNames) {
    if (k == id) return name;
  }
  return "?";
}

std::optional<CaseId> parse_case_id(std::string_view text) {
  for (const auto& [k, name] : kCaseNames) {
    if (name == text) return k;
  }
  return std::nullopt;
}

std::string_view to_string(Violation v) {
  switch (v) {
    case Violation::NotInHostPrincipalBlock: return "not-in-host-principal-block";
    case Violation::HostDividesDegree: return "host-divides-degree";
    case Violation::DivisorDoesNotDivide: return "divisor-does-not-divide";
    case Violation::SelfConjugate: return "self-conjugate";
  }
  return "?";
}

std::string_view to_string(DeferralReason r) {
  switch (r) {
    case DeferralReason::SmallN: return "small-n";
    case DeferralReason::AbelianSylow: return "abelian-sylow";
  }
  return "?";
}

std::optional<Deferral> deferral_for(const CaseParameters& c) {
  if (c.n < 9) return Deferral{DeferralReason::SmallN, "small-n: deferred to table methods"};
  if (c.m <= 1) {
    return Deferral{DeferralReason::AbelianSylow,
                    "abelian-sylow: m = " + std::to_string(c.m) + " <= 1, Sylow " + std::to_string(c.p) +
                        "-subgroup is abelian"};
  }
  return std::nullopt;
}

std::vector<WitnessCandidate> candidate_list(const CaseParameters& c) {
  if (auto d = deferral_for(c)) throw DeferredCase(std::move(*d));

  const auto n = static_cast<std::int64_t>(c.n);
  const auto p = c.p;
  const auto q = c.q;
  const auto mp = static_cast<std::int64_t>(c.mp());
  const auto b = static_cast<std::int64_t>(c.b);
  const auto r = static_cast<std::int64_t>(c.r);
  const auto w = static_cast<std::int64_t>(c.w);
  const auto m = static_cast<std::int64_t>(c.m);

  std::vector<WitnessCandidate> out;
  auto emit = [&](CaseId id, const SpecBuilder& s, Natural host) {
    out.push_back({id, s.spec, host, host == p ? q : p});
  };

  if (r > 0) {
    if (b == 0) {
      emit(CaseId::IA, SpecBuilder{}.ones(mp - r - 1).part(1 + r), p);
    } else if (b != r) {
      if (r < b) {
        emit(CaseId::IB, SpecBuilder{}.ones(mp - r - 1).part(1 + r).part(b), p);
      } else {
        emit(CaseId::IB, SpecBuilder{}.ones(mp - r - 1).part(1 + b).part(r), p);
      }
      emit(CaseId::IBFallback, SpecBuilder{}.ones(mp).part(b), p);
    } else {
      require(r + 1 < w * static_cast<std::int64_t>(q), c, "r + 1 < wq fails in case I.c");
      emit(CaseId::IC, SpecBuilder{}.ones(r).part(r + 1).part(w * q - 1), p);
      emit(CaseId::ICFallback1, SpecBuilder{}.ones(w * q - 2).part(1 + r).part(1 + r), p);
      if (q != 2) {
        emit(CaseId::ICFallback2QOdd, SpecBuilder{}.ones(mp).part(r), p);
      } else {
        emit(CaseId::ICFallback2Q2, SpecBuilder{}.ones(n - 2).part(2), q);
      }
    }
    return out;
  }

  const auto lowest_q = static_cast<std::int64_t>(c.lowest_q_term());
  const auto lowest_p = static_cast<std::int64_t>(c.lowest_p_term());
  // a_1 < q < p and b_1 < p rule out equality of the lowest terms.
  require(lowest_q != lowest_p, c, "lowest q-adic and p-adic terms of mp coincide");

  if (lowest_q < lowest_p) {
    const auto a = lowest_q;
    if (b == 0) {
      emit(CaseId::IIA, SpecBuilder{}.ones(mp - a - 1).part(1 + a), p);
    } else if (a != b) {
      if (b > a) {
        emit(CaseId::IIB, SpecBuilder{}.ones(mp - a - 1).part(1 + a).part(b), p);
      } else {
        emit(CaseId::IIB, SpecBuilder{}.ones(mp - a - 1).part(1 + b).part(a), p);
      }
      emit(CaseId::IIBFallback, SpecBuilder{}.ones(mp).part(b), p);
    } else {
      emit(CaseId::IIC, SpecBuilder{}.ones(mp - b - 2).part(b + 1).part(b + 1), p);
      if (static_cast<std::int64_t>(p) == b + 1 && (m - 1) % static_cast<std::int64_t>(p) == 0) {
        require(lowest_p == static_cast<std::int64_t>(p), c, "b_1 p^{s_1} = p fails in case II.c");
        emit(CaseId::IICAlt, SpecBuilder{}.ones(mp - static_cast<std::int64_t>(p)).part(b + static_cast<std::int64_t>(p)), p);
        if (q == 2 && c.q_adic.size() >= 2 && c.q_adic[1].exponent == c.q_adic[0].exponent + 1) {
          emit(CaseId::IICAltQ2, SpecBuilder{}.ones(mp - 1).part(b + 1), q);
        }
      }
    }
    return out;
  }

  const auto bp = lowest_p;
  if (b == 0) {
    emit(CaseId::IIIA, SpecBuilder{}.ones(mp - bp - 1).part(1 + bp), q);
  } else {
    emit(CaseId::IIIB, SpecBuilder{}.ones(mp - bp - 1).part(b + 1).part(bp), q);
    emit(CaseId::IIIBAlt1, SpecBuilder{}.part(b + 1).part(mp - 1), p);
    emit(CaseId::IIIBAlt2, SpecBuilder{}.ones(mp).part(b), p);
    emit(CaseId::IIIBFinal, SpecBuilder{}.ones(mp - 1).part(1 + b), q);
  }
  return out;
}

std::variant<Witness, VerificationFailure> verify_candidate(const WitnessCandidate& c, Natural n) {
  if (c.spec.total() != n) {
    throw SpecSumMismatch("candidate " + to_string(c.spec) + " sums to " + std::to_string(c.spec.total()) +
                          ", expected " + std::to_string(n));
  }
  Partition lambda = from_ascending_spec(c.spec);
  auto fail = [&](Violation v, std::string detail) {
    return VerificationFailure{c, v, to_string(lambda) + ": " + std::move(detail)};
  };

  if (!principal_block_contains(lambda, c.host_prime)) {
    return fail(Violation::NotInHostPrincipalBlock,
                std::to_string(c.host_prime) + "-core is " + to_string(p_core(lambda, c.host_prime)));
  }
  FactoredNatural deg = degree(lambda);
  const auto host_v = deg.valuation(c.host_prime);
  const auto div_v = deg.valuation(c.divisor_prime);
  if (host_v != 0) {
    return fail(Violation::HostDividesDegree, "degree " + deg.to_factored_string());
  }
  if (div_v == 0) {
    return fail(Violation::DivisorDoesNotDivide, "degree " + deg.to_factored_string());
  }
  if (is_self_conjugate(lambda)) {
    return fail(Violation::SelfConjugate, "partition equals its conjugate");
  }
  Witness w;
  w.candidate = c;
  w.partition = std::move(lambda);
  w.degree = std::move(deg);
  w.host_valuation = host_v;
  w.divisor_valuation = div_v;
  w.self_conjugate = false;
  return w;
}

WitnessOutcome construct_witness(Natural n, Natural p, Natural q) {
  const CaseParameters params = derive_case_parameters(n, p, q);
  if (auto d = deferral_for(params)) return *d;
  const auto candidates = candidate_list(params);
  std::string tried;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    auto result = verify_candidate(candidates[i], params.n);
    if (auto* w = std::get_if<Witness>(&result)) {
      w->candidate_index = i;
      return std::move(*w);
    }
    const auto& f = std::get<VerificationFailure>(result);
    tried += std::string(tried.empty() ? "" : "; ") + std::string(to_string(f.candidate.case_id)) + " " +
             std::string(to_string(f.violation)) + " (" + f.detail + ")";
  }
  throw CaseTreeFalsified("no candidate verified at n=" + std::to_string(params.n) + " p=" + std::to_string(params.p) +
                          " q=" + std::to_string(params.q) + ": " + tried);
}

}  // namespace blockwitness
