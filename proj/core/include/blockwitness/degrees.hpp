#pragma once

#include <cstdint>
#include <optional>

#include "blockwitness/case_parameters.hpp"
#include "blockwitness/factored.hpp"
#include "blockwitness/partition.hpp"

namespace blockwitness {

// chi_lambda(1) = |lambda|! / (product of hook lengths), exact.
FactoredNatural degree(const Partition& lambda);

// Exponent of p in chi_lambda(1), from Legendre's formula minus the hook
// valuations; the degree itself is never formed.
std::uint32_t degree_valuation(const Partition& lambda, Natural p);

struct DegreeFacts {
  FactoredNatural degree;
  std::uint32_t valuation_p = 0;
  std::uint32_t valuation_q = 0;
};

DegreeFacts degree_facts(const Partition& lambda, Natural p, Natural q);

// Binomial-type quotients that recur in the witness degrees. Each is checked
// to be an integer when built. y_prime is absent when b = 0 and x_prime when
// mp equals its lowest p-adic term.
struct CaseQuantities {
  FactoredNatural y;        // (mp+b)...(mp+1) / b!
  std::optional<FactoredNatural> y_prime;  // (mp+b-1)...(mp+1) / (b-1)!
  FactoredNatural z;        // (mp+r)...(mp+1) / r!
  FactoredNatural z_prime;  // (mp-1)...(mp-r) / r!
  FactoredNatural x;        // prod_{i<=a_1 q^t_1} (mp-i)/i
  std::optional<FactoredNatural> x_prime;  // prod_{i<=b_1 p^s_1} (mp-i)/i
};

CaseQuantities case_quantities(const CaseParameters& params);

// Accessors that throw UndefinedQuantity for the absent entries.
const FactoredNatural& y_prime(const CaseQuantities& q);
const FactoredNatural& x_prime(const CaseQuantities& q);

}  // namespace blockwitness
