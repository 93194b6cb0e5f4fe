#include "blockwitness/degrees.hpp"

#include "blockwitness/error.hpp"

namespace blockwitness {

FactoredNatural degree(const Partition& lambda) {
  FactoredNatural hooks;
  for (auto h : hook_lengths(lambda)) hooks *= factor(h);
  try {
    return factorial_factored(lambda.size()) / hooks;
  } catch (const NotDivisible& e) {
    throw NotDivisible("hook product does not divide n! for " + to_string(lambda) + ": " + e.what());
  }
}

std::uint32_t degree_valuation(const Partition& lambda, Natural p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  std::uint64_t hook_part = 0;
  for (auto h : hook_lengths(lambda)) hook_part += natural_valuation(h, p);
  const auto total = factorial_valuation(lambda.size(), p);
  if (hook_part > total) {
    throw NotDivisible("hook product has larger " + std::to_string(p) + "-part than n! for " + to_string(lambda));
  }
  return static_cast<std::uint32_t>(total - hook_part);
}

DegreeFacts degree_facts(const Partition& lambda, Natural p, Natural q) {
  DegreeFacts f;
  f.degree = degree(lambda);
  f.valuation_p = f.degree.valuation(p);
  f.valuation_q = f.degree.valuation(q);
  return f;
}

namespace {

// (top)(top-1)...(top-count+1) / count!
FactoredNatural falling_over_factorial(Natural top, Natural count) {
  FactoredNatural num;
  for (Natural i = 0; i < count; ++i) num *= factor(top - i);
  return num / factorial_factored(count);
}

}  // namespace

CaseQuantities case_quantities(const CaseParameters& c) {
  const Natural mp = c.mp();
  CaseQuantities out;
  out.y = falling_over_factorial(mp + c.b, c.b);
  if (c.b >= 1) out.y_prime = falling_over_factorial(mp + c.b - 1, c.b - 1);
  out.z = falling_over_factorial(mp + c.r, c.r);
  out.z_prime = falling_over_factorial(mp - 1, c.r);
  // mp never equals its lowest q-adic term since p does not divide a_1.
  const Natural a = c.lowest_q_term();
  if (a >= mp) throw InternalError("lowest q-adic term of mp is not below mp");
  out.x = falling_over_factorial(mp - 1, a);
  const Natural bp = c.lowest_p_term();
  if (bp < mp) out.x_prime = falling_over_factorial(mp - 1, bp);
  return out;
}

const FactoredNatural& y_prime(const CaseQuantities& q) {
  if (!q.y_prime) throw UndefinedQuantity("Y' is undefined when b = 0");
  return *q.y_prime;
}

const FactoredNatural& x_prime(const CaseQuantities& q) {
  if (!q.x_prime) throw UndefinedQuantity("X' is undefined when mp equals its lowest p-adic term");
  return *q.x_prime;
}

}  // namespace blockwitness
