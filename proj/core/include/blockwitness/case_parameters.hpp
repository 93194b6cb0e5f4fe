#pragma once

#include <cstdint>
#include <vector>

#include "blockwitness/factored.hpp"

namespace blockwitness {

// One nonzero digit of a base-`radix` expansion: coefficient * radix^exponent.
struct Digit {
  Natural coefficient = 0;
  std::uint32_t exponent = 0;

  Natural value(Natural radix) const;
  friend bool operator==(const Digit&, const Digit&) = default;
};

// Nonzero digits of k in base `radix`, lowest exponent first.
std::vector<Digit> adic_digits(Natural k, Natural radix);

// Parameters of the witness construction for a prime pair, normalized so
// that q < p:
//   n  = m*p + b,  0 <= b < p
//   mp = w*q + r,  0 <= r < q
// together with the q-adic and p-adic expansions of mp.
struct CaseParameters {
  Natural n = 0;
  Natural p = 0;
  Natural q = 0;
  Natural m = 0;
  Natural w = 0;
  Natural r = 0;
  Natural b = 0;
  std::vector<Digit> q_adic;  // mp = sum a_i q^{t_i}
  std::vector<Digit> p_adic;  // mp = sum b_j p^{s_j}

  Natural mp() const { return m * p; }
  // Leading (lowest) q-adic term a_1 q^{t_1}.
  Natural lowest_q_term() const { return q_adic.front().value(q); }
  // Leading (lowest) p-adic term b_1 p^{s_1}.
  Natural lowest_p_term() const { return p_adic.front().value(p); }

  friend bool operator==(const CaseParameters&, const CaseParameters&) = default;
};

// Accepts the primes in either order. Throws NotPrime, PrimeExceedsN, or
// InputError (p == q, n == 0).
CaseParameters derive_case_parameters(Natural n, Natural p, Natural q);

}  // namespace blockwitness
