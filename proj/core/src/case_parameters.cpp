#include "blockwitness/case_parameters.hpp"

#include <string>
#include <utility>

#include "blockwitness/error.hpp"

namespace blockwitness {

Natural Digit::value(Natural radix) const {
  Natural v = coefficient;
  for (std::uint32_t i = 0; i < exponent; ++i) v *= radix;
  return v;
}

std::vector<Digit> adic_digits(Natural k, Natural radix) {
  std::vector<Digit> out;
  for (std::uint32_t e = 0; k > 0; ++e, k /= radix) {
    if (k % radix != 0) out.push_back({k % radix, e});
  }
  return out;
}

CaseParameters derive_case_parameters(Natural n, Natural p, Natural q) {
  if (n == 0) throw InputError("n must be positive");
  for (Natural x : {p, q}) {
    if (!is_prime(x)) throw NotPrime(std::to_string(x) + " is not prime");
    if (x > n) throw PrimeExceedsN("prime " + std::to_string(x) + " exceeds n = " + std::to_string(n));
  }
  if (p == q) throw InputError("the two primes must differ");
  if (q > p) std::swap(p, q);

  CaseParameters c;
  c.n = n;
  c.p = p;
  c.q = q;
  c.m = n / p;
  c.b = n % p;
  const Natural mp = c.m * p;
  c.w = mp / q;
  c.r = mp % q;
  c.q_adic = adic_digits(mp, q);
  c.p_adic = adic_digits(mp, p);
  return c;
}

}  // namespace blockwitness
