#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace blockwitness {

using Natural = std::uint64_t;
using BigInt = boost::multiprecision::cpp_int;

bool is_prime(Natural k);

// All primes <= limit, ascending.
std::vector<Natural> primes_up_to(Natural limit);

// A positive integer held as its prime factorization. The integer 1 is the
// empty map; exponents are never zero. Only the factored form takes part in
// degree arithmetic, so n! and hook products never overflow.
class FactoredNatural {
 public:
  using Map = std::map<Natural, std::uint32_t>;

  FactoredNatural() = default;

  // Throws InputError if a key is not prime or an exponent is zero.
  static FactoredNatural from_map(Map factors);

  const Map& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }

  // Exponent of p (0 if p does not divide).
  std::uint32_t valuation(Natural p) const;

  bool divides(const FactoredNatural& other) const;

  FactoredNatural& operator*=(const FactoredNatural& other);

  // Exact quotient; throws NotDivisible if `other` does not divide *this.
  FactoredNatural& operator/=(const FactoredNatural& other);

  // Exponentwise scaling; pow(2) is the square.
  FactoredNatural pow(std::uint32_t e) const;

  BigInt to_big() const;
  std::string to_decimal() const;

  // "2^3*3*5^2"; "1" for the empty product.
  std::string to_factored_string() const;

  friend bool operator==(const FactoredNatural&, const FactoredNatural&) = default;

 private:
  Map factors_;
};

FactoredNatural operator*(FactoredNatural a, const FactoredNatural& b);
FactoredNatural operator/(FactoredNatural a, const FactoredNatural& b);

// Trial division; throws InputError for k == 0.
FactoredNatural factor(Natural k);

inline FactoredNatural mul(const FactoredNatural& a, const FactoredNatural& b) { return a * b; }
inline FactoredNatural div(const FactoredNatural& a, const FactoredNatural& b) { return a / b; }
inline std::uint32_t valuation(const FactoredNatural& a, Natural p) { return a.valuation(p); }

// k! via Legendre's formula, one exponent per prime <= k.
FactoredNatural factorial_factored(Natural k);

// Exponent of p in k! (Legendre).
std::uint64_t factorial_valuation(Natural k, Natural p);

// Exponent of p in k; k must be positive.
std::uint32_t natural_valuation(Natural k, Natural p);

inline std::string to_decimal(const FactoredNatural& a) { return a.to_decimal(); }

}  // namespace blockwitness
