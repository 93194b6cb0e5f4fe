#include "blockwitness/factored.hpp"

#include <sstream>

#include "blockwitness/error.hpp"

namespace blockwitness {

bool is_prime(Natural k) {
  if (k < 2) return false;
  if (k % 2 == 0) return k == 2;
  for (Natural d = 3; d <= k / d; d += 2) {
    if (k % d == 0) return false;
  }
  return true;
}

std::vector<Natural> primes_up_to(Natural limit) {
  std::vector<Natural> out;
  for (Natural k = 2; k <= limit; ++k) {
    if (is_prime(k)) out.push_back(k);
  }
  return out;
}

FactoredNatural FactoredNatural::from_map(Map factors) {
  for (const auto& [p, e] : factors) {
    if (!is_prime(p)) throw InputError("factor key " + std::to_string(p) + " is not prime");
    if (e == 0) throw InputError("zero exponent for prime " + std::to_string(p));
  }
  FactoredNatural out;
  out.factors_ = std::move(factors);
  return out;
}

std::uint32_t FactoredNatural::valuation(Natural p) const {
  auto it = factors_.find(p);
  return it == factors_.end() ? 0 : it->second;
}

bool FactoredNatural::divides(const FactoredNatural& other) const {
  for (const auto& [p, e] : factors_) {
    if (other.valuation(p) < e) return false;
  }
  return true;
}

FactoredNatural& FactoredNatural::operator*=(const FactoredNatural& other) {
  for (const auto& [p, e] : other.factors_) factors_[p] += e;
  return *this;
}

FactoredNatural& FactoredNatural::operator/=(const FactoredNatural& other) {
  if (!other.divides(*this)) {
    throw NotDivisible(other.to_factored_string() + " does not divide " + to_factored_string());
  }
  for (const auto& [p, e] : other.factors_) {
    auto it = factors_.find(p);
    it->second -= e;
    if (it->second == 0) factors_.erase(it);
  }
  return *this;
}

FactoredNatural FactoredNatural::pow(std::uint32_t e) const {
  if (e == 0) return {};
  FactoredNatural out = *this;
  for (auto& [p, x] : out.factors_) x *= e;
  return out;
}

BigInt FactoredNatural::to_big() const {
  BigInt out = 1;
  for (const auto& [p, e] : factors_) out *= boost::multiprecision::pow(BigInt(p), e);
  return out;
}

std::string FactoredNatural::to_decimal() const { return to_big().str(); }

std::string FactoredNatural::to_factored_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, e] : factors_) {
    if (!first) os << '*';
    first = false;
    os << p;
    if (e > 1) os << '^' << e;
  }
  return os.str();
}

FactoredNatural operator*(FactoredNatural a, const FactoredNatural& b) { return a *= b; }
FactoredNatural operator/(FactoredNatural a, const FactoredNatural& b) { return a /= b; }

FactoredNatural factor(Natural k) {
  if (k == 0) throw InputError("cannot factor 0");
  FactoredNatural::Map m;
  for (Natural d = 2; d <= k / d; ++d) {
    while (k % d == 0) {
      ++m[d];
      k /= d;
    }
  }
  if (k > 1) ++m[k];
  return FactoredNatural::from_map(std::move(m));
}

std::uint64_t factorial_valuation(Natural k, Natural p) {
  std::uint64_t e = 0;
  for (Natural pk = p; pk <= k; pk *= p) {
    e += k / pk;
    if (pk > k / p) break;
  }
  return e;
}

std::uint32_t natural_valuation(Natural k, Natural p) {
  if (k == 0) throw InputError("valuation of 0 is undefined");
  std::uint32_t e = 0;
  while (k % p == 0) {
    k /= p;
    ++e;
  }
  return e;
}

FactoredNatural factorial_factored(Natural k) {
  FactoredNatural::Map m;
  for (Natural p : primes_up_to(k)) m[p] = static_cast<std::uint32_t>(factorial_valuation(k, p));
  return FactoredNatural::from_map(std::move(m));
}

}  // namespace blockwitness
