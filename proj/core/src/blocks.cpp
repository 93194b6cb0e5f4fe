#include "blockwitness/blocks.hpp"

#include "blockwitness/degrees.hpp"
#include "blockwitness/error.hpp"

namespace blockwitness {

namespace {

std::uint32_t as_modulus(Natural p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  return p > UINT32_MAX ? UINT32_MAX : static_cast<std::uint32_t>(p);
}

}  // namespace

BlockLabel block_label(const Partition& lambda, Natural p) {
  return {p_core(lambda, as_modulus(p)), p};
}

Partition principal_core(std::uint32_t n, Natural p) {
  as_modulus(p);
  return Partition::row(static_cast<Part>(n % p));
}

bool principal_block_contains(const Partition& lambda, Natural p) {
  return p_core(lambda, as_modulus(p)) == principal_core(lambda.size(), p);
}

std::vector<Partition> principal_block_members(std::uint32_t n, Natural p) {
  std::vector<Partition> out;
  PartitionGenerator gen(n);
  while (auto lambda = gen.next()) {
    if (principal_block_contains(*lambda, p)) out.push_back(std::move(*lambda));
  }
  return out;
}

std::vector<Partition> irr_p_prime_principal(std::uint32_t n, Natural p) {
  std::vector<Partition> out;
  for (auto& lambda : principal_block_members(n, p)) {
    if (degree_valuation(lambda, p) == 0) out.push_back(std::move(lambda));
  }
  return out;
}

}  // namespace blockwitness
