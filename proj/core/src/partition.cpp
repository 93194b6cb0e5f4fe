#include "blockwitness/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "blockwitness/error.hpp"

namespace blockwitness {

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw InvalidPartition("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidPartition("partition parts must be weakly decreasing");
    total += parts_[i];
  }
  if (total > UINT32_MAX) throw InvalidPartition("partition too large");
  size_ = static_cast<std::uint32_t>(total);
}

Partition Partition::row(Part k) { return k == 0 ? Partition{} : Partition(std::vector<Part>{k}); }

Partition Partition::column(Part k) { return Partition(std::vector<Part>(k, 1)); }

std::uint64_t AscendingSpec::total() const {
  std::uint64_t t = 0;
  for (const auto& b : blocks) t += std::uint64_t{b.value} * b.multiplicity;
  return t;
}

Partition from_ascending_spec(const AscendingSpec& spec) {
  if (spec.blocks.empty()) throw NonMonotoneSpec("ascending spec has no blocks");
  std::vector<Part> parts;
  Part previous = 0;
  for (std::size_t i = 0; i < spec.blocks.size(); ++i) {
    const auto& b = spec.blocks[i];
    if (b.value == 0) throw NonMonotoneSpec("part value 0 in " + to_string(spec));
    if (b.value < previous) throw NonMonotoneSpec("decreasing part values in " + to_string(spec));
    if (b.multiplicity == 0 && !(i == 0 && b.value == 1)) {
      throw NonMonotoneSpec("zero multiplicity outside the leading 1-block in " + to_string(spec));
    }
    previous = b.value;
    parts.insert(parts.end(), b.multiplicity, b.value);
  }
  std::reverse(parts.begin(), parts.end());
  return Partition(std::move(parts));
}

std::string to_string(const AscendingSpec& spec) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < spec.blocks.size(); ++i) {
    if (i) os << ',';
    os << spec.blocks[i].value;
    if (spec.blocks[i].multiplicity != 1) os << '^' << spec.blocks[i].multiplicity;
  }
  os << ')';
  return os.str();
}

PartitionGenerator::PartitionGenerator(std::uint32_t n) : n_(n) {}

std::optional<Partition> PartitionGenerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (n_ > 0) current_.push_back(n_);
    return Partition(current_);
  }
  // Rightmost part exceeding 1.
  auto k = current_.size();
  while (k > 0 && current_[k - 1] == 1) --k;
  if (k == 0) {
    done_ = true;
    return std::nullopt;
  }
  --k;
  std::uint32_t rest = static_cast<std::uint32_t>(current_.size() - k - 1) + 1;
  const Part cap = --current_[k];
  current_.resize(k + 1);
  while (rest > 0) {
    const Part piece = std::min(cap, rest);
    current_.push_back(piece);
    rest -= piece;
  }
  return Partition(current_);
}

std::vector<Partition> partitions_of(std::uint32_t n) {
  std::vector<Partition> out;
  PartitionGenerator gen(n);
  while (auto lambda = gen.next()) out.push_back(std::move(*lambda));
  return out;
}

Partition conjugate(const Partition& lambda) {
  if (lambda.empty()) return {};
  std::vector<Part> parts(lambda.parts()[0], 0);
  for (Part row : lambda.parts()) {
    for (Part j = 0; j < row; ++j) ++parts[j];
  }
  return Partition(std::move(parts));
}

bool is_self_conjugate(const Partition& lambda) { return conjugate(lambda) == lambda; }

std::vector<std::uint32_t> hook_lengths(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  std::vector<std::uint32_t> hooks;
  hooks.reserve(lambda.size());
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    for (std::size_t j = 0; j < lambda[i]; ++j) {
      const auto arm = lambda[i] - j - 1;
      const auto leg = conj[j] - i - 1;
      hooks.push_back(static_cast<std::uint32_t>(arm + leg + 1));
    }
  }
  return hooks;
}

std::vector<std::uint32_t> beta_set(const Partition& lambda, std::size_t length) {
  if (length < lambda.length()) {
    throw LengthTooSmall("beta-set length " + std::to_string(length) + " is below the partition length " +
                         std::to_string(lambda.length()));
  }
  std::vector<std::uint32_t> beta(length);
  for (std::size_t i = 0; i < length; ++i) {
    beta[i] = static_cast<std::uint32_t>(lambda[i] + (length - 1 - i));
  }
  return beta;
}

Partition from_beta_set(std::vector<std::uint32_t> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  if (std::adjacent_find(beta.begin(), beta.end()) != beta.end()) {
    throw InvalidPartition("beta-set has repeated entries");
  }
  std::vector<Part> parts;
  const auto length = beta.size();
  for (std::size_t i = 0; i < length; ++i) {
    const auto part = beta[i] - static_cast<std::uint32_t>(length - 1 - i);
    if (part == 0) break;
    parts.push_back(part);
  }
  return Partition(std::move(parts));
}

namespace {

std::size_t abacus_length(const Partition& lambda, std::uint32_t p) {
  return (lambda.length() + p - 1) / p * p;
}

void check_modulus(std::uint32_t p) {
  if (p < 2) throw InputError("abacus modulus must be at least 2");
}

}  // namespace

Partition p_core_with_length(const Partition& lambda, std::uint32_t p, std::size_t length) {
  check_modulus(p);
  const auto beta = beta_set(lambda, length);
  std::vector<std::uint32_t> beads(p, 0);
  for (auto x : beta) ++beads[x % p];
  std::vector<std::uint32_t> packed;
  packed.reserve(length);
  for (std::uint32_t runner = 0; runner < p; ++runner) {
    for (std::uint32_t k = 0; k < beads[runner]; ++k) packed.push_back(runner + k * p);
  }
  return from_beta_set(std::move(packed));
}

Partition p_core(const Partition& lambda, std::uint32_t p) {
  check_modulus(p);
  return p_core_with_length(lambda, p, abacus_length(lambda, p));
}

std::vector<Partition> p_quotient(const Partition& lambda, std::uint32_t p) {
  check_modulus(p);
  const auto beta = beta_set(lambda, abacus_length(lambda, p));
  std::vector<std::vector<std::uint32_t>> runners(p);
  for (auto x : beta) runners[x % p].push_back(x / p);
  std::vector<Partition> out;
  out.reserve(p);
  for (auto& r : runners) out.push_back(from_beta_set(std::move(r)));
  return out;
}

std::string to_string(const Partition& lambda) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    if (i) os << ',';
    os << lambda[i];
  }
  os << ']';
  return os.str();
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::uint32_t parse_u32(std::string_view token, std::string_view whole) {
  token = trim(token);
  std::uint32_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc{} || ptr != end) {
    throw InvalidPartition("malformed number '" + std::string(token) + "' in partition literal '" +
                           std::string(whole) + "'");
  }
  return value;
}

std::vector<std::string_view> split_commas(std::string_view body) {
  std::vector<std::string_view> out;
  if (trim(body).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = body.find(',', start);
    out.push_back(body.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  const auto s = trim(text);
  if (s.size() < 2) throw InvalidPartition("malformed partition literal '" + std::string(text) + "'");
  const auto body = s.substr(1, s.size() - 2);
  if (s.front() == '[' && s.back() == ']') {
    std::vector<Part> parts;
    for (auto tok : split_commas(body)) parts.push_back(parse_u32(tok, s));
    return Partition(std::move(parts));
  }
  if (s.front() == '(' && s.back() == ')') {
    AscendingSpec spec;
    for (auto tok : split_commas(body)) {
      const auto caret = tok.find('^');
      AscendingBlock block;
      block.value = parse_u32(tok.substr(0, caret), s);
      block.multiplicity = caret == std::string_view::npos ? 1 : parse_u32(tok.substr(caret + 1), s);
      spec.blocks.push_back(block);
    }
    return from_ascending_spec(spec);
  }
  throw InvalidPartition("partition literal must be bracketed: '" + std::string(text) + "'");
}

}  // namespace blockwitness
