#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "blockwitness/factored.hpp"

namespace blockwitness {

// Line-oriented summary of a character table: degrees plus principal-block
// membership flags, and optionally whether Sylow subgroups commute.
//
//   group <name>
//   order <decimal>
//   primes <p1> <p2> ...
//   trivial <id>
//   complete <true|false>
//   sylow_commute <p> <q> <true|false>    (zero or more)
//   char <id> <degree> <p1>:<0|1> <p2>:<0|1> ...
//
// '#' starts a comment. All header directives precede the first char line.

struct CharacterRow {
  std::string id;
  BigInt degree;
  std::map<Natural, bool> principal;

  friend bool operator==(const CharacterRow&, const CharacterRow&) = default;
};

using PrimePair = std::pair<Natural, Natural>;  // stored smaller prime first

inline PrimePair make_pair_key(Natural a, Natural b) { return a < b ? PrimePair{a, b} : PrimePair{b, a}; }

struct CharacterTableSummary {
  std::string group_name;
  BigInt order;
  std::vector<Natural> primes;
  std::string trivial_id;
  bool complete = false;
  std::map<PrimePair, bool> sylow_commute;
  std::vector<CharacterRow> rows;

  std::optional<bool> commute_fact(Natural p, Natural q) const;

  friend bool operator==(const CharacterTableSummary&, const CharacterTableSummary&) = default;
};

// Throws ParseError (with line number) on any syntax or invariant failure.
CharacterTableSummary parse_table(std::string_view text);

std::string write_table(const CharacterTableSummary& summary);

enum class Conjecture { A, B, C };
enum class Verdict { Consistent, HypothesisHolds, Violation, Indeterminate };

std::string_view to_string(Conjecture c);
std::string_view to_string(Verdict v);
std::optional<Conjecture> parse_conjecture(std::string_view text);

struct AuditFinding {
  Conjecture conjecture = Conjecture::A;
  PrimePair primes;
  Verdict verdict = Verdict::Indeterminate;
  std::string detail;
};

// One finding per unordered pair of header primes, pairs in header order.
std::vector<AuditFinding> audit(const CharacterTableSummary& summary, Conjecture which);

// finding <conjecture> <p> <q> <verdict> "<detail>"
std::string format_finding(const AuditFinding& f);

// Summary of S_n with partition-literal ids. Sylow p- and q-subgroups of S_n
// never commute for distinct primes dividing n!, so every pair is recorded
// as non-commuting. Throws NotPrime / PrimeExceedsN / InputError.
CharacterTableSummary sn_table(std::uint32_t n, const std::vector<Natural>& primes);
std::string export_sn_table(std::uint32_t n, const std::vector<Natural>& primes);

}  // namespace blockwitness
