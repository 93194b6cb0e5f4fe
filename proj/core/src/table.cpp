#include "blockwitness/table.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "blockwitness/blocks.hpp"
#include "blockwitness/degrees.hpp"
#include "blockwitness/error.hpp"
#include "blockwitness/partition.hpp"

namespace blockwitness {

std::optional<bool> CharacterTableSummary::commute_fact(Natural p, Natural q) const {
  auto it = sylow_commute.find(make_pair_key(p, q));
  if (it == sylow_commute.end()) return std::nullopt;
  return it->second;
}

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

BigInt parse_big(const std::string& tok, std::size_t line) {
  if (!all_digits(tok)) throw ParseError(line, tok, "malformed integer");
  return BigInt(tok);
}

Natural parse_prime(const std::string& tok, std::size_t line) {
  if (!all_digits(tok) || tok.size() > 18) throw ParseError(line, tok, "malformed integer");
  const Natural v = std::stoull(tok);
  if (!is_prime(v)) throw ParseError(line, tok, "not a prime");
  return v;
}

bool parse_bool(const std::string& tok, std::size_t line) {
  if (tok == "true") return true;
  if (tok == "false") return false;
  throw ParseError(line, tok, "expected true or false");
}

void expect_args(const std::vector<std::string>& toks, std::size_t count, std::size_t line) {
  if (toks.size() != count + 1) {
    throw ParseError(line, toks.front(),
                     "directive expects " + std::to_string(count) + " argument" + (count == 1 ? "" : "s"));
  }
}

}  // namespace

CharacterTableSummary parse_table(std::string_view text) {
  CharacterTableSummary t;
  std::set<std::string> seen_header;
  std::set<std::string> ids;
  bool in_rows = false;
  std::size_t line_no = 0;
  std::size_t header_end = 0;
  std::size_t primes_line = 0;

  auto check_header = [&](std::size_t line) {
    for (const char* key : {"group", "order", "primes", "trivial", "complete"}) {
      if (!seen_header.count(key)) throw ParseError(line, key, "missing header directive");
    }
    for (auto p : t.primes) {
      if (t.order % p != 0) throw ParseError(primes_line, std::to_string(p), "prime does not divide the order");
    }
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    const auto line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    const auto toks = tokenize(line);
    if (toks.empty()) continue;
    const auto& key = toks.front();

    if (key == "char") {
      if (!in_rows) {
        check_header(line_no);
        in_rows = true;
      }
      if (toks.size() < 3) throw ParseError(line_no, key, "char needs an id and a degree");
      CharacterRow row;
      row.id = toks[1];
      if (!ids.insert(row.id).second) throw ParseError(line_no, row.id, "duplicate character id");
      row.degree = parse_big(toks[2], line_no);
      if (row.degree == 0) throw ParseError(line_no, toks[2], "degree must be positive");
      for (std::size_t i = 3; i < toks.size(); ++i) {
        const auto& flag = toks[i];
        const auto colon = flag.find(':');
        if (colon == std::string::npos) throw ParseError(line_no, flag, "expected <prime>:<0|1>");
        const auto prime_tok = flag.substr(0, colon);
        const auto bit = flag.substr(colon + 1);
        if (!all_digits(prime_tok) || prime_tok.size() > 18) throw ParseError(line_no, flag, "malformed integer");
        const Natural p = std::stoull(prime_tok);
        if (std::find(t.primes.begin(), t.primes.end(), p) == t.primes.end()) {
          throw ParseError(line_no, flag, "unknown prime flag");
        }
        if (bit != "0" && bit != "1") throw ParseError(line_no, flag, "flag must be 0 or 1");
        if (!row.principal.emplace(p, bit == "1").second) throw ParseError(line_no, flag, "prime flagged twice");
      }
      if (row.principal.size() != t.primes.size()) {
        throw ParseError(line_no, row.id, "char line must flag every header prime");
      }
      t.rows.push_back(std::move(row));
      continue;
    }

    if (in_rows) throw ParseError(line_no, key, "header directive after char lines");

    if (key == "sylow_commute") {
      expect_args(toks, 3, line_no);
      const Natural p = parse_prime(toks[1], line_no);
      const Natural q = parse_prime(toks[2], line_no);
      for (auto x : {p, q}) {
        if (std::find(t.primes.begin(), t.primes.end(), x) == t.primes.end()) {
          throw ParseError(line_no, std::to_string(x), "sylow_commute prime not listed in primes");
        }
      }
      if (p == q) throw ParseError(line_no, toks[2], "sylow_commute needs two different primes");
      if (!t.sylow_commute.emplace(make_pair_key(p, q), parse_bool(toks[3], line_no)).second) {
        throw ParseError(line_no, key, "duplicate sylow_commute pair");
      }
      continue;
    }

    if (!seen_header.insert(key).second &&
        (key == "group" || key == "order" || key == "primes" || key == "trivial" || key == "complete")) {
      throw ParseError(line_no, key, "duplicate header directive");
    }
    if (key == "group") {
      expect_args(toks, 1, line_no);
      t.group_name = toks[1];
    } else if (key == "order") {
      expect_args(toks, 1, line_no);
      t.order = parse_big(toks[1], line_no);
      if (t.order == 0) throw ParseError(line_no, toks[1], "order must be positive");
    } else if (key == "primes") {
      primes_line = line_no;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        const Natural p = parse_prime(toks[i], line_no);
        if (std::find(t.primes.begin(), t.primes.end(), p) != t.primes.end()) {
          throw ParseError(line_no, toks[i], "duplicate prime");
        }
        t.primes.push_back(p);
      }
    } else if (key == "trivial") {
      expect_args(toks, 1, line_no);
      t.trivial_id = toks[1];
    } else if (key == "complete") {
      expect_args(toks, 1, line_no);
      t.complete = parse_bool(toks[1], line_no);
    } else {
      throw ParseError(line_no, key, "unknown directive");
    }
  }

  header_end = line_no;
  if (!in_rows) check_header(header_end);

  auto trivial = std::find_if(t.rows.begin(), t.rows.end(), [&](const auto& r) { return r.id == t.trivial_id; });
  if (trivial == t.rows.end()) throw ParseError(header_end, t.trivial_id, "trivial character has no char line");
  if (trivial->degree != 1) throw ParseError(header_end, t.trivial_id, "trivial character must have degree 1");
  for (const auto& [p, flag] : trivial->principal) {
    if (!flag) throw ParseError(header_end, t.trivial_id, "trivial character must lie in every principal block");
  }
  if (t.complete) {
    BigInt sum = 0;
    for (const auto& r : t.rows) sum += r.degree * r.degree;
    if (sum != t.order) {
      throw ParseError(header_end, sum.str(), "sum of squared degrees differs from the group order");
    }
  }
  return t;
}

std::string write_table(const CharacterTableSummary& t) {
  std::ostringstream os;
  os << "group " << t.group_name << '\n';
  os << "order " << t.order.str() << '\n';
  os << "primes";
  for (auto p : t.primes) os << ' ' << p;
  os << '\n';
  os << "trivial " << t.trivial_id << '\n';
  os << "complete " << (t.complete ? "true" : "false") << '\n';
  for (const auto& [pair, commute] : t.sylow_commute) {
    os << "sylow_commute " << pair.first << ' ' << pair.second << ' ' << (commute ? "true" : "false") << '\n';
  }
  for (const auto& r : t.rows) {
    os << "char " << r.id << ' ' << r.degree.str();
    for (auto p : t.primes) os << ' ' << p << ':' << (r.principal.at(p) ? 1 : 0);
    os << '\n';
  }
  return os.str();
}

std::string_view to_string(Conjecture c) {
  switch (c) {
    case Conjecture::A: return "A";
    case Conjecture::B: return "B";
    case Conjecture::C: return "C";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Consistent: return "consistent";
    case Verdict::HypothesisHolds: return "hypothesis_holds";
    case Verdict::Violation: return "violation";
    case Verdict::Indeterminate: return "indeterminate";
  }
  return "?";
}

std::optional<Conjecture> parse_conjecture(std::string_view text) {
  if (text == "a" || text == "A") return Conjecture::A;
  if (text == "b" || text == "B") return Conjecture::B;
  if (text == "c" || text == "C") return Conjecture::C;
  return std::nullopt;
}

namespace {

// Ids of Irr_{p'}(B_p(G)).
std::set<std::string> p_prime_principal(const CharacterTableSummary& t, Natural p) {
  std::set<std::string> out;
  for (const auto& r : t.rows) {
    if (r.principal.at(p) && r.degree % p != 0) out.insert(r.id);
  }
  return out;
}

bool none_divisible(const CharacterTableSummary& t, const std::set<std::string>& ids, Natural prime) {
  for (const auto& r : t.rows) {
    if (ids.count(r.id) && r.degree % prime == 0) return false;
  }
  return true;
}

std::string fact_string(std::optional<bool> fact) {
  return fact ? (*fact ? "true" : "false") : "unknown";
}

}  // namespace

std::vector<AuditFinding> audit(const CharacterTableSummary& t, Conjecture which) {
  std::vector<AuditFinding> out;
  for (std::size_t i = 0; i < t.primes.size(); ++i) {
    for (std::size_t j = i + 1; j < t.primes.size(); ++j) {
      const Natural p = t.primes[i];
      const Natural q = t.primes[j];
      const auto sp = p_prime_principal(t, p);
      const auto sq = p_prime_principal(t, q);
      const auto fact = t.commute_fact(p, q);
      AuditFinding f;
      f.conjecture = which;
      f.primes = {p, q};
      std::ostringstream d;
      d << "|S_" << p << "|=" << sp.size() << " |S_" << q << "|=" << sq.size();

      switch (which) {
        case Conjecture::A: {
          std::set<std::string> both;
          std::set_intersection(sp.begin(), sp.end(), sq.begin(), sq.end(), std::inserter(both, both.end()));
          const bool hypothesis = both == std::set<std::string>{t.trivial_id};
          d << " |intersection|=" << both.size() << " hypothesis=" << (hypothesis ? "true" : "false")
            << " sylow_commute=" << fact_string(fact);
          if (!hypothesis) {
            f.verdict = Verdict::Consistent;
          } else if (!fact) {
            f.verdict = Verdict::HypothesisHolds;
          } else {
            f.verdict = *fact ? Verdict::Consistent : Verdict::Violation;
          }
          break;
        }
        case Conjecture::B: {
          const bool equal = sp == sq;
          d << " sets_equal=" << (equal ? "true" : "false");
          f.verdict = equal ? Verdict::Violation : Verdict::Consistent;
          break;
        }
        case Conjecture::C: {
          const bool condition = none_divisible(t, sp, q) && none_divisible(t, sq, p);
          d << " condition=" << (condition ? "true" : "false") << " sylow_commute=" << fact_string(fact);
          if (!fact) {
            f.verdict = Verdict::Indeterminate;
          } else {
            f.verdict = condition == *fact ? Verdict::Consistent : Verdict::Violation;
          }
          break;
        }
      }
      f.detail = d.str();
      out.push_back(std::move(f));
    }
  }
  return out;
}

std::string format_finding(const AuditFinding& f) {
  std::string quoted = "\"";
  for (char c : f.detail) {
    if (c == '"' || c == '\\') quoted += '\\';
    quoted += c;
  }
  quoted += '"';
  std::ostringstream os;
  os << "finding " << to_string(f.conjecture) << ' ' << f.primes.first << ' ' << f.primes.second << ' '
     << to_string(f.verdict) << ' ' << quoted;
  return os.str();
}

CharacterTableSummary sn_table(std::uint32_t n, const std::vector<Natural>& primes) {
  if (n == 0) throw InputError("n must be positive");
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (!is_prime(primes[i])) throw NotPrime(std::to_string(primes[i]) + " is not prime");
    if (primes[i] > n) throw PrimeExceedsN("prime " + std::to_string(primes[i]) + " exceeds n = " + std::to_string(n));
    if (std::find(primes.begin(), primes.begin() + static_cast<std::ptrdiff_t>(i), primes[i]) !=
        primes.begin() + static_cast<std::ptrdiff_t>(i)) {
      throw InputError("duplicate prime " + std::to_string(primes[i]));
    }
  }
  CharacterTableSummary t;
  t.group_name = "S" + std::to_string(n);
  t.order = factorial_factored(n).to_big();
  t.primes = primes;
  t.trivial_id = to_string(Partition::row(n));
  t.complete = true;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = i + 1; j < primes.size(); ++j) t.sylow_commute[make_pair_key(primes[i], primes[j])] = false;
  }
  PartitionGenerator gen(n);
  while (auto lambda = gen.next()) {
    CharacterRow row;
    row.id = to_string(*lambda);
    row.degree = degree(*lambda).to_big();
    for (auto p : primes) row.principal[p] = principal_block_contains(*lambda, p);
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string export_sn_table(std::uint32_t n, const std::vector<Natural>& primes) {
  return "# degrees and principal-block flags of S" + std::to_string(n) + "\n" + write_table(sn_table(n, primes));
}

}  // namespace blockwitness
