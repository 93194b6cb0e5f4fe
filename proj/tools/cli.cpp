#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <memory>
#include <mutex>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "blockwitness/blocks.hpp"
#include "blockwitness/degrees.hpp"
#include "blockwitness/error.hpp"
#include "blockwitness/oracle.hpp"
#include "blockwitness/partition.hpp"
#include "blockwitness/table.hpp"
#include "blockwitness/witness.hpp"

namespace blockwitness::cli {

namespace {

using nlohmann::ordered_json;

struct PairOptions {
  std::uint32_t n = 0;
  Natural p = 0;
  Natural q = 0;
};

void add_pair_options(CLI::App* sub, PairOptions& o) {
  sub->add_option("--n", o.n, "degree of the symmetric group")->required();
  sub->add_option("--p", o.p, "first prime")->required();
  sub->add_option("--q", o.q, "second prime")->required();
}

std::string bool_word(bool b) { return b ? "true" : "false"; }

ordered_json witness_json(const Witness& w, const PairOptions& o) {
  ordered_json j;
  j["case"] = std::string(to_string(w.candidate.case_id));
  j["partition"] = to_string(w.partition);
  j["host"] = w.candidate.host_prime;
  j["divisor"] = w.candidate.divisor_prime;
  j["degree"] = w.degree.to_decimal();
  j["degree_factored"] = w.degree.to_factored_string();
  j["host_valuation"] = w.host_valuation;
  j["divisor_valuation"] = w.divisor_valuation;
  j["candidate_index"] = w.candidate_index;
  j["spec"] = to_string(w.candidate.spec);
  j["self_conjugate"] = w.self_conjugate;
  j["n"] = o.n;
  j["p"] = o.p;
  j["q"] = o.q;
  return j;
}

int cmd_witness(const PairOptions& o, bool as_json, std::ostream& out) {
  const auto outcome = construct_witness(o.n, o.p, o.q);
  if (const auto* d = std::get_if<Deferral>(&outcome)) {
    if (as_json) {
      ordered_json j;
      j["n"] = o.n;
      j["p"] = o.p;
      j["q"] = o.q;
      j["deferred"] = std::string(to_string(d->reason));
      j["message"] = d->message;
      out << j.dump() << '\n';
    } else {
      out << d->message << '\n';
    }
    return kConditionFailed;
  }
  const auto& w = std::get<Witness>(outcome);
  if (as_json) {
    out << witness_json(w, o).dump() << '\n';
    return kOk;
  }
  // Same fields, same order as the JSON form.
  out << "case=" << to_string(w.candidate.case_id) << " partition=" << to_string(w.partition)
      << " host=" << w.candidate.host_prime << " divisor=" << w.candidate.divisor_prime
      << " degree=" << w.degree.to_decimal() << " degree_factored=" << w.degree.to_factored_string()
      << " host_valuation=" << w.host_valuation << " divisor_valuation=" << w.divisor_valuation
      << " candidate_index=" << w.candidate_index << " spec=" << to_string(w.candidate.spec)
      << " self_conjugate=" << bool_word(w.self_conjugate) << " n=" << o.n << " p=" << o.p << " q=" << o.q << '\n';
  return kOk;
}

void print_members(std::ostream& out, const char* label, Natural prime, const std::vector<Partition>& set) {
  for (const auto& lambda : set) out << label << " prime=" << prime << " partition=" << to_string(lambda) << '\n';
}

int cmd_verify_c(const PairOptions& o, const std::string& group, std::ostream& out) {
  const auto kind = parse_group_kind(group);
  if (!kind) throw InputError("--group must be sn or an");
  const auto r = check_conj_c(o.n, o.p, o.q, *kind);
  out << "report group=" << to_string(r.group_kind) << " n=" << r.n << " p=" << r.p << " q=" << r.q
      << " condition_holds=" << bool_word(r.condition_holds) << " p_block_witnesses=" << r.witnesses_p_block.size()
      << " q_block_witnesses=" << r.witnesses_q_block.size() << '\n';
  print_members(out, "witness", r.p, r.witnesses_p_block);
  print_members(out, "witness", r.q, r.witnesses_q_block);
  return r.condition_holds ? kOk : kConditionFailed;
}

int cmd_verify_b(const PairOptions& o, std::ostream& out) {
  const auto r = check_conj_b(o.n, o.p, o.q);
  out << "report n=" << r.n << " p=" << r.p << " q=" << r.q << " size_p=" << r.set_b_p.size()
      << " size_q=" << r.set_b_q.size() << " sets_equal=" << bool_word(r.sets_equal)
      << " violation=" << bool_word(r.violation) << '\n';
  print_members(out, "member", r.p, r.set_b_p);
  print_members(out, "member", r.q, r.set_b_q);
  return r.violation ? kConditionFailed : kOk;
}

struct ScanRow {
  std::uint32_t n = 0;
  Natural p = 0;
  Natural q = 0;
  std::string line;
  bool ok = true;
  std::optional<std::string> falsified;
};

int cmd_scan(std::uint32_t n_min, std::uint32_t n_max, bool cross, unsigned jobs, std::ostream& out,
             std::ostream& err) {
  if (const char* cap = std::getenv("BLOCKWITNESS_SCAN_MAX")) {
    try {
      n_max = std::min<std::uint32_t>(n_max, static_cast<std::uint32_t>(std::stoul(cap)));
    } catch (const std::exception&) {
      throw InputError("BLOCKWITNESS_SCAN_MAX must be a natural number");
    }
  }
  if (n_min < 1) throw InputError("--n-min must be at least 1");

  std::vector<ScanRow> rows;
  for (std::uint32_t n = n_min; n <= n_max; ++n) {
    const auto primes = primes_up_to(n);
    for (std::size_t i = 0; i < primes.size(); ++i) {
      for (std::size_t j = i + 1; j < primes.size(); ++j) rows.push_back({n, primes[j], primes[i], {}, true, {}});
    }
  }

  // Oracle data is built up front and only read by the workers.
  std::vector<std::unique_ptr<SymmetricGroupData>> data(n_max + 1);
  if (cross) {
    for (std::uint32_t n = n_min; n <= n_max; ++n) data[n] = std::make_unique<SymmetricGroupData>(n);
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t k = next++; k < rows.size(); k = next++) {
      auto& row = rows[k];
      try {
        std::ostringstream os;
        os << "result n=" << row.n << " p=" << row.p << " q=" << row.q;
        if (cross) {
          const auto cv = cross_validate(*data[row.n], row.p, row.q);
          if (const auto* d = std::get_if<Deferral>(&cv.constructor)) {
            os << " case=deferred:" << to_string(d->reason) << " agree=n/a";
          } else if (const auto* f = std::get_if<ConstructionFailure>(&cv.constructor)) {
            os << " case=falsified agree=false";
            row.falsified = f->message;
          } else {
            os << " case=" << to_string(*cv.case_id()) << " agree=" << bool_word(*cv.oracle_agrees);
            row.ok = *cv.oracle_agrees;
          }
          os << " oracle_sn=" << bool_word(cv.oracle_holds_sn) << " oracle_an=" << bool_word(cv.oracle_holds_an);
          if (row.n >= 9 && !(cv.oracle_holds_sn && cv.oracle_holds_an)) row.ok = false;
        } else {
          try {
            const auto outcome = construct_witness(row.n, row.p, row.q);
            if (const auto* d = std::get_if<Deferral>(&outcome)) {
              os << " case=deferred:" << to_string(d->reason) << " agree=skipped";
            } else {
              os << " case=" << to_string(std::get<Witness>(outcome).candidate.case_id) << " agree=skipped";
            }
          } catch (const CaseTreeFalsified& e) {
            os << " case=falsified agree=skipped";
            row.falsified = e.what();
          }
        }
        row.line = os.str();
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::size_t bad = 0;
  std::size_t falsified = 0;
  for (const auto& row : rows) {
    out << row.line << '\n';
    if (!row.ok) ++bad;
    if (row.falsified) {
      ++falsified;
      err << "internal-error: " << *row.falsified << '\n';
    }
  }
  out << "summary tuples=" << rows.size() << " failures=" << bad << " falsified=" << falsified << '\n';
  if (falsified > 0) return kInternal;
  return bad == 0 ? kOk : kConditionFailed;
}

int cmd_degrees(std::uint32_t n, const std::optional<std::string>& literal, std::ostream& out) {
  auto line = [&](const Partition& lambda) {
    const auto d = degree(lambda);
    out << "partition=" << to_string(lambda) << " degree=" << d.to_decimal() << " factored=" << d.to_factored_string()
        << '\n';
  };
  if (literal) {
    const auto lambda = parse_partition(*literal);
    if (lambda.size() != n) {
      throw InputError("partition " + to_string(lambda) + " has size " + std::to_string(lambda.size()) +
                       ", expected " + std::to_string(n));
    }
    line(lambda);
    return kOk;
  }
  PartitionGenerator gen(n);
  while (auto lambda = gen.next()) line(*lambda);
  return kOk;
}

int cmd_check_table(const std::string& path, const std::string& which, std::ostream& out) {
  const auto conjecture = parse_conjecture(which);
  if (!conjecture) throw InputError("--conjecture must be a, b or c");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  const auto table = parse_table(text);
  bool violation = false;
  for (const auto& f : audit(table, *conjecture)) {
    out << format_finding(f) << '\n';
    violation = violation || f.verdict == Verdict::Violation;
  }
  return violation ? kConditionFailed : kOk;
}

std::vector<Natural> parse_prime_list(const std::string& text) {
  std::vector<Natural> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    if (!std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }) || tok.size() > 18) {
      throw InputError("malformed prime '" + tok + "' in --primes");
    }
    out.push_back(std::stoull(tok));
  }
  return out;
}

std::string joined(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) s += (s.empty() ? "" : " ") + a;
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Principal-block witnesses and conjecture checks for symmetric and alternating groups",
               "blockwitness"};
  app.require_subcommand(1);

  PairOptions pair;
  bool as_json = false;
  std::string group = "sn";
  std::uint32_t n_min = 9;
  std::uint32_t n_max = 28;
  bool cross = false;
  unsigned jobs = 1;
  std::uint32_t degrees_n = 0;
  std::optional<std::string> literal;
  std::string table_path;
  std::string conjecture;
  std::string primes_text;

  auto* witness = app.add_subcommand("witness", "construct a verified principal-block witness");
  add_pair_options(witness, pair);
  witness->add_flag("--json", as_json, "emit JSON");

  auto* verify_c = app.add_subcommand("verify-c", "brute-force the cross-divisibility condition");
  add_pair_options(verify_c, pair);
  verify_c->add_option("--group", group, "sn or an")->capture_default_str();

  auto* verify_b = app.add_subcommand("verify-b", "compare Irr_p'(B_p) with Irr_q'(B_q)");
  add_pair_options(verify_b, pair);

  auto* scan = app.add_subcommand("scan", "witness every prime pair for a range of n");
  scan->add_option("--n-min", n_min)->capture_default_str();
  scan->add_option("--n-max", n_max)->capture_default_str();
  scan->add_flag("--cross-validate", cross, "check each witness against the brute-force oracle");
  scan->add_option("--jobs", jobs, "worker threads")->capture_default_str();

  auto* degrees = app.add_subcommand("degrees", "character degrees by the hook-length formula");
  degrees->add_option("--n", degrees_n)->required();
  degrees->add_option("--partition", literal, "\"[a1,a2,...]\" or \"(1^k,a,b)\"");

  auto* check = app.add_subcommand("check-table", "audit a character-table summary file");
  check->add_option("file", table_path)->required();
  check->add_option("--conjecture", conjecture, "a, b or c")->required();

  auto* exporter = app.add_subcommand("export-table", "write the summary table of S_n");
  exporter->add_option("--n", degrees_n)->required();
  exporter->add_option("--primes", primes_text, "comma-separated primes");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (witness->parsed()) return cmd_witness(pair, as_json, out);
    if (verify_c->parsed()) return cmd_verify_c(pair, group, out);
    if (verify_b->parsed()) return cmd_verify_b(pair, out);
    if (scan->parsed()) return cmd_scan(n_min, n_max, cross, jobs, out, err);
    if (degrees->parsed()) return cmd_degrees(degrees_n, literal, out);
    if (check->parsed()) return cmd_check_table(table_path, conjecture, out);
    if (exporter->parsed()) {
      out << export_sn_table(degrees_n, parse_prime_list(primes_text));
      return kOk;
    }
  } catch (const InternalError& e) {
    err << "internal-error: " << e.what() << '\n'
        << "bug-report: blockwitness " << joined(args) << '\n';
    return kInternal;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace blockwitness::cli
