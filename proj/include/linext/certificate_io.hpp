#pragma once

#include "linext/error.hpp"
#include "linext/extension_count.hpp"
#include "linext/poset_io.hpp"
#include "linext/synthesizer.hpp"
#include "linext/trace.hpp"

#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

// Certificate text format:
//
//   certificate
//   n: 13
//   strategy: linear(4)
//   size: 7
//   bound: 7
//   count: 13
//   verified_by: trace-formula ideal-dp brute-force
//   witness:
//   poset 7
//   0 1
//   ...
//   trace:
//   (gadget 3 4 7 :size 7 :count 13)
//   end

namespace linext {

inline std::string serialize(const Certificate& c) {
  std::ostringstream out;
  out << "certificate\n";
  out << "n: " << c.n << '\n';
  out << "strategy: " << c.strategy.name() << '\n';
  out << "size: " << c.size << '\n';
  out << "bound: " << c.bound << '\n';
  out << "count: " << c.count.str() << '\n';
  out << "verified_by:";
  for (auto m : c.verified_by) out << ' ' << to_string(m);
  out << '\n';
  out << "witness:\n";
  write_cover_list(out, cover_relation(c.witness));
  out << "trace:\n";
  out << to_sexpr(c.trace) << '\n';
  out << "end\n";
  return out.str();
}

namespace detail {

inline std::uint64_t parse_u64(const std::string& s, const std::string& field) {
  if (s.empty() || s.size() > 19 || s.find_first_not_of("0123456789") != std::string::npos) {
    throw InputError("certificate field '" + field + "': expected a nonnegative integer, got '" + s +
                     "'");
  }
  return std::stoull(s);
}

inline Strategy parse_strategy(const std::string& s) {
  if (s == "atlas") return Strategy::atlas();
  if (s == "chain-plus-one") return Strategy::chain_plus_one();
  auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')') throw InputError("unknown strategy '" + s + "'");
  const std::string head = s.substr(0, open);
  const std::string args = s.substr(open + 1, s.size() - open - 2);
  if (head == "linear") return Strategy::linear(parse_u64(args, "strategy"));
  auto comma = args.find(',');
  if (comma == std::string::npos) throw InputError("strategy '" + s + "' needs two parameters");
  const auto a = parse_u64(args.substr(0, comma), "strategy");
  const auto b = parse_u64(args.substr(comma + 1), "strategy");
  if (head == "factor") return Strategy::factor(a, b);
  if (head == "special") return Strategy::special(a, b);
  throw InputError("unknown strategy '" + s + "'");
}

inline VerificationMethod parse_method(const std::string& s) {
  if (s == "trace-formula") return VerificationMethod::kTraceFormula;
  if (s == "ideal-dp") return VerificationMethod::kIdealDp;
  if (s == "brute-force") return VerificationMethod::kBruteForce;
  throw InputError("unknown verification method '" + s + "'");
}

}  // namespace detail

/// Inverse of serialize(). Structural problems raise InputError or
/// TraceError; arithmetic is not checked here (see verify_certificate).
inline Certificate parse_certificate(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  std::size_t at = 0;
  auto next = [&]() -> const std::string& {
    if (at >= lines.size()) throw InputError("certificate ends early");
    return lines[at++];
  };
  auto field = [&](const std::string& name) {
    const std::string& line = next();
    const std::string prefix = name + ":";
    if (line.rfind(prefix, 0) != 0) throw InputError("expected certificate field '" + name + "'");
    std::string value = line.substr(prefix.size());
    if (!value.empty() && value.front() == ' ') value.erase(0, 1);
    return value;
  };

  if (next() != "certificate") throw InputError("missing 'certificate' header");
  Certificate c;
  c.n = detail::parse_u64(field("n"), "n");
  c.strategy = detail::parse_strategy(field("strategy"));
  c.size = detail::parse_u64(field("size"), "size");
  c.bound = detail::parse_u64(field("bound"), "bound");
  const std::string count = field("count");
  if (count.empty() || count.find_first_not_of("0123456789") != std::string::npos) {
    throw InputError("certificate field 'count': expected a nonnegative integer");
  }
  c.count = ExtensionCount(count);
  {
    std::istringstream methods(field("verified_by"));
    for (std::string m; methods >> m;) c.verified_by.push_back(detail::parse_method(m));
  }
  if (!field("witness").empty()) throw InputError("unexpected text after 'witness:'");
  std::string poset_text;
  while (at < lines.size() && lines[at] != "trace:") poset_text += lines[at++] + '\n';
  c.witness = parse_poset(poset_text);
  if (!field("trace").empty()) throw InputError("unexpected text after 'trace:'");
  std::string trace_text;
  while (at < lines.size() && lines[at] != "end") trace_text += lines[at++] + '\n';
  if (next() != "end") throw InputError("missing 'end'");
  c.trace = parse_sexpr(trace_text);
  return c;
}

inline Certificate parse_certificate(const std::string& text) {
  std::istringstream in(text);
  return parse_certificate(in);
}

enum class Recount { kNone, kIdealDp, kBrute };

struct Verdict {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// Re-derives everything a certificate claims: trace arithmetic node by
/// node, the stored count, sizes, the strategy's bound, that the witness is
/// exactly the trace's realization, and optionally an independent recount.
inline Verdict verify_certificate(const Certificate& c, Recount recount = Recount::kIdealDp,
                                  const CountLimits& limits = {}) {
  auto fail = [](std::string why) { return Verdict{false, std::move(why)}; };
  const ExtensionCount n = c.n;
  if (c.n == 0) return fail("n must be positive");
  if (!c.trace.valid()) return fail("missing trace");
  ExtensionCount derived;
  try {
    derived = count_trace(c.trace);
  } catch (const TraceError& e) {
    return fail(e.what());
  }
  if (derived != n) return fail("trace yields " + derived.str() + " linear extensions, not n");
  if (c.count != n) return fail("stored count " + c.count.str() + " differs from n");
  if (c.trace.size() != c.size) return fail("trace size differs from stored size");
  if (c.witness.size() != c.size) return fail("witness size differs from stored size");
  std::uint64_t promised = 0;
  try {
    promised = promised_bound(c.strategy, c.n);
  } catch (const InputError& e) {
    return fail(e.what());
  }
  if (c.bound != promised) {
    return fail("bound " + std::to_string(c.bound) + " is not the " + c.strategy.name() +
                " bound " + std::to_string(promised));
  }
  if (c.size > c.bound) return fail("size exceeds bound");
  Poset built;
  try {
    built = realize(c.trace);
  } catch (const Error& e) {
    return fail(e.what());
  }
  if (!(built == c.witness)) return fail("witness is not the realization of the trace");
  try {
    if (recount == Recount::kIdealDp && count_ideal_dp(c.witness, limits) != n) {
      return fail("ideal-dp recount differs from n");
    }
    if (recount == Recount::kBrute && count_brute(c.witness, limits) != n) {
      return fail("brute-force recount differs from n");
    }
  } catch (const Infeasible& e) {
    return fail(e.what());
  }
  return {};
}

}  // namespace linext
