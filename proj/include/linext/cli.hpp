#pragma once

#include "linext/arith.hpp"
#include "linext/certificate_io.hpp"
#include "linext/error.hpp"
#include "linext/extension_count.hpp"
#include "linext/lambda_search.hpp"
#include "linext/poset_io.hpp"
#include "linext/synthesizer.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace linext::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kBadInput = 2 };

namespace detail {

/// Reads a whole file, or standard input for "-".
inline std::string slurp(const std::string& path, std::istream& stdin_stream) {
  std::ostringstream buf;
  if (path == "-") {
    buf << stdin_stream.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw InputError("cannot open '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

/// Reference values in OEIS b-file layout: "n value" per line, '#' comments.
inline std::map<std::uint64_t, std::uint64_t> parse_bfile(const std::string& text) {
  std::map<std::uint64_t, std::uint64_t> terms;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    auto line = linext::detail::strip_comment(raw);
    if (line.empty()) continue;
    std::istringstream fields{std::string(line)};
    std::uint64_t n = 0, value = 0;
    if (!(fields >> n >> value)) throw InputError("malformed b-file line: '" + std::string(line) + "'");
    terms[n] = value;
  }
  return terms;
}

struct Options {
  std::uint64_t n = 0;
  std::string strategy = "auto";
  std::optional<std::uint64_t> d;
  std::string emit = "cert";
  std::string file = "-";
  std::string method = "auto";
  std::size_t max_size = 8;
  std::size_t jobs = 1;
  std::uint64_t max_n = 0;
  std::string oeis;
  std::string json;
  std::string recount = "dp";
};

inline int synth(const Options& o, std::ostream& out, std::ostream& err) {
  Synthesizer synthesizer;
  if (o.d && o.strategy != "linear") throw InputError("--d only applies to --strategy linear");
  Certificate cert;
  if (o.strategy == "auto") {
    cert = synthesizer.synth_best(o.n);
  } else if (o.strategy == "linear") {
    cert = synthesizer.synth_linear(o.n, o.d.value_or(ceil_sqrt(o.n)));
  } else if (o.strategy == "factor") {
    // Balanced pair: largest a below sqrt(n).
    std::uint64_t pick = 0;
    for (std::uint64_t a = 1; a * a < o.n; ++a) {
      if (o.n % a == 0) pick = a;
    }
    if (pick == 0) throw InputError("n = " + std::to_string(o.n) + " has no divisor pair a < b");
    cert = synthesizer.synth_factor(pick, o.n / pick);
  } else {
    auto special = synthesizer.synth_special(o.n);
    if (!special) {
      err << "error: n = " << o.n << " has no divisor pair with 2*sqrt(b) < a <= b\n";
      return kFailed;
    }
    cert = std::move(*special);
  }
  if (o.emit == "covers") {
    out << to_text(cert.witness);
  } else if (o.emit == "dot") {
    out << to_dot(cert.witness);
  } else {
    out << serialize(cert);
  }
  return kOk;
}

inline int count(const Options& o, std::istream& in, std::ostream& out) {
  const Poset p = parse_poset(slurp(o.file, in));
  const CountMethod method = o.method == "brute" ? CountMethod::kBrute
                             : o.method == "dp"  ? CountMethod::kIdealDp
                                                 : CountMethod::kAuto;
  out << count_extensions(p, method).str() << '\n';
  return kOk;
}

inline int lambda(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.n == 0) throw InputError("n must be >= 1");
  const SearchResult r = lambda_exact(o.n, o.max_size, o.jobs);
  out << "n: " << r.n << '\n';
  if (r.found()) {
    out << "lambda: " << *r.lambda << '\n';
  } else {
    out << "lambda: >" << r.exhausted_through << '\n';
  }
  out << "size_bound: " << floor_two_sqrt(r.n) << '\n';
  out << "exhausted_through: " << r.exhausted_through << '\n';
  if (!r.found()) {
    err << "error: lambda(" << r.n << ") exceeds --max-size " << o.max_size << '\n';
    return kFailed;
  }
  out << "witness: " << to_inline_text(*r.witness) << '\n';
  return kOk;
}

inline int table(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto rows = lambda_table(o.max_n, o.max_size, o.jobs);
  int status = kOk;
  bool incomplete = false;
  for (const auto& r : rows) {
    out << r.n << ' ';
    if (r.found()) {
      out << *r.lambda;
    } else {
      out << '>' << r.exhausted_through;
      incomplete = true;
    }
    out << ' ' << floor_two_sqrt(r.n) << ' ' << (r.found() ? to_inline_text(*r.witness) : "-")
        << '\n';
  }
  if (!o.json.empty()) {
    nlohmann::ordered_json dump = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json row;
      row["n"] = r.n;
      row["lambda"] = r.found() ? nlohmann::ordered_json(*r.lambda) : nlohmann::ordered_json();
      row["size_bound"] = floor_two_sqrt(r.n);
      row["exhausted_through"] = r.exhausted_through;
      if (r.found()) {
        const auto covers = cover_relation(*r.witness);
        row["witness"] = {{"size", covers.size}, {"covers", covers.covers}};
      } else {
        row["witness"] = nullptr;
      }
      dump.push_back(std::move(row));
    }
    std::ofstream file(o.json);
    if (!file) throw InputError("cannot write '" + o.json + "'");
    file << dump.dump(2) << '\n';
  }
  if (!o.oeis.empty()) {
    const auto reference = parse_bfile(slurp(o.oeis, in));
    std::size_t matched = 0;
    for (const auto& r : rows) {
      auto it = reference.find(r.n);
      if (it == reference.end() || !r.found()) continue;
      if (it->second != *r.lambda) {
        err << "error: oeis mismatch at n=" << r.n << ": reference " << it->second << ", computed "
            << *r.lambda << '\n';
        status = kFailed;
      } else {
        ++matched;
      }
    }
    out << "oeis: " << matched << " terms match\n";
  }
  if (incomplete) {
    err << "error: some lambda(n) exceed --max-size " << o.max_size << '\n';
    status = kFailed;
  }
  return status;
}

inline int verify(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const Certificate c = parse_certificate(slurp(o.file, in));
  const Recount recount = o.recount == "brute" ? Recount::kBrute
                          : o.recount == "none" ? Recount::kNone
                                                : Recount::kIdealDp;
  const Verdict verdict = verify_certificate(c, recount);
  if (!verdict) {
    err << "error: verification failed: " << verdict.reason << '\n';
    return kFailed;
  }
  out << "ok: n=" << c.n << " size=" << c.size << " bound=" << c.bound
      << " strategy=" << c.strategy.name() << " recount=" << o.recount << '\n';
  return kOk;
}

}  // namespace detail

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Posets with a prescribed number of linear extensions", "linext"};
  app.require_subcommand(1);
  detail::Options o;

  auto* synth = app.add_subcommand("synth", "Build a certified small poset with exactly n linear extensions");
  synth->add_option("n", o.n, "Target count")->required()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1'000'000'000}));
  synth->add_option("--strategy", o.strategy)->check(CLI::IsMember({"auto", "linear", "factor", "special"}));
  synth->add_option("--d", o.d, "Divisor parameter for --strategy linear")->check(CLI::PositiveNumber);
  synth->add_option("--emit", o.emit)->check(CLI::IsMember({"cert", "covers", "dot"}));

  auto* count = app.add_subcommand("count", "Count linear extensions of a poset file ('-' for stdin)");
  count->add_option("file", o.file);
  count->add_option("--method", o.method)->check(CLI::IsMember({"auto", "brute", "dp"}));

  auto* lambda = app.add_subcommand("lambda", "Exact minimum poset size for n linear extensions");
  lambda->add_option("n", o.n)->required()->check(CLI::PositiveNumber);
  lambda->add_option("--max-size", o.max_size)->check(CLI::Range(0, 9));
  lambda->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);

  auto* table = app.add_subcommand("table", "Exact minimum sizes for n = 1..max-n");
  table->add_option("--max-n", o.max_n)->required()->check(CLI::PositiveNumber);
  table->add_option("--max-size", o.max_size)->check(CLI::Range(0, 9));
  table->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
  table->add_option("--oeis", o.oeis, "Reference terms in b-file layout");
  table->add_option("--json", o.json, "Also write the table as JSON to this file");

  auto* verify = app.add_subcommand("verify", "Check a certificate file");
  verify->add_option("file", o.file)->required();
  verify->add_option("--recount", o.recount)->check(CLI::IsMember({"dp", "brute", "none"}));

  auto* dot = app.add_subcommand("dot", "Hasse diagram of a poset file in DOT");
  dot->add_option("file", o.file)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }

  try {
    if (synth->parsed()) return detail::synth(o, out, err);
    if (count->parsed()) return detail::count(o, in, out);
    if (lambda->parsed()) return detail::lambda(o, out, err);
    if (table->parsed()) return detail::table(o, in, out, err);
    if (verify->parsed()) return detail::verify(o, in, out, err);
    if (dot->parsed()) {
      out << to_dot(parse_poset(detail::slurp(o.file, in)));
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace linext::cli
