#pragma once

#include "linext/poset.hpp"

#include <istream>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

// Text poset format:
//
//   poset <size>
//   <u> <v>        one line per cover pair, v covers u, 0-indexed
//
// Blank lines and '#' comments are ignored.

namespace linext {

namespace detail {

inline std::string_view strip_comment(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  while (!line.empty() && (line.front() == ' ' || line.front() == '\t' || line.front() == '\r'))
    line.remove_prefix(1);
  while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
    line.remove_suffix(1);
  return line;
}

/// Parses a base-10 unsigned integer occupying the whole token.
inline std::size_t parse_index(const std::string& token, std::size_t line_no) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos ||
      token.size() > 18) {
    throw InputError("line " + std::to_string(line_no) + ": expected a nonnegative integer, got '" +
                     token + "'");
  }
  return static_cast<std::size_t>(std::stoull(token));
}

}  // namespace detail

/// Reads the cover list without validating it as a partial order.
inline CoverList parse_cover_list(std::istream& in) {
  CoverList list;
  bool have_header = false;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = detail::strip_comment(raw);
    if (line.empty()) continue;
    std::istringstream fields{std::string(line)};
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (!have_header) {
      if (tokens.size() != 2 || tokens[0] != "poset") {
        throw InputError("line " + std::to_string(line_no) + ": expected 'poset <size>' header");
      }
      list.size = detail::parse_index(tokens[1], line_no);
      have_header = true;
      continue;
    }
    if (tokens.size() != 2) {
      throw InputError("line " + std::to_string(line_no) + ": expected a cover pair 'u v'");
    }
    list.covers.emplace_back(detail::parse_index(tokens[0], line_no),
                             detail::parse_index(tokens[1], line_no));
  }
  if (!have_header) throw InputError("missing 'poset <size>' header");
  return list;
}

inline Poset parse_poset(std::istream& in) { return from_cover_pairs(parse_cover_list(in)); }

inline Poset parse_poset(const std::string& text) {
  std::istringstream in(text);
  return parse_poset(in);
}

inline void write_cover_list(std::ostream& out, const CoverList& list) {
  out << "poset " << list.size << '\n';
  for (auto [u, v] : list.covers) out << u << ' ' << v << '\n';
}

inline std::string to_text(const Poset& p) {
  std::ostringstream out;
  write_cover_list(out, cover_relation(p));
  return out.str();
}

/// Single-line form: the text format's lines joined by "; ".
inline std::string to_inline_text(const Poset& p) {
  auto list = cover_relation(p);
  std::string out = "poset " + std::to_string(list.size);
  for (auto [u, v] : list.covers) out += "; " + std::to_string(u) + ' ' + std::to_string(v);
  return out;
}

/// Hasse diagram as a DOT digraph drawn bottom-to-top.
inline std::string to_dot(const Poset& p, std::string_view name = "poset") {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=circle];\n";
  for (std::size_t u = 0; u < p.size(); ++u) out << "  " << u << ";\n";
  for (auto [u, v] : cover_relation(p).covers) out << "  " << u << " -> " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace linext
