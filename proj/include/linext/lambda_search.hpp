#pragma once

#include "linext/arith.hpp"
#include "linext/canonical.hpp"
#include "linext/enumerate.hpp"
#include "linext/error.hpp"
#include "linext/extension_count.hpp"
#include "linext/poset.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace linext {

/// Exact minimum size for a target count, or a lower bound when the search
/// ran out of sizes: lambda > exhausted_through.
struct SearchResult {
  std::uint64_t n = 0;
  std::optional<std::size_t> lambda;
  std::optional<Poset> witness;
  std::size_t exhausted_through = 0;

  bool found() const { return lambda.has_value(); }
};

struct SearchOptions {
  std::size_t max_size = 8;
  std::size_t jobs = 1;
};

/// Scans sizes 0..max_size in order. Within a size every class is counted,
/// and the witness with the least canonical key is kept for each count
/// 1..max_n not already achieved at a smaller size.
inline std::vector<SearchResult> lambda_table(std::uint64_t max_n, const SearchOptions& options) {
  if (max_n == 0) throw InputError("max_n must be >= 1");
  std::vector<SearchResult> table(max_n);
  for (std::uint64_t n = 1; n <= max_n; ++n) table[n - 1].n = n;
  std::uint64_t missing = max_n;
  EnumerationOptions enumeration{options.max_size, options.jobs};
  for (std::size_t m = 0; m <= options.max_size && missing > 0; ++m) {
    for (const auto& key : enumerate_classes(m, enumeration)) {
      Poset p = canonical_form(key);
      const ExtensionCount e = count_ideal_dp(p);
      if (e > max_n) continue;
      auto& row = table[static_cast<std::size_t>(e) - 1];
      if (row.found()) continue;
      row.lambda = m;
      row.witness = std::move(p);
      --missing;
    }
    for (auto& row : table) {
      if (!row.found() || *row.lambda == m) row.exhausted_through = m;
    }
  }
  return table;
}

inline std::vector<SearchResult> lambda_table(std::uint64_t max_n, std::size_t max_size,
                                              std::size_t jobs = 1) {
  return lambda_table(max_n, SearchOptions{max_size, jobs});
}

/// lambda(n) = min |P| over posets with exactly n linear extensions.
inline SearchResult lambda_exact(std::uint64_t n, std::size_t max_size, std::size_t jobs = 1) {
  if (n == 0) throw InputError("n must be >= 1");
  SearchResult result;
  result.n = n;
  const ExtensionCount target = n;
  EnumerationOptions enumeration{max_size, jobs};
  for (std::size_t m = 0; m <= max_size; ++m) {
    for (const auto& key : enumerate_classes(m, enumeration)) {
      Poset p = canonical_form(key);
      if (count_ideal_dp(p) == target) {
        result.lambda = m;
        result.witness = std::move(p);
        break;
      }
    }
    result.exhausted_through = m;
    if (result.found()) break;
  }
  return result;
}

}  // namespace linext
