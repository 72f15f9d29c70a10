#pragma once

#include "linext/canonical.hpp"
#include "linext/error.hpp"
#include "linext/poset.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

namespace linext {

struct EnumerationOptions {
  std::size_t max_size = 9;
  std::size_t jobs = 1;
};

namespace detail {

inline constexpr std::size_t kSmallMax = 32;

/// Naturally labeled poset: every relation goes from a lower to a higher
/// label, so down[v] only has bits below v.
struct LabeledPoset {
  std::size_t size = 0;
  std::array<std::uint32_t, kSmallMax> down{};

  bool less(std::size_t u, std::size_t v) const { return (down[v] >> u) & 1U; }
};

/// Calls visit(mask) for every order ideal of the first k elements.
/// Elements are decided in label order, so an element's lower set is
/// settled before it is considered.
template <class Visit>
void for_each_ideal(const LabeledPoset& p, std::size_t k, std::size_t next, std::uint32_t chosen,
                    Visit& visit) {
  if (next == k) {
    visit(chosen);
    return;
  }
  for_each_ideal(p, k, next + 1, chosen, visit);
  if ((p.down[next] & ~chosen) == 0) {
    for_each_ideal(p, k, next + 1, chosen | (std::uint32_t{1} << next), visit);
  }
}

/// Grows p from `from` elements to `target` elements, visiting every
/// naturally labeled completion. The new top label's lower set is any
/// ideal of the existing elements, which keeps every partial row closed.
template <class Visit>
void extend_natural(LabeledPoset& p, std::size_t from, std::size_t target, Visit& visit) {
  if (from == target) {
    p.size = target;
    visit(p);
    return;
  }
  auto descend = [&](std::uint32_t ideal) {
    p.down[from] = ideal;
    extend_natural(p, from + 1, target, visit);
  };
  for_each_ideal(p, from, 0, 0, descend);
}

inline std::vector<LabeledPoset> natural_prefixes(std::size_t depth) {
  std::vector<LabeledPoset> out;
  LabeledPoset p;
  auto keep = [&](const LabeledPoset& q) { out.push_back(q); };
  extend_natural(p, 0, depth, keep);
  return out;
}

inline CanonicalKey small_key(const LabeledPoset& p) {
  return canonical_key_of(p.size, [&p](std::size_t u, std::size_t v) { return p.less(u, v); });
}

}  // namespace detail

/// Every naturally labeled poset on m elements, i.e. all (m x m) relations
/// with pairs only from lower to higher labels that are transitively closed.
template <class Visit>
void for_each_naturally_labeled(std::size_t m, Visit visit) {
  if (m > detail::kSmallMax) throw Infeasible("enumeration-infeasible: size above 32");
  detail::LabeledPoset p;
  detail::extend_natural(p, 0, m, visit);
}

/// Canonical keys of all isomorphism classes of m-element posets, sorted.
///
/// Work is split by the relation rows of the first few labels; each job
/// builds its own key set and the sets are merged, so the result does not
/// depend on the number of jobs.
inline std::vector<CanonicalKey> enumerate_classes(std::size_t m, const EnumerationOptions& options = {}) {
  if (m > options.max_size || m > detail::kSmallMax) {
    throw Infeasible("enumeration-infeasible: size " + std::to_string(m) + " exceeds the cap of " +
                     std::to_string(std::min(options.max_size, detail::kSmallMax)));
  }
  using KeySet = std::unordered_set<CanonicalKey, CanonicalKeyHash>;
  const auto prefixes = detail::natural_prefixes(std::min<std::size_t>(m, 4));
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, prefixes.size()));
  std::vector<KeySet> found(jobs);

  auto work = [&](std::size_t job) {
    auto insert = [&](const detail::LabeledPoset& p) { found[job].insert(detail::small_key(p)); };
    for (std::size_t k = job; k < prefixes.size(); k += jobs) {
      detail::LabeledPoset p = prefixes[k];
      detail::extend_natural(p, p.size, m, insert);
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(work, j);
    for (auto& t : pool) t.join();
  }

  KeySet merged = std::move(found[0]);
  for (std::size_t j = 1; j < jobs; ++j) merged.insert(found[j].begin(), found[j].end());
  std::vector<CanonicalKey> keys(merged.begin(), merged.end());
  std::sort(keys.begin(), keys.end());
  return keys;
}

/// One canonically labeled representative per isomorphism class of
/// m-element posets, ordered by canonical key.
inline std::vector<Poset> enumerate_posets(std::size_t m, const EnumerationOptions& options = {}) {
  std::vector<Poset> out;
  for (const auto& key : enumerate_classes(m, options)) out.push_back(canonical_form(key));
  return out;
}

}  // namespace linext
