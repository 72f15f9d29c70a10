#pragma once

#include "linext/error.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace linext {

namespace detail {
class PosetBuilder;
}

/// A finite strict partial order on the elements 0..size()-1.
///
/// The relation is stored transitively closed, one bitset row per element:
/// bit v of row u is set iff u < v. Instances are immutable once built; all
/// constructors below return fresh values.
class Poset {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Poset() = default;

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  std::size_t words_per_row() const { return words_; }

  bool less(std::size_t u, std::size_t v) const {
    return (up_[u * words_ + v / kWordBits] >> (v % kWordBits)) & 1U;
  }
  bool comparable(std::size_t u, std::size_t v) const { return less(u, v) || less(v, u); }

  /// Bitset of the elements strictly above u.
  std::span<const Word> above(std::size_t u) const {
    return {up_.data() + u * words_, words_};
  }

  /// Number of ordered pairs (u, v) with u < v.
  std::size_t relation_pairs() const {
    std::size_t total = 0;
    for (Word w : up_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  std::size_t up_degree(std::size_t u) const {
    std::size_t total = 0;
    for (Word w : above(u)) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  /// Bitsets of the elements strictly below each element (the transpose).
  std::vector<Word> below_rows() const {
    std::vector<Word> down(size_ * words_, 0);
    for (std::size_t u = 0; u < size_; ++u) {
      for (std::size_t k = 0; k < words_; ++k) {
        Word w = up_[u * words_ + k];
        while (w != 0) {
          std::size_t v = k * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
          w &= w - 1;
          down[v * words_ + u / kWordBits] |= Word{1} << (u % kWordBits);
        }
      }
    }
    return down;
  }

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  friend class detail::PosetBuilder;

  std::size_t size_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> up_;
};

/// Hasse diagram: pairs (u, v) where v covers u.
struct CoverList {
  std::size_t size = 0;
  std::vector<std::pair<std::size_t, std::size_t>> covers;

  friend bool operator==(const CoverList&, const CoverList&) = default;
};

namespace detail {

/// Mutable staging area for building a Poset row by row.
class PosetBuilder {
 public:
  using Word = Poset::Word;
  static constexpr std::size_t kWordBits = Poset::kWordBits;

  explicit PosetBuilder(std::size_t size) {
    p_.size_ = size;
    p_.words_ = (size + kWordBits - 1) / kWordBits;
    p_.up_.assign(size * p_.words_, 0);
  }

  std::size_t size() const { return p_.size_; }
  bool less(std::size_t u, std::size_t v) const { return p_.less(u, v); }

  void set(std::size_t u, std::size_t v) {
    p_.up_[u * p_.words_ + v / kWordBits] |= Word{1} << (v % kWordBits);
  }

  /// Marks u below every element of [lo, hi).
  void set_range(std::size_t u, std::size_t lo, std::size_t hi) {
    Word* row = row_ptr(u);
    while (lo < hi) {
      std::size_t word = lo / kWordBits;
      std::size_t bit = lo % kWordBits;
      std::size_t span = std::min(kWordBits - bit, hi - lo);
      Word mask = span == kWordBits ? ~Word{0} : ((Word{1} << span) - 1) << bit;
      row[word] |= mask;
      lo += span;
    }
  }

  /// Copies the relation of `src` onto elements offset..offset+|src|-1.
  void place(const Poset& src, std::size_t offset) {
    const std::size_t shift = offset % kWordBits;
    const std::size_t base = offset / kWordBits;
    for (std::size_t u = 0; u < src.size(); ++u) {
      Word* row = row_ptr(offset + u);
      auto from = src.above(u);
      for (std::size_t k = 0; k < from.size(); ++k) {
        Word w = from[k];
        if (w == 0) continue;
        row[base + k] |= w << shift;
        if (shift != 0 && base + k + 1 < p_.words_) row[base + k + 1] |= w >> (kWordBits - shift);
      }
    }
  }

  /// Warshall closure over bitset rows.
  void close() {
    const std::size_t n = p_.size_;
    const std::size_t words = p_.words_;
    for (std::size_t k = 0; k < n; ++k) {
      const Word* krow = row_ptr(k);
      for (std::size_t i = 0; i < n; ++i) {
        if (!p_.less(i, k)) continue;
        Word* irow = row_ptr(i);
        for (std::size_t w = 0; w < words; ++w) irow[w] |= krow[w];
      }
    }
  }

  bool has_loop() const {
    for (std::size_t u = 0; u < p_.size_; ++u) {
      if (p_.less(u, u)) return true;
    }
    return false;
  }

  Poset finish() && { return std::move(p_); }

 private:
  Word* row_ptr(std::size_t u) { return p_.up_.data() + u * p_.words_; }
  const Word* row_ptr(std::size_t u) const { return p_.up_.data() + u * p_.words_; }

  Poset p_;
};

}  // namespace detail

/// Total order 0 < 1 < ... < length-1.
inline Poset chain(std::size_t length) {
  detail::PosetBuilder b(length);
  for (std::size_t u = 0; u < length; ++u) b.set_range(u, u + 1, length);
  return std::move(b).finish();
}

inline Poset antichain(std::size_t size) { return std::move(detail::PosetBuilder(size)).finish(); }

/// Disjoint union; elements of q are shifted up by |p|.
inline Poset direct_sum(const Poset& p, const Poset& q) {
  detail::PosetBuilder b(p.size() + q.size());
  b.place(p, 0);
  b.place(q, p.size());
  return std::move(b).finish();
}

/// Disjoint union with every element of p below every element of q.
inline Poset ordinal_sum(const Poset& p, const Poset& q) {
  const std::size_t n = p.size() + q.size();
  detail::PosetBuilder b(n);
  b.place(p, 0);
  b.place(q, p.size());
  for (std::size_t u = 0; u < p.size(); ++u) b.set_range(u, p.size(), n);
  return std::move(b).finish();
}

inline bool valid_gadget_parameters(std::size_t i, std::size_t j, std::size_t m) {
  return i >= 1 && i < j && m >= 2 && j <= m - 2;
}

/// The m-element gadget: a chain c_1 < ... < c_{m-2}, an element a above
/// c_i only, and an element b below c_j only.
///
/// Labels: c_k is k-1, a is m-2, b is m-1. Requires 1 <= i < j <= m-2.
inline Poset gadget_q(std::size_t i, std::size_t j, std::size_t m) {
  if (!valid_gadget_parameters(i, j, m)) {
    throw InvalidGadget("invalid gadget parameters: need 1 <= i < j <= m-2, got i=" +
                        std::to_string(i) + " j=" + std::to_string(j) + " m=" + std::to_string(m));
  }
  const std::size_t len = m - 2;
  const std::size_t a = m - 2;
  const std::size_t b = m - 1;
  detail::PosetBuilder builder(m);
  for (std::size_t u = 0; u < len; ++u) builder.set_range(u, u + 1, len);
  for (std::size_t u = 0; u < i; ++u) builder.set(u, a);
  builder.set_range(b, j - 1, len);
  return std::move(builder).finish();
}

/// Transitive closure of the given cover pairs.
inline Poset from_cover_pairs(std::size_t size,
                              std::span<const std::pair<std::size_t, std::size_t>> covers) {
  detail::PosetBuilder b(size);
  for (auto [u, v] : covers) {
    if (u >= size || v >= size) {
      throw InputError("cover pair (" + std::to_string(u) + "," + std::to_string(v) +
                       ") out of range for size " + std::to_string(size));
    }
    b.set(u, v);
  }
  b.close();
  if (b.has_loop()) throw NotAPartialOrder();
  return std::move(b).finish();
}

inline Poset from_cover_pairs(const CoverList& list) {
  return from_cover_pairs(list.size, list.covers);
}

/// Transitive reduction, pairs sorted lexicographically.
inline CoverList cover_relation(const Poset& p) {
  CoverList out;
  out.size = p.size();
  const std::size_t words = p.words_per_row();
  std::vector<Poset::Word> implied(words);
  for (std::size_t u = 0; u < p.size(); ++u) {
    auto up = p.above(u);
    std::fill(implied.begin(), implied.end(), 0);
    for (std::size_t k = 0; k < words; ++k) {
      Poset::Word w = up[k];
      while (w != 0) {
        std::size_t v = k * Poset::kWordBits + static_cast<std::size_t>(std::countr_zero(w));
        w &= w - 1;
        auto vup = p.above(v);
        for (std::size_t t = 0; t < words; ++t) implied[t] |= vup[t];
      }
    }
    for (std::size_t k = 0; k < words; ++k) {
      Poset::Word w = up[k] & ~implied[k];
      while (w != 0) {
        std::size_t v = k * Poset::kWordBits + static_cast<std::size_t>(std::countr_zero(w));
        w &= w - 1;
        out.covers.emplace_back(u, v);
      }
    }
  }
  return out;
}

/// Renames element x to perm[x]. perm must be a permutation of 0..|p|-1.
inline Poset relabel(const Poset& p, std::span<const std::size_t> perm) {
  detail::PosetBuilder b(p.size());
  for (std::size_t u = 0; u < p.size(); ++u) {
    for (std::size_t v = 0; v < p.size(); ++v) {
      if (p.less(u, v)) b.set(perm[u], perm[v]);
    }
  }
  return std::move(b).finish();
}

/// Checks irreflexivity, antisymmetry and transitivity of the stored relation.
inline bool is_strict_partial_order(const Poset& p) {
  const std::size_t n = p.size();
  for (std::size_t u = 0; u < n; ++u) {
    if (p.less(u, u)) return false;
    for (std::size_t v = 0; v < n; ++v) {
      if (!p.less(u, v)) continue;
      if (p.less(v, u)) return false;
      for (std::size_t w = 0; w < n; ++w) {
        if (p.less(v, w) && !p.less(u, w)) return false;
      }
    }
  }
  return true;
}

}  // namespace linext
