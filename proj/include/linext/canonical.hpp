#pragma once

#include "linext/poset.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

namespace linext {

/// Byte string identifying an isomorphism class of posets.
///
/// Layout: the size as 4 big-endian bytes, then the relation bits of the
/// canonical labeling packed MSB-first. Keys compare by size first.
struct CanonicalKey {
  std::vector<std::uint8_t> bytes;

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& key) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::uint8_t b : key.bytes) {
      h ^= b;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

namespace detail {

/// Colors elements by (down-degree, up-degree), then refines by the color
/// multisets of each element's lower and upper sets until stable. Color ids
/// are ranks of sorted signatures, so they are labeling-invariant.
template <class Less>
std::vector<std::size_t> refine_colors(std::size_t n, const Less& less) {
  std::vector<std::size_t> color(n, 0);
  std::vector<std::vector<std::size_t>> sig(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t down = 0, up = 0;
    for (std::size_t u = 0; u < n; ++u) {
      down += less(u, v) ? 1 : 0;
      up += less(v, u) ? 1 : 0;
    }
    sig[v] = {down, up};
  }
  std::size_t classes = 0;
  std::vector<std::size_t> idx(n);
  while (true) {
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return sig[a] < sig[b]; });
    std::size_t next = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (k > 0 && sig[idx[k]] != sig[idx[k - 1]]) ++next;
      color[idx[k]] = next;
    }
    const std::size_t now = n == 0 ? 0 : next + 1;
    if (now == classes || now == n) break;
    classes = now;
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<std::size_t> s(2 * classes + 1, 0);
      s[0] = color[v];
      for (std::size_t u = 0; u < n; ++u) {
        if (less(u, v)) ++s[1 + color[u]];
        if (less(v, u)) ++s[1 + classes + color[u]];
      }
      sig[v] = std::move(s);
    }
  }
  return color;
}

template <class Less>
class CanonicalSearch {
 public:
  CanonicalSearch(std::size_t n, const Less& less) : n_(n), less_(less) {}

  void run() {
    color_ = refine_colors(n_, less_);
    position_color_ = color_;
    std::sort(position_color_.begin(), position_color_.end());
    twin_.assign(n_, 0);
    for (std::size_t v = 0; v < n_; ++v) {
      twin_[v] = v;
      for (std::size_t u = 0; u < v; ++u) {
        if (color_[u] == color_[v] && same_neighbourhood(u, v)) {
          twin_[v] = twin_[u];
          break;
        }
      }
    }
    const std::size_t bits = n_ == 0 ? 0 : n_ * (n_ - 1);
    current_bits_.assign(bits, 0);
    best_bits_.assign(bits, 0);
    order_.assign(n_, 0);
    best_order_.assign(n_, 0);
    placed_.assign(n_, false);
    have_best_ = false;
    dfs(0, true);
  }

  const std::vector<std::size_t>& order() const { return best_order_; }
  const std::vector<std::uint8_t>& bits() const { return best_bits_; }

 private:
  bool same_neighbourhood(std::size_t u, std::size_t v) const {
    for (std::size_t w = 0; w < n_; ++w) {
      if (w == u || w == v) continue;
      if (less_(u, w) != less_(v, w) || less_(w, u) != less_(w, v)) return false;
    }
    return !less_(u, v) && !less_(v, u);
  }

  bool blocked_by_twin(std::size_t v) const {
    for (std::size_t u = 0; u < v; ++u) {
      if (!placed_[u] && twin_[u] == twin_[v]) return true;
    }
    return false;
  }

  void dfs(std::size_t pos, bool tied) {
    if (pos == n_) {
      if (!have_best_ || !tied) {
        best_bits_ = current_bits_;
        best_order_ = order_;
        have_best_ = true;
      }
      return;
    }
    const std::size_t offset = pos * (pos == 0 ? 0 : pos - 1);
    for (std::size_t v = 0; v < n_; ++v) {
      if (placed_[v] || color_[v] != position_color_[pos] || blocked_by_twin(v)) continue;
      order_[pos] = v;
      int cmp = 0;
      for (std::size_t j = 0; j < pos; ++j) {
        const std::size_t at = offset + 2 * j;
        current_bits_[at] = less_(v, order_[j]) ? 1 : 0;
        current_bits_[at + 1] = less_(order_[j], v) ? 1 : 0;
        if (cmp == 0 && tied && have_best_) {
          if (current_bits_[at] != best_bits_[at]) {
            cmp = current_bits_[at] < best_bits_[at] ? -1 : 1;
          } else if (current_bits_[at + 1] != best_bits_[at + 1]) {
            cmp = current_bits_[at + 1] < best_bits_[at + 1] ? -1 : 1;
          }
        }
      }
      if (cmp > 0) continue;
      placed_[v] = true;
      dfs(pos + 1, tied && cmp == 0);
      placed_[v] = false;
    }
  }

  std::size_t n_;
  const Less& less_;
  std::vector<std::size_t> color_;
  std::vector<std::size_t> position_color_;
  std::vector<std::size_t> twin_;
  std::vector<std::size_t> order_, best_order_;
  std::vector<std::uint8_t> current_bits_, best_bits_;
  std::vector<bool> placed_;
  bool have_best_ = false;
};

inline CanonicalKey pack_key(std::size_t n, const std::vector<std::uint8_t>& bits) {
  CanonicalKey key;
  key.bytes.reserve(4 + (bits.size() + 7) / 8);
  const auto size = static_cast<std::uint32_t>(n);
  key.bytes.push_back(static_cast<std::uint8_t>(size >> 24));
  key.bytes.push_back(static_cast<std::uint8_t>(size >> 16));
  key.bytes.push_back(static_cast<std::uint8_t>(size >> 8));
  key.bytes.push_back(static_cast<std::uint8_t>(size));
  std::uint8_t acc = 0;
  std::size_t filled = 0;
  for (std::uint8_t bit : bits) {
    acc = static_cast<std::uint8_t>((acc << 1) | bit);
    if (++filled == 8) {
      key.bytes.push_back(acc);
      acc = 0;
      filled = 0;
    }
  }
  if (filled != 0) key.bytes.push_back(static_cast<std::uint8_t>(acc << (8 - filled)));
  return key;
}

}  // namespace detail

/// Canonical labeling for any relation accessor `less(u, v)` on n elements.
/// Returns the element placed at each canonical position.
template <class Less>
std::vector<std::size_t> canonical_order(std::size_t n, const Less& less) {
  detail::CanonicalSearch<Less> search(n, less);
  search.run();
  return search.order();
}

template <class Less>
CanonicalKey canonical_key_of(std::size_t n, const Less& less) {
  detail::CanonicalSearch<Less> search(n, less);
  search.run();
  return detail::pack_key(n, search.bits());
}

inline CanonicalKey canonical_key(const Poset& p) {
  return canonical_key_of(p.size(), [&p](std::size_t u, std::size_t v) { return p.less(u, v); });
}

/// Rebuilds the canonically labeled representative encoded by `key`.
inline Poset canonical_form(const CanonicalKey& key) {
  if (key.bytes.size() < 4) throw InputError("canonical key too short");
  const std::size_t n = (std::size_t{key.bytes[0]} << 24) | (std::size_t{key.bytes[1]} << 16) |
                        (std::size_t{key.bytes[2]} << 8) | std::size_t{key.bytes[3]};
  auto bit = [&key](std::size_t at) {
    return (key.bytes[4 + at / 8] >> (7 - at % 8)) & 1U;
  };
  detail::PosetBuilder b(n);
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t offset = i * (i - 1);
    for (std::size_t j = 0; j < i; ++j) {
      if (bit(offset + 2 * j)) b.set(i, j);
      if (bit(offset + 2 * j + 1)) b.set(j, i);
    }
  }
  return std::move(b).finish();
}

inline Poset canonical_form(const Poset& p) { return canonical_form(canonical_key(p)); }

}  // namespace linext
