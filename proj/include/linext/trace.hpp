#pragma once

#include "linext/arith.hpp"
#include "linext/atlas.hpp"
#include "linext/error.hpp"
#include "linext/poset.hpp"

#include <cctype>
#include <cstddef>
#include <memory>
#include <sstream>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

namespace linext {

struct TraceNode;
using TracePtr = std::shared_ptr<const TraceNode>;

struct ChainStep {
  std::size_t length = 0;
};
struct DirectSumStep {
  TracePtr left, right;
};
struct OrdinalSumStep {
  TracePtr left, right;
};
struct GadgetStep {
  std::size_t i = 0, j = 0, m = 0;
};
struct AtlasStep {
  std::size_t n = 0;
};

using TraceStep = std::variant<ChainStep, DirectSumStep, OrdinalSumStep, GadgetStep, AtlasStep>;

/// One construction step together with the size and extension count it
/// claims for the poset it builds. Claims are checked by count_trace().
struct TraceNode {
  TraceStep step;
  std::size_t claimed_size = 0;
  ExtensionCount claimed_count = 0;
};

/// Immutable recipe for building a poset; subtrees may be shared.
class ConstructionTrace {
 public:
  ConstructionTrace() = default;
  explicit ConstructionTrace(TracePtr root) : root_(std::move(root)) {}

  /// Node with caller-supplied claims, unchecked. Used by parsers.
  static ConstructionTrace make(TraceStep step, std::size_t size, ExtensionCount count) {
    return ConstructionTrace(std::make_shared<const TraceNode>(
        TraceNode{std::move(step), size, std::move(count)}));
  }

  // The builders below derive honest claims from their children.
  static ConstructionTrace chain(std::size_t length) { return make(ChainStep{length}, length, 1); }

  static ConstructionTrace direct_sum(const ConstructionTrace& l, const ConstructionTrace& r) {
    const std::size_t size = l.size() + r.size();
    return make(DirectSumStep{l.root_, r.root_}, size,
                binomial(size, l.size()) * l.count() * r.count());
  }

  static ConstructionTrace ordinal_sum(const ConstructionTrace& l, const ConstructionTrace& r) {
    return make(OrdinalSumStep{l.root_, r.root_}, l.size() + r.size(), l.count() * r.count());
  }

  static ConstructionTrace gadget(std::size_t i, std::size_t j, std::size_t m) {
    if (!valid_gadget_parameters(i, j, m)) {
      throw InvalidGadget("invalid gadget parameters: need 1 <= i < j <= m-2");
    }
    return make(GadgetStep{i, j, m}, m, gadget_count(i, j, m));
  }

  static ConstructionTrace atlas_entry(std::size_t n) {
    return make(AtlasStep{n}, atlas::lambda(n), n);
  }

  /// (m - i) * j - i
  static ExtensionCount gadget_count(std::size_t i, std::size_t j, std::size_t m) {
    return ExtensionCount(m - i) * j - i;
  }

  bool valid() const { return root_ != nullptr; }
  const TraceNode& node() const { return *root_; }
  const TracePtr& root() const { return root_; }
  std::size_t size() const { return root_->claimed_size; }
  const ExtensionCount& count() const { return root_->claimed_count; }

  friend bool operator==(const ConstructionTrace& a, const ConstructionTrace& b) {
    return same_tree(a.root_, b.root_);
  }

 private:
  static bool same_tree(const TracePtr& a, const TracePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->claimed_size != b->claimed_size || a->claimed_count != b->claimed_count) return false;
    if (a->step.index() != b->step.index()) return false;
    return std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          const auto& y = std::get<T>(b->step);
          if constexpr (std::is_same_v<T, ChainStep>) {
            return x.length == y.length;
          } else if constexpr (std::is_same_v<T, GadgetStep>) {
            return x.i == y.i && x.j == y.j && x.m == y.m;
          } else if constexpr (std::is_same_v<T, AtlasStep>) {
            return x.n == y.n;
          } else {
            return same_tree(x.left, y.left) && same_tree(x.right, y.right);
          }
        },
        a->step);
  }

  TracePtr root_;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw TraceError("malformed trace: " + what);
}

/// Checks the structure and size claims of a node (not counts).
inline void check_shape(const TraceNode& node) {
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ChainStep>) {
          require(node.claimed_size == s.length, "chain size must equal its length");
        } else if constexpr (std::is_same_v<T, GadgetStep>) {
          require(valid_gadget_parameters(s.i, s.j, s.m), "gadget needs 1 <= i < j <= m-2");
          require(node.claimed_size == s.m, "gadget size must equal m");
        } else if constexpr (std::is_same_v<T, AtlasStep>) {
          require(atlas::contains(s.n), "atlas entry out of range");
          require(node.claimed_size == atlas::lambda(s.n), "atlas size mismatch");
        } else {
          require(s.left && s.right, "sum node is missing a child");
          require(node.claimed_size == s.left->claimed_size + s.right->claimed_size,
                  "sum size must equal the sum of child sizes");
        }
      },
      node.step);
}

inline ExtensionCount count_node(const TracePtr& ptr) {
  require(ptr != nullptr, "empty node");
  const TraceNode& node = *ptr;
  check_shape(node);
  ExtensionCount value = std::visit(
      [&](const auto& s) -> ExtensionCount {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ChainStep>) {
          return 1;
        } else if constexpr (std::is_same_v<T, GadgetStep>) {
          return ConstructionTrace::gadget_count(s.i, s.j, s.m);
        } else if constexpr (std::is_same_v<T, AtlasStep>) {
          return s.n;
        } else if constexpr (std::is_same_v<T, DirectSumStep>) {
          return binomial(node.claimed_size, s.left->claimed_size) * count_node(s.left) *
                 count_node(s.right);
        } else {
          return count_node(s.left) * count_node(s.right);
        }
      },
      node.step);
  if (value != node.claimed_count) {
    throw TraceError("trace arithmetic mismatch: node claims " + node.claimed_count.str() +
                     " linear extensions, composition gives " + value.str());
  }
  return value;
}

inline void place_node(const TraceNode& node, std::size_t offset, PosetBuilder& b) {
  check_shape(node);
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ChainStep>) {
          for (std::size_t k = 0; k < s.length; ++k) {
            b.set_range(offset + k, offset + k + 1, offset + s.length);
          }
        } else if constexpr (std::is_same_v<T, GadgetStep>) {
          b.place(gadget_q(s.i, s.j, s.m), offset);
        } else if constexpr (std::is_same_v<T, AtlasStep>) {
          b.place(atlas::witness(s.n), offset);
        } else if constexpr (std::is_same_v<T, DirectSumStep>) {
          place_node(*s.left, offset, b);
          place_node(*s.right, offset + s.left->claimed_size, b);
        } else {
          const std::size_t mid = offset + s.left->claimed_size;
          const std::size_t end = mid + s.right->claimed_size;
          place_node(*s.left, offset, b);
          place_node(*s.right, mid, b);
          for (std::size_t u = offset; u < mid; ++u) b.set_range(u, mid, end);
        }
      },
      node.step);
}

}  // namespace detail

/// Recomputes the extension count bottom-up from the composition rules and
/// checks every node's claims against it. Throws TraceError on any mismatch.
inline ExtensionCount count_trace(const ConstructionTrace& t) {
  return detail::count_node(t.root());
}

/// Materializes the poset a trace describes. Left operands take the lower
/// labels; gadget and atlas blocks keep their own labeling.
inline Poset realize(const ConstructionTrace& t) {
  detail::require(t.valid(), "empty trace");
  detail::PosetBuilder b(t.size());
  detail::place_node(t.node(), 0, b);
  return std::move(b).finish();
}

// S-expression form, one node per line, children indented two spaces:
//
//   (dsum :size 3 :count 3
//     (chain 2 :size 2 :count 1)
//     (chain 1 :size 1 :count 1))

namespace detail {

inline void write_node(std::ostream& out, const TraceNode& node, std::size_t indent) {
  out << std::string(indent, ' ') << '(';
  const auto claims = [&] {
    out << ":size " << node.claimed_size << " :count " << node.claimed_count.str();
  };
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ChainStep>) {
          out << "chain " << s.length << ' ';
          claims();
        } else if constexpr (std::is_same_v<T, GadgetStep>) {
          out << "gadget " << s.i << ' ' << s.j << ' ' << s.m << ' ';
          claims();
        } else if constexpr (std::is_same_v<T, AtlasStep>) {
          out << "atlas " << s.n << ' ';
          claims();
        } else {
          out << (std::is_same_v<T, DirectSumStep> ? "dsum " : "osum ");
          claims();
          out << '\n';
          write_node(out, *s.left, indent + 2);
          out << '\n';
          write_node(out, *s.right, indent + 2);
        }
      },
      node.step);
  out << ')';
}

class SexprParser {
 public:
  explicit SexprParser(const std::string& text) {
    std::string atom;
    auto flush = [&] {
      if (!atom.empty()) tokens_.push_back(std::move(atom));
      atom.clear();
    };
    for (char ch : text) {
      if (ch == '(' || ch == ')') {
        flush();
        tokens_.emplace_back(1, ch);
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        flush();
      } else {
        atom.push_back(ch);
      }
    }
    flush();
  }

  ConstructionTrace parse() {
    auto t = node();
    if (pos_ != tokens_.size()) throw TraceError("trailing tokens after trace");
    return t;
  }

 private:
  const std::string& next() {
    if (pos_ >= tokens_.size()) throw TraceError("unexpected end of trace");
    return tokens_[pos_++];
  }

  void expect(const std::string& want) {
    const auto& got = next();
    if (got != want) throw TraceError("expected '" + want + "', got '" + got + "'");
  }

  static bool numeric(const std::string& s) {
    return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
  }

  std::size_t integer() {
    const auto& tok = next();
    if (!numeric(tok) || tok.size() > 18) throw TraceError("expected an integer, got '" + tok + "'");
    return static_cast<std::size_t>(std::stoull(tok));
  }

  ExtensionCount big_integer() {
    const auto& tok = next();
    if (!numeric(tok)) throw TraceError("expected an integer, got '" + tok + "'");
    return ExtensionCount(tok);
  }

  ConstructionTrace node() {
    expect("(");
    const std::string kind = next();
    TraceStep step;
    if (kind == "chain") {
      step = ChainStep{integer()};
    } else if (kind == "gadget") {
      GadgetStep g;
      g.i = integer();
      g.j = integer();
      g.m = integer();
      step = g;
    } else if (kind == "atlas") {
      step = AtlasStep{integer()};
    } else if (kind != "dsum" && kind != "osum") {
      throw TraceError("unknown trace node '" + kind + "'");
    }
    expect(":size");
    const std::size_t size = integer();
    expect(":count");
    ExtensionCount count = big_integer();
    if (kind == "dsum" || kind == "osum") {
      auto left = node().root();
      auto right = node().root();
      if (kind == "dsum") {
        step = DirectSumStep{left, right};
      } else {
        step = OrdinalSumStep{left, right};
      }
    }
    expect(")");
    return ConstructionTrace::make(std::move(step), size, std::move(count));
  }

  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline std::string to_sexpr(const ConstructionTrace& t) {
  std::ostringstream out;
  detail::write_node(out, t.node(), 0);
  return out.str();
}

inline ConstructionTrace parse_sexpr(const std::string& text) {
  return detail::SexprParser(text).parse();
}

}  // namespace linext
