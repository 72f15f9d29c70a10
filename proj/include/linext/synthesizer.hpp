#pragma once

#include "linext/arith.hpp"
#include "linext/atlas.hpp"
#include "linext/error.hpp"
#include "linext/extension_count.hpp"
#include "linext/poset.hpp"
#include "linext/trace.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace linext {

enum class StrategyKind { kAtlas, kChainPlusOne, kFactor, kLinear, kSpecial };

/// How a certificate was built. Parameters: linear uses `d`; factor and
/// special use the divisor pair n = a * b.
struct Strategy {
  StrategyKind kind = StrategyKind::kAtlas;
  std::uint64_t d = 0;
  std::uint64_t a = 0;
  std::uint64_t b = 0;

  static Strategy atlas() { return {StrategyKind::kAtlas}; }
  static Strategy chain_plus_one() { return {StrategyKind::kChainPlusOne}; }
  static Strategy linear(std::uint64_t d) { return {StrategyKind::kLinear, d}; }
  static Strategy factor(std::uint64_t a, std::uint64_t b) { return {StrategyKind::kFactor, 0, a, b}; }
  static Strategy special(std::uint64_t a, std::uint64_t b) {
    return {StrategyKind::kSpecial, 0, a, b};
  }

  std::string name() const {
    switch (kind) {
      case StrategyKind::kAtlas: return "atlas";
      case StrategyKind::kChainPlusOne: return "chain-plus-one";
      case StrategyKind::kLinear: return "linear(" + std::to_string(d) + ")";
      case StrategyKind::kFactor:
        return "factor(" + std::to_string(a) + "," + std::to_string(b) + ")";
      case StrategyKind::kSpecial:
        return "special(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
    return "?";
  }

  friend bool operator==(const Strategy&, const Strategy&) = default;
};

/// The size bound a strategy promises for target n. Throws InputError when
/// the strategy's parameters do not fit n.
inline std::uint64_t promised_bound(const Strategy& s, std::uint64_t n) {
  switch (s.kind) {
    case StrategyKind::kAtlas:
      return atlas::lambda(n);
    case StrategyKind::kChainPlusOne:
      return n;
    case StrategyKind::kLinear:
      if (s.d == 0) throw InputError("linear strategy needs d >= 1");
      return n / s.d + s.d;
    case StrategyKind::kFactor:
      if (s.a == 0 || s.a >= s.b || s.a * s.b != n)
        throw InputError("factor strategy needs n = a*b with a < b");
      return s.b;
    case StrategyKind::kSpecial:
      if (s.a == 0 || s.a > s.b || s.a * s.b != n || s.a * s.a <= 4 * s.b)
        throw InputError("special strategy needs n = a*b with 2*sqrt(b) < a <= b");
      return floor_sqrt(n);
  }
  throw InputError("unknown strategy");
}

enum class VerificationMethod { kTraceFormula, kIdealDp, kBruteForce };

inline std::string to_string(VerificationMethod m) {
  switch (m) {
    case VerificationMethod::kTraceFormula: return "trace-formula";
    case VerificationMethod::kIdealDp: return "ideal-dp";
    case VerificationMethod::kBruteForce: return "brute-force";
  }
  return "?";
}

/// A witness poset with exactly n linear extensions, the recipe that built
/// it, and the checks it passed.
struct Certificate {
  std::uint64_t n = 0;
  Strategy strategy;
  std::size_t size = 0;
  std::uint64_t bound = 0;
  ExtensionCount count = 0;
  ConstructionTrace trace;
  Poset witness;
  std::vector<VerificationMethod> verified_by;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Trace plus provenance, before a witness is materialized.
struct Plan {
  ConstructionTrace trace;
  Strategy strategy;
  std::uint64_t bound = 0;

  std::size_t size() const { return trace.size(); }
};

struct SynthOptions {
  std::uint64_t max_n = 1'000'000'000;
  /// Witnesses up to this size are recounted with the ideal-lattice DP.
  std::size_t dp_recount_max_size = 64;
  /// Witnesses up to this size are recounted by brute force.
  std::size_t brute_recount_max_size = 10;
};

/// Builds small posets with a prescribed number of linear extensions.
///
/// Keeps a per-instance memo of best plans, so one instance should not be
/// shared between threads; separate instances are independent.
class Synthesizer {
 public:
  explicit Synthesizer(SynthOptions options = {}) : options_(options) {}

  Plan atlas_plan(std::uint64_t n) const {
    if (!atlas::contains(n)) throw InputError("atlas covers 1 <= n <= 12, got " + std::to_string(n));
    return {ConstructionTrace::atlas_entry(n), Strategy::atlas(), atlas::lambda(n)};
  }

  /// C_{n-1} + C_1.
  Plan chain_plus_one_plan(std::uint64_t n) const {
    check_target(n);
    auto trace = ConstructionTrace::direct_sum(ConstructionTrace::chain(n - 1),
                                               ConstructionTrace::chain(1));
    return {std::move(trace), Strategy::chain_plus_one(), n};
  }

  /// (P + C_{b-1-|P|}) ordinal, then + C_1, with P a best witness for a.
  /// Size exactly b, count a*b.
  Plan factor_plan(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || a >= b) throw InputError("factor construction needs 1 <= a < b");
    check_target(a * b);
    return {pad_and_lift(best_plan(a).trace, b), Strategy::factor(a, b), b};
  }

  /// Follows the induction on d: gadget when it fits, ordinal product when d
  /// divides n, otherwise retry with d-1.
  Plan linear_plan(std::uint64_t n, std::uint64_t d) {
    check_target(n);
    if (d == 0) throw InputError("d must be >= 1");
    return {linear_trace(n, d), Strategy::linear(d), n / d + d};
  }

  /// Uses the divisor pair with the smallest a satisfying 2*sqrt(b) < a <= b.
  std::optional<Plan> special_plan(std::uint64_t n) {
    check_target(n);
    for (std::uint64_t a = 1; a * a <= n; ++a) {
      if (n % a != 0) continue;
      const std::uint64_t b = n / a;
      if (a * a > 4 * b) return special_plan_for(a, b);
    }
    return std::nullopt;
  }

  Plan special_plan_for(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || a > b || a * a <= 4 * b) {
      throw InputError("special construction needs 2*sqrt(b) < a <= b");
    }
    check_target(a * b);
    return {pad_and_lift(best_plan(b).trace, a), Strategy::special(a, b), floor_sqrt(a * b)};
  }

  /// Smallest plan among the atlas, linear(ceil(sqrt n)), special, and
  /// factor pairs with b <= floor(2 sqrt n). Ties prefer atlas, then gadget
  /// roots, then factor shapes, then ordinal compositions.
  const Plan& best_plan(std::uint64_t n) {
    check_target(n);
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;

    std::optional<Plan> best;
    int best_rank = 0;
    auto offer = [&](Plan plan, int rank) {
      if (!best || plan.size() < best->size() || (plan.size() == best->size() && rank < best_rank)) {
        best = std::move(plan);
        best_rank = rank;
      }
    };

    if (atlas::contains(n)) {
      offer(atlas_plan(n), 0);
    } else {
      Plan lin = linear_plan(n, ceil_sqrt(n));
      const bool gadget_root = std::holds_alternative<GadgetStep>(lin.trace.node().step);
      offer(std::move(lin), gadget_root ? 1 : 4);
      const std::uint64_t limit = floor_two_sqrt(n);
      for (std::uint64_t a = 1; a * a < n; ++a) {
        if (n % a != 0) continue;
        const std::uint64_t b = n / a;
        if (a < b && b <= limit) offer(factor_plan(a, b), 2);
      }
      if (auto special = special_plan(n)) offer(std::move(*special), 3);
    }
    return memo_.emplace(n, std::move(*best)).first->second;
  }

  /// Materializes the witness and recounts it by every method whose size
  /// limit allows. A failed recount is a bug and throws std::logic_error.
  Certificate certify(std::uint64_t n, const Plan& plan) const {
    Certificate cert;
    cert.n = n;
    cert.strategy = plan.strategy;
    cert.size = plan.size();
    cert.bound = plan.bound;
    cert.trace = plan.trace;
    cert.witness = realize(plan.trace);
    cert.count = count_trace(plan.trace);
    const ExtensionCount target = n;
    auto check = [&](const ExtensionCount& got, VerificationMethod method) {
      if (got != target) {
        throw std::logic_error("synthesized witness for n=" + std::to_string(n) + " has " +
                               got.str() + " linear extensions by " + to_string(method));
      }
      cert.verified_by.push_back(method);
    };
    check(cert.count, VerificationMethod::kTraceFormula);
    if (cert.size <= options_.dp_recount_max_size) {
      check(count_ideal_dp(cert.witness), VerificationMethod::kIdealDp);
    }
    if (cert.size <= options_.brute_recount_max_size) {
      check(count_brute(cert.witness, CountLimits{options_.brute_recount_max_size}),
            VerificationMethod::kBruteForce);
    }
    if (cert.size > cert.bound) {
      throw std::logic_error("synthesized witness for n=" + std::to_string(n) + " exceeds its bound");
    }
    return cert;
  }

  Certificate atlas_witness(std::uint64_t n) const { return certify(n, atlas_plan(n)); }
  Certificate chain_plus_one(std::uint64_t n) const { return certify(n, chain_plus_one_plan(n)); }
  Certificate synth_factor(std::uint64_t a, std::uint64_t b) { return certify(a * b, factor_plan(a, b)); }
  Certificate synth_linear(std::uint64_t n, std::uint64_t d) { return certify(n, linear_plan(n, d)); }
  std::optional<Certificate> synth_special(std::uint64_t n) {
    auto plan = special_plan(n);
    if (!plan) return std::nullopt;
    return certify(n, *plan);
  }
  Certificate synth_best(std::uint64_t n) { return certify(n, best_plan(n)); }

  const SynthOptions& options() const { return options_; }

 private:
  void check_target(std::uint64_t n) const {
    if (n == 0 || n > options_.max_n) {
      throw InputError("target n must be in [1, " + std::to_string(options_.max_n) + "], got " +
                       std::to_string(n));
    }
  }

  /// (inner ordinal C_{size-1-|inner|}) + C_1, a poset of exactly `size`
  /// elements with (size) * e(inner) linear extensions.
  static ConstructionTrace pad_and_lift(const ConstructionTrace& inner, std::uint64_t size) {
    if (inner.size() + 1 > size) {
      throw std::logic_error("inner witness too large for the requested size");
    }
    auto padded = ConstructionTrace::ordinal_sum(inner, ConstructionTrace::chain(size - 1 - inner.size()));
    return ConstructionTrace::direct_sum(padded, ConstructionTrace::chain(1));
  }

  ConstructionTrace linear_trace(std::uint64_t n, std::uint64_t d) {
    while (true) {
      if (atlas::contains(n)) return ConstructionTrace::atlas_entry(n);
      if (d == 1) return chain_plus_one_plan(n).trace;
      const std::uint64_t q = (n + d - 1) / d;
      const std::uint64_t r = q * d - n;
      if (r >= 1 && q + r >= d + 2) return ConstructionTrace::gadget(r, d, q + r);
      if (r == 0) {
        ConstructionTrace lower = best_plan(q).trace;
        return ConstructionTrace::ordinal_sum(lower, best_plan(d).trace);
      }
      --d;
    }
  }

  SynthOptions options_;
  std::unordered_map<std::uint64_t, Plan> memo_;
};

// One-shot conveniences; each uses a fresh Synthesizer.
inline Certificate atlas_witness(std::uint64_t n) { return Synthesizer().atlas_witness(n); }
inline Certificate chain_plus_one(std::uint64_t n) { return Synthesizer().chain_plus_one(n); }
inline Certificate synth_factor(std::uint64_t a, std::uint64_t b) {
  return Synthesizer().synth_factor(a, b);
}
inline Certificate synth_linear(std::uint64_t n, std::uint64_t d) {
  return Synthesizer().synth_linear(n, d);
}
inline std::optional<Certificate> synth_special(std::uint64_t n) {
  return Synthesizer().synth_special(n);
}
inline Certificate synth_best(std::uint64_t n) { return Synthesizer().synth_best(n); }

}  // namespace linext
