#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "armleg/partition.hpp"

namespace armleg {

/// The rational q/p for a coprime pair of positive integers. Never converted
/// to a floating or rational type; every comparison is cross-multiplied.
class Slope {
 public:
  /// Throws ValidationError unless p, q > 0 and gcd(p, q) = 1.
  Slope(std::int64_t p, std::int64_t q);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }

  /// q/p -> p/q; pairs with transposition of the diagram.
  Slope reciprocal() const { return Slope(q_, p_); }

  friend auto operator<=>(const Slope&, const Slope&) = default;

 private:
  std::int64_t p_;
  std::int64_t q_;
};

// Position of a hook (a, l) relative to the slope x = q/p. With a = 0 the
// ratio (l+1)/a is +infinity, which the cross-multiplied forms handle.

/// l/(a+1) = q/p
bool on_plus_line(HookPair h, Slope s);
/// (l+1)/a = q/p
bool on_minus_line(HookPair h, Slope s);
/// l/(a+1) < q/p < (l+1)/a
bool strictly_between(HookPair h, Slope s);
/// l/(a+1) >= q/p
bool steep(HookPair h, Slope s);
/// (l+1)/a <= q/p
bool flat(HookPair h, Slope s);

struct StatBundle {
  std::int64_t c_plus = 0;
  std::int64_t c_minus = 0;
  std::int64_t ctot = 0;
  std::int64_t midd = 0;
  std::int64_t h_plus = 0;
  std::int64_t h_minus = 0;
  /// Only defined when no box lies on either line (ctot == 0).
  std::optional<std::int64_t> h;

  friend bool operator==(const StatBundle&, const StatBundle&) = default;
};

/// Counts the boxes of d against their defining (in)equalities.
StatBundle stats_at_slope(const YoungDiagram& d, Slope s);

/// Every coprime (p, q) with p + q <= n, ordered by p + q then p. These are
/// the only slopes at which h can jump on diagrams of area n.
std::vector<Slope> breakpoint_slopes(std::int64_t n);

/// Every coprime (p, q) with lo <= p + q <= hi, same order as above.
std::vector<Slope> slopes_with_sum_between(std::int64_t lo, std::int64_t hi);

}  // namespace armleg
