#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "armleg/frame.hpp"
#include "armleg/partition.hpp"

namespace armleg {

/// An arrow from a box of the complement to a box of D-hat (the plane minus
/// the complement: D itself plus everything with a negative coordinate).
struct Arrow {
  Box tail;
  Box head;

  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

/// Displacement head - tail. For a northwest arrow in the class of a box
/// with hook (a, l) this is (-a-1, l).
struct ArrowVector {
  std::int64_t dx = 0;
  std::int64_t dy = 0;

  friend auto operator<=>(const ArrowVector&, const ArrowVector&) = default;
};

inline ArrowVector vector_of(const Arrow& arr) {
  return {arr.head.x - arr.tail.x, arr.head.y - arr.tail.y};
}
inline ArrowVector vector_for(HookPair h) { return {-h.arm - 1, h.leg}; }
/// Inverse of vector_for; requires dx <= -1 and dy >= 0.
HookPair hook_for(ArrowVector v);

inline Arrow translated(const Arrow& arr, std::int64_t dx, std::int64_t dy) {
  return {{arr.tail.x + dx, arr.tail.y + dy}, {arr.head.x + dx, arr.head.y + dy}};
}

/// Head in D-hat.
bool in_d_hat(const YoungDiagram& d, Box c);
/// Tail in the complement and head in D-hat.
bool is_valid(const YoungDiagram& d, const Arrow& arr);
/// head.x < tail.x and head.y >= tail.y
bool is_northwest(const Arrow& arr);

/// Result of pushing an arrow north and west: either the box of D it
/// represents, or the escaping class.
class CanonicalResult {
 public:
  static CanonicalResult escaping() { return CanonicalResult(std::nullopt); }
  static CanonicalResult inside(Box c) { return CanonicalResult(c); }

  bool is_escaping() const { return !box_; }
  /// Requires !is_escaping().
  Box box() const { return *box_; }

  friend bool operator==(const CanonicalResult&, const CanonicalResult&) = default;

 private:
  explicit CanonicalResult(std::optional<Box> box) : box_(box) {}
  std::optional<Box> box_;
};

/// Order of the unit moves in the greedy loops. The fixpoint does not depend
/// on it; the alternative order exists for testing that claim.
enum class GreedyOrder { VerticalFirst, HorizontalFirst };

/// Moves a valid northwest arrow north, then west, as long as it stays
/// valid, until neither move applies. An arrow whose head leaves the
/// quadrant is escaping. Otherwise the fixpoint (k+a+1, s) -> (k, s+l)
/// represents the box (k, s) of D.
CanonicalResult canonical_inside(const YoungDiagram& d, const Arrow& arr,
                                 GreedyOrder order = GreedyOrder::VerticalFirst);

/// Same, moving south then east. The fixpoint (r, m-l) -> (r-a-1, m)
/// represents the box (r, m) of the complement.
Box canonical_outside(const YoungDiagram& d, const Arrow& arr,
                      GreedyOrder order = GreedyOrder::VerticalFirst);

bool is_escaping(const YoungDiagram& d, const Arrow& arr);

/// The north/west-extremal arrow of the class of c in D.
Arrow canonical_arrow_inside(const YoungDiagram& d, Box c);
/// The south/east-extremal arrow of the class of c in the complement.
Arrow canonical_arrow_outside(const YoungDiagram& d, Box c);
/// A member of the escaping class for hook (a, l):
/// (a, colHeight(a)) -> (-1, colHeight(a) + l).
Arrow escaping_representative(const YoungDiagram& d, HookPair h);

/// The bijection between boxes of D with hook (a, l) plus the escaping class
/// and boxes of the complement with the same hook.
struct MatchingReport {
  HookPair hook;
  /// (source, target): source nullopt stands for the escaping class.
  std::vector<std::pair<std::optional<Box>, Box>> pairs;
  HookCensus census;
};

/// Builds the matching via canonical_outside and checks that it is a
/// bijection onto complement_boxes_with_hook. Throws CounterexampleError
/// otherwise.
MatchingReport verify_hook_theorem(const YoungDiagram& d, std::int64_t arm, std::int64_t leg);

enum class ArrowOrientation { Northwest, Southeast };

enum class Discriminator {
  InDiagram,     ///< equal counts
  InComplement,  ///< one more box outside
  OutsideRectangle,
};

struct RectReport {
  HookPair hook;
  ArrowOrientation orientation = ArrowOrientation::Northwest;
  std::int64_t inside_count = 0;
  /// Restricted to R_{P,Q} minus D.
  std::int64_t complement_count = 0;
  /// (a, Q-1-l) for northwest, (P-1-a, l) for southeast.
  Box discriminator;
  Discriminator discriminator_status = Discriminator::InDiagram;
  std::vector<Box> inside_witnesses;
  std::vector<Box> complement_witnesses;
  /// Where the escaping class canonicalises; inside R exactly in case 2.
  Box escaping_box;
};

/// Rectangle version of the hook theorem. Requires d to fit the frame and
/// (a, l) to be steep (l/(a+1) >= q/p, northwest arrows) or flat
/// ((l+1)/a <= q/p, southeast arrows). The southeast case is the northwest
/// case of the transposed diagram with the roles of p, q and a, l swapped.
/// Throws FitError, SlopeConditionError, or CounterexampleError.
RectReport rect_hook_census(const YoungDiagram& d, const Frame& f, std::int64_t arm, std::int64_t leg);

struct CorollaryReport {
  std::int64_t steep_inside = 0;      ///< boxes of D with l/(a+1) >= q/p
  std::int64_t steep_complement = 0;  ///< boxes of R \ D with l/(a+1) >= q/p
  std::int64_t flat_inside = 0;       ///< boxes of D with (l+1)/a <= q/p
  std::int64_t flat_complement = 0;   ///< boxes of R \ D with (l+1)/a <= q/p
  std::int64_t below_diagonal = 0;    ///< |R+|
  std::int64_t below_diagonal_outside = 0;  ///< |R+ \ D|
};

/// steep_inside + |R+ \ D| == steep_complement and
/// flat_inside + |R+ \ D| == flat_complement, checked (CounterexampleError).
CorollaryReport rect_corollaries(const YoungDiagram& d, const Frame& f);

}  // namespace armleg
