#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace armleg {

/// A unit box of the integer lattice. Coordinates may be negative (arrow
/// heads outside the quadrant); boxes of a diagram always have x, y >= 0.
struct Box {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const Box&, const Box&) = default;
};

struct HookPair {
  std::int64_t arm = 0;
  std::int64_t leg = 0;

  friend auto operator<=>(const HookPair&, const HookPair&) = default;
};

/// Young diagram in French orientation: row 0 is the bottom (longest) row,
/// box (0,0) is the southwest corner.
///
/// Stores the row lengths and the derived column heights; both are weakly
/// decreasing and contain no zeros.
class YoungDiagram {
 public:
  YoungDiagram() = default;

  /// Throws ValidationError on non-positive entries or an increasing step.
  static YoungDiagram from_row_lengths(std::span<const std::int64_t> rows);
  static YoungDiagram from_row_lengths(std::initializer_list<std::int64_t> rows) {
    return from_row_lengths(std::span<const std::int64_t>(rows.begin(), rows.size()));
  }

  /// Parses "8,8,6,6,2,2" (bottom row first); "" and "-" are the empty diagram.
  static YoungDiagram parse(std::string_view text);

  /// Inverse of parse(); the empty diagram prints as "-".
  std::string to_string() const;

  const std::vector<std::int64_t>& rows() const { return rows_; }
  const std::vector<std::int64_t>& columns() const { return cols_; }

  std::int64_t area() const { return area_; }
  std::int64_t height() const { return static_cast<std::int64_t>(rows_.size()); }
  std::int64_t width() const { return static_cast<std::int64_t>(cols_.size()); }
  bool empty() const { return rows_.empty(); }

  /// 0 for y outside [0, height).
  std::int64_t row_length(std::int64_t y) const {
    return (y >= 0 && y < height()) ? rows_[static_cast<std::size_t>(y)] : 0;
  }
  /// 0 for x outside [0, width).
  std::int64_t column_height(std::int64_t x) const {
    return (x >= 0 && x < width()) ? cols_[static_cast<std::size_t>(x)] : 0;
  }

  bool contains(Box c) const { return c.x >= 0 && c.y >= 0 && c.x < row_length(c.y); }
  /// Membership in the complement inside the non-negative quadrant.
  bool complement_contains(Box c) const { return c.x >= 0 && c.y >= 0 && c.x >= row_length(c.y); }

  /// Boxes of the diagram, row by row from the bottom.
  std::vector<Box> boxes() const;

  friend bool operator==(const YoungDiagram& a, const YoungDiagram& b) { return a.rows_ == b.rows_; }

 private:
  explicit YoungDiagram(std::vector<std::int64_t> rows);

  std::vector<std::int64_t> rows_;
  std::vector<std::int64_t> cols_;
  std::int64_t area_ = 0;
};

YoungDiagram transpose(const YoungDiagram& d);

/// Arm and leg of a box inside the diagram. Throws BoxOutsideDiagram otherwise.
HookPair arm_leg_inside(const YoungDiagram& d, Box c);

/// Arm and leg of a box of the complement: distances west and south to the
/// diagram's boundary. Throws BoxInsideDiagram for boxes of d.
HookPair arm_leg_complement(const YoungDiagram& d, Box c);

struct HookCensus {
  std::int64_t inside = 0;
  std::int64_t complement = 0;

  friend bool operator==(const HookCensus&, const HookCensus&) = default;
};

/// Boxes of d with hook (arm, leg), bottom to top.
std::vector<Box> inside_boxes_with_hook(const YoungDiagram& d, std::int64_t arm, std::int64_t leg);

/// Boxes of the quadrant complement with hook (arm, leg), bottom to top.
/// Only rows y <= height + leg can qualify: above the diagram the candidate
/// is x = arm with y = column_height(arm) + leg.
std::vector<Box> complement_boxes_with_hook(const YoungDiagram& d, std::int64_t arm, std::int64_t leg);

HookCensus hook_census(const YoungDiagram& d, std::int64_t arm, std::int64_t leg);

/// Restartable generator of the partitions of n in reverse-lexicographic
/// order: [n], [n-1,1], [n-2,2], [n-2,1,1], ...
class PartitionStream {
 public:
  explicit PartitionStream(std::int64_t n);

  std::optional<YoungDiagram> next();
  void restart();

 private:
  std::int64_t n_;
  std::vector<std::int64_t> current_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<YoungDiagram> enumerate_partitions(std::int64_t n);

}  // namespace armleg
