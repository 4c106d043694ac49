#include "armleg/partition.hpp"

#include <charconv>
#include <sstream>

#include "armleg/checked.hpp"
#include "armleg/errors.hpp"

namespace armleg {

YoungDiagram::YoungDiagram(std::vector<std::int64_t> rows) : rows_(std::move(rows)) {
  if (!rows_.empty()) {
    cols_.assign(static_cast<std::size_t>(rows_.front()), 0);
    for (std::int64_t r : rows_) {
      area_ = checked::add(area_, r);
      for (std::int64_t x = 0; x < r; ++x) ++cols_[static_cast<std::size_t>(x)];
    }
  }
}

YoungDiagram YoungDiagram::from_row_lengths(std::span<const std::int64_t> rows) {
  for (std::size_t y = 0; y < rows.size(); ++y) {
    if (rows[y] <= 0) {
      throw ValidationError("row " + std::to_string(y) + " has non-positive length " +
                            std::to_string(rows[y]));
    }
    if (y > 0 && rows[y] > rows[y - 1]) {
      throw ValidationError("row lengths must be weakly decreasing: row " + std::to_string(y) +
                            " (" + std::to_string(rows[y]) + ") exceeds row " +
                            std::to_string(y - 1) + " (" + std::to_string(rows[y - 1]) + ")");
    }
  }
  return YoungDiagram(std::vector<std::int64_t>(rows.begin(), rows.end()));
}

YoungDiagram YoungDiagram::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty() || text == "-") return YoungDiagram();

  std::vector<std::int64_t> rows;
  while (true) {
    auto comma = text.find(',');
    std::string_view field = trim(text.substr(0, comma));
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw ValidationError("malformed partition entry '" + std::string(field) + "'");
    }
    rows.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return from_row_lengths(rows);
}

std::string YoungDiagram::to_string() const {
  if (rows_.empty()) return "-";
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) out << ',';
    out << rows_[i];
  }
  return out.str();
}

std::vector<Box> YoungDiagram::boxes() const {
  std::vector<Box> out;
  out.reserve(static_cast<std::size_t>(area_));
  for (std::int64_t y = 0; y < height(); ++y) {
    for (std::int64_t x = 0; x < row_length(y); ++x) out.push_back({x, y});
  }
  return out;
}

YoungDiagram transpose(const YoungDiagram& d) { return YoungDiagram::from_row_lengths(d.columns()); }

HookPair arm_leg_inside(const YoungDiagram& d, Box c) {
  if (!d.contains(c)) {
    throw BoxOutsideDiagram("box (" + std::to_string(c.x) + "," + std::to_string(c.y) +
                            ") is not in diagram " + d.to_string());
  }
  return {d.row_length(c.y) - 1 - c.x, d.column_height(c.x) - 1 - c.y};
}

HookPair arm_leg_complement(const YoungDiagram& d, Box c) {
  if (!d.complement_contains(c)) {
    throw BoxInsideDiagram("box (" + std::to_string(c.x) + "," + std::to_string(c.y) +
                           ") is not in the complement of diagram " + d.to_string());
  }
  return {c.x - d.row_length(c.y), c.y - d.column_height(c.x)};
}

namespace {

void check_hook_args(std::int64_t arm, std::int64_t leg) {
  if (arm < 0 || leg < 0) {
    throw ValidationError("arm and leg must be non-negative, got (" + std::to_string(arm) + "," +
                          std::to_string(leg) + ")");
  }
}

}  // namespace

std::vector<Box> inside_boxes_with_hook(const YoungDiagram& d, std::int64_t arm, std::int64_t leg) {
  check_hook_args(arm, leg);
  std::vector<Box> out;
  for (std::int64_t y = 0; y < d.height(); ++y) {
    // Within a row the arm pins down the column.
    std::int64_t x = d.row_length(y) - 1 - arm;
    if (x >= 0 && d.column_height(x) - 1 - y == leg) out.push_back({x, y});
  }
  return out;
}

std::vector<Box> complement_boxes_with_hook(const YoungDiagram& d, std::int64_t arm, std::int64_t leg) {
  check_hook_args(arm, leg);
  std::vector<Box> out;
  const std::int64_t top = checked::add(d.height(), leg);
  for (std::int64_t y = 0; y <= top; ++y) {
    std::int64_t x = checked::add(d.row_length(y), arm);
    if (y - d.column_height(x) == leg) out.push_back({x, y});
  }
  return out;
}

HookCensus hook_census(const YoungDiagram& d, std::int64_t arm, std::int64_t leg) {
  return {static_cast<std::int64_t>(inside_boxes_with_hook(d, arm, leg).size()),
          static_cast<std::int64_t>(complement_boxes_with_hook(d, arm, leg).size())};
}

PartitionStream::PartitionStream(std::int64_t n) : n_(n) {
  if (n < 0) throw ValidationError("partition size must be non-negative");
}

void PartitionStream::restart() {
  current_.clear();
  started_ = false;
  done_ = false;
}

std::optional<YoungDiagram> PartitionStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (n_ > 0) current_.assign(1, n_);
    if (n_ == 0) done_ = true;
    return YoungDiagram::from_row_lengths(current_);
  }
  // Strip trailing ones, decrement the last part > 1, then refill greedily
  // with parts no larger than it.
  std::int64_t freed = 0;
  while (!current_.empty() && current_.back() == 1) {
    current_.pop_back();
    ++freed;
  }
  if (current_.empty()) {
    done_ = true;
    return std::nullopt;
  }
  std::int64_t part = --current_.back();
  ++freed;
  while (freed > 0) {
    std::int64_t take = std::min(part, freed);
    current_.push_back(take);
    freed -= take;
  }
  return YoungDiagram::from_row_lengths(current_);
}

std::vector<YoungDiagram> enumerate_partitions(std::int64_t n) {
  std::vector<YoungDiagram> out;
  PartitionStream stream(n);
  while (auto d = stream.next()) out.push_back(std::move(*d));
  return out;
}

}  // namespace armleg
