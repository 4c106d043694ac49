#include "armleg/arrows.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "armleg/errors.hpp"

namespace armleg {

namespace {

std::string show(Box c) { return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")"; }

std::string show(const Arrow& arr) { return show(arr.tail) + "->" + show(arr.head); }

void require_northwest(const YoungDiagram& d, const Arrow& arr) {
  if (!is_valid(d, arr)) {
    throw InvalidArrow("arrow " + show(arr) + " is not valid for diagram " + d.to_string());
  }
  if (!is_northwest(arr)) throw InvalidArrow("arrow " + show(arr) + " is not northwest-pointing");
}

// Repeats one unit translation while the arrow stays valid; returns whether
// it moved at all. Callers must not slide north with head.x < 0.
bool slide(const YoungDiagram& d, Arrow& arr, std::int64_t dx, std::int64_t dy) {
  bool moved = false;
  while (true) {
    Arrow next = translated(arr, dx, dy);
    if (!is_valid(d, next)) return moved;
    arr = next;
    moved = true;
  }
}

}  // namespace

HookPair hook_for(ArrowVector v) {
  if (v.dx > -1 || v.dy < 0) {
    throw InvalidArrow("vector (" + std::to_string(v.dx) + "," + std::to_string(v.dy) +
                       ") is not northwest");
  }
  return {-v.dx - 1, v.dy};
}

bool in_d_hat(const YoungDiagram& d, Box c) { return c.x < 0 || c.y < 0 || d.contains(c); }

bool is_valid(const YoungDiagram& d, const Arrow& arr) {
  return d.complement_contains(arr.tail) && in_d_hat(d, arr.head);
}

bool is_northwest(const Arrow& arr) { return arr.head.x < arr.tail.x && arr.head.y >= arr.tail.y; }

CanonicalResult canonical_inside(const YoungDiagram& d, const Arrow& start, GreedyOrder order) {
  require_northwest(d, start);
  Arrow arr = start;
  // North moves are bounded by the diagram height once head.x >= 0; every
  // west move lowers tail.x, which cannot drop below zero.
  while (true) {
    if (arr.head.x < 0) return CanonicalResult::escaping();
    bool moved;
    if (order == GreedyOrder::VerticalFirst) {
      moved = slide(d, arr, 0, 1);
      moved = slide(d, arr, -1, 0) || moved;
    } else {
      moved = slide(d, arr, -1, 0);
      if (arr.head.x < 0) return CanonicalResult::escaping();
      moved = slide(d, arr, 0, 1) || moved;
    }
    if (!moved) break;
  }
  return CanonicalResult::inside({arr.head.x, arr.tail.y});
}

Box canonical_outside(const YoungDiagram& d, const Arrow& start, GreedyOrder order) {
  require_northwest(d, start);
  Arrow arr = start;
  while (true) {
    bool moved;
    if (order == GreedyOrder::VerticalFirst) {
      moved = slide(d, arr, 0, -1);
      moved = slide(d, arr, 1, 0) || moved;
    } else {
      moved = slide(d, arr, 1, 0);
      moved = slide(d, arr, 0, -1) || moved;
    }
    if (!moved) break;
  }
  return {arr.tail.x, arr.head.y};
}

bool is_escaping(const YoungDiagram& d, const Arrow& arr) { return canonical_inside(d, arr).is_escaping(); }

Arrow canonical_arrow_inside(const YoungDiagram& d, Box c) {
  HookPair h = arm_leg_inside(d, c);
  return {{c.x + h.arm + 1, c.y}, {c.x, c.y + h.leg}};
}

Arrow canonical_arrow_outside(const YoungDiagram& d, Box c) {
  HookPair h = arm_leg_complement(d, c);
  return {{c.x, c.y - h.leg}, {c.x - h.arm - 1, c.y}};
}

Arrow escaping_representative(const YoungDiagram& d, HookPair h) {
  const std::int64_t base = d.column_height(h.arm);
  return {{h.arm, base}, {-1, base + h.leg}};
}

MatchingReport verify_hook_theorem(const YoungDiagram& d, std::int64_t arm, std::int64_t leg) {
  MatchingReport report;
  report.hook = {arm, leg};
  const std::vector<Box> sources = inside_boxes_with_hook(d, arm, leg);
  std::vector<Box> targets = complement_boxes_with_hook(d, arm, leg);
  report.census = {static_cast<std::int64_t>(sources.size()), static_cast<std::int64_t>(targets.size())};

  auto fail = [&](const std::string& what) {
    throw CounterexampleError("hook theorem failed for diagram " + d.to_string() + ", (a,l)=(" +
                              std::to_string(arm) + "," + std::to_string(leg) + "): " + what);
  };

  for (Box c : sources) {
    Arrow arr = canonical_arrow_inside(d, c);
    CanonicalResult back = canonical_inside(d, arr);
    if (back.is_escaping() || back.box() != c) fail("canonical arrow of box " + show(c) + " does not return to it");
    report.pairs.emplace_back(c, canonical_outside(d, arr));
  }
  Arrow esc = escaping_representative(d, report.hook);
  if (!is_escaping(d, esc)) fail("escaping representative " + show(esc) + " is not escaping");
  report.pairs.emplace_back(std::nullopt, canonical_outside(d, esc));

  std::vector<Box> images;
  for (const auto& [src, dst] : report.pairs) {
    if (!d.complement_contains(dst) || arm_leg_complement(d, dst) != report.hook) {
      fail("image " + show(dst) + " does not carry the hook");
    }
    images.push_back(dst);
  }
  std::sort(images.begin(), images.end());
  std::sort(targets.begin(), targets.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end()) fail("matching is not injective");
  if (images != targets) fail("matching is not onto the complement boxes");
  return report;
}

namespace {

RectReport northwest_rect(const YoungDiagram& d, const Frame& f, HookPair h) {
  RectReport r;
  r.hook = h;
  r.orientation = ArrowOrientation::Northwest;
  r.inside_witnesses = inside_boxes_with_hook(d, h.arm, h.leg);
  for (Box c : complement_boxes_with_hook(d, h.arm, h.leg)) {
    if (f.in_rectangle(c)) r.complement_witnesses.push_back(c);
  }
  r.inside_count = static_cast<std::int64_t>(r.inside_witnesses.size());
  r.complement_count = static_cast<std::int64_t>(r.complement_witnesses.size());
  r.discriminator = {h.arm, f.Q() - 1 - h.leg};
  if (!f.in_rectangle(r.discriminator)) {
    r.discriminator_status = Discriminator::OutsideRectangle;
  } else if (d.contains(r.discriminator)) {
    r.discriminator_status = Discriminator::InDiagram;
  } else {
    r.discriminator_status = Discriminator::InComplement;
  }
  r.escaping_box = canonical_outside(d, escaping_representative(d, h));
  return r;
}

Box swap(Box c) { return {c.y, c.x}; }

}  // namespace

RectReport rect_hook_census(const YoungDiagram& d, const Frame& f, std::int64_t arm, std::int64_t leg) {
  require_fit(d, f);
  if (arm < 0 || leg < 0) throw ValidationError("arm and leg must be non-negative");
  const HookPair h{arm, leg};

  RectReport r;
  if (steep(h, f.slope())) {
    r = northwest_rect(d, f, h);
  } else if (flat(h, f.slope())) {
    r = northwest_rect(transpose(d), f.transposed(), {leg, arm});
    r.hook = h;
    r.orientation = ArrowOrientation::Southeast;
    r.discriminator = swap(r.discriminator);
    r.escaping_box = swap(r.escaping_box);
    for (Box& c : r.inside_witnesses) c = swap(c);
    for (Box& c : r.complement_witnesses) c = swap(c);
    std::sort(r.inside_witnesses.begin(), r.inside_witnesses.end(),
              [](Box a, Box b) { return std::pair(a.y, a.x) < std::pair(b.y, b.x); });
    std::sort(r.complement_witnesses.begin(), r.complement_witnesses.end(),
              [](Box a, Box b) { return std::pair(a.y, a.x) < std::pair(b.y, b.x); });
  } else {
    throw SlopeConditionError("(a,l)=(" + std::to_string(arm) + "," + std::to_string(leg) +
                              ") satisfies neither l/(a+1) >= q/p nor (l+1)/a <= q/p for (p,q)=(" +
                              std::to_string(f.p()) + "," + std::to_string(f.q()) + ")");
  }

  const bool escaping_in_rect = f.in_rectangle(r.escaping_box);
  const bool case2 = r.discriminator_status == Discriminator::InComplement;
  const std::int64_t expected = r.inside_count + (case2 ? 1 : 0);
  if (r.complement_count != expected || escaping_in_rect != case2) {
    std::ostringstream msg;
    msg << "rectangle theorem failed for diagram " << d.to_string() << ", (p,q,K)=(" << f.p() << ","
        << f.q() << "," << f.K() << "), (a,l)=(" << arm << "," << leg << "): inside " << r.inside_count
        << ", complement " << r.complement_count << ", discriminator " << show(r.discriminator);
    throw CounterexampleError(msg.str());
  }
  return r;
}

CorollaryReport rect_corollaries(const YoungDiagram& d, const Frame& f) {
  require_fit(d, f);
  CorollaryReport r;
  const Slope s = f.slope();
  for (std::int64_t y = 0; y < f.Q(); ++y) {
    for (std::int64_t x = 0; x < f.P(); ++x) {
      const Box c{x, y};
      if (f.below_diagonal(c)) ++r.below_diagonal;
      if (d.contains(c)) {
        HookPair h = arm_leg_inside(d, c);
        if (steep(h, s)) ++r.steep_inside;
        if (flat(h, s)) ++r.flat_inside;
      } else {
        HookPair h = arm_leg_complement(d, c);
        if (steep(h, s)) ++r.steep_complement;
        if (flat(h, s)) ++r.flat_complement;
        if (f.below_diagonal(c)) ++r.below_diagonal_outside;
      }
    }
  }
  if (r.steep_inside + r.below_diagonal_outside != r.steep_complement ||
      r.flat_inside + r.below_diagonal_outside != r.flat_complement) {
    std::ostringstream msg;
    msg << "rectangle corollaries failed for diagram " << d.to_string() << ", (p,q,K)=(" << f.p() << ","
        << f.q() << "," << f.K() << "): steep " << r.steep_inside << "+" << r.below_diagonal_outside
        << " vs " << r.steep_complement << ", flat " << r.flat_inside << "+" << r.below_diagonal_outside
        << " vs " << r.flat_complement;
    throw CounterexampleError(msg.str());
  }
  return r;
}

}  // namespace armleg
