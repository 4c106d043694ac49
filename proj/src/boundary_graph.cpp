#include "armleg/boundary_graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

#include "armleg/checked.hpp"
#include "armleg/errors.hpp"
#include "armleg/statistics.hpp"

namespace armleg {

using checked::add;
using checked::mul;
using checked::sub;

std::vector<std::int64_t> BoundaryPath::labels() const {
  std::vector<std::int64_t> out;
  out.reserve(steps.size() + 1);
  out.push_back(frame.corner_label(frame.P(), 0));
  for (const PathStep& s : steps) out.push_back(s.to);
  return out;
}

BoundaryPath boundary_path(const YoungDiagram& d, const Frame& f) {
  require_fit(d, f);
  BoundaryPath path{f, {}};
  path.steps.reserve(static_cast<std::size_t>(add(f.P(), f.Q())));

  std::int64_t X = f.P();
  std::int64_t Y = 0;
  std::int64_t running = 0;
  auto step = [&](Direction dir) {
    const std::int64_t from = f.corner_label(X, Y);
    if (dir == Direction::West) {
      --X;
      running = add(running, f.q());
    } else {
      ++Y;
      running = sub(running, f.p());
    }
    const std::int64_t to = f.corner_label(X, Y);
    if (to != running) {
      throw CounterexampleError("corner label " + std::to_string(to) + " at (" + std::to_string(X) + "," +
                                std::to_string(Y) + ") disagrees with running sum " +
                                std::to_string(running));
    }
    path.steps.push_back({dir, from, to});
  };

  for (std::int64_t y = 0; y < f.Q(); ++y) {
    while (X > d.row_length(y)) step(Direction::West);
    step(Direction::North);
  }
  while (X > 0) step(Direction::West);
  return path;
}

BoundaryGraph::BoundaryGraph(const BoundaryPath& path) : frame_(path.frame), tour_(path.steps) {
  std::set<std::int64_t> verts;
  verts.insert(path.frame.corner_label(path.frame.P(), 0));
  std::size_t west_seen = 0;
  west_pos_.assign(static_cast<std::size_t>(frame_.P()), 0);
  north_pos_.reserve(static_cast<std::size_t>(frame_.Q()));
  for (std::size_t i = 0; i < tour_.size(); ++i) {
    const PathStep& s = tour_[i];
    verts.insert(s.from);
    verts.insert(s.to);
    if (s.dir == Direction::West) {
      ++w_out_[s.from];
      ++w_in_[s.to];
      // The j-th west step (from the right) lies in column P - 1 - j.
      west_pos_[static_cast<std::size_t>(frame_.P()) - 1 - west_seen++] = i;
    } else {
      ++n_out_[s.from];
      ++n_in_[s.to];
      north_pos_.push_back(i);
    }
  }
  if (west_seen != static_cast<std::size_t>(frame_.P()) ||
      north_pos_.size() != static_cast<std::size_t>(frame_.Q())) {
    throw ValidationError("boundary path does not have P west and Q north steps");
  }
  vertices_.assign(verts.begin(), verts.end());
}

std::size_t BoundaryGraph::north_edge_position(std::int64_t row) const {
  if (row < 0 || row >= frame_.Q()) throw OutOfRectangle("row " + std::to_string(row) + " outside R_{P,Q}");
  return north_pos_[static_cast<std::size_t>(row)];
}

std::size_t BoundaryGraph::west_edge_position(std::int64_t column) const {
  if (column < 0 || column >= frame_.P()) {
    throw OutOfRectangle("column " + std::to_string(column) + " outside R_{P,Q}");
  }
  return west_pos_[static_cast<std::size_t>(column)];
}

bool same_multigraph(const BoundaryGraph& a, const BoundaryGraph& b) {
  return a.vertices() == b.vertices() && a.w_in() == b.w_in() && a.n_in() == b.n_in() &&
         a.w_out() == b.w_out() && a.n_out() == b.n_out();
}

bool is_balanced(const BoundaryGraph& g) {
  for (std::int64_t v : g.vertices()) {
    if (g.w_in_at(v) + g.n_in_at(v) != g.w_out_at(v) + g.n_out_at(v)) return false;
  }
  return true;
}

std::int64_t lw_ctot(const BoundaryGraph& g) {
  std::int64_t sum = 0;
  for (const auto& [v, w_count] : g.w_in()) sum = add(sum, mul(w_count, g.n_in_at(v)));
  return add(sub(sum, g.frame().K()), g.n_in_at(0));
}

std::int64_t lw_midd(const BoundaryGraph& g) {
  // Walk v downward, keeping the total N_in mass at labels >= v.
  std::int64_t sum = 0;
  std::int64_t n_at_or_above = 0;
  auto n_it = g.n_in().rbegin();
  for (auto w_it = g.w_in().rbegin(); w_it != g.w_in().rend(); ++w_it) {
    while (n_it != g.n_in().rend() && n_it->first >= w_it->first) {
      n_at_or_above = add(n_at_or_above, n_it->second);
      ++n_it;
    }
    sum = add(sum, mul(w_it->second, n_at_or_above));
  }
  return sub(count_below_diagonal(g.frame()), sum);
}

std::int64_t count_on_diagonal_outside(const YoungDiagram& d, const Frame& f) {
  std::int64_t count = 0;
  for (std::int64_t y = 0; y < f.Q(); ++y) {
    // qx = bound - py has at most one solution per row.
    const std::int64_t rest = sub(f.diagonal_bound(), mul(f.p(), y));
    if (rest < 0 || rest % f.q() != 0) continue;
    const Box c{rest / f.q(), y};
    if (f.in_rectangle(c) && !d.contains(c)) ++count;
  }
  return count;
}

EdgeVertices box_edge_vertices(const YoungDiagram& d, const Frame& f, Box c) {
  require_fit(d, f);
  if (!f.in_rectangle(c)) {
    throw OutOfRectangle("box (" + std::to_string(c.x) + "," + std::to_string(c.y) + ") is outside R_{" +
                         std::to_string(f.P()) + "," + std::to_string(f.Q()) + "}");
  }
  // West edge of column x runs (x+1, h) -> (x, h) with h = colHeight(x);
  // north edge of row y runs (r, y) -> (r, y+1) with r = rowLen(y).
  const EdgeVertices ev{f.corner_label(c.x, d.column_height(c.x)),
                        f.corner_label(d.row_length(c.y), c.y + 1)};
  bool ok;
  if (d.contains(c)) {
    const HookPair h = arm_leg_inside(d, c);
    ok = ev.v == add(ev.w, sub(mul(add(h.arm, 1), f.q()), mul(h.leg, f.p())));
  } else {
    const HookPair h = arm_leg_complement(d, c);
    ok = ev.w == add(ev.v, sub(mul(h.arm, f.q()), mul(add(h.leg, 1), f.p())));
  }
  if (!ok) {
    throw CounterexampleError("slope/edge identity fails at box (" + std::to_string(c.x) + "," +
                              std::to_string(c.y) + ") of " + d.to_string());
  }
  return ev;
}

bool tour_order_inside(const BoundaryGraph& g, const YoungDiagram& d, Box c) {
  if (!g.frame().in_rectangle(c)) {
    throw OutOfRectangle("box (" + std::to_string(c.x) + "," + std::to_string(c.y) + ") is outside R_{P,Q}");
  }
  const bool north_first = g.north_edge_position(c.y) < g.west_edge_position(c.x);
  if (north_first != d.contains(c)) {
    throw CounterexampleError("tour order disagrees with membership at box (" + std::to_string(c.x) + "," +
                              std::to_string(c.y) + ") of " + d.to_string());
  }
  return north_first;
}

LaurentPoly content_poly(const YoungDiagram& d, Slope s) {
  LaurentPoly out;
  for (Box c : d.boxes()) out.add_term(add(mul(s.q(), c.x), mul(s.p(), c.y)), 1);
  return out;
}

LaurentPoly pn_poly(const BoundaryGraph& g) {
  LaurentPoly out;
  for (const auto& [v, n] : g.n_in()) out.add_term(v, n);
  return out;
}

LaurentPoly pw_poly(const BoundaryGraph& g) {
  LaurentPoly out;
  for (const auto& [v, n] : g.w_out()) out.add_term(v, n);
  return out;
}

namespace {

// (1 - t^{Kpq}) - t^{Kpq - step} (1 - t^step) * poly(t^{-1})
LaurentPoly series_rhs(const LaurentPoly& poly, const Frame& f, std::int64_t step) {
  const std::int64_t kpq = mul(f.P(), f.q());
  return LaurentPoly::one_minus(kpq) - (LaurentPoly::one_minus(step) * poly.reflected()).shifted(sub(kpq, step));
}

LaurentPoly series_lhs(const YoungDiagram& d, const Frame& f) {
  return LaurentPoly::one_minus(f.p()) * LaurentPoly::one_minus(f.q()) * content_poly(d, f.slope());
}

LaurentPoly invert_series(const LaurentPoly& content, const Frame& f, std::int64_t step,
                          std::int64_t expected_mass) {
  const std::int64_t kpq = mul(f.P(), f.q());
  LaurentPoly scaled = LaurentPoly::one_minus(kpq) -
                       LaurentPoly::one_minus(f.p()) * LaurentPoly::one_minus(f.q()) * content;
  LaurentPoly out = scaled.divided_by(LaurentPoly::one_minus(step)).shifted(sub(step, kpq)).reflected();
  // Division by 1 - t^p is exact for any integer input, so the shape of
  // the result is what separates real contents from arbitrary polynomials.
  bool ok = out.mass() == expected_mass;
  for (const auto& [e, c] : out.terms()) ok = ok && c > 0;
  if (!ok) {
    throw ValidationError("(" + content.to_string() + ") is not the content of a diagram fitting (p,q,K)=(" +
                          std::to_string(f.p()) + "," + std::to_string(f.q()) + "," + std::to_string(f.K()) +
                          ")");
  }
  return out;
}

}  // namespace

SeriesIdentity north_series_identity(const YoungDiagram& d, const Frame& f) {
  const BoundaryGraph g(boundary_path(d, f));
  return {series_lhs(d, f), series_rhs(pn_poly(g), f, f.p())};
}

SeriesIdentity west_series_identity(const YoungDiagram& d, const Frame& f) {
  const BoundaryGraph g(boundary_path(d, f));
  return {series_lhs(d, f), series_rhs(pw_poly(g), f, f.q())};
}

bool verify_series_identity(const YoungDiagram& d, const Frame& f) {
  return north_series_identity(d, f).holds() && west_series_identity(d, f).holds();
}

LaurentPoly pn_from_content(const LaurentPoly& content, const Frame& f) { return invert_series(content, f, f.p(), f.Q()); }

LaurentPoly pw_from_content(const LaurentPoly& content, const Frame& f) { return invert_series(content, f, f.q(), f.P()); }

bool same_component(const YoungDiagram& a, const YoungDiagram& b, Slope s) {
  const Frame f(s, std::max(minimal_K(a, s), minimal_K(b, s)));
  const bool same_content = content_poly(a, s) == content_poly(b, s);
  const bool same_graph = same_multigraph(BoundaryGraph(boundary_path(a, f)), BoundaryGraph(boundary_path(b, f)));
  if (same_content != same_graph) {
    std::ostringstream msg;
    msg << "content equality (" << same_content << ") and graph equality (" << same_graph
        << ") disagree for " << a.to_string() << " and " << b.to_string() << " at (p,q)=(" << s.p() << ","
        << s.q() << ")";
    throw CounterexampleError(msg.str());
  }
  return same_content;
}

}  // namespace armleg
