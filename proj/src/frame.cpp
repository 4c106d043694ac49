#include "armleg/frame.hpp"

#include <algorithm>
#include <string>

#include "armleg/checked.hpp"
#include "armleg/errors.hpp"

namespace armleg {

using checked::add;
using checked::mul;
using checked::sub;

Frame::Frame(Slope slope, std::int64_t K) : slope_(slope), K_(K) {
  if (K < 1) throw ValidationError("K must be at least 1, got " + std::to_string(K));
  P_ = mul(K, slope.p());
  Q_ = mul(K, slope.q());
  bound_ = sub(sub(mul(P_, slope.q()), slope.p()), slope.q());
}

std::int64_t Frame::weighted_content(Box c) const { return add(mul(q(), c.x), mul(p(), c.y)); }

std::int64_t Frame::corner_label(std::int64_t X, std::int64_t Y) const {
  return sub(mul(q(), sub(P_, X)), mul(p(), Y));
}

std::optional<std::int64_t> max_weighted_content(const YoungDiagram& d, Slope s) {
  if (d.empty()) return std::nullopt;
  // qx + py is maximised on the outer corners; scanning row ends is enough.
  std::int64_t best = mul(s.q(), d.row_length(0) - 1);
  for (std::int64_t y = 1; y < d.height(); ++y) {
    best = std::max(best, add(mul(s.q(), d.row_length(y) - 1), mul(s.p(), y)));
  }
  return best;
}

bool fits(const YoungDiagram& d, const Frame& f) {
  auto m = max_weighted_content(d, f.slope());
  return !m || *m <= f.diagonal_bound();
}

void require_fit(const YoungDiagram& d, const Frame& f) {
  for (std::int64_t y = 0; y < d.height(); ++y) {
    Box corner{d.row_length(y) - 1, y};
    if (f.weighted_content(corner) > f.diagonal_bound()) {
      throw FitError("diagram " + d.to_string() + " does not fit for (p,q,K)=(" +
                     std::to_string(f.p()) + "," + std::to_string(f.q()) + "," +
                     std::to_string(f.K()) + "): box (" + std::to_string(corner.x) + "," +
                     std::to_string(corner.y) + ") has qx+py=" +
                     std::to_string(f.weighted_content(corner)) + " > " +
                     std::to_string(f.diagonal_bound()));
    }
  }
}

std::int64_t minimal_K(const YoungDiagram& d, Slope s) {
  auto m = max_weighted_content(d, s);
  if (!m) return 1;
  // Need K*pq >= m + p + q.
  const std::int64_t pq = mul(s.p(), s.q());
  const std::int64_t need = add(add(*m, s.p()), s.q());
  return std::max<std::int64_t>(1, (need + pq - 1) / pq);
}

std::int64_t count_below_diagonal(const Frame& f) {
  std::int64_t count = 0;
  for (std::int64_t y = 0; y < f.Q(); ++y) {
    for (std::int64_t x = 0; x < f.P(); ++x) {
      if (f.weighted_content({x, y}) <= f.diagonal_bound()) ++count;
    }
  }
  return count;
}

std::int64_t below_diagonal_closed_form(const Frame& f) {
  return add(sub(sub(mul(f.P(), f.Q()), f.P()), f.Q()), f.K()) / 2;
}

}  // namespace armleg
