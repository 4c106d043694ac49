#include "armleg/statistics.hpp"

#include <numeric>
#include <string>

#include "armleg/checked.hpp"
#include "armleg/errors.hpp"

namespace armleg {

Slope::Slope(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
  if (p <= 0 || q <= 0) {
    throw ValidationError("slope (p,q)=(" + std::to_string(p) + "," + std::to_string(q) +
                          ") must be positive");
  }
  if (std::gcd(p, q) != 1) {
    throw ValidationError("slope (p,q)=(" + std::to_string(p) + "," + std::to_string(q) +
                          ") is not coprime");
  }
}

using checked::add;
using checked::mul;

bool on_plus_line(HookPair h, Slope s) { return mul(h.leg, s.p()) == mul(s.q(), add(h.arm, 1)); }

bool on_minus_line(HookPair h, Slope s) { return mul(add(h.leg, 1), s.p()) == mul(s.q(), h.arm); }

bool strictly_between(HookPair h, Slope s) {
  return mul(h.leg, s.p()) < mul(s.q(), add(h.arm, 1)) && mul(s.q(), h.arm) < mul(add(h.leg, 1), s.p());
}

bool steep(HookPair h, Slope s) { return mul(h.leg, s.p()) >= mul(s.q(), add(h.arm, 1)); }

bool flat(HookPair h, Slope s) { return mul(add(h.leg, 1), s.p()) <= mul(s.q(), h.arm); }

StatBundle stats_at_slope(const YoungDiagram& d, Slope s) {
  StatBundle out;
  for (Box c : d.boxes()) {
    HookPair hook = arm_leg_inside(d, c);
    if (on_plus_line(hook, s)) ++out.c_plus;
    if (on_minus_line(hook, s)) ++out.c_minus;
    if (strictly_between(hook, s)) ++out.midd;
  }
  out.ctot = out.c_plus + out.c_minus;
  out.h_plus = out.midd + out.c_plus;
  out.h_minus = out.midd + out.c_minus;
  if (out.ctot == 0) out.h = out.midd;
  return out;
}

std::vector<Slope> slopes_with_sum_between(std::int64_t lo, std::int64_t hi) {
  std::vector<Slope> out;
  for (std::int64_t sum = std::max<std::int64_t>(lo, 2); sum <= hi; ++sum) {
    for (std::int64_t p = 1; p < sum; ++p) {
      if (std::gcd(p, sum - p) == 1) out.emplace_back(p, sum - p);
    }
  }
  return out;
}

std::vector<Slope> breakpoint_slopes(std::int64_t n) {
  if (n < 1) throw ValidationError("breakpoint_slopes needs n >= 1");
  return slopes_with_sum_between(2, n);
}

}  // namespace armleg
