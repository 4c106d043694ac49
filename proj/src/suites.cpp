#include "armleg/suites.hpp"

#include <chrono>
#include <functional>
#include <numeric>

#include "armleg/arrows.hpp"
#include "armleg/boundary_graph.hpp"
#include "armleg/errors.hpp"
#include "armleg/frame.hpp"
#include "armleg/partition.hpp"

namespace armleg {

namespace {

constexpr std::int64_t kHookBound = 10;

using Json = nlohmann::ordered_json;

Histogram histogram_of(std::int64_t n, const std::function<std::int64_t(const YoungDiagram&)>& stat) {
  Histogram out;
  PartitionStream stream(n);
  while (auto d = stream.next()) ++out[stat(*d)];
  return out;
}

void require_h_defined(std::int64_t n, Slope s) {
  if (s.p() + s.q() <= n) {
    throw SlopeTooSmall("h is undefined for some diagram of area " + std::to_string(n) + " at (p,q)=(" +
                        std::to_string(s.p()) + "," + std::to_string(s.q()) + "); need p+q > n");
  }
}


Json histogram_json(const Histogram& h) {
  Json out = Json::object();
  for (const auto& [k, v] : h) out[std::to_string(k)] = v;
  return out;
}

// Collects failures for one suite; each check is isolated so a throwing
// instance is reported and the sweep continues.
class Recorder {
 public:
  explicit Recorder(SuiteReport& report) : report_(report) {}

  template <typename Fn>
  void check(const Json& instance, Fn&& fn) {
    ++report_.instances;
    try {
      std::string why = fn();
      if (!why.empty()) report_.failures.push_back({why, instance});
    } catch (const std::exception& e) {
      report_.failures.push_back({e.what(), instance});
    }
  }

 private:
  SuiteReport& report_;
};

Json instance(std::string_view suite, const YoungDiagram& d) {
  return Json{{"suite", suite}, {"partition", d.to_string()}};
}

Json instance(std::string_view suite, const YoungDiagram& d, const Frame& f) {
  Json j = instance(suite, d);
  j["p"] = f.p();
  j["q"] = f.q();
  j["K"] = f.K();
  return j;
}

std::vector<Slope> coprime_slopes_up_to(std::int64_t bound) {
  std::vector<Slope> out;
  for (std::int64_t p = 1; p <= bound; ++p) {
    for (std::int64_t q = 1; q <= bound; ++q) {
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    }
  }
  return out;
}

void hooks_suite(SuiteReport& report, std::int64_t max_n) {
  Recorder rec(report);
  for (std::int64_t n = 0; n <= max_n; ++n) {
    for (const YoungDiagram& d : enumerate_partitions(n)) {
      for (std::int64_t a = 0; a <= kHookBound; ++a) {
        for (std::int64_t l = 0; l <= kHookBound; ++l) {
          Json inst = instance("hooks", d);
          inst["arm"] = a;
          inst["leg"] = l;
          rec.check(inst, [&]() -> std::string {
            const HookCensus c = hook_census(d, a, l);
            if (c.complement != c.inside + 1) {
              return "census (" + std::to_string(c.inside) + "," + std::to_string(c.complement) +
                     ") is not of the form (k, k+1)";
            }
            const MatchingReport m = verify_hook_theorem(d, a, l);
            if (m.census != c) return "matching census disagrees with hook_census";
            return {};
          });
        }
      }
    }
  }
}

void rectangle_suite(SuiteReport& report, std::int64_t max_n, std::int64_t bound) {
  Recorder rec(report);
  const auto slopes = coprime_slopes_up_to(bound);
  for (std::int64_t n = 0; n <= max_n; ++n) {
    for (const YoungDiagram& d : enumerate_partitions(n)) {
      for (Slope s : slopes) {
        const std::int64_t k0 = minimal_K(d, s);
        for (std::int64_t K = k0; K <= k0 + 1; ++K) {
          const Frame f(s, K);
          rec.check(instance("rectangle", d, f), [&]() -> std::string {
            rect_corollaries(d, f);
            return {};
          });
          for (std::int64_t a = 0; a <= kHookBound; ++a) {
            for (std::int64_t l = 0; l <= kHookBound; ++l) {
              const HookPair h{a, l};
              if (!steep(h, s) && !flat(h, s)) continue;
              Json inst = instance("rectangle", d, f);
              inst["arm"] = a;
              inst["leg"] = l;
              rec.check(inst, [&]() -> std::string {
                rect_hook_census(d, f, a, l);
                return {};
              });
            }
          }
        }
      }
    }
  }
}

std::string check_lw_instance(const YoungDiagram& d, const Frame& f) {
  const BoundaryGraph g(boundary_path(d, f));
  const StatBundle st = stats_at_slope(d, f.slope());
  if (lw_ctot(g) != st.ctot) {
    return "ctot formula " + std::to_string(lw_ctot(g)) + " != definitional " + std::to_string(st.ctot);
  }
  if (lw_midd(g) != st.midd) {
    return "midd formula " + std::to_string(lw_midd(g)) + " != definitional " + std::to_string(st.midd);
  }
  if (!is_balanced(g)) return "boundary graph is not balanced";
  if (count_below_diagonal(f) != below_diagonal_closed_form(f)) return "|R+| closed form mismatch";
  if (count_on_diagonal_outside(d, f) != f.K() - g.n_in_at(0)) return "diagonal count != K - |N_in(0)|";
  for (std::int64_t y = 0; y < f.Q(); ++y) {
    for (std::int64_t x = 0; x < f.P(); ++x) {
      const Box c{x, y};
      const EdgeVertices ev = box_edge_vertices(d, f, c);
      const bool on_line = d.contains(c) ? on_plus_line(arm_leg_inside(d, c), f.slope())
                                         : on_minus_line(arm_leg_complement(d, c), f.slope());
      if ((ev.v == ev.w) != on_line) {
        return "v == w does not match the slope line at box (" + std::to_string(x) + "," + std::to_string(y) + ")";
      }
      tour_order_inside(g, d, c);
    }
  }
  return {};
}

void lw_suite(SuiteReport& report, std::int64_t max_n, std::int64_t bound) {
  Recorder rec(report);
  const auto slopes = coprime_slopes_up_to(bound);
  for (std::int64_t n = 0; n <= max_n; ++n) {
    for (const YoungDiagram& d : enumerate_partitions(n)) {
      for (Slope s : slopes) {
        const std::int64_t k0 = minimal_K(d, s);
        for (std::int64_t K = k0; K <= k0 + 2; ++K) {
          const Frame f(s, K);
          rec.check(instance("lw-formulas", d, f), [&] { return check_lw_instance(d, f); });
        }
      }
    }
  }
}

void series_suite(SuiteReport& report, std::int64_t max_n) {
  Recorder rec(report);
  const Slope slopes[] = {Slope(2, 1), Slope(3, 2), Slope(5, 3)};
  for (std::int64_t n = 0; n <= max_n; ++n) {
    for (const YoungDiagram& d : enumerate_partitions(n)) {
      for (Slope s : slopes) {
        const Frame f(s, minimal_K(d, s));
        rec.check(instance("series", d, f), [&]() -> std::string {
          if (!north_series_identity(d, f).holds()) return "P_N series identity fails";
          if (!west_series_identity(d, f).holds()) return "P_W series identity fails";
          const BoundaryGraph g(boundary_path(d, f));
          const LaurentPoly content = content_poly(d, s);
          if (pn_from_content(content, f) != pn_poly(g)) return "P_N not recovered from content";
          if (pw_from_content(content, f) != pw_poly(g)) return "P_W not recovered from content";
          return {};
        });
      }
    }
  }
}

void component_suite(SuiteReport& report, std::int64_t max_n) {
  Recorder rec(report);
  const Slope s(3, 2);
  for (std::int64_t n = 0; n <= max_n; ++n) {
    const auto parts = enumerate_partitions(n);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::size_t j = i; j < parts.size(); ++j) {
        Json inst{{"suite", "component"},
                  {"partition", parts[i].to_string()},
                  {"other", parts[j].to_string()},
                  {"p", s.p()},
                  {"q", s.q()}};
        rec.check(inst, [&]() -> std::string {
          const bool same = same_component(parts[i], parts[j], s);
          if (i == j && !same) return "a diagram is not in its own component";
          return {};
        });
      }
    }
  }
}

void merge(SuiteReport& into, SuiteReport&& part) {
  into.instances += part.instances;
  for (auto& f : part.failures) into.failures.push_back(std::move(f));
}

}  // namespace

Histogram histogram(std::int64_t n, Slope s) {
  require_h_defined(n, s);
  return histogram_of(n, [&](const YoungDiagram& d) { return *stats_at_slope(d, s).h; });
}

Histogram cell_dimension_table(std::int64_t n, Slope s) {
  require_h_defined(n, s);
  return histogram_of(n, [&](const YoungDiagram& d) { return d.area() + *stats_at_slope(d, s).h; });
}

Histogram h_plus_histogram(std::int64_t n, Slope s) {
  return histogram_of(n, [&](const YoungDiagram& d) { return stats_at_slope(d, s).h_plus; });
}

Histogram h_minus_histogram(std::int64_t n, Slope s) {
  return histogram_of(n, [&](const YoungDiagram& d) { return stats_at_slope(d, s).h_minus; });
}

SuiteReport verify_equidistribution(std::int64_t n, std::int64_t budget) {
  if (n < 0) throw ValidationError("n must be non-negative");
  if (budget < 1) throw ValidationError("budget must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite = "equidistribution";
  Recorder rec(report);

  const auto slopes = slopes_with_sum_between(n + 1, n + budget);
  const Histogram reference = histogram(n, slopes.front());
  for (Slope s : slopes) {
    Json inst{{"suite", "equidistribution"}, {"n", n}, {"p", s.p()}, {"q", s.q()}};
    rec.check(inst, [&]() -> std::string {
      const Histogram h = histogram(n, s);
      if (h != reference) {
        return "histogram at (p,q)=(" + std::to_string(s.p()) + "," + std::to_string(s.q()) + ") " +
               histogram_json(h).dump() + " differs from (p,q)=(" + std::to_string(slopes.front().p()) + "," +
               std::to_string(slopes.front().q()) + ") " + histogram_json(reference).dump();
      }
      return {};
    });
  }
  if (n >= 1) {
    for (Slope s : breakpoint_slopes(n)) {
      Json inst{{"suite", "equidistribution"}, {"n", n}, {"p", s.p()}, {"q", s.q()}, {"breakpoint", true}};
      rec.check(inst, [&]() -> std::string {
        const Histogram plus = h_plus_histogram(n, s);
        const Histogram minus = h_minus_histogram(n, s);
        if (plus != minus) {
          return "h+ histogram " + histogram_json(plus).dump() + " differs from h- histogram " +
                 histogram_json(minus).dump();
        }
        return {};
      });
    }
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"hooks",  "rectangle", "lw-formulas",
                                                 "series", "component", "equidistribution"};
  return names;
}

std::int64_t default_slope_bound(std::string_view suite) {
  if (suite == "lw-formulas") return 5;
  return 4;
}

SuiteReport run_suite(std::string_view name, std::int64_t max_n, std::optional<std::int64_t> slope_bound) {
  if (max_n < 0) throw ValidationError("max-n must be non-negative");
  const std::int64_t bound = slope_bound.value_or(default_slope_bound(name));
  if (bound < 1) throw ValidationError("slope bound must be at least 1");

  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite = std::string(name);
  if (name == "hooks") {
    hooks_suite(report, max_n);
  } else if (name == "rectangle") {
    rectangle_suite(report, max_n, bound);
  } else if (name == "lw-formulas") {
    lw_suite(report, max_n, bound);
  } else if (name == "series") {
    series_suite(report, max_n);
  } else if (name == "component") {
    component_suite(report, max_n);
  } else if (name == "equidistribution") {
    for (std::int64_t n = 0; n <= max_n; ++n) merge(report, verify_equidistribution(n, bound));
  } else {
    throw UnknownSuite("unknown suite '" + std::string(name) + "'");
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace armleg
