// armleg: command-line front end for slope statistics, boundary graphs,
// hook censuses, distribution tables and verification sweeps.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or validation error.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "armleg/arrows.hpp"
#include "armleg/boundary_graph.hpp"
#include "armleg/errors.hpp"
#include "armleg/frame.hpp"
#include "armleg/io.hpp"
#include "armleg/partition.hpp"
#include "armleg/statistics.hpp"
#include "armleg/suites.hpp"

namespace {

using armleg::io::Json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

armleg::Slope parse_slope(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw armleg::ValidationError("--pq expects p,q; got '" + text + "'");
  try {
    std::size_t used_p = 0, used_q = 0;
    std::string ps = text.substr(0, comma), qs = text.substr(comma + 1);
    long long p = std::stoll(ps, &used_p);
    long long q = std::stoll(qs, &used_q);
    if (used_p != ps.size() || used_q != qs.size()) throw std::invalid_argument("trailing characters");
    return armleg::Slope(p, q);
  } catch (const armleg::ValidationError&) {
    throw;
  } catch (const std::exception&) {
    throw armleg::ValidationError("--pq expects two integers p,q; got '" + text + "'");
  }
}

armleg::Frame frame_for(const armleg::YoungDiagram& d, armleg::Slope s, std::optional<std::int64_t> K) {
  return armleg::Frame(s, K.value_or(armleg::minimal_K(d, s)));
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

struct Options {
  std::string partition;
  std::string pq;
  std::optional<std::int64_t> K;
  std::string format;
  std::int64_t arm = 0;
  std::int64_t leg = 0;
  bool rect = false;
  std::int64_t n = 0;
  bool dims = false;
  std::string suite;
  std::int64_t max_n = 0;
  std::optional<std::int64_t> slope_bound;
};

int cmd_stats(const Options& o) {
  const auto d = armleg::YoungDiagram::parse(o.partition);
  const auto s = parse_slope(o.pq);
  const auto f = frame_for(d, s, o.K);
  const auto stats = armleg::stats_at_slope(d, s);
  const armleg::BoundaryGraph g(armleg::boundary_path(d, f));
  Json out{{"partition", d.to_string()}, {"p", s.p()}, {"q", s.q()}, {"K", f.K()}, {"area", d.area()}};
  out["stats"] = armleg::io::to_json(stats);
  out["formulas"] = Json{{"ctot", armleg::lw_ctot(g)}, {"midd", armleg::lw_midd(g)}};
  if (stats.h) out["cell_dimension"] = d.area() + *stats.h;
  print(out);
  return kExitOk;
}

int cmd_graph(const Options& o) {
  const auto d = armleg::YoungDiagram::parse(o.partition);
  const auto s = parse_slope(o.pq);
  const armleg::BoundaryGraph g(armleg::boundary_path(d, frame_for(d, s, o.K)));
  if (o.format == "dot") {
    std::cout << armleg::io::to_dot(g);
  } else {
    print(armleg::io::to_json(g));
  }
  return kExitOk;
}

int cmd_census(const Options& o) {
  const auto d = armleg::YoungDiagram::parse(o.partition);
  Json out{{"partition", d.to_string()}};
  if (o.rect) {
    if (o.pq.empty()) throw armleg::ValidationError("--rect requires --pq");
    const auto s = parse_slope(o.pq);
    const auto f = frame_for(d, s, o.K);
    out["p"] = s.p();
    out["q"] = s.q();
    out["K"] = f.K();
    out["P"] = f.P();
    out["Q"] = f.Q();
    out["rect"] = armleg::io::to_json(armleg::rect_hook_census(d, f, o.arm, o.leg));
    out["corollaries"] = armleg::io::to_json(armleg::rect_corollaries(d, f));
  } else {
    out["census"] = armleg::io::to_json(armleg::verify_hook_theorem(d, o.arm, o.leg));
  }
  print(out);
  return kExitOk;
}

int cmd_table(const Options& o) {
  const auto s = parse_slope(o.pq);
  const auto h = o.dims ? armleg::cell_dimension_table(o.n, s) : armleg::histogram(o.n, s);
  if (o.format == "tsv") {
    std::cout << armleg::io::to_tsv(h);
  } else {
    print(Json{{"n", o.n}, {"p", s.p()}, {"q", s.q()}, {"statistic", o.dims ? "dim" : "h"},
               {"histogram", armleg::io::to_json(h)}});
  }
  return kExitOk;
}

int cmd_verify(const Options& o) {
  const auto report = armleg::run_suite(o.suite, o.max_n, o.slope_bound);
  print(armleg::io::to_json(report));
  std::cerr << report.suite << ": " << report.instances << " instances, " << report.failures.size()
            << " failures, " << report.wall_seconds << " s\n";
  return report.passed() ? kExitOk : kExitVerificationFailed;
}

int cmd_enumerate(const Options& o) {
  Json parts = Json::array();
  armleg::PartitionStream stream(o.n);
  while (auto d = stream.next()) parts.push_back(d->to_string());
  print(Json{{"n", o.n}, {"count", parts.size()}, {"partitions", std::move(parts)}});
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Slope statistics, boundary multigraphs and hook bijections on Young diagrams"};
  app.require_subcommand(1);
  Options o;

  auto* stats = app.add_subcommand("stats", "c+, c-, ctot, midd, h+, h-, h at a slope");
  stats->add_option("--partition", o.partition, "row lengths, bottom row first, e.g. 8,8,6,6,2,2")->required();
  stats->add_option("--pq", o.pq, "coprime slope p,q")->required();
  stats->add_option("--K", o.K, "rectangle multiplier (default: minimal)");

  auto* graph = app.add_subcommand("graph", "boundary multigraph M(D)");
  graph->add_option("--partition", o.partition)->required();
  graph->add_option("--pq", o.pq)->required();
  graph->add_option("--K", o.K);
  graph->add_option("--format", o.format)->check(CLI::IsMember({"dot", "json"}))->default_val("json");

  auto* census = app.add_subcommand("census", "inside/complement boxes with a given arm and leg");
  census->add_option("--partition", o.partition)->required();
  census->add_option("--arm", o.arm)->required();
  census->add_option("--leg", o.leg)->required();
  census->add_flag("--rect", o.rect, "restrict the complement to the Kp x Kq rectangle");
  census->add_option("--pq", o.pq);
  census->add_option("--K", o.K);

  auto* table = app.add_subcommand("table", "distribution of h (or cell dimension) over partitions of n");
  table->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
  table->add_option("--pq", o.pq)->required();
  table->add_flag("--dims", o.dims, "tabulate |D| + h instead of h");
  table->add_option("--format", o.format)->check(CLI::IsMember({"json", "tsv"}))->default_val("json");

  auto* verify = app.add_subcommand("verify", "run a verification sweep");
  verify->add_option("--suite", o.suite)->required()->check(CLI::IsMember(armleg::suite_names()));
  verify->add_option("--max-n", o.max_n)->required()->check(CLI::NonNegativeNumber);
  verify->add_option("--slope-bound", o.slope_bound);

  auto* enumerate = app.add_subcommand("enumerate", "list the partitions of n");
  enumerate->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (stats->parsed()) return cmd_stats(o);
    if (graph->parsed()) return cmd_graph(o);
    if (census->parsed()) return cmd_census(o);
    if (table->parsed()) return cmd_table(o);
    if (verify->parsed()) return cmd_verify(o);
    if (enumerate->parsed()) return cmd_enumerate(o);
  } catch (const armleg::CounterexampleError& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
