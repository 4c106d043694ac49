#include "armleg/io.hpp"

#include <sstream>

namespace armleg::io {

namespace {

Json multiplicity_json(const BoundaryGraph::Multiplicity& m) {
  Json out = Json::object();
  for (const auto& [v, n] : m) out[std::to_string(v)] = n;
  return out;
}

Json boxes_json(const std::vector<Box>& boxes) {
  Json out = Json::array();
  for (Box c : boxes) out.push_back(to_json(c));
  return out;
}

const char* status_name(Discriminator d) {
  switch (d) {
    case Discriminator::InDiagram:
      return "in_diagram";
    case Discriminator::InComplement:
      return "in_complement";
    case Discriminator::OutsideRectangle:
      return "outside_rectangle";
  }
  return "?";
}

}  // namespace

Json to_json(Box c) { return Json::array({c.x, c.y}); }

Json to_json(const StatBundle& s) {
  Json out{{"c_plus", s.c_plus}, {"c_minus", s.c_minus}, {"ctot", s.ctot},
           {"midd", s.midd},     {"h_plus", s.h_plus},   {"h_minus", s.h_minus}};
  if (s.h) out["h"] = *s.h;
  return out;
}

Json to_json(const BoundaryGraph& g) {
  Json tour = Json::array();
  for (const PathStep& s : g.tour()) {
    tour.push_back(Json{{"dir", std::string(1, static_cast<char>(s.dir))}, {"from", s.from}, {"to", s.to}});
  }
  return Json{{"vertices", g.vertices()},
              {"w_in", multiplicity_json(g.w_in())},
              {"n_in", multiplicity_json(g.n_in())},
              {"tour", std::move(tour)}};
}

Json to_json(const LaurentPoly& poly) {
  Json out = Json::object();
  for (const auto& [e, c] : poly.terms()) out[std::to_string(e)] = c;
  return out;
}

Json to_json(const MatchingReport& m) {
  Json pairs = Json::array();
  for (const auto& [src, dst] : m.pairs) {
    pairs.push_back(Json{{"from", src ? to_json(*src) : Json("escaping")}, {"to", to_json(dst)}});
  }
  return Json{{"arm", m.hook.arm},
              {"leg", m.hook.leg},
              {"inside_count", m.census.inside},
              {"complement_count", m.census.complement},
              {"matching", std::move(pairs)}};
}

Json to_json(const RectReport& r) {
  return Json{{"arm", r.hook.arm},
              {"leg", r.hook.leg},
              {"orientation", r.orientation == ArrowOrientation::Northwest ? "northwest" : "southeast"},
              {"inside_count", r.inside_count},
              {"complement_count", r.complement_count},
              {"case", r.discriminator_status == Discriminator::InComplement ? 2 : 1},
              {"discriminator", to_json(r.discriminator)},
              {"discriminator_status", status_name(r.discriminator_status)},
              {"inside_witnesses", boxes_json(r.inside_witnesses)},
              {"complement_witnesses", boxes_json(r.complement_witnesses)},
              {"escaping_box", to_json(r.escaping_box)}};
}

Json to_json(const CorollaryReport& r) {
  return Json{{"steep_inside", r.steep_inside},
              {"steep_complement", r.steep_complement},
              {"flat_inside", r.flat_inside},
              {"flat_complement", r.flat_complement},
              {"below_diagonal", r.below_diagonal},
              {"below_diagonal_outside", r.below_diagonal_outside}};
}

Json to_json(const Histogram& h) {
  Json out = Json::object();
  for (const auto& [k, v] : h) out[std::to_string(k)] = v;
  return out;
}

Json to_json(const SuiteReport& r) {
  Json failures = Json::array();
  for (const Counterexample& c : r.failures) {
    failures.push_back(Json{{"message", c.message}, {"instance", c.instance}});
  }
  return Json{{"suite", r.suite},
              {"passed", r.passed()},
              {"instances", r.instances},
              {"failures", std::move(failures)}};
}

std::string to_dot(const BoundaryGraph& g) {
  std::ostringstream out;
  out << "digraph M {\n";
  for (std::int64_t v : g.vertices()) out << "  \"" << v << "\" [label=\"" << v << "\"];\n";
  for (const PathStep& s : g.tour()) {
    out << "  \"" << s.from << "\" -> \"" << s.to << "\" [label=\"" << static_cast<char>(s.dir)
        << "\", style=" << (s.dir == Direction::West ? "solid" : "dashed") << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_tsv(const Histogram& h) {
  std::ostringstream out;
  out << "value\tcount\n";
  for (const auto& [k, v] : h) out << k << '\t' << v << '\n';
  return out.str();
}

}  // namespace armleg::io
