#pragma once

#include <string>

#include <json.hpp>

#include "armleg/arrows.hpp"
#include "armleg/boundary_graph.hpp"
#include "armleg/laurent.hpp"
#include "armleg/statistics.hpp"
#include "armleg/suites.hpp"

// JSON and DOT renderings. All objects are insertion-ordered so output is
// byte-for-byte reproducible.
namespace armleg::io {

using Json = nlohmann::ordered_json;

/// [x, y]
Json to_json(Box c);
/// {c_plus, c_minus, ctot, midd, h_plus, h_minus[, h]}
Json to_json(const StatBundle& s);
/// {vertices, w_in, n_in, tour}; multiplicity keys are decimal labels.
Json to_json(const BoundaryGraph& g);
/// {"<exponent>": coefficient, ...} in increasing exponent order.
Json to_json(const LaurentPoly& poly);
Json to_json(const MatchingReport& m);
Json to_json(const RectReport& r);
Json to_json(const CorollaryReport& r);
Json to_json(const Histogram& h);
/// {suite, passed, instances, failures: [{message, instance}]}. Wall time is
/// deliberately left out.
Json to_json(const SuiteReport& r);

/// One node per vertex in label order, one edge per tour step; W edges
/// solid, N edges dashed.
std::string to_dot(const BoundaryGraph& g);

/// "value<TAB>count" header followed by one row per key.
std::string to_tsv(const Histogram& h);

}  // namespace armleg::io
