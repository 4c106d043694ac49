#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "armleg/frame.hpp"
#include "armleg/laurent.hpp"
#include "armleg/partition.hpp"

namespace armleg {

enum class Direction : char { West = 'W', North = 'N' };

struct PathStep {
  Direction dir;
  std::int64_t from;
  std::int64_t to;

  friend bool operator==(const PathStep&, const PathStep&) = default;
};

/// The lattice path from (P, 0) to (0, Q) along the boundary of D, with
/// corner labels q(P - X) - pY. A west step adds q, a north step subtracts p,
/// and the path starts and ends at label 0.
struct BoundaryPath {
  Frame frame;
  std::vector<PathStep> steps;

  /// Vertex labels in path order, one more than the number of steps.
  std::vector<std::int64_t> labels() const;
};

/// Throws FitError when d does not fit under the diagonal of the frame.
BoundaryPath boundary_path(const YoungDiagram& d, const Frame& f);

/// The multigraph M(D): path vertices identified by label, with W/N in/out
/// multiplicities. Keeps the path order as its Eulerian tour.
class BoundaryGraph {
 public:
  using Multiplicity = std::map<std::int64_t, std::int64_t>;

  explicit BoundaryGraph(const BoundaryPath& path);

  const Frame& frame() const { return frame_; }
  const std::vector<std::int64_t>& vertices() const { return vertices_; }
  const Multiplicity& w_in() const { return w_in_; }
  const Multiplicity& n_in() const { return n_in_; }
  const Multiplicity& w_out() const { return w_out_; }
  const Multiplicity& n_out() const { return n_out_; }
  const std::vector<PathStep>& tour() const { return tour_; }

  std::int64_t w_in_at(std::int64_t v) const { return lookup(w_in_, v); }
  std::int64_t n_in_at(std::int64_t v) const { return lookup(n_in_, v); }
  std::int64_t w_out_at(std::int64_t v) const { return lookup(w_out_, v); }
  std::int64_t n_out_at(std::int64_t v) const { return lookup(n_out_, v); }

  /// Tour position of the unique north edge in row y of R_{P,Q}.
  std::size_t north_edge_position(std::int64_t row) const;
  /// Tour position of the unique west edge in column x of R_{P,Q}.
  std::size_t west_edge_position(std::int64_t column) const;

 private:
  static std::int64_t lookup(const Multiplicity& m, std::int64_t v) {
    auto it = m.find(v);
    return it == m.end() ? 0 : it->second;
  }

  Frame frame_;
  std::vector<std::int64_t> vertices_;
  Multiplicity w_in_, n_in_, w_out_, n_out_;
  std::vector<PathStep> tour_;
  std::vector<std::size_t> north_pos_;  // indexed by row
  std::vector<std::size_t> west_pos_;   // indexed by column
};

inline BoundaryGraph boundary_graph(const BoundaryPath& path) { return BoundaryGraph(path); }

/// Same vertex set and the same four multiplicity maps; the tour is ignored.
bool same_multigraph(const BoundaryGraph& a, const BoundaryGraph& b);

/// In-degree equals out-degree at every vertex.
bool is_balanced(const BoundaryGraph& g);

/// sum_v |W_in(v)| |N_in(v)| - K + |N_in(0)|
std::int64_t lw_ctot(const BoundaryGraph& g);

/// |R+| - sum_{v <= w} |W_in(v)| |N_in(w)|
std::int64_t lw_midd(const BoundaryGraph& g);

/// Boxes of R \ D on the diagonal line qx + py = Kpq - p - q.
std::int64_t count_on_diagonal_outside(const YoungDiagram& d, const Frame& f);

struct EdgeVertices {
  std::int64_t v;  ///< entered by the west edge of column c.x
  std::int64_t w;  ///< entered by the north edge of row c.y

  friend bool operator==(const EdgeVertices&, const EdgeVertices&) = default;
};

/// Edge labels of the box's column and row. Checks
/// v = w + (a+1)q - lp for c in D and w = v + aq - (l+1)p for c in R \ D
/// (CounterexampleError). Throws OutOfRectangle for c outside R_{P,Q}.
EdgeVertices box_edge_vertices(const YoungDiagram& d, const Frame& f, Box c);

/// Whether the north edge of row c.y precedes the west edge of column c.x
/// in the tour. Checked against membership of c in d (CounterexampleError).
bool tour_order_inside(const BoundaryGraph& g, const YoungDiagram& d, Box c);

/// sum over boxes of t^{qx + py}
LaurentPoly content_poly(const YoungDiagram& d, Slope s);

/// sum_v |N_in(v)| t^v
LaurentPoly pn_poly(const BoundaryGraph& g);
/// sum_v |W_out(v)| t^v
LaurentPoly pw_poly(const BoundaryGraph& g);

struct SeriesIdentity {
  LaurentPoly lhs;
  LaurentPoly rhs;
  bool holds() const { return lhs == rhs; }
};

/// (1-t^p)(1-t^q) C(t) = (1-t^{Kpq}) - t^{Kpq-p} (1-t^p) P_N(t^{-1})
SeriesIdentity north_series_identity(const YoungDiagram& d, const Frame& f);
/// (1-t^p)(1-t^q) C(t) = (1-t^{Kpq}) - t^{Kpq-q} (1-t^q) P_W(t^{-1})
SeriesIdentity west_series_identity(const YoungDiagram& d, const Frame& f);

/// Both identities hold. Throws FitError.
bool verify_series_identity(const YoungDiagram& d, const Frame& f);

/// Recovers P_N from a content polynomial by exact division by (1 - t^p).
/// Throws ValidationError when the result cannot be a north-edge polynomial
/// (a non-positive coefficient, or mass other than Q).
LaurentPoly pn_from_content(const LaurentPoly& content, const Frame& f);
/// Same for P_W, dividing by (1 - t^q); the mass must be P.
LaurentPoly pw_from_content(const LaurentPoly& content, const Frame& f);

/// Equal (p,q)-weighted content. Checked against equality of the boundary
/// multigraphs at K = max of both minimal K values (CounterexampleError).
bool same_component(const YoungDiagram& a, const YoungDiagram& b, Slope s);

}  // namespace armleg
