#pragma once

#include <cstdint>

#include "armleg/partition.hpp"
#include "armleg/statistics.hpp"

namespace armleg {

/// The P x Q rectangle R_{P,Q} with P = Kp, Q = Kq, and its sub-diagonal
/// region R+ = {(x,y) : qx + py <= Kpq - p - q}.
class Frame {
 public:
  /// Throws ValidationError for K < 1.
  Frame(Slope slope, std::int64_t K);

  Slope slope() const { return slope_; }
  std::int64_t p() const { return slope_.p(); }
  std::int64_t q() const { return slope_.q(); }
  std::int64_t K() const { return K_; }
  std::int64_t P() const { return P_; }
  std::int64_t Q() const { return Q_; }
  /// Kpq - p - q
  std::int64_t diagonal_bound() const { return bound_; }

  /// qx + py
  std::int64_t weighted_content(Box c) const;

  bool in_rectangle(Box c) const { return c.x >= 0 && c.y >= 0 && c.x < P_ && c.y < Q_; }
  bool below_diagonal(Box c) const { return in_rectangle(c) && weighted_content(c) <= bound_; }

  /// The frame with the axes exchanged: slope (q, p), same K.
  Frame transposed() const { return Frame(slope_.reciprocal(), K_); }

  /// Integer label of lattice corner (X, Y): q(P - X) - pY.
  std::int64_t corner_label(std::int64_t X, std::int64_t Y) const;

  friend bool operator==(const Frame&, const Frame&) = default;

 private:
  Slope slope_;
  std::int64_t K_;
  std::int64_t P_;
  std::int64_t Q_;
  std::int64_t bound_;
};

/// max over d of qx + py; nullopt for the empty diagram.
std::optional<std::int64_t> max_weighted_content(const YoungDiagram& d, Slope s);

bool fits(const YoungDiagram& d, const Frame& f);

/// Throws FitError naming the first box (bottom-up) above the diagonal.
void require_fit(const YoungDiagram& d, const Frame& f);

/// Smallest K >= 1 with d under the diagonal of R_{Kp,Kq}.
std::int64_t minimal_K(const YoungDiagram& d, Slope s);

/// |R+| by direct count over the rectangle.
std::int64_t count_below_diagonal(const Frame& f);

/// |R+| = (PQ - P - Q + K) / 2.
std::int64_t below_diagonal_closed_form(const Frame& f);

}  // namespace armleg
