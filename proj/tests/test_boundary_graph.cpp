#include <doctest.h>

#include <map>
#include <numeric>
#include <set>
#include <string>

#include "armleg/boundary_graph.hpp"
#include "armleg/errors.hpp"
#include "armleg/statistics.hpp"
#include "oracles.hpp"

using namespace armleg;

namespace {

const YoungDiagram kPairs = YoungDiagram::from_row_lengths({8, 8, 6, 6, 2, 2});

BoundaryGraph graph_of(const YoungDiagram& d, std::int64_t p, std::int64_t q, std::int64_t K) {
  return BoundaryGraph(boundary_path(d, Frame(Slope(p, q), K)));
}

std::string dirs(const BoundaryPath& path) {
  std::string out;
  for (const PathStep& s : path.steps) out.push_back(static_cast<char>(s.dir));
  return out;
}

LaurentPoly poly(std::initializer_list<std::pair<std::int64_t, std::int64_t>> terms) {
  LaurentPoly out;
  for (auto [e, c] : terms) out.add_term(e, c);
  return out;
}

using M = BoundaryGraph::Multiplicity;

}  // namespace

TEST_CASE("boundary path labels") {
  const BoundaryPath pairs = boundary_path(kPairs, Frame(Slope(3, 2), 4));
  CHECK(dirs(pairs) == "WWWWNNWWNNWWWWNNWWNN");
  CHECK(pairs.labels() ==
        std::vector<std::int64_t>{0, 2, 4, 6, 8, 5, 2, 4, 6, 3, 0, 2, 4, 6, 8, 5, 2, 4, 6, 3, 0});

  // P = 2, Q = 1: one north step only.
  const BoundaryPath empty = boundary_path(YoungDiagram(), Frame(Slope(2, 1), 1));
  CHECK(dirs(empty) == "WWN");
  CHECK(empty.labels() == std::vector<std::int64_t>{0, 1, 2, 0});

  const BoundaryPath one = boundary_path(YoungDiagram::from_row_lengths({1}), Frame(Slope(3, 2), 1));
  CHECK(dirs(one) == "WWNWN");
  CHECK(one.labels() == std::vector<std::int64_t>{0, 2, 4, 1, 3, 0});

  CHECK_THROWS_AS(boundary_path(YoungDiagram::from_row_lengths({2, 1}), Frame(Slope(3, 2), 1)), FitError);
}

TEST_CASE("multigraph of the 8,8,6,6,2,2 example") {
  const BoundaryGraph g = graph_of(kPairs, 3, 2, 4);
  CHECK(g.vertices() == std::vector<std::int64_t>{0, 2, 3, 4, 5, 6, 8});
  CHECK(g.w_in() == M{{2, 2}, {4, 4}, {6, 4}, {8, 2}});
  CHECK(g.n_in() == M{{0, 2}, {2, 2}, {3, 2}, {5, 2}});
  CHECK(is_balanced(g));
  CHECK(g.tour().size() == 20);

  const BoundaryGraph e = graph_of(YoungDiagram(), 2, 1, 1);
  CHECK(e.vertices() == std::vector<std::int64_t>{0, 1, 2});
  CHECK(e.w_in() == M{{1, 1}, {2, 1}});
  CHECK(e.n_in() == M{{0, 1}});

  const BoundaryGraph one = graph_of(YoungDiagram::from_row_lengths({1}), 3, 2, 1);
  CHECK(one.w_in() == M{{2, 1}, {3, 1}, {4, 1}});
  CHECK(one.n_in() == M{{0, 1}, {1, 1}});
}

TEST_CASE("minimal K") {
  CHECK(minimal_K(YoungDiagram(), Slope(3, 2)) == 1);
  CHECK(minimal_K(YoungDiagram::from_row_lengths({2, 1}), Slope(3, 2)) == 2);
  CHECK(minimal_K(kPairs, Slope(3, 2)) == 4);
}

TEST_CASE("formula values") {
  CHECK(lw_ctot(graph_of(kPairs, 3, 2, 4)) == 2);
  CHECK(lw_midd(graph_of(kPairs, 3, 2, 4)) == 20);
  CHECK(lw_ctot(graph_of(YoungDiagram(), 2, 1, 1)) == 0);
  CHECK(lw_midd(graph_of(YoungDiagram(), 2, 1, 1)) == 0);
  CHECK(lw_ctot(graph_of(YoungDiagram::from_row_lengths({1}), 3, 2, 1)) == 0);
  CHECK(lw_midd(graph_of(YoungDiagram::from_row_lengths({1}), 3, 2, 1)) == 1);

  CHECK(count_below_diagonal(Frame(Slope(3, 2), 4)) == 40);
  CHECK(count_below_diagonal(Frame(Slope(3, 2), 1)) == 1);
  CHECK(count_below_diagonal(Frame(Slope(1, 1), 2)) == 1);
  for (std::int64_t p = 1; p <= 7; ++p) {
    for (std::int64_t q = 1; q <= 7; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (std::int64_t K = 1; K <= 4; ++K) {
        const Frame f(Slope(p, q), K);
        std::int64_t brute = 0;
        for (std::int64_t y = 0; y < f.Q(); ++y)
          for (std::int64_t x = 0; x < f.P(); ++x) brute += q * x + p * y <= K * p * q - p - q;
        CHECK(count_below_diagonal(f) == brute);
        CHECK(below_diagonal_closed_form(f) == brute);
      }
    }
  }
}

TEST_CASE("edge vertices of boxes") {
  const Frame f(Slope(3, 2), 4);
  CHECK(box_edge_vertices(kPairs, f, {2, 1}) == EdgeVertices{8, 2});
  CHECK(box_edge_vertices(kPairs, f, {7, 5}) == EdgeVertices{4, 2});
  CHECK(box_edge_vertices(YoungDiagram(), Frame(Slope(2, 1), 1), {0, 0}) == EdgeVertices{2, 0});
  CHECK_THROWS_AS(box_edge_vertices(kPairs, f, {12, 0}), OutOfRectangle);
  CHECK_THROWS_AS(box_edge_vertices(kPairs, f, {0, -1}), OutOfRectangle);

  const BoundaryGraph g = graph_of(kPairs, 3, 2, 4);
  CHECK(tour_order_inside(g, kPairs, {2, 1}));
  CHECK_FALSE(tour_order_inside(g, kPairs, {7, 5}));
  CHECK_FALSE(tour_order_inside(graph_of(YoungDiagram(), 2, 1, 1), YoungDiagram(), {0, 0}));
  CHECK_THROWS_AS(tour_order_inside(g, kPairs, {0, 8}), OutOfRectangle);
}

TEST_CASE("content and edge polynomials") {
  CHECK(content_poly(YoungDiagram(), Slope(3, 2)).is_zero());
  CHECK(content_poly(YoungDiagram::from_row_lengths({1}), Slope(3, 2)) == LaurentPoly::monomial(0));
  CHECK(content_poly(YoungDiagram::from_row_lengths({2, 1}), Slope(3, 2)) == poly({{0, 1}, {2, 1}, {3, 1}}));
  CHECK(content_poly(YoungDiagram::from_row_lengths({2, 2}), Slope(3, 2)) ==
        poly({{0, 1}, {2, 1}, {3, 1}, {5, 1}}));

  const BoundaryGraph g = graph_of(kPairs, 3, 2, 4);
  CHECK(pn_poly(g) == poly({{0, 2}, {2, 2}, {3, 2}, {5, 2}}));
  CHECK(pw_poly(g) == poly({{0, 2}, {2, 4}, {4, 4}, {6, 2}}));
  CHECK(pn_poly(graph_of(YoungDiagram(), 2, 1, 1)) == LaurentPoly::monomial(0));
}

TEST_CASE("series identities on examples") {
  CHECK(verify_series_identity(YoungDiagram(), Frame(Slope(2, 1), 1)));
  CHECK(verify_series_identity(YoungDiagram::from_row_lengths({2, 1}), Frame(Slope(3, 2), 2)));
  CHECK(verify_series_identity(kPairs, Frame(Slope(3, 2), 4)));

  // Single box, (3,2), K = 1: both sides are 1 - t^2 - t^3 + t^5.
  const SeriesIdentity one = north_series_identity(YoungDiagram::from_row_lengths({1}), Frame(Slope(3, 2), 1));
  CHECK(one.lhs == poly({{0, 1}, {2, -1}, {3, -1}, {5, 1}}));
  CHECK(one.holds());

  CHECK_THROWS_AS(verify_series_identity(kPairs, Frame(Slope(3, 2), 3)), FitError);
}

TEST_CASE("content inverts to the north and west polynomials") {
  const Frame f(Slope(3, 2), 4);
  CHECK(pn_from_content(LaurentPoly(), Frame(Slope(2, 1), 1)) == LaurentPoly::monomial(0));
  CHECK(pn_from_content(content_poly(kPairs, f.slope()), f) == poly({{0, 2}, {2, 2}, {3, 2}, {5, 2}}));
  CHECK(pw_from_content(content_poly(kPairs, f.slope()), f) == poly({{0, 2}, {2, 4}, {4, 4}, {6, 2}}));

  const YoungDiagram d21 = YoungDiagram::from_row_lengths({2, 1});
  const Frame f2(Slope(3, 2), 2);
  CHECK(pn_from_content(content_poly(d21, f2.slope()), f2) == pn_poly(BoundaryGraph(boundary_path(d21, f2))));

  // Not contents: t^1 cannot occur at (3,2); 2 is twice the corner box.
  CHECK_THROWS_AS(pn_from_content(LaurentPoly::monomial(1), f2), ValidationError);
  CHECK_THROWS_AS(pn_from_content(LaurentPoly::monomial(0, 2), f2), ValidationError);
}

TEST_CASE("same component examples") {
  const YoungDiagram d21 = YoungDiagram::from_row_lengths({2, 1});
  CHECK(same_component(d21, d21, Slope(3, 2)));
  CHECK_FALSE(same_component(YoungDiagram::from_row_lengths({3}), d21, Slope(3, 2)));
  CHECK_FALSE(same_component(YoungDiagram::from_row_lengths({3}), YoungDiagram::from_row_lengths({1, 1, 1}),
                             Slope(3, 2)));
  // (1,1) contents only see the multiset of x + y.
  CHECK(same_component(YoungDiagram::from_row_lengths({2}), YoungDiagram::from_row_lengths({1, 1}), Slope(1, 1)));
}

TEST_CASE("path labels match running-sum walk") {
  for (std::int64_t n = 0; n <= 8; ++n) {
    for (const YoungDiagram& d : enumerate_partitions(n)) {
      for (auto [p, q] : std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 1}, {2, 1}, {1, 2}, {3, 2}, {2, 5}}) {
        const Slope s(p, q);
        const std::int64_t K0 = minimal_K(d, s);
        for (std::int64_t K = K0; K <= K0 + 1; ++K) {
          const BoundaryPath path = boundary_path(d, Frame(s, K));
          const oracle::Walk walk = oracle::boundary_walk(d, p, q, K);
          CHECK(path.labels() == walk.labels);
          CHECK(dirs(path) == std::string(walk.dirs.begin(), walk.dirs.end()));
          const BoundaryGraph g(path);
          CHECK(is_balanced(g));
          CHECK(count_on_diagonal_outside(d, Frame(s, K)) == K - g.n_in_at(0));
        }
      }
    }
  }
}

TEST_CASE("formulas agree with the definitional oracle") {
  for (std::int64_t n = 0; n <= 7; ++n) {
    for (const YoungDiagram& d : enumerate_partitions(n)) {
      for (std::int64_t p = 1; p <= 4; ++p) {
        for (std::int64_t q = 1; q <= 4; ++q) {
          if (std::gcd(p, q) != 1) continue;
          const Slope s(p, q);
          const oracle::Stats want = oracle::stats(d, p, q);
          const std::int64_t K0 = minimal_K(d, s);
          for (std::int64_t K = K0; K <= K0 + 2; ++K) {
            const BoundaryGraph g = graph_of(d, p, q, K);
            CHECK(lw_ctot(g) == want.c_plus + want.c_minus);
            CHECK(lw_midd(g) == want.midd);
            const Frame f(s, K);
            for (std::int64_t y = 0; y < f.Q(); ++y) {
              for (std::int64_t x = 0; x < f.P(); ++x) {
                CHECK(tour_order_inside(g, d, {x, y}) == oracle::in_diagram(d, x, y));
                const EdgeVertices ev = box_edge_vertices(d, f, {x, y});
                // v == w exactly on the c+ line inside, the c- line outside.
                if (oracle::in_diagram(d, x, y)) {
                  auto [a, l] = oracle::arm_leg_inside(d, {x, y});
                  CHECK((ev.v == ev.w) == (l * p == q * (a + 1)));
                } else {
                  auto [a, l] = oracle::arm_leg_complement(d, {x, y});
                  CHECK((ev.v == ev.w) == ((l + 1) * p == q * a));
                }
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("series identities against modular evaluation") {
  // Rational form before clearing denominators, evaluated mod a prime:
  // C(t) (1-t^p)(1-t^q) = 1 - t^{Kpq} - t^{Kpq-p} (1-t^p) sum_N t^{-v}.
  using oracle::kPrime;
  using oracle::mod_pow;
  for (std::int64_t n = 0; n <= 8; ++n) {
    for (const YoungDiagram& d : enumerate_partitions(n)) {
      for (auto [p, q] : std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 1}, {3, 2}, {5, 3}}) {
        const Slope s(p, q);
        const Frame f(s, minimal_K(d, s));
        CHECK(verify_series_identity(d, f));
        const BoundaryGraph g(boundary_path(d, f));
        CHECK(pn_from_content(content_poly(d, s), f) == pn_poly(g));
        CHECK(pw_from_content(content_poly(d, s), f) == pw_poly(g));

        const oracle::Walk walk = oracle::boundary_walk(d, p, q, f.K());
        for (std::uint64_t t : {7ULL, 1234567ULL}) {
          std::uint64_t c = 0;
          for (Box b : d.boxes()) c = (c + mod_pow(t, q * b.x + p * b.y)) % kPrime;
          std::uint64_t pn = 0;
          for (std::size_t i = 0; i < walk.dirs.size(); ++i)
            if (walk.dirs[i] == 'N') pn = (pn + mod_pow(t, -walk.labels[i + 1])) % kPrime;
          const std::int64_t kpq = f.P() * q;
          const std::uint64_t one_p = (1 + kPrime - mod_pow(t, p)) % kPrime;
          const std::uint64_t one_q = (1 + kPrime - mod_pow(t, q)) % kPrime;
          const std::uint64_t lhs = c * one_p % kPrime * one_q % kPrime;
          const std::uint64_t rhs =
              (1 + kPrime - mod_pow(t, kpq) + kPrime - mod_pow(t, kpq - p) * one_p % kPrime * pn % kPrime) %
              kPrime;
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("same component agrees with content on small pairs") {
  for (std::int64_t n = 0; n <= 6; ++n) {
    const auto parts = enumerate_partitions(n);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::size_t j = i; j < parts.size(); ++j) {
        std::multiset<std::int64_t> ci, cj;
        for (Box b : parts[i].boxes()) ci.insert(2 * b.x + 3 * b.y);
        for (Box b : parts[j].boxes()) cj.insert(2 * b.x + 3 * b.y);
        CHECK(same_component(parts[i], parts[j], Slope(3, 2)) == (ci == cj));
      }
    }
  }
}
