#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace linknav;
using namespace linknav::testing;

namespace {

double tol(const Linkage& L) { return 1e-9 * L.perimeter_double(); }

std::vector<CyclicPartition> all_edges(const Linkage& L) { return enumerate_cells(L, 1); }

}  // namespace

TEST(Realize, HexagonVertexByLawOfCosines) {
  Linkage L = hexagon_linkage();
  Configuration c = realize_vertex(L, {{1}, {2, 3}, {4}});
  // Apex of the (2.5, 2, 1) triangle at distance 1 from the origin.
  const double ax = (2.5 * 2.5 + 1 - 4) / (2 * 2.5), ay = std::sqrt(1 - ax * ax);
  ASSERT_EQ(c.size(), 4u);
  EXPECT_NEAR(c.points[0].x, 0, 1e-12);
  EXPECT_NEAR(c.points[0].y, 0, 1e-12);
  EXPECT_NEAR(c.points[1].x, 2.5, 1e-12);
  EXPECT_NEAR(c.points[1].y, 0, 1e-12);
  EXPECT_NEAR(c.points[2].x, (2.5 + ax) / 2, 1e-12);
  EXPECT_NEAR(c.points[2].y, ay / 2, 1e-12);
  EXPECT_NEAR(c.points[3].x, ax, 1e-12);
  EXPECT_NEAR(c.points[3].y, ay, 1e-12);
  EXPECT_NEAR(c.points[2].x, 1.575, 1e-9);
  EXPECT_NEAR(c.points[3].y, 0.7599342, 1e-7);
  EXPECT_LT(length_residual(L, c), 1e-12);
  EXPECT_TRUE(in_gauge(c));
}

TEST(Realize, TriangleAndInadmissible) {
  Linkage L = Linkage::from_integers({3, 4, 5});
  Configuration c = realize_vertex(L, {{1}, {2}, {3}});
  EXPECT_LT(oracle_length_residual(L, c), 1e-12);
  EXPECT_GT(cross(c.points[1] - c.points[0], c.points[2] - c.points[1]), 0);
  EXPECT_THROW(realize_vertex(heptagon(), {{1, 2, 5}, {3, 4}, {6, 7}}), InputError);
  EXPECT_THROW(realize_edge_point(heptagon(), heptagon_v1(), 0.5), InputError);
}

TEST(Realize, HeptagonV1ConvexifiesToTriangle) {
  Linkage L = heptagon();
  Convexification cv = convexify(realize_vertex(L, heptagon_v1()));
  ASSERT_EQ(cv.groups.size(), 3u);
  EXPECT_EQ(cv.label, heptagon_v1());
  std::vector<double> sides;
  for (std::size_t i = 0; i < cv.polygon.size(); ++i)
    sides.push_back((cv.polygon[(i + 1) % cv.polygon.size()] - cv.polygon[i]).norm());
  // (11, 18, 10) up to the starting side.
  const std::vector<double> want{11, 18, 10};
  bool found = false;
  for (std::size_t r = 0; r < 3 && !found; ++r) {
    bool ok = true;
    for (std::size_t i = 0; i < 3; ++i) ok = ok && std::abs(sides[(i + r) % 3] - want[i]) < 1e-9;
    found = ok;
  }
  EXPECT_TRUE(found);
}

TEST(Realize, HeptagonEdgeEndpoints) {
  Linkage L = heptagon();
  const EdgeLabel e{{3, 6}, {1, 4}, {7}, {2, 5}};
  auto [a, b] = edge_endpoints(L, e);
  const Vertex v2{{3, 6}, {1, 4}, {2, 5, 7}};
  EXPECT_TRUE((a == heptagon_v1() && b == v2) || (a == v2 && b == heptagon_v1()));
  EXPECT_LT(max_displacement(realize_edge_point(L, e, 0), realize_vertex(L, a)), tol(L));
  EXPECT_LT(max_displacement(realize_edge_point(L, e, 1), realize_vertex(L, b)), tol(L));
}

TEST(Realize, HexagonEdgeMidpoint) {
  Linkage L = hexagon_linkage();
  const EdgeLabel e{{1}, {2}, {3}, {4}};
  Configuration mid = realize_edge_point(L, e, 0.5);
  EXPECT_LT(length_residual(L, mid), tol(L));
  Convexification cv = convexify(mid);
  EXPECT_EQ(cv.groups.size(), 4u);
  EXPECT_EQ(cv.label, e);
  EXPECT_TRUE(strictly_convex(cv));
  EXPECT_LT(max_displacement(realize_edge_point(L, e, 0), realize_vertex(L, {{1}, {2}, {3, 4}})), tol(L));
}

// Round trips and flex properties on every vertex and edge of small linkages.
TEST(GeometryProperty, RoundTripsAndFlexes) {
  std::mt19937_64 rng(1);
  std::vector<Linkage> cases{pentagon(), hexagon_linkage(), heptagon(), two_circles()};
  for (int k = 0; k < 6; ++k) cases.push_back(random_generic(rng, 5 + k % 3));
  for (const Linkage& L : cases) {
    for (const Vertex& v : enumerate_cells(L, 0)) {
      Configuration c = realize_vertex(L, v);
      ASSERT_LT(oracle_length_residual(L, c), tol(L));
      ASSERT_TRUE(in_gauge(c));
      ASSERT_EQ(cell_label(c), v);
    }
    for (const EdgeLabel& e : all_edges(L)) {
      auto [a, b] = edge_endpoints(L, e);
      double prev_diag = flex_diagonal(L, e, 0);
      const double d1 = flex_diagonal(L, e, 1);
      for (int s = 0; s <= 16; ++s) {
        const double t = s / 16.0;
        Configuration c = realize_edge_point(L, e, t);
        ASSERT_LT(oracle_length_residual(L, c), tol(L));
        ASSERT_TRUE(in_gauge(c));
        if (s > 0) {
          const double d = flex_diagonal(L, e, t);
          ASSERT_TRUE(d1 > flex_diagonal(L, e, 0) ? d > prev_diag : d < prev_diag);
          prev_diag = d;
        }
        if (s > 0 && s < 16) {
          Convexification cv = convexify(c);
          ASSERT_EQ(cv.label, e);
          ASSERT_TRUE(strictly_convex(cv));
        }
      }
      ASSERT_LT(max_displacement(realize_edge_point(L, e, 0), realize_vertex(L, a)), tol(L));
      ASSERT_LT(max_displacement(realize_edge_point(L, e, 1), realize_vertex(L, b)), tol(L));
    }
  }
}

TEST(Convexify, ParallelEdgesMerge) {
  // A square traversed with a doubled edge: edges 1 and 2 are parallel.
  Configuration c{{{0, 0}, {1, 0}, {2, 0}, {2, 1}, {0, 1}}};
  Convexification cv = convexify(c);
  EXPECT_EQ(cv.label, (CyclicPartition{{1, 2}, {3}, {4}, {5}}));
  Configuration flat{{{0, 0}, {1, 0}, {2, 0}}};
  EXPECT_THROW(convexify(flat), NumericError);
}

TEST(EntryVertex, DocumentedCases) {
  EXPECT_EQ(entry_vertex(heptagon(), {{1}, {2}, {3}, {4}, {5}, {6}, {7}}), (Vertex{{5, 6, 7}, {1}, {2, 3, 4}}));
  EXPECT_EQ(entry_vertex(pentagon(), {{1}, {2}, {3}, {4}, {5}}), (Vertex{{4, 5}, {1}, {2, 3}}));
  const Vertex v{{5, 6, 7}, {1}, {2, 3, 4}};
  EXPECT_EQ(entry_vertex(heptagon(), v), v);
}

TEST(EntryVertexProperty, InClosureOfEveryCell) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    Linkage L = random_generic(rng, 5 + trial % 3);
    for (int k = 0; k <= L.size() - 3; ++k)
      for (const auto& cell : enumerate_cells(L, k)) {
        Vertex v = entry_vertex(L, cell);
        ASSERT_TRUE(v.is_admissible(L));
        ASSERT_TRUE(refines(cell, v)) << cell.to_string() << " " << v.to_string();
      }
  }
}

TEST(Flex, EdgeFlexSampling) {
  Linkage L = hexagon_linkage();
  MotionSegment s = edge_flex(L, {{1}, {2}, {3}, {4}});
  EXPECT_EQ(s.frames.size(), 65u);
  EXPECT_EQ(s.params.front(), 0.0);
  EXPECT_EQ(s.params.back(), 1.0);
  EXPECT_EQ(s.provenance.kind, Provenance::Kind::Edge);
  EXPECT_EQ(cell_label(s.frames.front()), (Vertex{{1}, {2}, {3, 4}}));
  EXPECT_EQ(cell_label(s.frames.back()), (Vertex{{1}, {2, 3}, {4}}));
  MotionSegment r = reversed(s);
  EXPECT_EQ(r.frames.front(), s.frames.back());
  EXPECT_EQ(r.params.front(), 0.0);
}

TEST(FlexProperty, PentagonEdgeFlexContinuity) {
  Linkage L = pentagon();
  const double delta = 0.05 * L.perimeter_double();
  for (const auto& e : all_edges(L)) {
    MotionSegment s = edge_flex(L, e);
    for (std::size_t i = 0; i + 1 < s.frames.size(); ++i) ASSERT_LE(max_displacement(s.frames[i], s.frames[i + 1]), delta);
  }
}

TEST(Flex, IntraCellTrivialAndEdgeInterior) {
  Linkage L = heptagon();
  MotionSegment s = intra_cell_flex(L, realize_vertex(L, heptagon_v1()), heptagon_v1());
  EXPECT_EQ(s.frames.size(), 1u);

  const EdgeLabel e{{3, 6}, {1, 4}, {7}, {2, 5}};
  auto [a, b] = edge_endpoints(L, e);
  for (const Vertex& end : {a, b}) {
    MotionSegment m = intra_cell_flex(L, realize_edge_point(L, e, 0.5), end);
    for (std::size_t i = 0; i < m.frames.size(); ++i) {
      const auto lab = cell_label(m.frames[i]);
      ASSERT_TRUE(lab == e || lab == end) << lab.to_string();
    }
    EXPECT_EQ(cell_label(m.frames.back()), end);
    EXPECT_LT(max_displacement(m.frames.back(), realize_vertex(L, end)), tol(L));
  }
}

TEST(FlexProperty, TopCellToEntryVertex) {
  Linkage L = heptagon();
  const CyclicPartition top{{1}, {2}, {3}, {4}, {5}, {6}, {7}};
  std::mt19937_64 rng(3);
  Configuration base = cyclic_polygon(L);
  ASSERT_EQ(cell_label(base), top);
  const Vertex target = entry_vertex(L, top);
  EXPECT_EQ(target, (Vertex{{5, 6, 7}, {1}, {2, 3, 4}}));
  for (int trial = 0; trial < 8; ++trial) {
    Configuration c = trial == 0 ? base : perturb(L, base, 0.05, rng);
    ASSERT_EQ(cell_label(c), top);
    MotionSegment m = intra_cell_flex(L, c, target);
    ASSERT_GE(m.frames.size(), 2u);
    for (std::size_t i = 0; i < m.frames.size(); ++i) {
      ASSERT_LT(oracle_length_residual(L, m.frames[i]), tol(L));
      ASSERT_TRUE(in_gauge(m.frames[i]));
      // Slopes may merge but never cross: every label is a coarsening of the cell.
      ASSERT_TRUE(refines(top, cell_label(m.frames[i])));
      if (i + 1 < m.frames.size())
        ASSERT_LE(max_displacement(m.frames[i], m.frames[i + 1]), 0.05 * L.perimeter_double());
    }
    EXPECT_EQ(cell_label(m.frames.back()), target);
  }
}

TEST(Flex, SnapConfiguration) {
  Linkage L = heptagon();
  Configuration c = realize_vertex(L, heptagon_v1());
  Configuration noisy = c;
  for (auto& p : noisy.points) p = 1.0000000001 * p;
  Configuration snapped = snap_configuration(L, noisy);
  EXPECT_LT(length_residual(L, snapped), tol(L));
  Configuration bad = c;
  for (auto& p : bad.points) p = 1.001 * p;
  try {
    snap_configuration(L, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LengthMismatch);
  }
  Configuration wrong_size{{{0, 0}, {1, 0}, {0, 1}}};
  EXPECT_THROW(snap_configuration(L, wrong_size), InputError);
}
