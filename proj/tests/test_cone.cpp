#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "toricmld/cone.hpp"
#include "toricmld/error.hpp"

using namespace toricmld;

namespace {

Cone cone(std::size_t rank, std::vector<LatticeVector> gens) { return Cone::make(rank, gens); }

Cone square() { return cone(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}}); }

LatticeVector random_vector(std::mt19937_64& rng, std::size_t n, long bound) {
  LatticeVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<long>(rng() % (2 * bound + 1)) - bound;
  return v;
}

// Random simplicial full-dimensional cone with small index.
std::optional<Cone> random_simplicial(std::mt19937_64& rng, std::size_t n) {
  std::vector<LatticeVector> gens;
  for (std::size_t i = 0; i < n; ++i) {
    LatticeVector v = random_vector(rng, n, 2);
    if (v.is_zero()) return std::nullopt;
    gens.push_back(primitive(v));
  }
  if (rank(gens) != n) return std::nullopt;
  return cone(n, gens);
}

long l1_bound(const Cone& c) {
  long b = 0;
  for (const auto& r : c.rays()) {
    long s = 0;
    for (std::size_t i = 0; i < r.size(); ++i) s += Integer(abs(r[i])).get_si();
    b += s;
  }
  return b;
}

}  // namespace

TEST(MakeCone, Quadrant) {
  Cone c = cone(2, {{2, 0}, {0, 3}});
  EXPECT_EQ(c.rays(), (std::vector<LatticeVector>{{0, 1}, {1, 0}}));
  EXPECT_EQ(c.dim(), 2u);
  EXPECT_EQ(c.facet_normals(), (std::vector<LatticeVector>{{0, 1}, {1, 0}}));
}

TEST(MakeCone, LineIsNotPointed) {
  try {
    cone(2, {{1, 0}, {-1, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPointed);
  }
}

TEST(MakeCone, ConeOverSquare) {
  Cone c = square();
  EXPECT_EQ(c.rays().size(), 4u);
  EXPECT_EQ(c.facet_normals().size(), 4u);
  std::vector<LatticeVector> gens{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}};
  EXPECT_EQ(c.rays(), oracle::extreme_scan(gens, 2));
  auto normals = c.facet_normals();
  std::sort(normals.begin(), normals.end());
  EXPECT_EQ(normals, oracle::facet_scan(gens, 2));
}

TEST(MakeCone, DropsRedundantGenerators) {
  Cone c = cone(2, {{1, 0}, {0, 1}, {1, 1}, {3, 0}});
  EXPECT_EQ(c.rays(), (std::vector<LatticeVector>{{0, 1}, {1, 0}}));
}

TEST(MakeCone, LowerDimensionalCone) {
  Cone c = cone(3, {{1, 0, 0}, {0, 1, 0}});
  EXPECT_EQ(c.dim(), 2u);
  EXPECT_EQ(c.span_equations().size(), 1u);
  EXPECT_TRUE(c.relint_contains(LatticeVector{1, 1, 0}));
  EXPECT_FALSE(c.relint_contains(LatticeVector{1, 1, 1}));
  EXPECT_FALSE(c.contains(LatticeVector{1, 1, 1}));
}

TEST(MakeCone, RandomConesMatchBruteForceFacetsAndRays) {
  std::mt19937_64 rng(23);
  int checked = 0;
  while (checked < 60) {
    std::size_t k = 3 + rng() % 3;
    std::vector<LatticeVector> gens;
    for (std::size_t i = 0; i < k; ++i) {
      LatticeVector v = random_vector(rng, 3, 2);
      if (!v.is_zero()) gens.push_back(primitive(v));
    }
    if (gens.empty() || rank(gens) != 3) continue;
    Cone c;
    try {
      c = cone(3, gens);
    } catch (const Error&) {
      // A full-dimensional cone is pointed iff its facet normals span M.
      EXPECT_LT(rank(oracle::facet_scan(gens, 8)), 3u);
      continue;
    }
    // Facet normals are primitive cross products of generators, so |coord| <= 8.
    auto normals = c.facet_normals();
    std::sort(normals.begin(), normals.end());
    EXPECT_EQ(normals, oracle::facet_scan(gens, 8));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    EXPECT_EQ(c.rays(), oracle::extreme_scan(gens, 8));
    ++checked;
  }
}

TEST(Faces, Counts) {
  EXPECT_EQ(cone(2, {{1, 0}, {0, 1}}).faces().size(), 4u);
  EXPECT_EQ(Cone::zero(2).faces().size(), 1u);
  EXPECT_EQ(square().faces().size(), 10u);
}

TEST(Faces, ClosedUnderFacesAndIntersection) {
  Cone c = square();
  auto fs = c.faces();
  for (const auto& f : fs) {
    EXPECT_TRUE(c.has_face(f));
    for (const auto& g : f.faces()) EXPECT_NE(std::find(fs.begin(), fs.end(), g), fs.end());
    for (const auto& h : fs) EXPECT_NE(std::find(fs.begin(), fs.end(), intersect(f, h)), fs.end());
  }
}

TEST(IsSimplicial, Examples) {
  EXPECT_TRUE(cone(2, {{1, 0}, {0, 1}}).is_simplicial());
  EXPECT_FALSE(square().is_simplicial());
  EXPECT_TRUE(Cone::zero(3).is_simplicial());
}

TEST(BoxPoints, Examples) {
  BoxPoints b1 = box_points(cone(2, {{1, 0}, {0, 1}}));
  EXPECT_EQ(b1.points, (std::vector<LatticeVector>{{0, 0}}));
  EXPECT_EQ(b1.index, 1);

  BoxPoints b2 = box_points(cone(2, {{1, 0}, {1, 2}}));
  EXPECT_EQ(b2.points, (std::vector<LatticeVector>{{0, 0}, {1, 1}}));
  EXPECT_EQ(b2.index, 2);

  BoxPoints b3 = box_points(cone(3, {{1, 0, 0}, {0, 1, 0}, {-1, -1, 2}}));
  EXPECT_EQ(b3.points, (std::vector<LatticeVector>{{0, 0, 0}, {0, 0, 1}}));
  EXPECT_EQ(b3.index, 2);

  BoxPoints z = box_points(Cone::zero(2));
  EXPECT_EQ(z.points, (std::vector<LatticeVector>{{0, 0}}));
  EXPECT_EQ(z.index, 1);
}

TEST(BoxPoints, NonSimplicialThrows) {
  try {
    box_points(square());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSimplicial);
  }
}

TEST(BoxPoints, MatchesBruteForceScanOnRandomCones) {
  std::mt19937_64 rng(41);
  int checked = 0;
  while (checked < 80) {
    std::size_t n = 2 + rng() % 2;
    auto c = random_simplicial(rng, n);
    if (!c) continue;
    BoxPoints b = box_points(*c);
    auto scan = oracle::box_points_scan(c->rays(), l1_bound(*c));
    EXPECT_EQ(b.points, scan);
    EXPECT_EQ(b.index, static_cast<long>(scan.size()));
    IntMatrix m = IntMatrix::from_columns(c->rays(), n);
    EXPECT_EQ(b.index, abs(determinant(m)));
    for (std::size_t i = 0; i < b.points.size(); ++i) {
      EXPECT_EQ(b.barycentric[i], *oracle::barycentric(c->rays(), b.points[i]));
    }
    ++checked;
  }
}

TEST(BoxPoints, LowerDimensionalConeUsesSaturatedSpan) {
  // Rays (1,0,1),(1,2,1) span a plane whose lattice contains (1,1,1).
  Cone c = cone(3, {{1, 0, 1}, {1, 2, 1}});
  BoxPoints b = box_points(c);
  EXPECT_EQ(b.index, 2);
  EXPECT_EQ(b.points, oracle::box_points_scan(c.rays(), 4));
}

TEST(IsSmooth, Examples) {
  EXPECT_TRUE(is_smooth_cone(cone(2, {{1, 0}, {1, 1}})));
  EXPECT_FALSE(is_smooth_cone(cone(2, {{1, 0}, {1, 2}})));
  EXPECT_FALSE(is_smooth_cone(square()));
  EXPECT_TRUE(is_smooth_cone(Cone::zero(4)));
}

TEST(IsSmooth, AgreesWithElementaryDivisors) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    auto c = random_simplicial(rng, 3);
    if (!c) continue;
    auto f = smith_normal_form(IntMatrix::from_columns(c->rays(), 3)).invariant_factors();
    bool all_one = std::all_of(f.begin(), f.end(), [](const Integer& x) { return x == 1; });
    EXPECT_EQ(is_smooth_cone(*c), all_one);
  }
}

TEST(Triangulate, SimplicialIsItself) {
  Cone c = cone(2, {{1, 0}, {1, 2}});
  EXPECT_EQ(triangulate(c), std::vector<Cone>{c});
  EXPECT_EQ(triangulate(Cone::zero(2)), std::vector<Cone>{Cone::zero(2)});
}

TEST(Triangulate, SquareGivesTwoCellsSharingAFacet) {
  Cone c = square();
  auto cells = triangulate(c);
  ASSERT_EQ(cells.size(), 2u);
  Cone common = intersect(cells[0], cells[1]);
  EXPECT_EQ(common.dim(), 2u);
  EXPECT_TRUE(cells[0].has_face(common));
  EXPECT_TRUE(cells[1].has_face(common));
}

TEST(Triangulate, CellsCoverSampledPoints) {
  std::mt19937_64 rng(99);
  std::vector<Cone> cones{square(), cone(3, {{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 2}}),
                          cone(3, {{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 2, 1}, {1, 1, 2}})};
  for (const Cone& c : cones) {
    auto cells = triangulate(c);
    for (const auto& cell : cells) {
      EXPECT_TRUE(cell.is_simplicial());
      EXPECT_EQ(cell.dim(), c.dim());
      for (const auto& r : cell.rays()) EXPECT_NE(std::find(c.rays().begin(), c.rays().end(), r), c.rays().end());
    }
    for (std::size_t i = 0; i < cells.size(); ++i)
      for (std::size_t j = i + 1; j < cells.size(); ++j) {
        Cone m = intersect(cells[i], cells[j]);
        EXPECT_TRUE(cells[i].has_face(m));
        EXPECT_TRUE(cells[j].has_face(m));
      }
    // Points of c (nonnegative combinations, scaled to be integral) lie in some cell.
    for (int s = 0; s < 1000; ++s) {
      LatticeVector p(3);
      for (const auto& r : c.rays()) p += Integer(static_cast<long>(rng() % 6)) * r;
      bool covered = std::any_of(cells.begin(), cells.end(), [&](const Cone& cell) { return cell.contains(p); });
      EXPECT_TRUE(covered) << p;
    }
  }
}

TEST(RelintContains, Examples) {
  Cone q = cone(2, {{1, 0}, {0, 1}});
  EXPECT_TRUE(q.relint_contains(LatticeVector{1, 1}));
  EXPECT_FALSE(q.relint_contains(LatticeVector{1, 0}));
  EXPECT_TRUE(cone(2, {{1, 0}, {1, 2}}).relint_contains(LatticeVector{1, 1}));
  EXPECT_TRUE(Cone::zero(2).relint_contains(LatticeVector{0, 0}));
  EXPECT_FALSE(Cone::zero(2).relint_contains(LatticeVector{0, 1}));
}

TEST(RelintContains, AgreesWithBarycentricSigns) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    auto c = random_simplicial(rng, 3);
    if (!c) continue;
    for (int s = 0; s < 20; ++s) {
      LatticeVector v = random_vector(rng, 3, 4);
      auto t = *oracle::barycentric(c->rays(), v);
      bool pos = std::all_of(t.begin(), t.end(), [](const Rational& x) { return x > 0; });
      bool nonneg = std::all_of(t.begin(), t.end(), [](const Rational& x) { return x >= 0; });
      EXPECT_EQ(c->relint_contains(v), pos);
      EXPECT_EQ(c->contains(v), nonneg);
    }
  }
}
