#include <gtest/gtest.h>
#include <leecode/metric.hpp>

#include <random>
#include <sstream>

#include "oracles.hpp"

using namespace leecode;

TEST(ManhattanDist, Basics) {
  EXPECT_EQ(manhattan_dist({1, 2, 3}, {1, 2, 3}), 0);
  EXPECT_EQ(manhattan_dist({1, 2, 3}, {3, 0, 3}), 4);
  EXPECT_THROW(manhattan_dist({1}, {1, 2}), DimensionError);
}

TEST(ManhattanDist, Symmetric) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> c(-50, 50);
  for (int t = 0; t < 200; ++t) {
    Point x{c(rng), c(rng), c(rng), c(rng)}, y{c(rng), c(rng), c(rng), c(rng)};
    EXPECT_EQ(manhattan_dist(x, y), manhattan_dist(y, x));
  }
}

TEST(LeeDist, Basics) {
  EXPECT_EQ(lee_dist({0}, {4}, 5), 1);
  EXPECT_EQ(lee_dist({0, 0}, {2, 3}, 4), 3);
  EXPECT_THROW(lee_dist({0}, {1}, 1), PreconditionError);
}

TEST(LeeDist, CoincidesWithManhattanForSmallDifferences) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 200; ++t) {
    const std::int64_t m = 2 + t % 9;
    std::uniform_int_distribution<std::int64_t> base(0, m - 1), diff(-m / 2, m / 2);
    Point x(3), y(3);
    for (int i = 0; i < 3; ++i) {
      x[i] = base(rng);
      y[i] = x[i] + diff(rng);
    }
    EXPECT_EQ(lee_dist(x, y, m), manhattan_dist(x, y));
  }
}

TEST(LeeSphereSize, ClosedForm) {
  for (unsigned long n = 1; n <= 6; ++n) EXPECT_EQ(lee_sphere_size(n, 0), 1);
  for (unsigned long r = 0; r <= 10; ++r) EXPECT_EQ(lee_sphere_size(1, r), 2 * r + 1);
  EXPECT_EQ(lee_sphere_size(3, 1), 7);
  EXPECT_EQ(lee_sphere_size(2, 1), 5);
  EXPECT_EQ(lee_sphere_size(3, 2), 25);
}

TEST(LeeSphereSize, MatchesBoxScan) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::int64_t r = 0; r <= 4; ++r)
      EXPECT_EQ(lee_sphere_size(n, r), oracle::box_sphere(n, r, Point(n, 0)).size()) << n << "," << r;
}

TEST(AnticodeSize, ClosedForm) {
  for (unsigned long n = 1; n <= 6; ++n) EXPECT_EQ(anticode_size_odd(n, 0), 2);
  for (unsigned long r = 0; r <= 10; ++r) EXPECT_EQ(anticode_size_odd(1, r), 2 * r + 2);
  for (unsigned long n = 1; n <= 10; ++n) EXPECT_EQ(anticode_size_odd(n, 1), 4 * n);
}

TEST(Recurrences, Hold) {
  auto rep = check_anticode_recurrences(4, 4);
  EXPECT_TRUE(rep.ok());
  EXPECT_GT(rep.checked, 0u);
  EXPECT_EQ(anticode_size_odd(2, 1), lee_sphere_size(1, 1) + lee_sphere_size(2, 1));
  EXPECT_EQ(anticode_size_odd(2, 1), 8);
  EXPECT_TRUE(check_anticode_recurrences(1, 3).ok());
  EXPECT_THROW(check_anticode_recurrences(0, 3), PreconditionError);
}

TEST(EnumerateSphere, OneDimensional) {
  EXPECT_EQ(enumerate_sphere(1, 2), (PointSet{{-2}, {-1}, {0}, {1}, {2}}));
}

TEST(EnumerateSphere, MatchesBoxScanAndClosedForm) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::uint64_t r = 0; r <= 4; ++r) {
      PointSet s = enumerate_sphere(n, r);
      EXPECT_EQ(lee_sphere_size(n, r), s.size());
      if (n <= 4) EXPECT_EQ(s, oracle::box_sphere(n, static_cast<std::int64_t>(r), Point(n, 0)));
    }
}

TEST(EnumerateSphere, OffCenter) {
  Point c{3, -1};
  EXPECT_EQ(enumerate_sphere(2, 2, c), oracle::box_sphere(2, 2, c));
}

TEST(EnumerateSphere, CapEnforced) { EXPECT_THROW(enumerate_sphere(6, 20, 1000), SizeError); }

TEST(EnumerateAnticode, BaseCase) {
  EXPECT_EQ(enumerate_anticode_odd(3, 0), (PointSet{{0, 0, 0}, {1, 0, 0}}));
}

TEST(EnumerateAnticode, SizeAndDiameter) {
  EXPECT_EQ(enumerate_anticode_odd(2, 1).size(), 8u);
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::uint64_t r = 0; r <= 3; ++r) {
      PointSet s = enumerate_anticode_odd(n, r);
      EXPECT_EQ(anticode_size_odd(n, r), s.size());
      EXPECT_EQ(diameter(s), static_cast<std::int64_t>(2 * r + 1));
    }
}

TEST(PointDump, SortedLexicographically) {
  std::ostringstream out;
  write_points(out, enumerate_sphere(2, 1));
  EXPECT_EQ(out.str(), "-1 0\n0 -1\n0 0\n0 1\n1 0\n");
}
