#include <gtest/gtest.h>
#include <leecode/analyzer.hpp>
#include <leecode/hadamard.hpp>

#include "oracles.hpp"

using namespace leecode;

namespace {

bool orthogonal(const IntMatrix& h) {
  const IntMatrix g = h * h.transpose();
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.rows(); ++j)
      if (g(i, j) != (i == j ? static_cast<long>(h.rows()) : 0L)) return false;
  return true;
}

}  // namespace

TEST(Sylvester, OrderOne) { EXPECT_EQ(sylvester(0).matrix(), (IntMatrix{{1}})); }

TEST(Sylvester, OrderFourAsDisplayed) {
  IntMatrix shown{{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
  EXPECT_EQ(sylvester(2).matrix(), shown);
  EXPECT_TRUE(sylvester(2).is_normalized());
  EXPECT_TRUE(sylvester(2).is_symmetric());
}

TEST(Sylvester, DefiningIdentity) {
  for (unsigned k = 0; k <= 5; ++k) EXPECT_TRUE(orthogonal(sylvester(k).matrix()));
}

TEST(Paley, Orders) {
  for (std::uint64_t q : {3u, 7u, 11u, 19u}) {
    HadamardMatrix h = paley(q);
    EXPECT_EQ(h.order(), q + 1);
    EXPECT_TRUE(orthogonal(h.matrix()));
    EXPECT_TRUE(h.is_normalized());
  }
}

TEST(Paley, InvalidPrime) {
  EXPECT_THROW(paley(5), PreconditionError);
  EXPECT_THROW(paley(15), PreconditionError);
}

TEST(HadamardMatrix, RejectsNonOrthogonal) {
  EXPECT_THROW(HadamardMatrix(IntMatrix{{1, 1}, {1, 1}}), PreconditionError);
  EXPECT_THROW(HadamardMatrix(IntMatrix{{1, 2}, {1, -1}}), PreconditionError);
}

TEST(Normalize, AlreadyNormal) { EXPECT_EQ(normalize(sylvester(3)).matrix(), sylvester(3).matrix()); }

TEST(Normalize, RowNegatedSylvester) {
  IntMatrix m = sylvester(2).matrix();
  m.negate_row(2);
  m.negate_row(0);
  EXPECT_EQ(normalize(HadamardMatrix(m)).matrix(), sylvester(2).matrix());
}

TEST(Normalize, FirstRowAndColumnPositive) {
  IntMatrix m = paley(11).matrix();
  for (std::size_t i = 0; i < m.rows(); i += 3) m.negate_row(i);
  HadamardMatrix n = normalize(HadamardMatrix(m));
  EXPECT_TRUE(n.is_normalized());
}

TEST(HadamardCode, OrderFour) {
  Lattice c = hadamard_code(sylvester(2));
  EXPECT_EQ(c.integer_volume(), 16);
  EXPECT_EQ(oracle::brute_min_distance(c, 5), 4);
  EXPECT_EQ(period(c).lcm, 4);
}

TEST(HadamardCode, OrderEight) {
  Lattice c = hadamard_code(sylvester(3));
  EXPECT_EQ(c.integer_volume(), 4096);
  EXPECT_EQ(oracle::brute_min_distance(c, 8), 8);
  EXPECT_EQ(min_distance(c, 8), 8);
  EXPECT_EQ(period(c).lcm, 8);
}

TEST(HadamardCode, OrderTwelveVolume) {
  Lattice c = hadamard_code(paley(11));
  EXPECT_EQ(c.integer_volume(), pow(Integer(12), 6));
  EXPECT_EQ(period(c).lcm, 12);
}

TEST(HMatrix, BaseAsDisplayed) {
  EXPECT_EQ(h_matrix(2), (IntMatrix{{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}}));
  EXPECT_THROW(h_matrix(1), PreconditionError);
}

TEST(HMatrix, UnitDeterminant) {
  EXPECT_EQ(oracle::cofactor_det(h_matrix(3)), 1);
  for (unsigned i = 2; i <= 6; ++i) EXPECT_EQ(det(h_matrix(i)), 1);
}

TEST(HMatrix, RowSumMultiplicities) {
  for (unsigned i = 2; i <= 6; ++i) {
    IntMatrix h = h_matrix(i);
    std::vector<long> count(i + 1, 0);
    for (std::size_t s = 0; s < h.rows(); ++s) {
      long sum = 0;
      for (std::size_t c = 0; c < h.cols(); ++c) sum += h(s, c).get_si();
      unsigned l = 0;
      while ((1L << l) < sum) ++l;
      ASSERT_EQ(1L << l, sum);
      ++count[i - l];
    }
    for (unsigned r = 0; r <= i; ++r) EXPECT_EQ(count[r], binomial(i, r).get_si());
  }
}

TEST(GMatrix, G22MatchesDisplayedTriangularForm) {
  EXPECT_EQ(g_matrix(2, 2).gen(), (IntMatrix{{1, 1, 1, 1}, {0, 2, 0, 2}, {0, 0, 2, 2}, {0, 0, 0, 4}}));
}

TEST(GMatrix, ParametersByBruteForce) {
  struct Case {
    unsigned i, j;
    long volume, q;
  };
  for (Case c : {Case{2, 2, 16, 4}, Case{3, 2, 32, 4}, Case{2, 3, 256, 8}}) {
    Lattice g = g_matrix(c.i, c.j);
    const std::int64_t d = 1L << c.j;
    EXPECT_EQ(oracle::brute_min_distance(g, d), d);
    EXPECT_EQ(g.integer_volume(), c.volume);
    EXPECT_EQ(period(g).lcm, c.q);
  }
}

TEST(GVolumeFormula, Values) {
  EXPECT_EQ(g_volume_formula(2, 2), 16);
  EXPECT_EQ(g_volume_formula(3, 3), 4096);
  EXPECT_EQ(g_volume_formula(3, 2), 32);
  EXPECT_EQ(g_volume_formula(2, 3), 256);
}

TEST(GVolumeFormula, MatchesDeterminant) {
  for (unsigned i = 2; i <= 4; ++i)
    for (unsigned j = 2; j <= 4; ++j) EXPECT_EQ(abs(det(g_matrix(i, j).gen())), g_volume_formula(i, j)) << i << "," << j;
}

TEST(GMatrix, PowerOfTwoDiameterPerfect) {
  // G(i,2) has (2^i, 4, 2^{i+2}, 4) parameters.
  for (unsigned i = 2; i <= 4; ++i) {
    Lattice g = g_matrix(i, 2);
    EXPECT_EQ(g.integer_volume(), Integer(1L << (i + 2)));
    EXPECT_EQ(min_distance(g, 4), 4);
    EXPECT_EQ(period(g).lcm, 4);
  }
}
