#include <gtest/gtest.h>
#include <leecode/xform.hpp>

#include "oracles.hpp"

using namespace leecode;

TEST(TApply, Examples) {
  RadicalVector y = t_apply(sylvester(2), {2, 0, 0, 0});
  EXPECT_EQ(y.integral(), (Point{1, 1, 1, 1}));
  RadicalVector z = t_apply(sylvester(2), {1, 0, 0, 0});
  EXPECT_FALSE(z.integral());
  ASSERT_TRUE(z.rational());
  EXPECT_EQ((*z.rational())[0], Rational(1, 2));
  RadicalVector w = t_apply(sylvester(1), {1, 0});
  EXPECT_FALSE(w.rational());
  EXPECT_TRUE(w.all_abs_le(1));
  EXPECT_FALSE(w.all_abs_le(Rational(7, 10)));
  EXPECT_THROW(t_apply(sylvester(2), {1, 0}), DimensionError);
}

TEST(ContinuousInvolution, Sylvester) {
  for (unsigned k = 1; k <= 4; ++k) {
    auto pts = random_points(1u << k, 200, 20, k);
    EXPECT_TRUE(check_involution_continuous(sylvester(k), pts).ok());
  }
}

TEST(ContinuousInvolution, RejectsAsymmetric) {
  EXPECT_FALSE(paley(3).is_symmetric());
  EXPECT_THROW(check_involution_continuous(paley(3), {{1, 0, 0, 0}}), PreconditionError);
}

TEST(ContinuousBox, OrderFour) {
  for (std::uint64_t r = 0; r <= 4; ++r) {
    ContinuousBoxReport rep = continuous_box(sylvester(2), r);
    EXPECT_TRUE(rep.within_bound);
    EXPECT_EQ(rep.max_abs_numerator, Integer(r));
    EXPECT_EQ(rep.points, lee_sphere_size(4, r).get_ui());
    if (r > 0) EXPECT_EQ(t_apply(sylvester(2), {static_cast<std::int64_t>(r), 0, 0, 0}).numerators[2], Integer(r));
  }
}

TEST(TransformCode, OrderFour) {
  // the even-sum lattice
  Lattice c = theorem9_code(sylvester(2));
  EXPECT_EQ(c.integer_volume(), 2);
  EXPECT_EQ(oracle::brute_min_distance(c, 2), 2);
  oracle::for_each_in_ball(4, 4, [&](const Point& x) {
    const bool expect = t_apply(sylvester(2), x).integral().has_value();
    EXPECT_EQ(contains(c, x), expect);
  });
}

TEST(TransformCode, OrderSixteen) {
  Lattice c = theorem9_code(sylvester(4));
  EXPECT_EQ(c.integer_volume(), 64);
  EXPECT_EQ(oracle::brute_min_distance(c, 4), 4);
  EXPECT_THROW(theorem9_code(sylvester(3)), PreconditionError);
}

TEST(TransformCode, VolumeFromSmithForm) {
  // index of { x : Hx = 0 mod d } is prod d / gcd(s_i, d); minors are only
  // affordable for order 4
  HadamardMatrix h = sylvester(2);
  Integer v = 1;
  for (const Integer& s : oracle::determinantal_snf(h.matrix())) v *= Integer(2) / gcd(s, Integer(2));
  EXPECT_EQ(v, 2);
  EXPECT_EQ(theorem9_code(h).integer_volume(), v);
  EXPECT_EQ(oracle::brute_index(theorem9_code(h), 2), v);
}

TEST(TransformSpec, CodeIsInvariant) {
  for (long d : {2L, 4L}) {
    TransformSpec spec = TransformSpec::sylvester_spec(d);
    const IntMatrix g = spec.code().integer_generator();
    for (std::size_t i = 0; i < g.rows(); ++i) {
      Point row(g.cols());
      for (std::size_t j = 0; j < g.cols(); ++j) row[j] = g(i, j).get_si();
      Point image = spec.t_code(row);
      EXPECT_TRUE(contains(spec.code(), image));
      EXPECT_EQ(spec.t_code(image), row);
    }
  }
  EXPECT_THROW(TransformSpec::sylvester_spec(3), PreconditionError);
}

TEST(DiscreteTransform, WorkedExample) {
  TransformSpec spec = TransformSpec::sylvester_spec(2);
  EXPECT_EQ(spec.rho(), 1);
  EXPECT_EQ(discrete_transform(spec, {1, 0, 0, 0}), (Point{0, 1, 1, 1}));
  EXPECT_EQ(discrete_transform(spec, {0, 1, 1, 1}), (Point{1, 0, 0, 0}));
  EXPECT_EQ(discrete_transform(spec, {2, 0, 0, 0}), (Point{1, 1, 1, 1}));
  EXPECT_THROW(discrete_transform(spec, {1, 0}), DimensionError);
}

TEST(DiscreteTransform, Involution) {
  TransformSpec s2 = TransformSpec::sylvester_spec(2);
  EXPECT_EQ(check_involution_discrete(s2, random_points(4, 1000, 50, 7)).checked, 1000u);
  TransformSpec s4 = TransformSpec::sylvester_spec(4);
  EXPECT_EQ(s4.rho(), 2);
  EXPECT_EQ(check_involution_discrete(s4, random_points(16, 200, 30, 8)).checked, 200u);
}

TEST(DiscreteTransform, Bijective) {
  TransformSpec spec = TransformSpec::sylvester_spec(2);
  PointSet images;
  std::size_t count = 0;
  oracle::for_each_in_ball(4, 4, [&](const Point& p) {
    images.insert(discrete_transform(spec, p));
    ++count;
  });
  EXPECT_EQ(images.size(), count);
}

TEST(DiscreteBox, Bound) {
  EXPECT_EQ(discrete_box_bound(1, 1, 2), 5);
  EXPECT_EQ(discrete_box_bound(2, 1, 2), 7);
  TransformSpec spec = TransformSpec::sylvester_spec(2);
  for (std::uint64_t r = 1; r <= 6; ++r) {
    DiscreteBoxReport rep = discrete_box(spec, r);
    EXPECT_TRUE(rep.ok()) << r;
    EXPECT_EQ(rep.points, lee_sphere_size(4, r).get_ui());
    EXPECT_EQ(rep.extents.size(), 4u);
  }
  DiscreteBoxReport off = discrete_box(spec, 3, {5, -2, 1, 0});
  EXPECT_TRUE(off.ok());
}
