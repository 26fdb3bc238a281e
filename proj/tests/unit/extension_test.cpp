#include <random>

#include <gtest/gtest.h>

#include "maxmin/error.hpp"
#include "maxmin/extension.hpp"
#include "support.hpp"

namespace maxmin {
namespace {

using namespace maxmin::testing;

std::size_t facet_with_normal(const Polyhedron& p, const std::vector<Rational>& normal) {
  for (std::size_t k = 0; k < p.halfspaces().size(); ++k)
    if (p.halfspaces()[k].normal == normal) return k;
  throw std::logic_error("no such facet");
}

TEST(RadialExtend, Interval) {
  const Polyhedron line = interval(-1, 1);
  BoundaryPwl b{line, {q(0)}, {}};
  b.facet_data = {FacetDatum{facet_with_normal(line, {-1}), affine({0}, 2)},
                  FacetDatum{facet_with_normal(line, {1}), affine({0}, 3)}};
  const PwlFunction f = radial_extend(b);
  EXPECT_TRUE(validate_pwl(f).ok());
  ASSERT_EQ(f.pieces.size(), 2u);
  EXPECT_EQ(f.pieces[0].func, affine({-2}, 0));
  EXPECT_EQ(f.pieces[1].func, affine({3}, 0));
  EXPECT_EQ(eval_pwl(f, {q(-1)}), q(2));
  EXPECT_EQ(eval_pwl(f, {q(1, 2)}), q(3, 2));
}

TEST(RadialExtend, SquareGivesMaxNorm) {
  const Polyhedron square = Polyhedron::cube(2, -1, 1);
  BoundaryPwl b{square, {q(0), q(0)}, {}};
  for (std::size_t k = 0; k < 4; ++k) b.facet_data.push_back(FacetDatum{k, affine({0, 0}, 1)});
  const PwlFunction f = radial_extend(b);
  EXPECT_TRUE(validate_pwl(f).ok());
  std::vector<AffineFunc> funcs;
  for (const auto& p : f.pieces) funcs.push_back(p.func);
  for (const AffineFunc& g : {affine({1, 0}, 0), affine({-1, 0}, 0), affine({0, 1}, 0), affine({0, -1}, 0)})
    EXPECT_NE(std::find(funcs.begin(), funcs.end(), g), funcs.end());
  std::mt19937_64 rng(8);
  for (int k = 0; k < 100; ++k) {
    const Point x = random_point_in_cube(rng, 2, -1, 1);
    EXPECT_EQ(eval_pwl(f, x), std::max(x[0].abs(), x[1].abs()));
    // Positive homogeneity about the center.
    EXPECT_EQ(eval_pwl(f, {x[0] * q(1, 3), x[1] * q(1, 3)}), eval_pwl(f, x) * q(1, 3));
  }
  EXPECT_EQ(eval_pwl(f, {q(0), q(0)}), q(0));
}

TEST(RadialExtend, ZeroData) {
  const Polyhedron square = Polyhedron::cube(2, -1, 1);
  BoundaryPwl b{square, {q(1, 3), q(-1, 4)}, {}};
  for (std::size_t k = 0; k < 4; ++k) b.facet_data.push_back(FacetDatum{k, AffineFunc::zero(2)});
  for (const auto& p : radial_extend(b).pieces) EXPECT_EQ(p.func, AffineFunc::zero(2));
}

TEST(RadialExtend, Preconditions) {
  const Polyhedron line = interval(-1, 1);
  BoundaryPwl boundary_center{line, {q(1)}, {FacetDatum{0, affine({0}, 1)}, FacetDatum{1, affine({0}, 1)}}};
  try {
    radial_extend(boundary_center);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CenterNotInterior);
  }
  BoundaryPwl missing{line, {q(0)}, {FacetDatum{0, affine({0}, 1)}}};
  try {
    radial_extend(missing);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InconsistentBoundaryData);
  }
  // Adjacent edges of the square disagree at their common corner.
  const Polyhedron square = Polyhedron::cube(2, -1, 1);
  BoundaryPwl clash{square, {q(0), q(0)}, {}};
  for (std::size_t k = 0; k < 4; ++k) clash.facet_data.push_back(FacetDatum{k, affine({0, 0}, k == 0 ? 2 : 1)});
  try {
    radial_extend(clash);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InconsistentBoundaryData);
  }
}

TEST(ExtendToSpace, AbsoluteValue) {
  const PwlFunction f = extend_to_space(fixture_a(), interval(-5, 5));
  EXPECT_TRUE(validate_pwl(f).ok());
  EXPECT_EQ(eval_pwl(f, {q(5)}), q(5));
  EXPECT_EQ(eval_pwl(f, {q(-7, 2)}), q(7, 2));
}

TEST(ExtendToSpace, ClampAndIdentity) {
  const PwlFunction f = extend_to_space(fixture_b(), interval(-10, 10));
  for (const char* x : {"-10", "-3", "1/2", "1", "9"}) {
    const Rational v = Rational::parse(x);
    EXPECT_EQ(eval_pwl(f, {v}), std::min(std::max(v, q(0)), q(1)));
  }
  const PwlFunction same = extend_to_space(fixture_d(), Polyhedron::cube(2, -1, 1));
  std::mt19937_64 rng(4);
  for (int k = 0; k < 100; ++k) {
    const Point x = random_point_in_cube(rng, 2, -1, 1);
    EXPECT_EQ(eval_pwl(same, x), eval_pwl(fixture_d(), x));
  }
}

TEST(ExtendToSpace, TargetMustContainDomain) {
  try {
    extend_to_space(fixture_b(), interval(-1, 5));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TargetDoesNotContainDomain);
  }
}

TEST(ImportRelu, SingleNeuron) {
  const ReluNet1 net{{{1}}, {0}, {1}, 0};
  const PwlFunction f = import_relu(net, interval(-2, 2));
  ASSERT_EQ(f.pieces.size(), 2u);
  EXPECT_EQ(f.pieces[0].func, affine({0}, 0));
  EXPECT_EQ(f.pieces[1].func, affine({1}, 0));
  EXPECT_EQ(eval_pwl(f, {q(-1)}), q(0));
  EXPECT_EQ(eval_pwl(f, {q(3, 2)}), q(3, 2));
}

TEST(ImportRelu, AbsoluteValueAndPipeline) {
  const ReluNet1 net{{{1}, {-1}}, {0, 0}, {1, 1}, 0};
  const PwlFunction f = import_relu(net, interval(-2, 2));
  EXPECT_TRUE(validate_pwl(f).ok());
  for (const char* x : {"-2", "-1/3", "0", "5/4"}) {
    const Rational v = Rational::parse(x);
    EXPECT_EQ(eval_pwl(f, {v}), v.abs());
  }
  EXPECT_TRUE(verify_symbolic(f, build_representation(f)).pass);
}

TEST(ImportRelu, ZeroOutputWeights) {
  const ReluNet1 net{{{1, 2}, {-1, 1}}, {1, 0}, {0, 0}, q(7, 2)};
  const PwlFunction f = import_relu(net, Polyhedron::cube(2, -1, 1));
  ASSERT_EQ(f.pieces.size(), 1u);
  EXPECT_EQ(f.pieces[0].func, AffineFunc::constant(2, q(7, 2)));
}

TEST(ImportRelu, MatchesForwardPass) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 5; ++trial) {
    ReluNet1 net;
    for (int i = 0; i < 3; ++i) {
      net.W1.push_back({random_rational(rng, 4, 3), random_rational(rng, 4, 3)});
      net.b1.push_back(random_rational(rng, 4, 3));
      net.w2.push_back(random_rational(rng, 4, 3));
    }
    net.b2 = random_rational(rng, 4, 3);
    const Polyhedron box = Polyhedron::cube(2, -3, 3);
    const PwlFunction f = import_relu(net, box);
    EXPECT_LE(f.pieces.size(), 8u);
    EXPECT_TRUE(validate_pwl(f).ok());
    for (int k = 0; k < 100; ++k) {
      const Point x = random_point_in_cube(rng, 2, -3, 3);
      EXPECT_EQ(eval_pwl(f, x), evaluate_relu(net, x));
    }
  }
}

TEST(ImportRelu, ShapeChecked) {
  const ReluNet1 bad{{{1}, {1, 2}}, {0, 0}, {1, 1}, 0};
  EXPECT_THROW(check_shape(bad), Error);
  EXPECT_THROW(import_relu(bad, interval(-1, 1)), Error);
}

}  // namespace
}  // namespace maxmin
