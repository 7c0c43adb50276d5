#include <gtest/gtest.h>

#include <vector>

#include "taxicab/angle.hpp"
#include "taxicab/errors.hpp"
#include "taxicab/isometry.hpp"
#include "test_support.hpp"

using namespace taxicab;
using taxicab::testing::Gen;
using taxicab::testing::pt;
using taxicab::testing::q;

namespace {

Isometry random_isometry(Gen& g) {
  return {kLinearParts[static_cast<std::size_t>(g.integer(0, 7))], g.point()};
}

std::vector<PointPair> random_pairs(Gen& g, int n) {
  std::vector<PointPair> pairs;
  for (int i = 0; i < n; ++i) pairs.emplace_back(g.point(), g.point());
  return pairs;
}

}  // namespace

TEST(TranslationTest, Examples) {
  EXPECT_EQ(translation(pt(2, -1))(pt(0, 0)), pt(2, -1));
  EXPECT_EQ(translation({}), identity_isometry());
  EXPECT_EQ(translation(pt(q(1, 2), 3))(pt(4, q(-1, 3))), pt(q(9, 2), q(8, 3)));
}

TEST(Rotation2nTest, Examples) {
  EXPECT_EQ(rotation_2n(1)(pt(3, 1)), pt(-1, 3));
  EXPECT_EQ(rotation_2n(0, pt(7, -2)), identity_isometry());
  EXPECT_EQ(rotation_2n(2)(pt(3, 1)), pt(-3, -1));
  EXPECT_EQ(rotation_2n(-1), rotation_2n(3));
  EXPECT_EQ(rotation_2n(5), rotation_2n(1));
  // about (1,1): (2,1) is one unit east, so it lands one unit north
  EXPECT_EQ(rotation_2n(1, pt(1, 1))(pt(2, 1)), pt(1, 2));
}

TEST(ReflectionSpecialTest, Examples) {
  EXPECT_EQ(reflection_special(SpecialAxis::y_eq_x)(pt(3, 1)), pt(1, 3));
  EXPECT_EQ(reflection_special(SpecialAxis::y_eq_neg_x)(pt(3, 1)), pt(-1, -3));
  EXPECT_EQ(reflection_special(SpecialAxis::x_eq_0)(pt(3, 1)), pt(-3, 1));
  EXPECT_EQ(reflection_special(SpecialAxis::y_eq_0)(pt(3, 1)), pt(3, -1));
  // x = 2 instead of x = 0
  EXPECT_EQ(reflection_special(SpecialAxis::x_eq_0, pt(2, 5))(pt(3, 1)), pt(1, 1));
}

TEST(ReflectionSpecialTest, NamesRoundTrip) {
  for (SpecialAxis a : kSpecialAxes) EXPECT_EQ(parse_special_axis(special_axis_name(a)), a);
  EXPECT_THROW(parse_special_axis("y=2x"), ParseError);
}

TEST(ComposeTest, Examples) {
  EXPECT_EQ(compose(translation(pt(1, 0)), translation(pt(0, 1))), translation(pt(1, 1)));
  // (x,y) -> (x,-y) -> (-y,x)
  EXPECT_EQ(compose(reflection_special(SpecialAxis::y_eq_x), reflection_special(SpecialAxis::y_eq_0)), rotation_2n(1));
  const Isometry f{LinearPart::reflect_y_eq_neg_x, pt(q(2, 3), -4)};
  EXPECT_EQ(compose(f, identity_isometry()), f);
  EXPECT_EQ(compose(identity_isometry(), f), f);
}

TEST(ApplyTest, Examples) {
  EXPECT_EQ(apply(identity_isometry(), pt(5, 7)), pt(5, 7));
  EXPECT_EQ(apply(rotation_2n(1), pt(1, 0)), pt(0, 1));
  EXPECT_EQ(apply(translation(pt(2, 3)), pt(1, 1)), pt(3, 4));
}

TEST(InvertTest, Examples) {
  EXPECT_EQ(invert(translation(pt(2, -1))), translation(pt(-2, 1)));
  EXPECT_EQ(invert(rotation_2n(1)), rotation_2n(3));
  for (SpecialAxis a : kSpecialAxes) {
    const Isometry r = reflection_special(a, pt(q(1, 2), 3));
    EXPECT_EQ(invert(r), r) << special_axis_name(a);
  }
}

TEST(IsometryTest, TextFormRoundTrip) {
  const Isometry f{LinearPart::rot6, pt(q(-1, 2), 3)};
  EXPECT_EQ(f.str(), "linear=rot6 t=-1/2,3");
  EXPECT_EQ(Isometry::parse(f.str()), f);
  for (LinearPart l : kLinearParts) EXPECT_EQ(parse_linear_part(linear_part_name(l)), l);
  EXPECT_THROW(Isometry::parse("linear=rot3 t=0,0"), ParseError);
  EXPECT_THROW(Isometry::parse("linear=rot2"), ParseError);
}

TEST(IsometryProperty, GeneratorsPreserveDistance) {
  Gen g(401);
  for (int i = 0; i < 200; ++i) {
    const Point a = g.point(), b = g.point(), c = g.point();
    std::vector<Isometry> gens{translation(g.point())};
    for (int n = 0; n < 4; ++n) gens.push_back(rotation_2n(n, c));
    for (SpecialAxis ax : kSpecialAxes) gens.push_back(reflection_special(ax, c));
    for (const Isometry& f : gens) ASSERT_EQ(taxicab_distance(f(a), f(b)), taxicab_distance(a, b)) << f.str();
  }
}

TEST(IsometryProperty, LinearPartTableIsClosed) {
  int count = 0;
  for (LinearPart a : kLinearParts) {
    for (LinearPart b : kLinearParts) {
      const SignedPermutation ma = matrix_of(a), mb = matrix_of(b);
      // independent product of the two matrices
      const SignedPermutation prod{ma.xx * mb.xx + ma.xy * mb.yx, ma.xx * mb.xy + ma.xy * mb.yy,
                                   ma.yx * mb.xx + ma.yy * mb.yx, ma.yx * mb.xy + ma.yy * mb.yy};
      const auto found = linear_part_of(prod);
      ASSERT_TRUE(found);
      ASSERT_EQ(compose(a, b), *found);
      ++count;
    }
  }
  EXPECT_EQ(count, 64);
}

TEST(IsometryProperty, DihedralStructure) {
  int involutions = 0;
  for (LinearPart a : kLinearParts) {
    EXPECT_EQ(compose(a, invert(a)), LinearPart::identity);
    EXPECT_EQ(compose(invert(a), a), LinearPart::identity);
    if (a != LinearPart::identity && compose(a, a) == LinearPart::identity) ++involutions;
  }
  // four reflections plus the half turn
  EXPECT_EQ(involutions, 5);
  EXPECT_NE(compose(LinearPart::rot2, LinearPart::reflect_x_axis), compose(LinearPart::reflect_x_axis, LinearPart::rot2));
}

TEST(IsometryProperty, GroupLawsAndHomomorphism) {
  Gen g(402);
  for (int i = 0; i < 500; ++i) {
    const Isometry f = random_isometry(g), h = random_isometry(g), k = random_isometry(g);
    const Point p = g.point();
    ASSERT_EQ(compose(compose(f, h), k), compose(f, compose(h, k)));
    ASSERT_EQ(compose(f, invert(f)), identity_isometry());
    ASSERT_EQ(compose(invert(f), f), identity_isometry());
    ASSERT_EQ(apply(compose(f, h), p), apply(f, apply(h, p)));
    ASSERT_EQ(apply(invert(f), apply(f, p)), p);
  }
}

TEST(AffineDecisionTest, Examples) {
  const IsometryDecision rot = is_taxicab_isometry_affine({0, -1, 1, 0, pt(q(5, 2), -7)});
  EXPECT_TRUE(rot.is_isometry);
  ASSERT_TRUE(rot.canonical);
  EXPECT_EQ(*rot.canonical, (Isometry{LinearPart::rot2, pt(q(5, 2), -7)}));
  EXPECT_FALSE(rot.witness);

  const AffineMap shear{1, 1, 0, 1, {}};
  const IsometryDecision s = is_taxicab_isometry_affine(shear);
  EXPECT_FALSE(s.is_isometry);
  ASSERT_TRUE(s.witness);
  EXPECT_EQ(*s.witness, (PointPair{pt(1, 0), pt(0, 1)}));
  EXPECT_EQ(taxicab_distance(pt(1, 0), pt(0, 1)), Scalar(2));
  EXPECT_EQ(taxicab_distance(shear(pt(1, 0)), shear(pt(0, 1))), Scalar(1));

  const AffineMap euclid{q(3, 5), q(-4, 5), q(4, 5), q(3, 5), {}};
  const IsometryDecision e = is_taxicab_isometry_affine(euclid);
  EXPECT_FALSE(e.is_isometry);
  ASSERT_TRUE(e.witness);
  EXPECT_EQ(*e.witness, (PointPair{pt(0, 0), pt(1, 0)}));
  EXPECT_EQ(taxicab_distance(euclid(pt(0, 0)), euclid(pt(1, 0))), q(7, 5));
}

TEST(AffineDecisionTest, SingularAndScaledMaps) {
  EXPECT_FALSE(is_taxicab_isometry_affine({0, 0, 0, 0, {}}).is_isometry);
  EXPECT_FALSE(is_taxicab_isometry_affine({1, 0, 1, 0, {}}).is_isometry);
  EXPECT_FALSE(is_taxicab_isometry_affine({2, 0, 0, 2, {}}).is_isometry);
  EXPECT_FALSE(is_taxicab_isometry_affine({1, 0, 0, q(1, 2), {}}).is_isometry);
}

TEST(AffineDecisionProperty, Soundness) {
  Gen g(403);
  for (int i = 0; i < 400; ++i) {
    AffineMap m;
    if (i % 2 == 0) {
      m = AffineMap::from(random_isometry(g));
    } else {
      const auto entry = [&] { return q(g.integer(-2, 2), g.integer(1, 2)); };
      m = {entry(), entry(), entry(), entry(), g.point()};
    }
    const IsometryDecision d = is_taxicab_isometry_affine(m);
    if (d.is_isometry) {
      const auto pairs = random_pairs(g, 30);
      ASSERT_TRUE(verify_isometry_samples(m, pairs).passed);
      ASSERT_EQ(AffineMap::from(*d.canonical)(pt(q(1, 3), q(-5, 7))), m(pt(q(1, 3), q(-5, 7))));
    } else {
      ASSERT_TRUE(d.witness);
      const auto& [a, b] = *d.witness;
      ASSERT_NE(taxicab_distance(a, b), taxicab_distance(m(a), m(b)));
    }
  }
}

TEST(VerifySamplesTest, Examples) {
  Gen g(404);
  const auto pairs = random_pairs(g, 100);
  EXPECT_TRUE(verify_isometry_samples(AffineMap{1, 0, 0, 1, {}}, pairs).passed);
  EXPECT_EQ(verify_isometry_samples(AffineMap{1, 0, 0, 1, {}}, pairs).checked, 100u);

  const std::vector<PointPair> one{{pt(0, 0), pt(1, 0)}};
  const SampleReport doubled = verify_isometry_samples(AffineMap{2, 0, 0, 2, {}}, one);
  EXPECT_FALSE(doubled.passed);
  ASSERT_TRUE(doubled.first_failure);
  EXPECT_EQ(doubled.first_failure->before, Scalar(1));
  EXPECT_EQ(doubled.first_failure->after, Scalar(2));

  EXPECT_TRUE(verify_isometry_samples(AffineMap::from(rotation_2n(1)), pairs).passed);
  EXPECT_THROW(verify_isometry_samples(AffineMap{}, std::span<const PointPair>{}), DomainError);
}

TEST(TaxicabRotateTest, Examples) {
  EXPECT_EQ(taxicab_rotate(pt(1, 0), {}, 2), pt(0, 1));
  EXPECT_EQ(taxicab_rotate(pt(1, 0), {}, 1), pt(q(1, 2), q(1, 2)));
  EXPECT_EQ(taxicab_rotate(pt(2, 0), {}, 1), pt(1, 1));
  EXPECT_EQ(taxicab_rotate(pt(3, 1), {}, 1), pt(1, 3));
  EXPECT_EQ(taxicab_rotate(pt(3, 1), {}, 0), pt(3, 1));
  EXPECT_EQ(taxicab_rotate(pt(3, 1), {}, 9), taxicab_rotate(pt(3, 1), {}, 1));
}

TEST(TaxicabRotateTest, Errors) {
  EXPECT_THROW(taxicab_rotate(pt(1, 1), pt(1, 1), 1), DegenerateInput);
  EXPECT_THROW(taxicab_rotate(pt(1, 0), {}, -1), DomainError);
}

TEST(TaxicabRotateProperty, TwoIsTheQuarterTurn) {
  const Isometry quarter = rotation_2n(1);
  for (const Point& p : integer_grid(10)) {
    if (p.is_origin()) continue;
    ASSERT_EQ(taxicab_rotate(p, {}, 2), quarter(p)) << p;
  }
}

TEST(TaxicabRotateProperty, AdditiveAndPeriodic) {
  Gen g(405);
  for (int i = 0; i < 500; ++i) {
    const Point c = g.point(), p = c + g.nonzero_vector();
    const Scalar a = q(g.integer(0, 80), g.integer(1, 10)), b = q(g.integer(0, 80), g.integer(1, 10));
    const Point once = taxicab_rotate(p, c, a);
    ASSERT_EQ(taxicab_distance(once, c), taxicab_distance(p, c));
    ASSERT_EQ(taxicab_rotate(once, c, b), taxicab_rotate(p, c, a + b));
    ASSERT_EQ(taxicab_rotate(p, c, 8), p);
    const Scalar t = mod(a, kFullTurn);
    ASSERT_EQ(angle_measure(c, p, once).value, t < kFullTurn - t ? t : kFullTurn - t);
  }
}

TEST(TaxicabRotateProperty, OneTRadianIsNotAnIsometry) {
  const auto rot1 = [](const Point& p) { return taxicab_rotate(p, {}, 1); };
  const auto w = find_distance_witness(rot1, 4, [](const Point& p) { return p.is_origin(); });
  ASSERT_TRUE(w);
  EXPECT_NE(taxicab_distance(w->first, w->second), taxicab_distance(rot1(w->first), rot1(w->second)));
}

TEST(TaxicabReflectTest, Examples) {
  EXPECT_EQ(taxicab_reflect(pt(3, 1), line_through({}, pt(1, 1))), pt(1, 3));
  const Point img = taxicab_reflect(pt(1, 0), line_through({}, pt(1, 2)));
  EXPECT_EQ(img, pt(q(-3, 5), q(4, 5)));
  EXPECT_EQ(taxicab_norm(img), q(7, 5));
  const Line l = line_through(pt(1, 2), pt(4, -1));
  EXPECT_EQ(taxicab_reflect(pt(1, 2), l), pt(1, 2));
}

TEST(TaxicabReflectProperty, PerpendicularBisectorConstruction) {
  Gen g(406);
  for (int i = 0; i < 500; ++i) {
    const Point a = g.point(), b = g.point();
    if (a == b) continue;
    const Line l = line_through(a, b);
    const Point p = g.point();
    const Point img = taxicab_reflect(p, l);
    ASSERT_TRUE(l.contains(midpoint(p, img)));
    ASSERT_TRUE(dot(img - p, l.direction()).is_zero());
    ASSERT_EQ(taxicab_reflect(img, l), p);
    ASSERT_EQ(l.contains(p), img == p);
  }
}

TEST(TaxicabReflectProperty, SpecialAxesAgree) {
  Gen g(407);
  for (int i = 0; i < 200; ++i) {
    const Point c = g.point(), p = g.point();
    const std::array<std::pair<SpecialAxis, Point>, 4> dirs{{{SpecialAxis::y_eq_x, pt(1, 1)},
                                                            {SpecialAxis::y_eq_neg_x, pt(1, -1)},
                                                            {SpecialAxis::y_eq_0, pt(1, 0)},
                                                            {SpecialAxis::x_eq_0, pt(0, 1)}}};
    for (const auto& [axis, d] : dirs) {
      ASSERT_EQ(taxicab_reflect(p, line_through(c, c + d)), reflection_special(axis, c)(p)) << special_axis_name(axis);
    }
  }
}

TEST(TaxicabReflectProperty, SteepLineIsNotAnIsometry) {
  const Line l = line_through({}, pt(1, 2));
  const auto refl = [&](const Point& p) { return taxicab_reflect(p, l); };
  const auto w = find_distance_witness(refl);
  ASSERT_TRUE(w);
  EXPECT_NE(taxicab_distance(w->first, w->second), taxicab_distance(refl(w->first), refl(w->second)));
  // special axes never yield one
  EXPECT_FALSE(find_distance_witness([](const Point& p) { return taxicab_reflect(p, line_through({}, pt(1, -1))); }));
}
