#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "maxmin/error.hpp"
#include "maxmin/lattice.hpp"
#include "support.hpp"

namespace maxmin {
namespace {

using namespace maxmin::testing;

using Terms = std::vector<Term>;

// Compares f and p on a grid of 1000 points of the domain box [lo, hi]^d.
void expect_equal_on_grid(const PwlFunction& f, const LatticePolynomial& p, const Rational& lo, const Rational& hi) {
  for (const Point& x : grid_points(f.dim(), lo, hi, 1000)) {
    EXPECT_EQ(evaluate_lattice(p, x), eval_pwl(f, x)) << to_string(x);
    EXPECT_EQ(brute_lattice_value(p, x), eval_pwl(f, x)) << to_string(x);
  }
}

TEST(CellOrder, Examples) {
  const Representation b = analyze(fixture_b());
  ASSERT_TRUE(b.complex);
  EXPECT_EQ(cell_order(*b.complex, 1).order, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(cell_order(*b.complex, 2).order, (std::vector<std::size_t>{0, 2, 1}));
  const Representation a = analyze(fixture_a());
  EXPECT_EQ(cell_order(*a.complex, 0).order, (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(cell_order(*a.complex, 0).rank, (std::vector<std::size_t>{1, 0}));
}

TEST(DominantComponent, Examples) {
  const Representation b = analyze(fixture_b());
  EXPECT_EQ(b.dominant, (std::vector<std::size_t>{0, 1, 2}));
  const ComponentSet comps = extract_components(fixture_b());
  EXPECT_EQ(dominant_component(fixture_b(), comps, b.complex->cell(1)), 1u);
  const Representation a = analyze(fixture_a());
  EXPECT_EQ(a.dominant[0], 0u);
}

TEST(BuildRepresentation, Fixtures) {
  const LatticePolynomial a = build_representation(fixture_a());
  EXPECT_EQ(a.terms, (Terms{{0}, {1}}));
  expect_equal_on_grid(fixture_a(), a, -1, 1);

  const LatticePolynomial b = build_representation(fixture_b());
  EXPECT_EQ(b.terms, (Terms{{0, 2}, {1, 2}}));
  expect_equal_on_grid(fixture_b(), b, -2, 2);

  // Terms come out in cell order; only the set matters.
  const LatticePolynomial d = build_representation(fixture_d());
  Terms sorted = d.terms;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, (Terms{{0}, {1}}));
  expect_equal_on_grid(fixture_d(), d, -1, 1);
}

TEST(BuildRepresentation, SingleComponent) {
  const PwlFunction f{interval(0, 1), {Piece{interval(0, 1), affine({3}, 1)}}};
  const Representation rep = analyze(f);
  EXPECT_FALSE(rep.complex);
  EXPECT_EQ(rep.polynomial.terms, (Terms{{0}}));
}

TEST(BuildRepresentation, InvalidInputRejected) {
  const PwlFunction f{interval(-1, 1), {Piece{interval(-1, 0), affine({1}, 0)}}};
  try {
    build_representation(f);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidPwl);
  }
}

TEST(Simplify, Examples) {
  const ComponentSet c = make_component_set({affine({0}, 0), affine({1}, 0), affine({0}, 1)});
  EXPECT_EQ(simplify(make_lattice(c, {{0}, {0, 1}, {1, 2}})).terms, (Terms{{0}, {1, 2}}));
  EXPECT_EQ(simplify(make_lattice(c, {{0}, {0}})).terms, (Terms{{0}}));
  EXPECT_EQ(simplify(make_lattice(c, {{0, 2}, {1, 2}, {1, 2}})).terms, (Terms{{0, 2}, {1, 2}}));
}

TEST(MakeLattice, RejectsBadTerms) {
  const ComponentSet c = make_component_set({affine({1}, 0)});
  EXPECT_THROW(make_lattice(c, {{}}), Error);
  EXPECT_THROW(make_lattice(c, {{1}}), Error);
  EXPECT_THROW(make_lattice(c, {}), Error);
}

TEST(EvaluateLattice, ClampPolynomial) {
  const LatticePolynomial b = build_representation(fixture_b());
  EXPECT_EQ(evaluate_lattice(b, {q(-1)}), q(0));
  EXPECT_EQ(evaluate_lattice(b, {q(1, 2)}), q(1, 2));
  EXPECT_EQ(evaluate_lattice(b, {q(3, 2)}), q(1));
}

TEST(VerifySymbolic, Examples) {
  const LatticePolynomial b = make_lattice(extract_components(fixture_b()), {{0, 2}, {1, 2}});
  const VerificationReport rb = verify_symbolic(fixture_b(), b);
  EXPECT_TRUE(rb.pass);
  EXPECT_EQ(rb.cells_checked, 3u);

  const ComponentSet ca = extract_components(fixture_a());
  const VerificationReport bad = verify_symbolic(fixture_a(), make_lattice(ca, {{0}}));
  EXPECT_FALSE(bad.pass);
  ASSERT_EQ(bad.failures.size(), 1u);
  EXPECT_EQ(bad.failures[0].cell, 1u);
  EXPECT_EQ(bad.failures[0].expected, 1u);
  EXPECT_EQ(bad.failures[0].actual, 0u);

  EXPECT_TRUE(verify_symbolic(fixture_a(), make_lattice(ca, {{0}, {1}})).pass);
}

TEST(VerifySymbolic, ForeignComponentsJoinTheArrangement) {
  // max(-x, x, 0) equals |x|; the extra 0 component brings no new cell.
  const LatticePolynomial p =
      make_lattice(make_component_set({affine({-1}, 0), affine({1}, 0), affine({0}, 0)}), {{0}, {1}, {2}});
  EXPECT_TRUE(verify_symbolic(fixture_a(), p).pass);
  // max(x, 0) does not.
  const LatticePolynomial relu = make_lattice(make_component_set({affine({1}, 0), affine({0}, 0)}), {{0}, {1}});
  EXPECT_FALSE(verify_symbolic(fixture_a(), relu).pass);
}

TEST(LemmaWitness, Examples) {
  const Representation b = analyze(fixture_b());
  EXPECT_EQ(lemma_witness(b, 0, 2, LemmaStrategy::Brute), 1u);
  EXPECT_TRUE(is_lemma_witness(b, 0, 2, lemma_witness(b, 0, 2, LemmaStrategy::Inductive)));
  for (std::size_t p = 0; p < 3; ++p) EXPECT_EQ(lemma_witness(b, p, p, LemmaStrategy::Brute), b.dominant[p]);
  const Representation a = analyze(fixture_a());
  EXPECT_EQ(lemma_witness(a, 0, 1, LemmaStrategy::Brute), 1u);
  EXPECT_TRUE(is_lemma_witness(a, 0, 1, lemma_witness(a, 0, 1, LemmaStrategy::Inductive)));
}

TEST(LatticeToPwl, Examples) {
  const ComponentSet cb = extract_components(fixture_b());
  const PwlFunction b = lattice_to_pwl(make_lattice(cb, {{0, 2}, {1, 2}}), interval(-2, 2));
  ASSERT_EQ(b.pieces.size(), 3u);
  EXPECT_EQ(b.pieces[0].func, affine({0}, 0));
  EXPECT_EQ(b.pieces[1].func, affine({1}, 0));
  EXPECT_EQ(b.pieces[2].func, affine({0}, 1));
  EXPECT_TRUE(validate_pwl(b).ok());
  for (const char* x : {"-2", "-1/2", "0", "1/3", "1", "7/4", "2"})
    EXPECT_EQ(eval_pwl(b, {Rational::parse(x)}), eval_pwl(fixture_b(), {Rational::parse(x)}));

  const PwlFunction single =
      lattice_to_pwl(make_lattice(make_component_set({affine({1, 2}, 3)}), {{0}}), Polyhedron::cube(2, 0, 1));
  ASSERT_EQ(single.pieces.size(), 1u);
  EXPECT_EQ(single.pieces[0].region, Polyhedron::cube(2, 0, 1));
  EXPECT_EQ(single.pieces[0].func, affine({1, 2}, 3));

  const PwlFunction neg_abs = lattice_to_pwl(
      make_lattice(make_component_set({affine({1}, 0), affine({-1}, 0)}), {{0, 1}}), interval(-1, 1));
  ASSERT_EQ(neg_abs.pieces.size(), 2u);
  EXPECT_EQ(neg_abs.pieces[0].func, affine({1}, 0));
  EXPECT_EQ(neg_abs.pieces[1].func, affine({-1}, 0));
  EXPECT_EQ(eval_pwl(neg_abs, {q(-1, 2)}), q(-1, 2));
}

TEST(BuildRepresentationVector, Componentwise) {
  const auto both = build_representation_vector({fixture_a(), fixture_a()});
  ASSERT_EQ(both.size(), 2u);
  EXPECT_EQ(both[0].terms, (Terms{{0}, {1}}));
  EXPECT_EQ(both[1].terms, (Terms{{0}, {1}}));

  const auto mixed = build_representation_vector({fixture_a(), clamp_on_unit()});
  EXPECT_TRUE(verify_symbolic(fixture_a(), mixed[0]).pass);
  EXPECT_TRUE(verify_symbolic(clamp_on_unit(), mixed[1]).pass);

  const auto one = build_representation_vector({fixture_b()});
  EXPECT_EQ(one[0].terms, build_representation(fixture_b()).terms);

  try {
    build_representation_vector({fixture_a(), fixture_b()});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DomainMismatch);
  }
}

TEST(RepresentationProperties, CellTermsStructure) {
  for (const PwlFunction& f : {fixture_a(), fixture_b(), fixture_d()}) {
    const Representation rep = analyze(f);
    for (std::size_t c = 0; c < rep.complex->size(); ++c) {
      const Term& sp = rep.cell_terms[c];
      const std::size_t n = rep.dominant[c];
      EXPECT_TRUE(std::find(sp.begin(), sp.end(), n) != sp.end());
      EXPECT_EQ(sp == Term{n}, rep.orders[c].order.back() == n);
      // Every unsimplified term reduces to something at most f on this cell.
      for (const Term& sq : rep.cell_terms) {
        std::size_t low = sq.front();
        for (std::size_t i : sq)
          if (rep.orders[c].rank[i] < rep.orders[c].rank[low]) low = i;
        EXPECT_LE(rep.orders[c].rank[low], rep.orders[c].rank[n]);
      }
    }
  }
}

class RandomLattice : public ::testing::TestWithParam<int> {};

TEST_P(RandomLattice, ConverseRoundTripAndSimplify) {
  std::mt19937_64 rng(500 + GetParam());
  const std::size_t d = 1 + GetParam() % 3;
  const std::size_t n = 2 + GetParam() % 4;
  const LatticePolynomial p = random_lattice(rng, n, d);
  const Polyhedron box = Polyhedron::cube(d, -10, 10);
  const PwlFunction f = lattice_to_pwl(p, box);
  EXPECT_TRUE(validate_pwl(f).ok());
  for (int k = 0; k < 200; ++k) {
    const Point x = random_point_in_cube(rng, d, -10, 10);
    EXPECT_EQ(eval_pwl(f, x), brute_lattice_value(p, x));
  }
  EXPECT_TRUE(verify_symbolic(f, p).pass);
  const LatticePolynomial back = build_representation(f);
  EXPECT_TRUE(verify_symbolic(f, back).pass);
  // Cell witnesses and lemma witnesses of the rebuilt representation.
  const Representation rep = analyze(f);
  if (rep.complex) {
    for (const Cell& cell : rep.complex->cells()) EXPECT_EQ(evaluate_lattice(back, cell.witness), eval_pwl(f, cell.witness));
    for (std::size_t a = 0; a < rep.complex->size(); ++a) {
      for (std::size_t b = 0; b < rep.complex->size(); ++b) {
        EXPECT_TRUE(is_lemma_witness(rep, a, b, lemma_witness(rep, a, b, LemmaStrategy::Brute)));
        EXPECT_TRUE(is_lemma_witness(rep, a, b, lemma_witness(rep, a, b, LemmaStrategy::Inductive)));
      }
    }
  }
  // simplify is an identity of functions on all of space.
  const LatticePolynomial s = simplify(p);
  for (int k = 0; k < 100; ++k) {
    const Point x = random_point_in_cube(rng, d, -20, 20);
    EXPECT_EQ(evaluate_lattice(s, x), evaluate_lattice(p, x));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomLattice, ::testing::Range(0, 12));

}  // namespace
}  // namespace maxmin
