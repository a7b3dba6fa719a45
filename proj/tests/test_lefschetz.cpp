#include <cilef/calculus.hpp>
#include <cilef/error.hpp>
#include <cilef/inverse_systems.hpp>
#include <cilef/lefschetz.hpp>

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace cilef;
using namespace cilef::testing;

namespace {

ArtinianCI algebra(const std::vector<std::string>& gens, std::size_t n = 3) {
  return build_algebra(pxs(gens, n));
}

ArtinianCI random_algebra(const std::vector<unsigned>& degrees, Rng& rng) {
  const auto alphabet = xs(degrees.size());
  return build_algebra(random_complete_intersection(alphabet, degrees, 5, rng).generators);
}

ErrorKind milnor_error(const std::string& f, std::size_t n = 3) {
  try {
    milnor_pipeline(px(f, n));
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalError;
}

std::vector<Polynomial> fermat(std::size_t n, unsigned d) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.emplace_back(xs(n), Monomial::variable(n, i, d));
  }
  return out;
}

}  // namespace

TEST(Lefschetz, ExactDeterminantOfFermatQuadrics) {
  const ArtinianCI alg = algebra({"x1^2", "x2^2", "x3^2"});
  const SlpVerdict v = slp_degree1_exact(alg);
  EXPECT_EQ(v.holds, Truth::Yes);
  EXPECT_EQ(v.mode, CheckMode::Exact);
  ASSERT_TRUE(v.determinant);
  const auto ts = VariableAlphabet::indexed("t", 3, Side::Parameter);
  EXPECT_EQ(*v.determinant, parse_polynomial("-2*t1*t2*t3", ts));
  const std::vector<Rational> e1 = {1, 0, 0};
  EXPECT_EQ(evaluate(*v.determinant, e1), 0);
  EXPECT_EQ(rank(slp_matrix(alg, px("x1"))), 2);
  EXPECT_EQ(to_string(*v.determinant), "-2*t1*t2*t3");
}

TEST(Lefschetz, ExactDeterminantDegreeAndSpecialization) {
  Rng rng(51);
  for (const auto& degrees : std::vector<std::vector<unsigned>>{{2, 2, 2}, {2, 2, 3}, {2, 3, 3}, {2, 2, 2, 2}}) {
    const ArtinianCI alg = random_algebra(degrees, rng);
    const SlpVerdict v = slp_degree1_exact(alg);
    ASSERT_TRUE(v.determinant);
    const std::size_t n = alg.num_vars();
    if (!v.determinant->is_zero()) {
      EXPECT_EQ(v.determinant->homogeneous_degree(), n * (alg.socle_degree() - 2));
    }
    // D(a) equals the determinant of the numeric matrix for l = a . x
    for (int k = 0; k < 5; ++k) {
      const auto a = random_point(n, 7, rng);
      const RationalMatrix M = slp_matrix(alg, Polynomial::linear_form(alg.alphabet(), a));
      EXPECT_EQ(evaluate(*v.determinant, a), determinant(M));
    }
  }
}

TEST(Lefschetz, ExactRefusesManyVariables) {
  const ArtinianCI alg = build_algebra(fermat(5, 2));
  EXPECT_THROW(slp_degree1_exact(alg), Error);
  try {
    slp_degree1_exact(alg);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooManyVariables);
  }
}

TEST(Lefschetz, ProbabilisticVerdicts) {
  const ArtinianCI alg = algebra({"x1^2", "x2^2", "x3^2"});
  ProbabilisticOptions opts;
  opts.seed = 7;
  const SlpVerdict v = slp_degree1_probabilistic(alg, opts);
  EXPECT_EQ(v.holds, Truth::Yes);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(rank(slp_matrix(alg, *v.witness)), 3);
  EXPECT_FALSE(v.failure_probability_bound);

  ProbabilisticOptions preset = opts;
  preset.preset_points = {{1, 0, 0}};
  const SlpVerdict p = slp_degree1_probabilistic(alg, preset);
  ASSERT_GE(p.trials.size(), 2u);
  EXPECT_EQ(p.trials[0].rank, 2);
  EXPECT_EQ(p.trials[0].linear_form, px("x1"));
  EXPECT_EQ(p.holds, Truth::Yes);

  ProbabilisticOptions only_bad = opts;
  only_bad.trials = 1;
  only_bad.preset_points = {{1, 0, 0}};
  const SlpVerdict u = slp_degree1_probabilistic(alg, only_bad);
  EXPECT_EQ(u.holds, Truth::Unknown);
  ASSERT_TRUE(u.failure_probability_bound);
  EXPECT_EQ(*u.failure_probability_bound, 1);

  ProbabilisticOptions bad = opts;
  bad.trials = 0;
  EXPECT_THROW(slp_degree1_probabilistic(alg, bad), Error);
}

TEST(Lefschetz, ProbabilisticIsReproducible) {
  Rng rng(52);
  const ArtinianCI alg = random_algebra({2, 2, 3}, rng);
  ProbabilisticOptions opts;
  opts.seed = 123;
  const SlpVerdict a = slp_degree1_probabilistic(alg, opts);
  const SlpVerdict b = slp_degree1_probabilistic(alg, opts);
  ASSERT_EQ(a.trials.size(), b.trials.size());
  for (std::size_t i = 0; i < a.trials.size(); ++i) {
    EXPECT_EQ(a.trials[i].linear_form, b.trials[i].linear_form);
  }
}

TEST(Lefschetz, SchwartzZippelBound) {
  EXPECT_EQ(schwartz_zippel_bound(3, 100, 1), q("3/201"));
  EXPECT_EQ(schwartz_zippel_bound(6, 1, 2), 1);
  EXPECT_EQ(schwartz_zippel_bound(2, 2, 3), q("8/125"));
}

TEST(Lefschetz, HessianModes) {
  const Polynomial F = py("3/4*y1*y2*y3");
  const HessianVerdict s = hessian_nonzero(F, HessianMode::Symbolic);
  EXPECT_EQ(s.nonzero, Truth::Yes);
  ASSERT_TRUE(s.hessian);
  EXPECT_EQ(*s.hessian, py("27/32*y1*y2*y3"));

  ProbabilisticOptions opts;
  opts.seed = 3;
  const HessianVerdict p = hessian_nonzero(F, HessianMode::Probabilistic, opts);
  EXPECT_EQ(p.nonzero, Truth::Yes);
  ASSERT_TRUE(p.point && p.value);
  EXPECT_EQ(*p.value, evaluate(*s.hessian, *p.point));

  const Polynomial cone = py("y1^3");
  EXPECT_EQ(hessian_nonzero(cone, HessianMode::Symbolic).nonzero, Truth::No);
  const HessianVerdict u = hessian_nonzero(cone, HessianMode::Probabilistic, opts);
  EXPECT_EQ(u.nonzero, Truth::Unknown);
  ASSERT_TRUE(u.failure_probability_bound);
  EXPECT_EQ(*u.failure_probability_bound, schwartz_zippel_bound(3, 100, 5));

  EXPECT_THROW(hessian_nonzero(Polynomial(ys()), HessianMode::Symbolic), Error);
  EXPECT_EQ(parse_hessian_mode("symbolic"), HessianMode::Symbolic);
  EXPECT_THROW(parse_hessian_mode("numeric"), Error);
}

TEST(Lefschetz, EquivalenceHoldsOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(derive_seed(53, seed));
    const std::vector<unsigned> degrees = {2, 2, seed % 3 == 0 ? 3u : 2u};
    const ArtinianCI alg = random_algebra(degrees, rng);
    const EquivalenceReport r = theorem_equivalence_check(alg);
    EXPECT_EQ(r.agree, Truth::Yes) << "seed " << seed;
    EXPECT_TRUE(r.hypothesis_satisfied);
    EXPECT_EQ(r.slp.mode, CheckMode::Exact);
  }
}

TEST(Lefschetz, EquivalenceFlagsSmallN) {
  const ArtinianCI alg = algebra({"x1^2", "x2^3"}, 2);
  const EquivalenceReport r = theorem_equivalence_check(alg);
  EXPECT_FALSE(r.hypothesis_satisfied);
}

TEST(Lefschetz, MilnorExamples) {
  const ArtinianCI cubic = milnor_pipeline(px("x1^3 + x2^3 + x3^3"));
  EXPECT_EQ(cubic.socle_degree(), 3u);
  EXPECT_EQ(cubic.hilbert_function(), (std::vector<std::size_t>{1, 3, 3, 1}));
  EXPECT_TRUE(verify_macaulay_duality(cubic));
  EXPECT_EQ(theorem_equivalence_check(cubic).agree, Truth::Yes);

  const ArtinianCI quartic = milnor_pipeline(px("x1^4 + x2^4 + x3^4"));
  EXPECT_EQ(quartic.socle_degree(), 6u);

  EXPECT_EQ(milnor_error("x1^3 + x2^3 + x3^3 - 3*x1*x2*x3"), ErrorKind::SingularHypersurface);
  EXPECT_EQ(milnor_error("x1^2*x2"), ErrorKind::SingularHypersurface);
  EXPECT_EQ(milnor_error("x1^2 + x2^2 + x3^2"), ErrorKind::DegreeTooSmall);
  EXPECT_EQ(milnor_error("x1^3 + x2^2 + x3^3"), ErrorKind::NotHomogeneous);
  EXPECT_EQ(milnor_error("x1^3 + x2^3", 2), ErrorKind::InvalidArgument);
}

TEST(Lefschetz, HesseCubicSmoothForGenericParameter) {
  // x1^3 + x2^3 + x3^3 - 3 lambda x1 x2 x3 is singular exactly when lambda^3 = 1
  for (int lambda : {0, 2, -1, 3}) {
    const Polynomial f = px("x1^3 + x2^3 + x3^3") + px("x1*x2*x3") * Rational(-3 * lambda);
    const ArtinianCI alg = milnor_pipeline(f);
    EXPECT_EQ(alg.socle_degree(), 3u);
  }
}

TEST(Lefschetz, ProjectionIdentity) {
  Rng rng(54);
  for (const auto& degrees : std::vector<std::vector<unsigned>>{{2, 2, 2}, {2, 2, 3}, {2, 3, 3}}) {
    const ArtinianCI alg = random_algebra(degrees, rng);
    const Polynomial A = associated_form(alg);
    std::vector<Polynomial> partials;
    for (std::size_t i = 0; i < 3; ++i) partials.push_back(derivative(A, i));
    const auto ann = annihilator_component(alg);
    for (int k = 0; k < 5; ++k) {
      const auto point = random_point(3, 9, rng);
      EXPECT_TRUE(projection_identity_check(alg, point, partials));
      EXPECT_TRUE(projection_identity_check(alg, point, ann));
    }
  }
}

TEST(Lefschetz, VerdictsInvariantUnderLinearChange) {
  Rng rng(55);
  const ArtinianCI fermat_alg = algebra({"x1^2", "x2^2", "x3^2"});
  for (int trial = 0; trial < 10; ++trial) {
    const RationalMatrix P = random_invertible_matrix(3, 3, rng);
    std::vector<Polynomial> moved;
    for (const auto& f : fermat_alg.generators()) moved.push_back(substitute_linear(f, P));
    const ArtinianCI alg = build_algebra(moved);
    EXPECT_EQ(alg.hilbert_function(), fermat_alg.hilbert_function());
    const EquivalenceReport r = theorem_equivalence_check(alg);
    EXPECT_EQ(r.slp.holds, Truth::Yes);
    EXPECT_EQ(r.hessian.nonzero, Truth::Yes);
    EXPECT_TRUE(verify_macaulay_duality(alg));
  }
}

TEST(Lefschetz, FermatClosedForms) {
  for (unsigned d = 2; d <= 4; ++d) {
    const std::size_t n = 3;
    const ArtinianCI alg = build_algebra(fermat(n, d));
    EXPECT_EQ(alg.socle_degree(), n * (d - 1));
    const Polynomial A = associated_form(alg);
    const Monomial top({d - 1, d - 1, d - 1});
    // A_f = T!/((d-1)!^n d^n) (y1 y2 y3)^{d-1}
    Integer num = factorial(n * (d - 1));
    for (std::size_t i = 0; i < n; ++i) num /= factorial(d - 1);
    Rational c(num, d * d * d);
    c.canonicalize();
    EXPECT_EQ(A, Polynomial(alg.dual_alphabet(), top, c));
    const EquivalenceReport r = theorem_equivalence_check(alg);
    EXPECT_EQ(r.slp.holds, Truth::Yes);
    EXPECT_EQ(r.hessian.nonzero, Truth::Yes);
    EXPECT_EQ(r.agree, Truth::Yes);
  }
}

TEST(Lefschetz, ProbabilisticAgreesWithExact) {
  Rng rng(56);
  for (int trial = 0; trial < 15; ++trial) {
    const ArtinianCI alg = random_algebra({2, 2, trial % 2 == 0 ? 2u : 3u}, rng);
    const SlpVerdict exact = slp_degree1_exact(alg);
    ProbabilisticOptions opts;
    opts.seed = static_cast<std::uint64_t>(trial);
    const SlpVerdict prob = slp_degree1_probabilistic(alg, opts);
    // soundness: a probabilistic positive is never contradicted by the exact check
    if (prob.holds == Truth::Yes) EXPECT_EQ(exact.holds, Truth::Yes);
    if (exact.holds == Truth::Yes) EXPECT_EQ(prob.holds, Truth::Yes);
  }
}

TEST(Lefschetz, SlpDeterminantIsMultipleOfHessian) {
  // det(l^{T-2}: M_1 -> M_{T-1}) at l = a . x is a fixed multiple of Hess(A_f)(a)
  Rng rng(57);
  for (int trial = 0; trial < 12; ++trial) {
    const std::vector<unsigned> degrees = {2, 2 + static_cast<unsigned>(trial % 2),
                                           2 + static_cast<unsigned>(trial % 3 == 0)};
    const ArtinianCI alg = random_algebra(degrees, rng);
    const Polynomial D = *slp_degree1_exact(alg).determinant;
    const Polynomial H = hessian_determinant(associated_form(alg)).with_alphabet(D.alphabet());
    ASSERT_EQ(D.is_zero(), H.is_zero());
    if (D.is_zero()) continue;
    const Rational ratio = D.terms().front().coefficient / H.terms().front().coefficient;
    EXPECT_EQ(D, H * ratio);
  }
}
