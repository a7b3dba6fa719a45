#include <cilef/calculus.hpp>
#include <cilef/error.hpp>
#include <cilef/groebner.hpp>

#include <gtest/gtest.h>

#include <algorithm>

#include "test_util.hpp"

using namespace cilef;
using namespace cilef::testing;

namespace {

GroebnerBasis gb_of(const std::vector<std::string>& gens, OrderKind kind = OrderKind::Grevlex) {
  return groebner_basis(pxs(gens), MonomialOrder(kind, xs()));
}

// Coefficients of prod_j (1 + t + ... + t^{d_j - 1}).
std::vector<std::size_t> ci_hilbert_series(const std::vector<unsigned>& degrees) {
  std::vector<std::size_t> coeffs = {1};
  for (unsigned d : degrees) {
    std::vector<std::size_t> next(coeffs.size() + d - 1, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      for (unsigned k = 0; k < d; ++k) next[i + k] += coeffs[i];
    coeffs = next;
  }
  return coeffs;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  const Term& a = order.leading_term(f);
  const Term& b = order.leading_term(g);
  const Monomial l = lcm(a.monomial, b.monomial);
  return f.times_term(l / a.monomial, 1 / a.coefficient) -
         g.times_term(l / b.monomial, 1 / b.coefficient);
}

void expect_groebner_and_reduced(const GroebnerBasis& gb) {
  const auto& g = gb.generators();
  for (std::size_t i = 0; i < g.size(); ++i) {
    EXPECT_EQ(gb.order().leading_term(g[i]).coefficient, 1);
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      EXPECT_TRUE(normal_form(s_polynomial(g[i], g[j], gb.order()), gb).is_zero());
    }
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : g[i].terms()) EXPECT_FALSE(gb.leading_monomials()[j].divides(t.monomial));
    }
  }
}

}  // namespace

TEST(Groebner, Examples) {
  const GroebnerBasis fermat = gb_of({"x1^2", "x2^2", "x3^2"});
  EXPECT_EQ(fermat.generators(), pxs({"x1^2", "x2^2", "x3^2"}));

  EXPECT_EQ(gb_of({"x1 - x2", "x2"}).generators(), pxs({"x1", "x2"}));

  // S(x1^2 + x2^2, x1 x2) = x2 (x1^2 + x2^2) - x1 (x1 x2) = x2^3
  const GroebnerBasis g = gb_of({"x1^2 + x2^2", "x1*x2"});
  EXPECT_EQ(g.generators(), pxs({"x2^3", "x1^2 + x2^2", "x1*x2"}));
  expect_groebner_and_reduced(g);

  EXPECT_THROW(groebner_basis(std::vector<Polynomial>{}, MonomialOrder::grevlex(xs())), Error);
}

TEST(Groebner, NormalFormExamples) {
  const GroebnerBasis gb = gb_of({"x1^2", "x2^2", "x3^2"});
  EXPECT_TRUE(normal_form(px("x1^3"), gb).is_zero());
  EXPECT_EQ(normal_form(px("x1*x2*x3 + x1^2"), gb), px("x1*x2*x3"));
  // multinomial 3!/(1!1!1!) on the only squarefree cube monomial
  EXPECT_EQ(normal_form(px("(x1+x2+x3)^3"), gb), px("6*x1*x2*x3"));
}

TEST(Groebner, ZeroDimensionality) {
  EXPECT_TRUE(is_zero_dimensional(gb_of({"x1^2", "x2^2", "x3^2"})));
  EXPECT_FALSE(is_zero_dimensional(gb_of({"x1", "x2"})));
  const auto twisted = pxs({"x1^2 - x2*x3", "x2^2 - x1*x3", "x3^2 - x1*x2"});
  const std::vector<Rational> ones = {1, 1, 1};
  for (const auto& f : twisted) EXPECT_EQ(evaluate(f, ones), 0);  // common zero on x1=x2=x3
  const GroebnerBasis g = groebner_basis(twisted, MonomialOrder::grevlex(xs()));
  EXPECT_FALSE(is_zero_dimensional(g));
  EXPECT_THROW(hilbert_function(g, 3), Error);
}

TEST(Groebner, StandardMonomials) {
  const GroebnerBasis g222 = gb_of({"x1^2", "x2^2", "x3^2"});
  EXPECT_EQ(standard_monomials(g222, 2),
            (std::vector<Monomial>{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
  EXPECT_TRUE(standard_monomials(g222, 4).empty());
  EXPECT_THROW(standard_monomials(g222, -1), Error);
  const GroebnerBasis g223 = gb_of({"x1^2", "x2^2", "x3^3"});
  EXPECT_EQ(standard_monomials(g223, 3),
            (std::vector<Monomial>{{1, 1, 1}, {1, 0, 2}, {0, 1, 2}}));
}

TEST(Groebner, HilbertFunctionExamples) {
  EXPECT_EQ(hilbert_function(gb_of({"x1^2", "x2^2", "x3^2"}), 3), ci_hilbert_series({2, 2, 2}));
  EXPECT_EQ(hilbert_function(gb_of({"x1^2", "x2^2", "x3^2"}), 3),
            (std::vector<std::size_t>{1, 3, 3, 1}));
  EXPECT_EQ(hilbert_function(gb_of({"x1", "x2", "x3"}), 0), (std::vector<std::size_t>{1}));
  // (1+t)^2 (1+t+t^2) = 1 + 3t + 4t^2 + 3t^3 + t^4
  EXPECT_EQ(ci_hilbert_series({2, 2, 3}), (std::vector<std::size_t>{1, 3, 4, 3, 1}));
  EXPECT_EQ(hilbert_function(gb_of({"x1^2", "x2^2", "x3^3"}), 5),
            (std::vector<std::size_t>{1, 3, 4, 3, 1, 0}));
}

TEST(Groebner, CompleteIntersectionHilbertSeries) {
  Rng rng(21);
  for (unsigned a = 2; a <= 3; ++a) {
    for (unsigned b = 2; b <= 3; ++b) {
      for (unsigned c = 2; c <= 3; ++c) {
        const std::vector<unsigned> degrees = {a, b, c};
        for (OrderKind kind : {OrderKind::Grevlex, OrderKind::Lex}) {
          const RandomCI ci = random_complete_intersection(xs(), degrees, 5, rng, kind);
          const GroebnerBasis gb = groebner_basis(ci.generators, MonomialOrder(kind, xs()));
          expect_groebner_and_reduced(gb);
          const auto expected = ci_hilbert_series(degrees);
          const int T = static_cast<int>(a + b + c - 3);
          auto h = hilbert_function(gb, T + 1);
          EXPECT_EQ(h.back(), 0u);
          h.pop_back();
          EXPECT_EQ(h, expected);
          EXPECT_EQ(static_cast<int>(expected.size()) - 1, T);
        }
      }
    }
  }
}

TEST(Groebner, NormalFormIsMultiplicativeAndDetectsMembership) {
  Rng rng(22);
  const std::vector<unsigned> degrees = {2, 2, 3};
  const RandomCI ci = random_complete_intersection(xs(), degrees, 5, rng);
  const GroebnerBasis gb = groebner_basis(ci.generators, MonomialOrder::grevlex(xs()));
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial p = random_polynomial(xs(), 3, 4, rng);
    const Polynomial r = random_polynomial(xs(), 3, 4, rng);
    const Polynomial nf = normal_form(p, gb);
    EXPECT_EQ(normal_form(nf, gb), nf);
    EXPECT_EQ(normal_form(p * r, gb), normal_form(nf * normal_form(r, gb), gb));
    EXPECT_EQ(normal_form(p + r, gb), nf + normal_form(r, gb));
    Polynomial member(xs());
    for (const auto& f : ci.generators) member += f * random_polynomial(xs(), 2, 3, rng);
    EXPECT_TRUE(normal_form(member, gb).is_zero());
  }
}

TEST(Groebner, BasisIndependentOfGeneratorOrderAndScaling) {
  Rng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const std::vector<unsigned> degrees = {2, 2, 2};
    const RandomCI ci = random_complete_intersection(xs(), degrees, 5, rng);
    auto shuffled = ci.generators;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    shuffled[0] *= q("-3/7");
    shuffled[1] += shuffled[2] * q("2");
    for (OrderKind kind : {OrderKind::Grevlex, OrderKind::Lex}) {
      const MonomialOrder order(kind, xs());
      EXPECT_EQ(groebner_basis(ci.generators, order), groebner_basis(shuffled, order));
    }
  }
}
