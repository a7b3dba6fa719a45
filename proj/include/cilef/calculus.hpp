#pragma once

#include <cilef/linalg.hpp>
#include <cilef/polynomial.hpp>

#include <span>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<cilef::Polynomial> : GenericNumTraits<cilef::Polynomial> {
  typedef cilef::Polynomial Real;
  typedef cilef::Polynomial NonInteger;
  typedef cilef::Polynomial Nested;
  typedef cilef::Polynomial Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 1000,
    MulCost = 10000
  };
};

}  // namespace Eigen

namespace cilef {

using PolynomialMatrix = DenseMatrix<Polynomial>;

Polynomial derivative(const Polynomial& p, std::size_t var);

Rational evaluate(const Polynomial& p, std::span<const Rational> point);

/// g(d/dy_1, ..., d/dy_n) applied to F. g must live on the S side and F on the
/// R side, with equal variable counts.
Polynomial polar_apply(const Polynomial& g, const Polynomial& F);

/// Linear change of variables: x_i -> sum_j P(i, j) x_j.
Polynomial substitute_linear(const Polynomial& p, const RationalMatrix& P);

/// Matrix with entry (j, i) = d f_j / d x_i.
PolynomialMatrix jacobian_matrix(std::span<const Polynomial> f);
Polynomial jacobian_determinant(std::span<const Polynomial> f);

PolynomialMatrix hessian_matrix(const Polynomial& F);
Polynomial hessian_determinant(const Polynomial& F);

/// Second partials of F evaluated at a point.
RationalMatrix hessian_at(const Polynomial& F, std::span<const Rational> point);

}  // namespace cilef
