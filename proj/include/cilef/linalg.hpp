#pragma once

// Exact dense linear algebra on Eigen matrices with arbitrary-precision scalars.
// Elimination is fraction-free (Bareiss): rational rows are first scaled to
// integer rows, which leaves rank, row space and kernel unchanged.

#include <cilef/error.hpp>
#include <cilef/rational.hpp>

#include <Eigen/Core>

#include <bit>
#include <cstdint>
#include <type_traits>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  typedef mpq_class Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpq_class NonInteger;
  typedef mpz_class Nested;
  typedef mpz_class Literal;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 100,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace cilef {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = DenseMatrix<Rational>;
using IntegerMatrix = DenseMatrix<Integer>;
using RationalVector = DenseVector<Rational>;

using Eigen::Index;

template <class Scalar>
struct Echelon {
  DenseMatrix<Scalar> matrix;
  std::vector<Index> pivot_columns;
  int sign = 1;  // parity of the row swaps

  Index rank() const { return static_cast<Index>(pivot_columns.size()); }
};

/// Fraction-free row echelon form. Scalar must be an exact integral domain;
/// every division performed is exact.
template <class Derived>
Echelon<typename Derived::Scalar> fraction_free_echelon(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  Echelon<Scalar> e;
  e.matrix = a;
  auto& m = e.matrix;
  Scalar previous = 1;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      m.row(pivot).swap(m.row(row));
      e.sign = -e.sign;
    }
    for (Index i = row + 1; i < m.rows(); ++i) {
      for (Index j = col + 1; j < m.cols(); ++j) {
        Scalar t = m(row, col) * m(i, j) - m(i, col) * m(row, j);
        m(i, j) = t / previous;
      }
      m(i, col) = 0;
    }
    previous = m(row, col);
    e.pivot_columns.push_back(col);
    ++row;
  }
  return e;
}

/// Scales every row by the lcm of its denominators. scales[i] receives the factor.
inline IntegerMatrix integer_rows(const RationalMatrix& a, std::vector<Integer>* scales = nullptr) {
  IntegerMatrix out(a.rows(), a.cols());
  if (scales) scales->assign(static_cast<std::size_t>(a.rows()), Integer(1));
  for (Index i = 0; i < a.rows(); ++i) {
    Integer d = 1;
    for (Index j = 0; j < a.cols(); ++j) {
      mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), a(i, j).get_den_mpz_t());
    }
    for (Index j = 0; j < a.cols(); ++j) {
      Integer num = a(i, j).get_num() * (d / a(i, j).get_den());
      out(i, j) = num;
    }
    if (scales) (*scales)[static_cast<std::size_t>(i)] = d;
  }
  return out;
}

inline Index rank(const RationalMatrix& a) {
  return fraction_free_echelon(integer_rows(a)).rank();
}

inline Rational determinant(const RationalMatrix& a) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  }
  const Index n = a.rows();
  if (n == 0) return 1;
  std::vector<Integer> scales;
  auto e = fraction_free_echelon(integer_rows(a, &scales));
  if (e.rank() < n) return 0;
  Rational det(e.matrix(n - 1, n - 1) * e.sign);
  for (const auto& s : scales) det /= s;
  det.canonicalize();
  return det;
}

/// Reduced row echelon form over Q with zero rows dropped.
inline RationalMatrix rref(const RationalMatrix& a) {
  auto e = fraction_free_echelon(integer_rows(a));
  const Index r = e.rank();
  RationalMatrix out(r, a.cols());
  for (Index i = 0; i < r; ++i) {
    for (Index j = 0; j < a.cols(); ++j) out(i, j) = Rational(e.matrix(i, j));
  }
  for (Index i = r - 1; i >= 0; --i) {
    const Index pc = e.pivot_columns[static_cast<std::size_t>(i)];
    const Rational p = out(i, pc);
    for (Index j = pc; j < a.cols(); ++j) out(i, j) /= p;
    for (Index k = 0; k < i; ++k) {
      const Rational f = out(k, pc);
      if (f == 0) continue;
      for (Index j = pc; j < a.cols(); ++j) out(k, j) -= f * out(i, j);
    }
  }
  return out;
}

/// Basis of the right kernel as columns. Each column has first nonzero entry 1.
inline RationalMatrix kernel(const RationalMatrix& a) {
  const RationalMatrix r = rref(a);
  std::vector<Index> pivots;
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (Index i = 0; i < r.rows(); ++i) {
    Index j = 0;
    while (r(i, j) == 0) ++j;
    pivots.push_back(j);
    is_pivot[static_cast<std::size_t>(j)] = true;
  }
  RationalMatrix out(a.cols(), a.cols() - r.rows());
  Index c = 0;
  for (Index free = 0; free < a.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    for (Index j = 0; j < a.cols(); ++j) out(j, c) = 0;
    out(free, c) = 1;
    for (Index i = 0; i < r.rows(); ++i) out(pivots[static_cast<std::size_t>(i)], c) = -r(i, free);
    Index lead = 0;
    while (out(lead, c) == 0) ++lead;
    const Rational s = out(lead, c);
    for (Index j = lead; j < a.cols(); ++j) out(j, c) /= s;
    ++c;
  }
  return out;
}

template <class DerivedA, class DerivedB>
bool entries_equal(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      if (!(a(i, j) == b(i, j))) return false;
    }
  }
  return true;
}

/// Row spaces compared through their reduced echelon forms.
inline bool same_row_space(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.cols()) return false;
  return entries_equal(rref(a), rref(b));
}

/// Determinant over any commutative ring by cofactor expansion, memoizing the
/// minors of the leading rows by column subset. Costs O(n 2^n) ring operations.
template <class Derived>
typename Derived::Scalar cofactor_determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Index n = m.rows();
  if (m.cols() != n) {
    throw Error(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  }
  if (n > 20) throw Error(ErrorKind::TooManyVariables, "cofactor expansion limited to 20x20");
  if (n == 0) {
    if constexpr (std::is_constructible_v<Scalar, int>) {
      return Scalar(1);
    } else {
      throw Error(ErrorKind::InvalidArgument, "empty symbolic determinant");
    }
  }
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<Scalar> minors(std::size_t{1} << n);
  for (Index j = 0; j < n; ++j) minors[std::size_t{1} << j] = m(0, j);
  for (Index k = 2; k <= n; ++k) {
    const Index row = k - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      if (std::popcount(mask) != k) continue;
      Scalar acc{};
      int position = 0;  // index of column j within the subset
      for (Index j = 0; j < n; ++j) {
        if (!(mask & (std::uint32_t{1} << j))) continue;
        const auto& sub = minors[mask & ~(std::uint32_t{1} << j)];
        if (!(m(row, j) == Scalar{}) && !(sub == Scalar{})) {
          Scalar product = m(row, j) * sub;
          if ((row + position) % 2 == 0) {
            acc += product;
          } else {
            acc -= product;
          }
        }
        ++position;
      }
      minors[mask] = std::move(acc);
    }
  }
  return minors[full];
}

}  // namespace cilef
