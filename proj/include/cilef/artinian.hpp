#pragma once

#include <cilef/groebner.hpp>
#include <cilef/linalg.hpp>
#include <cilef/polynomial.hpp>

#include <map>
#include <span>
#include <vector>

namespace cilef {

/// The graded Artinian complete intersection M(f) = S / (f_1, ..., f_n),
/// with standard-monomial bases in every degree and the socle functional
/// normalized so that the Jacobian determinant maps to 1.
class ArtinianCI {
 public:
  std::size_t num_vars() const noexcept { return generators_.size(); }
  const AlphabetPtr& alphabet() const noexcept { return gb_.order().alphabet(); }
  /// y_1..y_n, the dual variables on which associated forms live.
  const AlphabetPtr& dual_alphabet() const noexcept { return dual_; }

  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  const std::vector<unsigned>& degrees() const noexcept { return degrees_; }
  const GroebnerBasis& groebner() const noexcept { return gb_; }
  const MonomialOrder& order() const noexcept { return gb_.order(); }

  unsigned socle_degree() const noexcept { return socle_degree_; }
  /// Standard monomials of M_k; empty outside 0..T.
  const std::vector<Monomial>& basis(int degree) const;
  std::vector<std::size_t> hilbert_function() const;

  const Polynomial& jacobian() const noexcept { return jacobian_; }
  const Polynomial& jacobian_normal_form() const noexcept { return jacobian_nf_; }
  /// The unique degree-T standard monomial.
  const Monomial& socle_monomial() const noexcept { return graded_bases_.back().front(); }
  /// Coefficient of the socle monomial in the normal form of the Jacobian.
  const Rational& socle_scale() const noexcept { return socle_scale_; }

  /// Set when n < 3, outside the hypothesis of the degree-1 SLP/Hessian equivalence.
  bool hypothesis_warning() const noexcept { return num_vars() < 3; }

  Polynomial reduce(const Polynomial& p) const { return normal_form(p, gb_); }

  /// Coordinates of the image of a homogeneous degree-k polynomial in the
  /// basis of M_k.
  RationalVector coordinates(const Polynomial& p, int degree) const;

  /// Position of a standard monomial in basis(degree), or -1.
  Index basis_index(const Monomial& m) const;

 private:
  friend ArtinianCI build_algebra(std::vector<Polynomial>, const MonomialOrder&);

  ArtinianCI(GroebnerBasis gb) : gb_(std::move(gb)) {}

  std::vector<Polynomial> generators_;
  std::vector<unsigned> degrees_;
  GroebnerBasis gb_;
  AlphabetPtr dual_;
  unsigned socle_degree_ = 0;
  std::vector<std::vector<Monomial>> graded_bases_;
  std::vector<std::map<Monomial, Index, GrevlexGreater>> basis_lookup_;
  Polynomial jacobian_;
  Polynomial jacobian_nf_;
  Rational socle_scale_;
};

/// Validates that f is n forms of degree >= 2 in n variables generating a
/// zero-dimensional ideal and builds the algebra.
/// Errors: InvalidArgument, NotHomogeneous, DegreeTooSmall, NotZeroDimensional,
/// JacobianInSocleFailure.
ArtinianCI build_algebra(std::vector<Polynomial> f, const MonomialOrder& order);
ArtinianCI build_algebra(std::vector<Polynomial> f);

/// The socle functional: lambda / mu where NF(p) = lambda * m0.
Rational omega(const ArtinianCI& alg, const Polynomial& p);

/// Matrix of p -> l^power * p from M_k to M_{k+power}, columns indexed by basis(k).
RationalMatrix multiplication_matrix(const ArtinianCI& alg, const Polynomial& l, unsigned power,
                                     int source_degree);

/// Basis of {p : x_i p = 0 for all i}, computed degree by degree.
std::vector<Polynomial> socle_basis(const ArtinianCI& alg);

/// True iff the socle is one-dimensional and sits in degree T.
bool socle_check(const ArtinianCI& alg);

}  // namespace cilef
