#pragma once

#include <cilef/artinian.hpp>
#include <cilef/linalg.hpp>
#include <cilef/polynomial.hpp>

#include <span>
#include <vector>

namespace cilef {

/// A_f(y) = omega((y_1 x_1 + ... + y_n x_n)^T)
///        = sum_{|a| = T} (T! / a!) omega(x^a) y^a.
Polynomial associated_form(const ArtinianCI& alg);

/// Matrix of the pairing S_k x R_T -> R_{T-k}, g -> g o F.
struct Catalecticant {
  RationalMatrix matrix;             // rows: row_basis, columns: col_basis
  std::vector<Monomial> row_basis;   // degree T-k monomials of R
  std::vector<Monomial> col_basis;   // degree k monomials of S
  Polynomial form;
  unsigned degree = 0;               // k
};

Catalecticant catalecticant(const Polynomial& F, unsigned k);

struct ApolarComponent {
  unsigned degree = 0;
  std::vector<Polynomial> basis;
  bool whole_space = false;  // k > deg F: every operator annihilates F
};

/// Basis of Ann(F)_k from the catalecticant kernel. operators is the S-side
/// alphabet; the default is x1..xn.
ApolarComponent apolar_ideal_component(const Polynomial& F, unsigned k,
                                       const AlphabetPtr& operators);
ApolarComponent apolar_ideal_component(const Polynomial& F, unsigned k);

/// Coefficient rows of homogeneous polynomials over a fixed monomial basis.
RationalMatrix coefficient_matrix(std::span<const Polynomial> polys,
                                  std::span<const Monomial> basis);

/// Reduced echelon basis of the degree-k piece of the ideal generated by gens,
/// spanned by the products m * f_j.
std::vector<Polynomial> ideal_component(std::span<const Polynomial> gens, unsigned k);

/// Equality of spans inside the degree-k piece.
bool same_span(std::span<const Polynomial> a, std::span<const Polynomial> b,
               std::size_t num_vars, unsigned k);

/// Ann(F)_k == (gens)_k for every 0 <= k <= max_degree.
bool apolar_ideal_matches(const Polynomial& F, std::span<const Polynomial> gens,
                          unsigned max_degree);

/// Ann(A_f) == J(f) in every degree 0..T+1.
bool verify_macaulay_duality(const ArtinianCI& alg);

/// Basis of {F in R_{T-1} : g o F = 0 for all g in J(f)_{T-1}}.
std::vector<Polynomial> annihilator_component(const ArtinianCI& alg);

/// span{dA_f/dy_i} == annihilator_component(alg).
bool verify_partials_span(const ArtinianCI& alg);

/// Ann(F)_T : S_1 = {g in S_{T-1} : x_i g o F = 0 for all i}, T = deg F.
std::vector<Polynomial> colon_by_variables(const Polynomial& F, const AlphabetPtr& operators);

/// J(f)_{T-1} == Ann(A_f)_T : S_1.
bool verify_colon_identity(const ArtinianCI& alg);

}  // namespace cilef
