#include <cilef/calculus.hpp>
#include <cilef/error.hpp>
#include <cilef/inverse_systems.hpp>

#include <map>

namespace cilef {

namespace {

AlphabetPtr default_operators(const Polynomial& F) {
  return VariableAlphabet::indexed("x", F.num_vars(), Side::S);
}

unsigned form_degree(const Polynomial& F) {
  if (F.is_zero()) throw Error(ErrorKind::InvalidArgument, "the zero form has no apolar ideal");
  auto d = F.homogeneous_degree();
  if (!d) throw Error(ErrorKind::NotHomogeneous, "apolarity needs a homogeneous form");
  return *d;
}

std::vector<Polynomial> rows_to_polynomials(const RationalMatrix& rows,
                                            const std::vector<Monomial>& basis,
                                            const AlphabetPtr& alphabet) {
  std::vector<Polynomial> out;
  for (Index r = 0; r < rows.rows(); ++r) {
    std::vector<Term> terms;
    for (Index c = 0; c < rows.cols(); ++c) {
      terms.push_back({basis[static_cast<std::size_t>(c)], rows(r, c)});
    }
    out.emplace_back(alphabet, std::move(terms));
  }
  return out;
}

std::vector<Polynomial> columns_to_polynomials(const RationalMatrix& cols,
                                               const std::vector<Monomial>& basis,
                                               const AlphabetPtr& alphabet) {
  return rows_to_polynomials(cols.transpose(), basis, alphabet);
}

// a! = prod a_i!
Integer multi_factorial(const Monomial& m) {
  Integer out = 1;
  for (auto e : m.exponents()) out *= factorial(e);
  return out;
}

}  // namespace

Polynomial associated_form(const ArtinianCI& alg) {
  const unsigned T = alg.socle_degree();
  const Integer t_factorial = factorial(T);
  std::vector<Term> terms;
  for (const auto& m : monomials_of_degree(alg.num_vars(), T)) {
    const Rational w = omega(alg, Polynomial(alg.alphabet(), m));
    if (sgn(w) == 0) continue;
    terms.push_back({m, w * Rational(t_factorial) / Rational(multi_factorial(m))});
  }
  return Polynomial(alg.dual_alphabet(), std::move(terms));
}

Catalecticant catalecticant(const Polynomial& F, unsigned k) {
  const unsigned T = form_degree(F);
  if (k > T) throw Error(ErrorKind::DegreeOutOfRange, "catalecticant degree exceeds the form degree");
  const std::size_t n = F.num_vars();
  Catalecticant cat;
  cat.form = F;
  cat.degree = k;
  cat.col_basis = monomials_of_degree(n, k);
  cat.row_basis = monomials_of_degree(n, T - k);
  std::map<Monomial, Index, GrevlexGreater> row_index;
  for (std::size_t r = 0; r < cat.row_basis.size(); ++r) {
    row_index.emplace(cat.row_basis[r], static_cast<Index>(r));
  }
  cat.matrix = RationalMatrix(static_cast<Index>(cat.row_basis.size()),
                              static_cast<Index>(cat.col_basis.size()));
  cat.matrix.setZero();
  // x^a o F = sum_b c_b b!/(b-a)! y^(b-a)
  for (std::size_t c = 0; c < cat.col_basis.size(); ++c) {
    const Monomial& a = cat.col_basis[c];
    for (const auto& t : F.terms()) {
      if (!a.divides(t.monomial)) continue;
      Integer falling = 1;
      for (std::size_t i = 0; i < n; ++i) {
        for (Exponent j = 0; j < a[i]; ++j) falling *= t.monomial[i] - j;
      }
      cat.matrix(row_index.at(t.monomial / a), static_cast<Index>(c)) +=
          t.coefficient * Rational(falling);
    }
  }
  return cat;
}

ApolarComponent apolar_ideal_component(const Polynomial& F, unsigned k,
                                       const AlphabetPtr& operators) {
  const unsigned T = form_degree(F);
  if (operators->size() != F.num_vars()) {
    throw Error(ErrorKind::AlphabetMismatch, "operator alphabet has the wrong size");
  }
  ApolarComponent out;
  out.degree = k;
  const auto monomials = monomials_of_degree(F.num_vars(), k);
  if (k > T) {
    out.whole_space = true;
    for (const auto& m : monomials) out.basis.emplace_back(operators, m);
    return out;
  }
  const Catalecticant cat = catalecticant(F, k);
  out.basis = columns_to_polynomials(kernel(cat.matrix), cat.col_basis, operators);
  return out;
}

ApolarComponent apolar_ideal_component(const Polynomial& F, unsigned k) {
  return apolar_ideal_component(F, k, default_operators(F));
}

RationalMatrix coefficient_matrix(std::span<const Polynomial> polys,
                                  std::span<const Monomial> basis) {
  std::map<Monomial, Index, GrevlexGreater> index;
  for (std::size_t c = 0; c < basis.size(); ++c) index.emplace(basis[c], static_cast<Index>(c));
  RationalMatrix M(static_cast<Index>(polys.size()), static_cast<Index>(basis.size()));
  M.setZero();
  for (std::size_t r = 0; r < polys.size(); ++r) {
    for (const auto& t : polys[r].terms()) {
      auto it = index.find(t.monomial);
      if (it == index.end()) {
        throw Error(ErrorKind::DegreeOutOfRange, "polynomial has a term outside the basis");
      }
      M(static_cast<Index>(r), it->second) = t.coefficient;
    }
  }
  return M;
}

std::vector<Polynomial> ideal_component(std::span<const Polynomial> gens, unsigned k) {
  if (gens.empty()) return {};
  const AlphabetPtr& alphabet = gens.front().alphabet();
  const std::size_t n = gens.front().num_vars();
  std::vector<Polynomial> products;
  for (const auto& g : gens) {
    auto d = g.homogeneous_degree();
    if (!d) throw Error(ErrorKind::NotHomogeneous, "ideal components need homogeneous generators");
    if (*d > k) continue;
    for (const auto& m : monomials_of_degree(n, k - *d)) products.push_back(g.times_term(m, 1));
  }
  const auto basis = monomials_of_degree(n, k);
  return rows_to_polynomials(rref(coefficient_matrix(products, basis)), basis, alphabet);
}

bool same_span(std::span<const Polynomial> a, std::span<const Polynomial> b, std::size_t num_vars,
               unsigned k) {
  const auto basis = monomials_of_degree(num_vars, k);
  return same_row_space(coefficient_matrix(a, basis), coefficient_matrix(b, basis));
}

bool apolar_ideal_matches(const Polynomial& F, std::span<const Polynomial> gens,
                          unsigned max_degree) {
  if (gens.empty()) return false;
  const AlphabetPtr& operators = gens.front().alphabet();
  for (unsigned k = 0; k <= max_degree; ++k) {
    const auto apolar = apolar_ideal_component(F, k, operators);
    const auto ideal = ideal_component(gens, k);
    if (!same_span(apolar.basis, ideal, F.num_vars(), k)) return false;
  }
  return true;
}

bool verify_macaulay_duality(const ArtinianCI& alg) {
  return apolar_ideal_matches(associated_form(alg), alg.generators(), alg.socle_degree() + 1);
}

std::vector<Polynomial> annihilator_component(const ArtinianCI& alg) {
  const unsigned T = alg.socle_degree();
  const auto J = ideal_component(alg.generators(), T - 1);
  const auto basis = monomials_of_degree(alg.num_vars(), T - 1);
  // x^a o y^b = a! [a == b] in equal degrees
  RationalMatrix pairing = coefficient_matrix(J, basis);
  for (Index c = 0; c < pairing.cols(); ++c) {
    const Rational scale(multi_factorial(basis[static_cast<std::size_t>(c)]));
    for (Index r = 0; r < pairing.rows(); ++r) pairing(r, c) *= scale;
  }
  return columns_to_polynomials(kernel(pairing), basis, alg.dual_alphabet());
}

bool verify_partials_span(const ArtinianCI& alg) {
  const Polynomial A = associated_form(alg);
  std::vector<Polynomial> partials;
  for (std::size_t i = 0; i < alg.num_vars(); ++i) partials.push_back(derivative(A, i));
  const auto annihilator = annihilator_component(alg);
  return same_span(partials, annihilator, alg.num_vars(), alg.socle_degree() - 1);
}

std::vector<Polynomial> colon_by_variables(const Polynomial& F, const AlphabetPtr& operators) {
  const unsigned T = form_degree(F);
  if (T == 0) throw Error(ErrorKind::DegreeOutOfRange, "colon ideal of a constant");
  const std::size_t n = F.num_vars();
  // Ann(F)_T is the kernel of the functional h -> h o F on S_T.
  const Catalecticant top = catalecticant(F, T);
  std::map<Monomial, Index, GrevlexGreater> top_index;
  for (std::size_t c = 0; c < top.col_basis.size(); ++c) {
    top_index.emplace(top.col_basis[c], static_cast<Index>(c));
  }
  const auto source = monomials_of_degree(n, T - 1);
  // row i: g -> (x_i g) o F
  RationalMatrix conditions(static_cast<Index>(n), static_cast<Index>(source.size()));
  for (std::size_t i = 0; i < n; ++i) {
    const Monomial xi = Monomial::variable(n, i);
    for (std::size_t c = 0; c < source.size(); ++c) {
      conditions(static_cast<Index>(i), static_cast<Index>(c)) =
          top.matrix(0, top_index.at(source[c] * xi));
    }
  }
  return columns_to_polynomials(kernel(conditions), source, operators);
}

bool verify_colon_identity(const ArtinianCI& alg) {
  const unsigned T = alg.socle_degree();
  const auto colon = colon_by_variables(associated_form(alg), alg.alphabet());
  const auto J = ideal_component(alg.generators(), T - 1);
  return same_span(colon, J, alg.num_vars(), T - 1);
}

}  // namespace cilef
