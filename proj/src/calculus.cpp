#include <cilef/calculus.hpp>
#include <cilef/error.hpp>

#include <map>

namespace cilef {

Polynomial derivative(const Polynomial& p, std::size_t var) {
  if (var >= p.num_vars()) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    const Exponent e = t.monomial[var];
    if (e == 0) continue;
    std::vector<Exponent> exps(t.monomial.exponents().begin(), t.monomial.exponents().end());
    exps[var] -= 1;
    terms.push_back({Monomial(std::move(exps)), t.coefficient * e});
  }
  return Polynomial(p.alphabet(), std::move(terms));
}

Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
  if (point.size() != p.num_vars() && !p.is_zero()) {
    throw Error(ErrorKind::InvalidArgument, "evaluation point has the wrong dimension");
  }
  // powers[i][e] = point[i]^e, filled lazily
  std::vector<std::vector<Rational>> powers(point.size());
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational value = t.coefficient;
    for (std::size_t i = 0; i < point.size(); ++i) {
      const Exponent e = t.monomial[i];
      if (e == 0) continue;
      auto& row = powers[i];
      if (row.empty()) row.push_back(1);
      while (row.size() <= e) row.push_back(row.back() * point[i]);
      value *= row[e];
    }
    sum += value;
  }
  return sum;
}

Polynomial polar_apply(const Polynomial& g, const Polynomial& F) {
  if (g.is_zero() || F.is_zero()) return Polynomial(F.alphabet());
  if (g.alphabet()->side() != Side::S || F.alphabet()->side() != Side::R) {
    throw Error(ErrorKind::AlphabetMismatch, "polar_apply needs an S-side operator and an R-side form");
  }
  if (g.num_vars() != F.num_vars()) {
    throw Error(ErrorKind::AlphabetMismatch, "operator and form have different variable counts");
  }
  const std::size_t n = F.num_vars();
  std::map<Monomial, Rational, GrevlexGreater> acc;
  for (const auto& s : g.terms()) {
    for (const auto& t : F.terms()) {
      if (!s.monomial.divides(t.monomial)) continue;
      // x^a o y^b = b!/(b-a)! y^(b-a)
      Integer falling = 1;
      for (std::size_t i = 0; i < n; ++i) {
        for (Exponent k = 0; k < s.monomial[i]; ++k) falling *= t.monomial[i] - k;
      }
      Rational c = s.coefficient * t.coefficient * Rational(falling);
      auto [it, inserted] = acc.try_emplace(t.monomial / s.monomial, c);
      if (!inserted) it->second += c;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) terms.push_back({m, std::move(c)});
  return Polynomial(F.alphabet(), std::move(terms));
}

Polynomial substitute_linear(const Polynomial& p, const RationalMatrix& P) {
  const std::size_t n = p.num_vars();
  if (p.is_zero()) return p;
  if (static_cast<std::size_t>(P.rows()) != n || static_cast<std::size_t>(P.cols()) != n) {
    throw Error(ErrorKind::InvalidArgument, "substitution matrix must be n x n");
  }
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = P(static_cast<Index>(i), static_cast<Index>(j));
    images.push_back(Polynomial::linear_form(p.alphabet(), row));
  }
  // powers[i][e] = images[i]^e, filled lazily
  std::vector<std::vector<Polynomial>> powers(n);
  Polynomial out(p.alphabet());
  for (const auto& t : p.terms()) {
    Polynomial value = Polynomial::constant(p.alphabet(), t.coefficient);
    for (std::size_t i = 0; i < n; ++i) {
      const Exponent e = t.monomial[i];
      if (e == 0) continue;
      auto& row = powers[i];
      if (row.empty()) row.push_back(Polynomial::constant(p.alphabet(), 1));
      while (row.size() <= e) row.push_back(row.back() * images[i]);
      value = value * row[e];
    }
    out += value;
  }
  return out;
}

PolynomialMatrix jacobian_matrix(std::span<const Polynomial> f) {
  if (f.empty()) throw Error(ErrorKind::InvalidArgument, "empty polynomial list");
  const AlphabetPtr& alphabet = f.front().alphabet();
  const std::size_t n = alphabet ? alphabet->size() : 0;
  if (f.size() != n) {
    throw Error(ErrorKind::InvalidArgument, "Jacobian needs as many polynomials as variables");
  }
  PolynomialMatrix J(static_cast<Index>(n), static_cast<Index>(n));
  for (std::size_t j = 0; j < n; ++j) {
    if (!same_alphabet(f[j].alphabet(), alphabet) && !f[j].is_zero()) {
      throw Error(ErrorKind::AlphabetMismatch, "Jacobian entries over different variable sets");
    }
    for (std::size_t i = 0; i < n; ++i) {
      J(static_cast<Index>(j), static_cast<Index>(i)) =
          f[j].is_zero() ? Polynomial(alphabet) : derivative(f[j], i);
    }
  }
  return J;
}

Polynomial jacobian_determinant(std::span<const Polynomial> f) {
  Polynomial det = cofactor_determinant(jacobian_matrix(f));
  return det.alphabet() ? det : det.with_alphabet(f.front().alphabet());
}

PolynomialMatrix hessian_matrix(const Polynomial& F) {
  const std::size_t n = F.num_vars();
  PolynomialMatrix H(static_cast<Index>(n), static_cast<Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial di = derivative(F, i);
    for (std::size_t j = i; j < n; ++j) {
      Polynomial dij = derivative(di, j);
      H(static_cast<Index>(j), static_cast<Index>(i)) = dij;
      H(static_cast<Index>(i), static_cast<Index>(j)) = std::move(dij);
    }
  }
  return H;
}

Polynomial hessian_determinant(const Polynomial& F) {
  if (F.num_vars() == 0) throw Error(ErrorKind::InvalidArgument, "Hessian needs at least one variable");
  Polynomial det = cofactor_determinant(hessian_matrix(F));
  return det.alphabet() ? det : det.with_alphabet(F.alphabet());
}

RationalMatrix hessian_at(const Polynomial& F, std::span<const Rational> point) {
  const Index n = static_cast<Index>(F.num_vars());
  const PolynomialMatrix H = hessian_matrix(F);
  RationalMatrix out(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) out(i, j) = evaluate(H(i, j), point);
  }
  return out;
}

}  // namespace cilef
