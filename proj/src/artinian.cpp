#include <cilef/artinian.hpp>
#include <cilef/calculus.hpp>
#include <cilef/error.hpp>

#include <numeric>

namespace cilef {

const std::vector<Monomial>& ArtinianCI::basis(int degree) const {
  static const std::vector<Monomial> empty;
  if (degree < 0 || degree > static_cast<int>(socle_degree_)) return empty;
  return graded_bases_[static_cast<std::size_t>(degree)];
}

std::vector<std::size_t> ArtinianCI::hilbert_function() const {
  std::vector<std::size_t> out;
  for (const auto& b : graded_bases_) out.push_back(b.size());
  return out;
}

Index ArtinianCI::basis_index(const Monomial& m) const {
  const auto d = static_cast<std::size_t>(m.degree());
  if (d >= basis_lookup_.size()) return -1;
  auto it = basis_lookup_[d].find(m);
  return it == basis_lookup_[d].end() ? -1 : it->second;
}

RationalVector ArtinianCI::coordinates(const Polynomial& p, int degree) const {
  const auto& b = basis(degree);
  RationalVector v(static_cast<Index>(b.size()));
  for (Index i = 0; i < v.size(); ++i) v(i) = 0;
  if (p.is_zero()) return v;
  auto hd = p.homogeneous_degree();
  if (!hd || static_cast<int>(*hd) != degree) {
    throw Error(ErrorKind::DegreeOutOfRange,
                "expected a homogeneous polynomial of degree " + std::to_string(degree));
  }
  const Polynomial nf = reduce(p);
  for (const auto& t : nf.terms()) {
    const Index i = basis_index(t.monomial);
    if (i < 0) throw Error(ErrorKind::InternalError, "normal form left a non-standard monomial");
    v(i) = t.coefficient;
  }
  return v;
}

ArtinianCI build_algebra(std::vector<Polynomial> f, const MonomialOrder& order) {
  const AlphabetPtr& alphabet = order.alphabet();
  const std::size_t n = alphabet->size();
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "need at least two variables");
  if (f.size() != n) {
    throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(n) + " generators, got " +
                                                std::to_string(f.size()));
  }
  std::vector<unsigned> degrees;
  for (std::size_t j = 0; j < n; ++j) {
    const std::string which = "generator " + std::to_string(j + 1);
    if (!f[j].is_zero() && !same_alphabet(f[j].alphabet(), alphabet)) {
      throw Error(ErrorKind::AlphabetMismatch, which);
    }
    auto d = f[j].homogeneous_degree();
    if (!d) throw Error(ErrorKind::NotHomogeneous, which);
    if (*d < 2) throw Error(ErrorKind::DegreeTooSmall, which + " has degree " + std::to_string(*d));
    degrees.push_back(*d);
  }

  ArtinianCI alg(groebner_basis(f, order));
  if (!is_zero_dimensional(alg.gb_)) {
    throw Error(ErrorKind::NotZeroDimensional, "the generators have a common projective zero");
  }
  alg.generators_ = std::move(f);
  alg.degrees_ = degrees;
  alg.dual_ = VariableAlphabet::indexed("y", n, Side::R);
  alg.socle_degree_ = std::accumulate(degrees.begin(), degrees.end(), 0u) - static_cast<unsigned>(n);

  const int T = static_cast<int>(alg.socle_degree_);
  for (int k = 0; k <= T; ++k) {
    alg.graded_bases_.push_back(standard_monomials(alg.gb_, k));
    std::map<Monomial, Index, GrevlexGreater> lookup;
    for (std::size_t i = 0; i < alg.graded_bases_.back().size(); ++i) {
      lookup.emplace(alg.graded_bases_.back()[i], static_cast<Index>(i));
    }
    alg.basis_lookup_.push_back(std::move(lookup));
  }
  if (alg.graded_bases_.back().size() != 1 || !standard_monomials(alg.gb_, T + 1).empty()) {
    throw Error(ErrorKind::InternalError, "top graded piece is not one-dimensional in degree T");
  }

  alg.jacobian_ = jacobian_determinant(alg.generators_);
  alg.jacobian_nf_ = alg.reduce(alg.jacobian_);
  if (alg.jacobian_nf_.is_zero()) {
    throw Error(ErrorKind::JacobianInSocleFailure, "the Jacobian determinant lies in the ideal");
  }
  alg.socle_scale_ = alg.jacobian_nf_.coefficient(alg.socle_monomial());
  if (sgn(alg.socle_scale_) == 0 || alg.jacobian_nf_.size() != 1) {
    throw Error(ErrorKind::JacobianInSocleFailure, "the Jacobian does not reduce to the socle");
  }
  return alg;
}

ArtinianCI build_algebra(std::vector<Polynomial> f) {
  if (f.empty() || !f.front().alphabet()) {
    throw Error(ErrorKind::InvalidArgument, "generators need a variable alphabet");
  }
  const MonomialOrder order = MonomialOrder::grevlex(f.front().alphabet());
  return build_algebra(std::move(f), order);
}

Rational omega(const ArtinianCI& alg, const Polynomial& p) {
  if (p.is_zero()) return 0;
  auto d = p.homogeneous_degree();
  if (!d || *d != alg.socle_degree()) {
    throw Error(ErrorKind::DegreeOutOfRange, "omega expects a form of degree T = " +
                                                 std::to_string(alg.socle_degree()));
  }
  const Rational lambda = alg.reduce(p).coefficient(alg.socle_monomial());
  return lambda / alg.socle_scale();
}

RationalMatrix multiplication_matrix(const ArtinianCI& alg, const Polynomial& l, unsigned power,
                                     int source_degree) {
  const int T = static_cast<int>(alg.socle_degree());
  if (source_degree < 0 || source_degree + static_cast<int>(power) > T) {
    throw Error(ErrorKind::DegreeOutOfRange, "multiplication map leaves degrees 0..T");
  }
  if (!l.is_zero()) {
    auto d = l.homogeneous_degree();
    if (!d || *d != 1) throw Error(ErrorKind::InvalidArgument, "expected a linear form");
  }
  const Polynomial lp = power == 0 ? Polynomial::constant(alg.alphabet(), 1) : pow(l, power);
  const int target = source_degree + static_cast<int>(power);
  const auto& src = alg.basis(source_degree);
  RationalMatrix M(static_cast<Index>(alg.basis(target).size()), static_cast<Index>(src.size()));
  for (std::size_t j = 0; j < src.size(); ++j) {
    M.col(static_cast<Index>(j)) = alg.coordinates(lp.times_term(src[j], 1), target);
  }
  return M;
}

std::vector<Polynomial> socle_basis(const ArtinianCI& alg) {
  const int T = static_cast<int>(alg.socle_degree());
  const std::size_t n = alg.num_vars();
  std::vector<Polynomial> out;
  for (int k = 0; k <= T; ++k) {
    const auto& src = alg.basis(k);
    RationalMatrix kernel_basis;
    if (k == T) {
      kernel_basis = RationalMatrix::Identity(static_cast<Index>(src.size()), static_cast<Index>(src.size()));
    } else {
      const Index rows = static_cast<Index>(alg.basis(k + 1).size());
      RationalMatrix stacked(rows * static_cast<Index>(n), static_cast<Index>(src.size()));
      for (std::size_t i = 0; i < n; ++i) {
        stacked.middleRows(static_cast<Index>(i) * rows, rows) =
            multiplication_matrix(alg, Polynomial::variable(alg.alphabet(), i), 1, k);
      }
      kernel_basis = kernel(stacked);
    }
    for (Index c = 0; c < kernel_basis.cols(); ++c) {
      std::vector<Term> terms;
      for (Index r = 0; r < kernel_basis.rows(); ++r) {
        terms.push_back({src[static_cast<std::size_t>(r)], kernel_basis(r, c)});
      }
      out.emplace_back(alg.alphabet(), std::move(terms));
    }
  }
  return out;
}

bool socle_check(const ArtinianCI& alg) {
  const auto socle = socle_basis(alg);
  if (socle.size() != 1) return false;
  auto d = socle.front().homogeneous_degree();
  return d && *d == alg.socle_degree();
}

}  // namespace cilef
