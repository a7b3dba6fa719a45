#include <cilef/calculus.hpp>
#include <cilef/error.hpp>
#include <cilef/inverse_systems.hpp>
#include <cilef/lefschetz.hpp>
#include <cilef/random_instances.hpp>

#include <algorithm>
#include <random>

namespace cilef {

std::string_view to_string(Truth t) {
  switch (t) {
    case Truth::Yes: return "true";
    case Truth::No: return "false";
    case Truth::Unknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(CheckMode m) {
  return m == CheckMode::Exact ? "exact" : "probabilistic";
}

std::string_view to_string(HessianMode m) {
  return m == HessianMode::Symbolic ? "symbolic" : "probabilistic";
}

HessianMode parse_hessian_mode(std::string_view text) {
  if (text == "symbolic") return HessianMode::Symbolic;
  if (text == "probabilistic") return HessianMode::Probabilistic;
  throw Error(ErrorKind::InvalidArgument, "unknown Hessian mode '" + std::string(text) + "'");
}

namespace {

void check_options(const ProbabilisticOptions& options) {
  if (options.trials < 1) throw Error(ErrorKind::InvalidArgument, "trials must be at least 1");
  if (options.bound < 2) throw Error(ErrorKind::InvalidArgument, "bound must be at least 2");
}

// Uniform integer points in [-bound, bound]^n other than the origin.
std::vector<Rational> sample_point(std::size_t n, int bound, Rng& rng) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  std::vector<Rational> point(n);
  for (;;) {
    bool nonzero = false;
    for (auto& c : point) {
      c = dist(rng);
      if (sgn(c) != 0) nonzero = true;
    }
    if (nonzero) return point;
  }
}

unsigned slp_determinant_degree(const ArtinianCI& alg) {
  return static_cast<unsigned>(alg.num_vars()) * (alg.socle_degree() - 2);
}

}  // namespace

Rational schwartz_zippel_bound(unsigned degree, int bound, int trials) {
  Rational ratio(degree, 2 * bound + 1);
  ratio.canonicalize();
  if (ratio > 1) ratio = 1;
  Rational out = 1;
  for (int i = 0; i < trials; ++i) out *= ratio;
  return out;
}

RationalMatrix slp_matrix(const ArtinianCI& alg, const Polynomial& l) {
  if (alg.socle_degree() < 2) throw Error(ErrorKind::DegreeOutOfRange, "socle degree below 2");
  return multiplication_matrix(alg, l, alg.socle_degree() - 2, 1);
}

SlpVerdict slp_degree1_probabilistic(const ArtinianCI& alg, const ProbabilisticOptions& options) {
  check_options(options);
  const std::size_t n = alg.num_vars();
  SlpVerdict v;
  v.mode = CheckMode::Probabilistic;
  v.seed = options.seed;
  Rng rng(options.seed);
  int random_trials = 0;
  for (int t = 0; t < options.trials; ++t) {
    std::vector<Rational> point;
    if (static_cast<std::size_t>(t) < options.preset_points.size()) {
      point = options.preset_points[static_cast<std::size_t>(t)];
    } else {
      point = sample_point(n, options.bound, rng);
      ++random_trials;
    }
    Polynomial l = Polynomial::linear_form(alg.alphabet(), point);
    const Index r = rank(slp_matrix(alg, l));
    v.trials.push_back({l, r});
    v.trials_used = t + 1;
    if (r == static_cast<Index>(n)) {
      v.holds = Truth::Yes;
      v.witness = std::move(l);
      return v;
    }
  }
  v.holds = Truth::Unknown;
  v.failure_probability_bound =
      random_trials == 0 ? Rational(1)
                         : schwartz_zippel_bound(slp_determinant_degree(alg), options.bound, random_trials);
  return v;
}

SlpVerdict slp_degree1_exact(const ArtinianCI& alg) {
  const std::size_t n = alg.num_vars();
  if (n > kMaxSymbolicVariables) {
    throw Error(ErrorKind::TooManyVariables,
                "symbolic SLP determinant supports at most " + std::to_string(kMaxSymbolicVariables) +
                    " variables");
  }
  const unsigned T = alg.socle_degree();
  if (T < 2) throw Error(ErrorKind::DegreeOutOfRange, "socle degree below 2");
  const auto& source = alg.basis(1);
  const auto& target = alg.basis(static_cast<int>(T) - 1);
  const AlphabetPtr params = VariableAlphabet::indexed("t", n, Side::Parameter);

  // l^{T-2} = sum_{|b| = T-2} (T-2)!/b! t^b x^b
  std::vector<std::vector<Term>> entries(source.size() * target.size());
  const Integer top = factorial(T - 2);
  for (const auto& b : monomials_of_degree(n, T - 2)) {
    Integer denom = 1;
    for (auto e : b.exponents()) denom *= factorial(e);
    const Rational multinomial(top / denom);
    for (std::size_t j = 0; j < source.size(); ++j) {
      const RationalVector image =
          alg.coordinates(Polynomial(alg.alphabet(), b * source[j]), static_cast<int>(T) - 1);
      for (std::size_t r = 0; r < target.size(); ++r) {
        const Rational& c = image(static_cast<Index>(r));
        if (sgn(c) != 0) entries[r * source.size() + j].push_back({b, multinomial * c});
      }
    }
  }
  PolynomialMatrix M(static_cast<Index>(target.size()), static_cast<Index>(source.size()));
  for (std::size_t r = 0; r < target.size(); ++r) {
    for (std::size_t j = 0; j < source.size(); ++j) {
      M(static_cast<Index>(r), static_cast<Index>(j)) =
          Polynomial(params, std::move(entries[r * source.size() + j]));
    }
  }
  if (M.rows() != M.cols()) {
    throw Error(ErrorKind::InternalError, "dim M_1 differs from dim M_{T-1}");
  }
  Polynomial D = cofactor_determinant(M).with_alphabet(params);
  if (!D.is_zero()) {
    auto d = D.homogeneous_degree();
    if (!d || *d != slp_determinant_degree(alg)) {
      throw Error(ErrorKind::InternalError, "SLP determinant has the wrong degree");
    }
  }
  SlpVerdict v;
  v.mode = CheckMode::Exact;
  v.holds = D.is_zero() ? Truth::No : Truth::Yes;
  v.determinant = std::move(D);
  return v;
}

HessianVerdict hessian_nonzero(const Polynomial& F, HessianMode mode,
                               const ProbabilisticOptions& options) {
  if (F.is_zero()) throw Error(ErrorKind::InvalidArgument, "Hessian of the zero form");
  const std::size_t n = F.num_vars();
  HessianVerdict v;
  v.mode = mode;
  if (mode == HessianMode::Symbolic) {
    if (n > kMaxSymbolicVariables) {
      throw Error(ErrorKind::TooManyVariables,
                  "symbolic Hessian supports at most " + std::to_string(kMaxSymbolicVariables) +
                      " variables");
    }
    Polynomial H = hessian_determinant(F);
    v.nonzero = H.is_zero() ? Truth::No : Truth::Yes;
    v.hessian = std::move(H);
    return v;
  }
  check_options(options);
  v.seed = options.seed;
  Rng rng(options.seed);
  int random_trials = 0;
  for (int t = 0; t < options.trials; ++t) {
    std::vector<Rational> point;
    if (static_cast<std::size_t>(t) < options.preset_points.size()) {
      point = options.preset_points[static_cast<std::size_t>(t)];
    } else {
      point = sample_point(n, options.bound, rng);
      ++random_trials;
    }
    Rational value = determinant(hessian_at(F, point));
    v.trials_used = t + 1;
    if (sgn(value) != 0) {
      v.nonzero = Truth::Yes;
      v.point = std::move(point);
      v.value = std::move(value);
      return v;
    }
  }
  const int T = F.total_degree();
  const unsigned degree = T >= 2 ? static_cast<unsigned>(n) * static_cast<unsigned>(T - 2) : 0;
  v.nonzero = Truth::Unknown;
  v.failure_probability_bound =
      random_trials == 0 ? Rational(1) : schwartz_zippel_bound(degree, options.bound, random_trials);
  return v;
}

EquivalenceReport theorem_equivalence_check(const ArtinianCI& alg, const Polynomial& associated,
                                            const ProbabilisticOptions& options) {
  EquivalenceReport report;
  report.associated_form = associated;
  report.hypothesis_satisfied = alg.num_vars() >= 3;
  if (alg.num_vars() <= kMaxSymbolicVariables) {
    report.slp = slp_degree1_exact(alg);
    report.hessian = hessian_nonzero(associated, HessianMode::Symbolic);
  } else {
    report.slp = slp_degree1_probabilistic(alg, options);
    report.hessian = hessian_nonzero(associated, HessianMode::Probabilistic, options);
  }
  const Truth a = report.slp.holds;
  const Truth b = report.hessian.nonzero;
  if (a == Truth::Unknown || b == Truth::Unknown) {
    report.agree = Truth::Unknown;
  } else {
    report.agree = a == b ? Truth::Yes : Truth::No;
  }
  return report;
}

EquivalenceReport theorem_equivalence_check(const ArtinianCI& alg,
                                            const ProbabilisticOptions& options) {
  return theorem_equivalence_check(alg, associated_form(alg), options);
}

ArtinianCI milnor_pipeline(const Polynomial& f, const MonomialOrder& order) {
  const std::size_t n = f.num_vars();
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "Milnor algebras need at least 3 variables");
  if (!same_alphabet(f.alphabet(), order.alphabet())) {
    throw Error(ErrorKind::AlphabetMismatch, "form is not over the order's variables");
  }
  auto d = f.homogeneous_degree();
  if (!d) throw Error(ErrorKind::NotHomogeneous, "f");
  if (*d < 3) throw Error(ErrorKind::DegreeTooSmall, "f has degree " + std::to_string(*d));
  std::vector<Polynomial> gradient;
  for (std::size_t i = 0; i < n; ++i) {
    gradient.push_back(derivative(f, i));
    if (gradient.back().is_zero()) {
      throw Error(ErrorKind::SingularHypersurface,
                  "df/d" + f.alphabet()->name(i) + " vanishes identically");
    }
  }
  try {
    ArtinianCI alg = build_algebra(std::move(gradient), order);
    if (alg.socle_degree() != static_cast<unsigned>(n) * (*d - 2)) {
      throw Error(ErrorKind::InternalError, "Milnor algebra socle degree differs from n(d-2)");
    }
    return alg;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotZeroDimensional) {
      throw Error(ErrorKind::SingularHypersurface, "the gradient ideal is not zero-dimensional");
    }
    throw;
  }
}

ArtinianCI milnor_pipeline(const Polynomial& f) {
  if (!f.alphabet()) throw Error(ErrorKind::InvalidArgument, "form needs a variable alphabet");
  return milnor_pipeline(f, MonomialOrder::grevlex(f.alphabet()));
}

bool projection_identity_check(const ArtinianCI& alg, std::span<const Rational> point,
                               std::span<const Polynomial> basis) {
  const std::size_t n = alg.num_vars();
  if (point.size() != n) throw Error(ErrorKind::InvalidArgument, "point has the wrong dimension");
  const unsigned power = alg.socle_degree() - 1;
  const Polynomial l = pow(Polynomial::linear_form(alg.dual_alphabet(), point), power);
  const Rational scale(factorial(power));
  for (const auto& G : basis) {
    const Polynomial applied = polar_apply(G.with_alphabet(alg.alphabet()), l);
    if (applied.total_degree() > 0) return false;
    const Rational lhs = applied.coefficient(Monomial(n));
    const Rational rhs = scale * evaluate(G, point);
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace cilef
