#pragma once

#include <cilef/artinian.hpp>
#include <cilef/polynomial.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace cilef {

enum class Truth { Yes, No, Unknown };
std::string_view to_string(Truth t);

enum class CheckMode { Exact, Probabilistic };
std::string_view to_string(CheckMode m);

struct ProbabilisticOptions {
  int trials = 5;
  int bound = 100;
  std::uint64_t seed = 0;
  /// Points tried before any random sample; each counts as one trial.
  std::vector<std::vector<Rational>> preset_points;
};

struct SlpTrial {
  Polynomial linear_form;
  Index rank = 0;
};

/// Degree-1 strong Lefschetz verdict for l^{T-2}: M_1 -> M_{T-1}.
struct SlpVerdict {
  Truth holds = Truth::Unknown;
  CheckMode mode = CheckMode::Probabilistic;
  std::optional<Polynomial> witness;      // l with full rank (probabilistic positives)
  std::optional<Polynomial> determinant;  // D(t) over t1..tn (exact mode)
  std::vector<SlpTrial> trials;
  int trials_used = 0;
  std::uint64_t seed = 0;
  std::optional<Rational> failure_probability_bound;  // probabilistic negatives only
};

enum class HessianMode { Symbolic, Probabilistic };
std::string_view to_string(HessianMode m);
HessianMode parse_hessian_mode(std::string_view text);

struct HessianVerdict {
  Truth nonzero = Truth::Unknown;
  HessianMode mode = HessianMode::Symbolic;
  std::optional<Polynomial> hessian;              // symbolic mode
  std::optional<std::vector<Rational>> point;     // probabilistic witness point
  std::optional<Rational> value;                  // determinant at the witness point
  int trials_used = 0;
  std::uint64_t seed = 0;
  std::optional<Rational> failure_probability_bound;
};

/// Symbolic determinants are attempted only up to this many variables.
inline constexpr std::size_t kMaxSymbolicVariables = 4;

/// Matrix of l^{T-2}: M_1 -> M_{T-1}.
RationalMatrix slp_matrix(const ArtinianCI& alg, const Polynomial& l);

/// (D / (2 * bound + 1))^trials, capped at 1.
Rational schwartz_zippel_bound(unsigned degree, int bound, int trials);

SlpVerdict slp_degree1_probabilistic(const ArtinianCI& alg, const ProbabilisticOptions& options);

/// Symbolic determinant of the map for l = t1 x1 + ... + tn xn. Requires n <= 4.
SlpVerdict slp_degree1_exact(const ArtinianCI& alg);

/// F must be nonzero. Symbolic mode requires n <= 4.
HessianVerdict hessian_nonzero(const Polynomial& F, HessianMode mode,
                               const ProbabilisticOptions& options = {});

struct EquivalenceReport {
  Polynomial associated_form;
  SlpVerdict slp;
  HessianVerdict hessian;
  /// Yes when both verdicts are definite and equal, No when definite and
  /// different, Unknown otherwise.
  Truth agree = Truth::Unknown;
  bool hypothesis_satisfied = true;  // n >= 3
};

/// Runs both sides of the equivalence: exact when n <= 4, otherwise
/// probabilistic with the given options.
EquivalenceReport theorem_equivalence_check(const ArtinianCI& alg,
                                            const ProbabilisticOptions& options = {});
EquivalenceReport theorem_equivalence_check(const ArtinianCI& alg, const Polynomial& associated,
                                            const ProbabilisticOptions& options);

/// Milnor algebra S / (df/dx_1, ..., df/dx_n) of a form of degree d >= 3.
/// Errors: DegreeTooSmall, NotHomogeneous, InvalidArgument (n < 3),
/// SingularHypersurface.
ArtinianCI milnor_pipeline(const Polynomial& f, const MonomialOrder& order);
ArtinianCI milnor_pipeline(const Polynomial& f);

/// G(d/dx) applied to (a_1 y_1 + ... + a_n y_n)^{T-1} equals (T-1)! G(a) for
/// every G in basis.
bool projection_identity_check(const ArtinianCI& alg, std::span<const Rational> point,
                               std::span<const Polynomial> basis);

}  // namespace cilef
