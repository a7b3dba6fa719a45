#pragma once

#include <cilef/groebner.hpp>
#include <cilef/linalg.hpp>
#include <cilef/polynomial.hpp>

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace cilef {

using Rng = std::mt19937_64;

/// Dense homogeneous form of the given degree, integer coefficients in [-bound, bound].
Polynomial random_form(const AlphabetPtr& alphabet, unsigned degree, int bound, Rng& rng);

struct RandomCI {
  std::vector<Polynomial> generators;
  int regenerations = 0;  // rejected draws that were not zero-dimensional
};

/// Draws dense forms with the given degrees until they generate a
/// zero-dimensional ideal.
RandomCI random_complete_intersection(const AlphabetPtr& alphabet,
                                      std::span<const unsigned> degrees, int bound, Rng& rng,
                                      OrderKind order = OrderKind::Grevlex);

/// Random integer matrix with entries in [-bound, bound] and nonzero determinant.
RationalMatrix random_invertible_matrix(std::size_t n, int bound, Rng& rng);

/// Seed for instance `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace cilef
