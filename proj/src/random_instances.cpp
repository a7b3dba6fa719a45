#include <cilef/error.hpp>
#include <cilef/random_instances.hpp>

namespace cilef {

Polynomial random_form(const AlphabetPtr& alphabet, unsigned degree, int bound, Rng& rng) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  const auto monomials = monomials_of_degree(alphabet->size(), degree);
  for (;;) {
    std::vector<Term> terms;
    for (const auto& m : monomials) terms.push_back({m, dist(rng)});
    Polynomial p(alphabet, std::move(terms));
    if (!p.is_zero()) return p;
  }
}

RandomCI random_complete_intersection(const AlphabetPtr& alphabet,
                                      std::span<const unsigned> degrees, int bound, Rng& rng,
                                      OrderKind order) {
  if (degrees.size() != alphabet->size()) {
    throw Error(ErrorKind::InvalidArgument, "need one degree per variable");
  }
  const MonomialOrder mo(order, alphabet);
  RandomCI out;
  for (;;) {
    out.generators.clear();
    for (unsigned d : degrees) out.generators.push_back(random_form(alphabet, d, bound, rng));
    if (is_zero_dimensional(groebner_basis(out.generators, mo))) return out;
    ++out.regenerations;
  }
}

RationalMatrix random_invertible_matrix(std::size_t n, int bound, Rng& rng) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  RationalMatrix P(static_cast<Index>(n), static_cast<Index>(n));
  for (;;) {
    for (Index i = 0; i < P.rows(); ++i) {
      for (Index j = 0; j < P.cols(); ++j) P(i, j) = dist(rng);
    }
    if (sgn(determinant(P)) != 0) return P;
  }
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

}  // namespace cilef
