#pragma once

#include <cilef/polynomial.hpp>

#include <compare>
#include <span>
#include <string_view>
#include <vector>

namespace cilef {

enum class OrderKind { Grevlex, Lex };

std::string_view to_string(OrderKind kind);
OrderKind parse_order_kind(std::string_view text);

class MonomialOrder {
 public:
  MonomialOrder(OrderKind kind, AlphabetPtr alphabet)
      : kind_(kind), alphabet_(std::move(alphabet)) {}

  static MonomialOrder grevlex(AlphabetPtr alphabet) {
    return {OrderKind::Grevlex, std::move(alphabet)};
  }
  static MonomialOrder lex(AlphabetPtr alphabet) { return {OrderKind::Lex, std::move(alphabet)}; }

  OrderKind kind() const noexcept { return kind_; }
  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    return kind_ == OrderKind::Grevlex ? grevlex_compare(a, b) : lex_compare(a, b);
  }
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }

  /// Largest monomial of a nonzero polynomial.
  const Term& leading_term(const Polynomial& p) const;

 private:
  OrderKind kind_;
  AlphabetPtr alphabet_;
};

/// Reduced Groebner basis: monic generators sorted by leading monomial,
/// largest first. Canonical for a given (ideal, order).
class GroebnerBasis {
 public:
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  const std::vector<Monomial>& leading_monomials() const noexcept { return leading_; }
  const MonomialOrder& order() const noexcept { return order_; }
  bool reduced() const noexcept { return reduced_; }
  /// Terms of generator i, largest first under the basis order.
  const std::vector<Term>& ordered_terms(std::size_t i) const { return ordered_[i]; }
  std::size_t num_vars() const noexcept { return order_.alphabet()->size(); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.order_.kind() == b.order_.kind() && a.generators_ == b.generators_;
  }

 private:
  friend GroebnerBasis groebner_basis(std::span<const Polynomial>, const MonomialOrder&);

  explicit GroebnerBasis(MonomialOrder order) : order_(std::move(order)) {}

  std::vector<Polynomial> generators_;
  std::vector<Monomial> leading_;
  std::vector<std::vector<Term>> ordered_;
  MonomialOrder order_;
  bool reduced_ = true;
};

/// Buchberger's algorithm with the Gebauer-Moeller criteria and the normal
/// selection strategy. Reductions run on primitive integer polynomials.
GroebnerBasis groebner_basis(std::span<const Polynomial> generators, const MonomialOrder& order);

/// Fully reduced remainder of p modulo the basis.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

bool is_zero_dimensional(const GroebnerBasis& gb);

/// Degree-d monomials outside the leading-term ideal, largest first under the
/// basis order.
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, int degree);

/// Dimensions of the graded pieces of the quotient in degrees 0..up_to.
std::vector<std::size_t> hilbert_function(const GroebnerBasis& gb, int up_to);

}  // namespace cilef
