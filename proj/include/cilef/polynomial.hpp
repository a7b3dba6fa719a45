#pragma once

#include <cilef/monomial.hpp>
#include <cilef/rational.hpp>

#include <cstddef>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace cilef {

/// Which ring a variable set belongs to: S acts by differentiation on R.
/// Parameter alphabets carry the symbolic coefficients of a generic linear form.
enum class Side { S, R, Parameter };

class VariableAlphabet {
 public:
  VariableAlphabet(std::vector<std::string> names, Side side);

  /// prefix1, ..., prefixN.
  static std::shared_ptr<const VariableAlphabet> indexed(const std::string& prefix,
                                                         std::size_t n, Side side);
  static std::shared_ptr<const VariableAlphabet> make(std::vector<std::string> names,
                                                      Side side);

  std::size_t size() const noexcept { return names_.size(); }
  Side side() const noexcept { return side_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const VariableAlphabet& a, const VariableAlphabet& b) {
    return a.side_ == b.side_ && a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  Side side_;
};

using AlphabetPtr = std::shared_ptr<const VariableAlphabet>;

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

struct Term {
  Monomial monomial;
  Rational coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over Q. Terms are stored grevlex-descending with no zero
/// coefficients, so the representation is canonical. A default-constructed
/// Polynomial is the zero polynomial with no alphabet; it combines with a
/// polynomial over any alphabet.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}
  Polynomial(AlphabetPtr alphabet, std::vector<Term> terms);
  Polynomial(AlphabetPtr alphabet, const Monomial& m, const Rational& c = 1);

  static Polynomial constant(AlphabetPtr alphabet, const Rational& c);
  static Polynomial variable(AlphabetPtr alphabet, std::size_t i);

  /// sum_i coefficients[i] * x_i.
  static Polynomial linear_form(AlphabetPtr alphabet, std::span<const Rational> coefficients);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  std::size_t num_vars() const noexcept { return alphabet_ ? alphabet_->size() : 0; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coefficient(const Monomial& m) const;
  /// Highest total degree, or -1 for zero.
  int total_degree() const;
  /// The common degree of all terms; nullopt when terms have mixed degrees or p = 0.
  std::optional<unsigned> homogeneous_degree() const;

  /// Same terms over another alphabet of equal size.
  Polynomial with_alphabet(AlphabetPtr alphabet) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  Polynomial& operator*=(const Polynomial& other);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a);

  /// Multiply by c * m.
  Polynomial times_term(const Monomial& m, const Rational& c) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void adopt_alphabet(const Polynomial& other);

  AlphabetPtr alphabet_;
  std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& p, unsigned k);

/// Canonical text form, parseable by parse_polynomial: "3/4*y1*y2*y3", "x1^2 - 2*x1*x2".
std::string to_string(const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace cilef
