#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace cilef {

using Exponent = std::uint32_t;

/// Exponent vector x^alpha over a fixed number of variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exponents_(num_vars, 0) {}
  explicit Monomial(std::vector<Exponent> exponents);
  Monomial(std::initializer_list<Exponent> exponents)
      : Monomial(std::vector<Exponent>(exponents)) {}

  /// x_var^power in num_vars variables.
  static Monomial variable(std::size_t num_vars, std::size_t var, Exponent power = 1);

  std::size_t size() const noexcept { return exponents_.size(); }
  Exponent operator[](std::size_t i) const { return exponents_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exponents_; }
  unsigned degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  /// True iff the monomial is a pure power of a single variable (degree >= 1).
  bool is_pure_power() const;

  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  /// Requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exponents_ == b.exponents_;
  }

 private:
  std::vector<Exponent> exponents_;
  unsigned degree_ = 0;
};

Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

/// Graded reverse lexicographic comparison with x_1 > x_2 > ... > x_n.
std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b);
/// Pure lexicographic comparison with x_1 > x_2 > ... > x_n.
std::strong_ordering lex_compare(const Monomial& a, const Monomial& b);

/// Strict "a comes first" predicate for grevlex-descending containers.
struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_compare(a, b) == std::strong_ordering::greater;
  }
};

/// Every monomial of the given degree in num_vars variables, grevlex-descending.
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, unsigned degree);

}  // namespace cilef
