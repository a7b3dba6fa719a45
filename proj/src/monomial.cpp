#include <cilef/monomial.hpp>

#include <algorithm>
#include <cassert>
#include <numeric>

namespace cilef {

Monomial::Monomial(std::vector<Exponent> exponents)
    : exponents_(std::move(exponents)),
      degree_(std::accumulate(exponents_.begin(), exponents_.end(), 0u)) {}

Monomial Monomial::variable(std::size_t num_vars, std::size_t var, Exponent power) {
  Monomial m(num_vars);
  m.exponents_[var] = power;
  m.degree_ = power;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  assert(size() == other.size());
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

bool Monomial::is_pure_power() const {
  if (degree_ == 0) return false;
  return std::count_if(exponents_.begin(), exponents_.end(), [](Exponent e) { return e != 0; }) == 1;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  assert(size() == other.size());
  for (std::size_t i = 0; i < exponents_.size(); ++i) exponents_[i] += other.exponents_[i];
  degree_ += other.degree_;
  return *this;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  assert(b.divides(a));
  Monomial q = a;
  for (std::size_t i = 0; i < q.exponents_.size(); ++i) q.exponents_[i] -= b.exponents_[i];
  q.degree_ -= b.degree_;
  return q;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<Exponent> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

namespace {

void enumerate(std::size_t var, unsigned remaining, std::vector<Exponent>& current,
               std::vector<Monomial>& out) {
  if (var + 1 == current.size()) {
    current[var] = remaining;
    out.emplace_back(current);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    current[var] = e;
    enumerate(var + 1, remaining - e, current, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, unsigned degree) {
  std::vector<Monomial> out;
  if (num_vars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<Exponent> current(num_vars, 0);
  enumerate(0, degree, current, out);
  std::sort(out.begin(), out.end(), GrevlexGreater{});
  return out;
}

}  // namespace cilef
