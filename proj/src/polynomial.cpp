#include <cilef/error.hpp>
#include <cilef/polynomial.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace cilef {

VariableAlphabet::VariableAlphabet(std::vector<std::string> names, Side side)
    : names_(std::move(names)), side_(side) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error(ErrorKind::InvalidArgument, "empty variable name");
    if (!seen.insert(n).second) {
      throw Error(ErrorKind::InvalidArgument, "duplicate variable name '" + n + "'");
    }
  }
}

std::shared_ptr<const VariableAlphabet> VariableAlphabet::indexed(const std::string& prefix,
                                                                  std::size_t n, Side side) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  return std::make_shared<const VariableAlphabet>(std::move(names), side);
}

std::shared_ptr<const VariableAlphabet> VariableAlphabet::make(std::vector<std::string> names,
                                                               Side side) {
  return std::make_shared<const VariableAlphabet>(std::move(names), side);
}

std::optional<std::size_t> VariableAlphabet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

namespace {

// Sorts, merges equal monomials and drops zeros.
std::vector<Term> canonical_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return GrevlexGreater{}(a.monomial, b.monomial); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coefficient += t.coefficient;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const Term& t) { return sgn(t.coefficient) == 0; });
  return out;
}

void check_compatible(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (a && b && !same_alphabet(a, b)) {
    throw Error(ErrorKind::AlphabetMismatch, "polynomials over different variable sets");
  }
}

}  // namespace

Polynomial::Polynomial(AlphabetPtr alphabet, std::vector<Term> terms)
    : alphabet_(std::move(alphabet)) {
  for (auto& t : terms) {
    t.coefficient.canonicalize();
    if (t.monomial.size() != num_vars()) {
      throw Error(ErrorKind::AlphabetMismatch, "monomial length differs from variable count");
    }
  }
  terms_ = canonical_terms(std::move(terms));
}

Polynomial::Polynomial(AlphabetPtr alphabet, const Monomial& m, const Rational& c)
    : alphabet_(std::move(alphabet)) {
  if (m.size() != num_vars()) {
    throw Error(ErrorKind::AlphabetMismatch, "monomial length differs from variable count");
  }
  if (sgn(c) != 0) terms_.push_back({m, c});
}

Polynomial Polynomial::constant(AlphabetPtr alphabet, const Rational& c) {
  const std::size_t n = alphabet->size();
  return Polynomial(std::move(alphabet), Monomial(n), c);
}

Polynomial Polynomial::variable(AlphabetPtr alphabet, std::size_t i) {
  const std::size_t n = alphabet->size();
  return Polynomial(std::move(alphabet), Monomial::variable(n, i), 1);
}

Polynomial Polynomial::linear_form(AlphabetPtr alphabet, std::span<const Rational> coefficients) {
  if (coefficients.size() != alphabet->size()) {
    throw Error(ErrorKind::InvalidArgument, "linear form needs one coefficient per variable");
  }
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    terms.push_back({Monomial::variable(alphabet->size(), i), coefficients[i]});
  }
  return Polynomial(std::move(alphabet), std::move(terms));
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& x) {
    return GrevlexGreater{}(t.monomial, x);
  });
  if (it != terms_.end() && it->monomial == m) return it->coefficient;
  return 0;
}

int Polynomial::total_degree() const {
  // grevlex-descending storage puts a highest-degree term first
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().monomial.degree());
}

std::optional<unsigned> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const unsigned d = terms_.front().monomial.degree();
  if (terms_.back().monomial.degree() != d) return std::nullopt;
  return d;
}

Polynomial Polynomial::with_alphabet(AlphabetPtr alphabet) const {
  if (alphabet && alphabet_ && alphabet->size() != alphabet_->size()) {
    throw Error(ErrorKind::AlphabetMismatch, "alphabet sizes differ");
  }
  Polynomial out = *this;
  out.alphabet_ = std::move(alphabet);
  return out;
}

void Polynomial::adopt_alphabet(const Polynomial& other) {
  check_compatible(alphabet_, other.alphabet_);
  if (!alphabet_) alphabet_ = other.alphabet_;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  adopt_alphabet(other);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  GrevlexGreater first;
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && first(a->monomial, b->monomial))) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || first(b->monomial, a->monomial)) {
      merged.push_back(*b++);
    } else {
      Rational c = a->coefficient + b->coefficient;
      if (sgn(c) != 0) merged.push_back({std::move(a->monomial), std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coefficient *= c;
  }
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial operator-(Polynomial a) {
  for (auto& t : a.terms_) t.coefficient = -t.coefficient;
  return a;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_compatible(a.alphabet_, b.alphabet_);
  Polynomial out(a.alphabet_ ? a.alphabet_ : b.alphabet_);
  if (a.is_zero() || b.is_zero()) return out;
  std::map<Monomial, Rational, GrevlexGreater> acc;
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      Rational c = s.coefficient * t.coefficient;
      auto [it, inserted] = acc.try_emplace(s.monomial * t.monomial, c);
      if (!inserted) it->second += c;
    }
  }
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (sgn(c) != 0) out.terms_.push_back({m, std::move(c)});
  }
  return out;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
  Polynomial out(alphabet_);
  if (sgn(c) == 0) return out;
  out.terms_.reserve(terms_.size());
  // multiplication by a monomial preserves the grevlex order
  for (const auto& t : terms_) out.terms_.push_back({t.monomial * m, t.coefficient * c});
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.alphabet_ && b.alphabet_ && !same_alphabet(a.alphabet_, b.alphabet_)) return false;
  return a.terms_ == b.terms_;
}

Polynomial pow(const Polynomial& p, unsigned k) {
  if (!p.alphabet()) {
    if (k == 0) throw Error(ErrorKind::InvalidArgument, "0^0 without an alphabet");
    return p;
  }
  Polynomial result = Polynomial::constant(p.alphabet(), 1);
  Polynomial base = p;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coefficient;
    if (first) {
      if (sgn(c) < 0) {
        os << '-';
        c = -c;
      }
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
      if (sgn(c) < 0) c = -c;
    }
    first = false;
    bool need_star = false;
    if (t.monomial.is_one() || c != 1) {
      os << c.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      const Exponent e = t.monomial[i];
      if (e == 0) continue;
      if (need_star) os << '*';
      os << p.alphabet()->name(i);
      if (e > 1) os << '^' << e;
      need_star = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

}  // namespace cilef
