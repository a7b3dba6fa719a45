#include <cilef/error.hpp>
#include <cilef/parser.hpp>

#include <cctype>
#include <string>

namespace cilef {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const AlphabetPtr& alphabet) : text_(text), alphabet_(alphabet) {}

  Polynomial parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty expression");
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(ErrorKind::ParseError, pos_, message);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() const {
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  Integer natural() {
    skip_space();
    const std::size_t start = pos_;
    while (at_digit()) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  // expr := ['+'|'-'] term (('+'|'-') term)*
  Polynomial expr() {
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  // term := factor ('*' factor)*
  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    skip_space();
    if (pos_ < text_.size() &&
        (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
         text_[pos_] == '(')) {
      fail("implicit multiplication is not allowed");
    }
    return acc;
  }

  // factor := base ('^' nat)?
  Polynomial factor() {
    Polynomial b = base();
    if (accept('^')) {
      const Integer e = natural();
      if (!e.fits_uint_p() || e > 4096) fail("exponent too large");
      b = pow(b, static_cast<unsigned>(e.get_ui()));
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '^') fail("chained exponents need parentheses");
    }
    return b;
  }

  // base := rational | variable | '(' expr ')'
  Polynomial base() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const Integer num = natural();
      Integer den = 1;
      if (accept('/')) {
        const std::size_t at = pos_;
        den = natural();
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
      }
      Rational q(num, den);
      q.canonicalize();
      return Polynomial::constant(alphabet_, q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      auto index = alphabet_->index_of(name);
      if (!index) {
        throw ParseError(ErrorKind::UnknownVariable, start,
                         "unknown variable '" + std::string(name) + "'");
      }
      return Polynomial::variable(alphabet_, *index);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const AlphabetPtr& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const AlphabetPtr& alphabet) {
  if (!alphabet) throw Error(ErrorKind::InvalidArgument, "parse_polynomial needs an alphabet");
  return Parser(text, alphabet).parse();
}

}  // namespace cilef
