#pragma once

#include <cilef/polynomial.hpp>

#include <string_view>

namespace cilef {

// Grammar (whitespace is ignored):
//   expr     := ['+' | '-'] term (('+' | '-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' nat)?
//   base     := rational | variable | '(' expr ')'
//   rational := int ('/' nat)?
// Implicit multiplication ("2x1") is rejected. Errors carry the offset of the
// offending character.
Polynomial parse_polynomial(std::string_view text, const AlphabetPtr& alphabet);

}  // namespace cilef
