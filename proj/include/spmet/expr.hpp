// Surface syntax for scalars, Lie elements, Weyl elements and polynomials.
//
// Grammar (whitespace-insensitive):
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := atom ('^' int)? | '-' factor | '(' expr ')' | '[' expr ',' expr ']'
//   atom     := 'a(' int ',' int ')' | 'b(' int ',' int ')' | 'c(' int ',' int ')'
//             | 'x'int | 'd'int | 'X'int | rational | 'p'
//   rational := int ('/' int)?
//
// '*' is mandatory (juxtaposition is not multiplication) and '^' binds
// tighter than unary minus, so -x1^2 is -(x1^2). Exponents are nonnegative
// integer literals except on Laurent variables Xk.
#ifndef SPMET_EXPR_HPP
#define SPMET_EXPR_HPP

#include <string>

#include "spmet/modaction.hpp"
#include "spmet/symplectic.hpp"
#include "spmet/weyl.hpp"

namespace spmet {

enum class Sort { lie, weyl, poly, laurent };

Sort sort_from_name(const std::string& name);
std::string sort_name(Sort s);

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) +
                           ")"),
        position(position) {}
  std::size_t position;
};

// Sort-checked parse and evaluation. lie forbids xk/dk/Xk atoms; weyl
// forbids a/b/c/Xk; poly and laurent allow only Xk.
SpElement parse_lie(const std::string& src, const PrimeContext& ctx);
WeylElement parse_weyl(const std::string& src, const PrimeContext& ctx);
Poly parse_poly(const std::string& src, const PrimeContext& ctx);
Poly parse_laurent(const std::string& src, const PrimeContext& ctx);

// Canonical text, terms in the sort's monomial order; parse(format(v)) = v.
std::string format_sp(const SpElement& v);
std::string format_weyl(const WeylElement& v);
std::string format_poly(const Poly& v);

}  // namespace spmet

#endif
