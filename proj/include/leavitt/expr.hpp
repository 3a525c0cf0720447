#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "leavitt/matrix.hpp"

namespace leavitt {

/// Abstract syntax of an algebra expression.
///
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := factor (('*' factor) | ('/' int))*
///   factor := atom ('^' posint)?
///   atom   := int | 'x' index | 'y' index | 'x' '[' list ']' | 'y' '[' list ']'
///           | '(' expr ')' | '[' expr ',' expr ']'
///
/// Juxtaposition is not multiplication. Indices are read greedily, so "x12"
/// is generator 12.
struct Expr {
  enum class Kind {
    Integer,    // value
    Generator,  // is_y, letters[0]
    WordTerm,   // x_I or y_J; is_y, letters
    Negate,     // children[0]
    Sum,        // children[0] + children[1]
    Difference, // children[0] - children[1]
    Product,    // children[0] * children[1]
    Quotient,   // children[0] / value
    Power,      // children[0] ^ exponent
    Bracket,    // [children[0], children[1]]
    Group,      // (children[0])
  };

  Kind kind = Kind::Integer;
  mpz_class value;
  bool is_y = false;
  std::vector<std::uint64_t> letters;
  std::uint32_t exponent = 0;
  std::vector<Expr> children;

  friend bool operator==(const Expr &, const Expr &) = default;
};

/// Throws ParseError carrying the offending character offset.
Expr parse(std::string_view input);

/// Text that parses back to the same tree.
std::string print(const Expr &e);

enum class Mode { Cohn, Leavitt, Matrix };

std::string_view mode_name(Mode m);
/// Throws DomainError for unknown names.
Mode parse_mode(std::string_view name);

struct SessionConfig {
  std::uint32_t n = 2;
  std::size_t d = 1;
  FieldSpec field{};
  Mode mode = Mode::Leavitt;
};

using Value = std::variant<CohnElement, LeavittElement, LeavittMatrix>;

/// Evaluates in C_K(n), L_K(n), or (matrix mode) as l * I_d in M_d(L_K(n)).
/// Throws DomainError on out-of-range indices or division by zero.
Value evaluate(const Expr &e, const SessionConfig &cfg);

CohnElement evaluate_cohn(const Expr &e, FieldSpec spec, std::uint32_t n);
LeavittElement evaluate_leavitt(const Expr &e, FieldSpec spec,
                                std::uint32_t n);

/// Parses canonical element text (e.g. "x[1]*y[1] - 1/2") in C_K(n).
CohnElement parse_cohn(std::string_view text, FieldSpec spec, std::uint32_t n);
LeavittElement parse_leavitt(std::string_view text, FieldSpec spec,
                             std::uint32_t n);

} // namespace leavitt
