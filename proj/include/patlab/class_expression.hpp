#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "patlab/pattern_classes.hpp"

namespace patlab {

/// One ';'-separated piece of a class expression.
struct ClassTerm {
  std::variant<Permutation, DistantPattern, AlmostDistantPattern> pattern;
  std::string text;
  std::size_t column = 0;

  PatternBasis basis() const;
};

/// Parsed form of the class-expression grammar:
///
///   classical       123  or  1 2 3
///   distant         12#34            ('#' is a gap of at least one entry)
///   almost-distant  12[3]34          (bracket = removed value at the gap)
///   macros          M(k,j,i)  D(k,j)
///   union           terms joined by ';'
///
/// Rejected: more than one gap in a term, minimum gaps above one ("#^2", or
/// "#2" as a token in space-separated form), bracket values outside 1..k+1.
struct ClassExpression {
  std::string text;
  std::vector<ClassTerm> terms;

  /// Union of the term bases, labelled with the expression text.
  PatternBasis basis() const;
};

/// Throws ParseError with a column pointing at the offending character.
ClassExpression parse_class_expression(std::string_view text);

inline PatternBasis parse_basis(std::string_view text) {
  return parse_class_expression(text).basis();
}

/// Two-line caret diagnostic for a parse error.
std::string caret_diagnostic(const std::string& expression, std::size_t column,
                             const std::string& message);

}  // namespace patlab
