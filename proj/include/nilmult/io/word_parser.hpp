#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nilmult/nilpotent/free_word.hpp"

namespace nilmult {

struct WordTerm;

/// A parsed word kept as written: a product of terms.
struct WordExpr {
  std::vector<WordTerm> terms;
  friend bool operator==(const WordExpr&, const WordExpr&);
};

struct WordTerm {
  enum class Kind { Identity, Generator, Commutator, Group };
  Kind kind = Kind::Identity;
  std::size_t generator = 0;   // 1-based, for Generator
  std::vector<WordExpr> parts;  // two for Commutator, one for Group
  long exponent = 1;
  friend bool operator==(const WordTerm&, const WordTerm&);
};

/// Identifier names in index order: names[0] is generator 1. Parsing adds
/// unseen identifiers at the end unless the table is frozen.
struct GeneratorNames {
  std::vector<std::string> names;
  bool frozen = false;
};

/// Grammar (whitespace between tokens is ignored):
///   word       := term+
///   term       := atom ('^' integer)?
///   atom       := generator | '[' word ',' word ']' | '(' word ')' | '1'
///   generator  := 'x' digits | identifier
///   integer    := '-'? digits
/// Throws ParseError with the byte offset and the expected tokens.
WordExpr parse_word_expr(std::string_view text, GeneratorNames& names);
WordExpr parse_word_expr(std::string_view text);

/// Canonical text; parse_word_expr(print_word(e)) == e.
std::string print_word(const WordExpr& e, const GeneratorNames* names = nullptr);

/// Expands commutators and powers into a reduced free-group word.
FreeGroupWord evaluate(const WordExpr& e);

/// parse_word_expr followed by evaluate.
FreeGroupWord parse_word(std::string_view text);
FreeGroupWord parse_word(std::string_view text, GeneratorNames& names);

}  // namespace nilmult
