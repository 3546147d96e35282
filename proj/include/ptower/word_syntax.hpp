#ifndef PTOWER_WORD_SYNTAX_HPP
#define PTOWER_WORD_SYNTAX_HPP

#include <string>
#include <string_view>
#include <vector>

#include "ptower/magnus.hpp"

/*
 * Text form of free-group words:
 *
 *   word    := factor*                      juxtaposition is product
 *   factor  := primary ('^' integer)?
 *   primary := 'x' | 'y' | 'x' digits | '1'
 *            | '[' word ',' word (',' word)* ']'   left-normed, [u,v] = u^-1 v^-1 u v
 *            | '(' word ')'
 *
 * Whitespace is insignificant.  In relation lists, ';' or a newline outside
 * brackets ends a relation and '#' starts a comment.
 */
namespace ptower::cli {

/* The word's rank is max(min_rank, largest generator index used). */
magnus::Word parse_word(std::string_view text, unsigned min_rank = 2);

/* All relations share the largest rank any of them needs. */
std::vector<magnus::Word> parse_relations(std::string_view text, unsigned min_rank = 2);

/* Letters joined by spaces ("x^3 y^-3"); "1" for the identity. */
std::string unparse(magnus::Word const & w);

} // namespace ptower::cli

#endif /* PTOWER_WORD_SYNTAX_HPP */
