#ifndef PG_TEXT_FORMAT_HH
#define PG_TEXT_FORMAT_HH

#include <string>

#include "pg/grammar.hh"

namespace pg {

// Grammar file format:
//   %alphabet a b "multi char"     terminals; lowercase words or quoted strings
//   %positive                      required section
//   %start S                       one per section, before the productions
//   S -> a S b | eps               nonterminals start with an uppercase letter
//   %negative                      optional; missing means the empty language
//   ...
// '#' starts a comment. 'eps' denotes the empty word and may only stand alone.
ProhibitionGrammar parse_grammar_file(const std::string& text);

// Inverse of parse_grammar_file: the output parses back to an equal value.
// The negative section is omitted when it is the synthesized empty grammar.
std::string serialize(const ProhibitionGrammar& pg);

// Positive-only rendering of a single grammar.
std::string serialize(const Grammar& g);

// Splits a command-line word into tokens and checks them against the alphabet.
// "eps" and the empty string denote the empty word.
Word parse_word(const std::string& text, const std::set<std::string>& alphabet);

}  // namespace pg

#endif
