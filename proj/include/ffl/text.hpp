#ifndef FFL_TEXT_HPP
#define FFL_TEXT_HPP

#include <stdexcept>
#include <string>

#include "ffl/term.hpp"

namespace ffl {

struct ParseError : std::runtime_error {
  ParseError(int line_, int col_, const std::string& msg)
      : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                           std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
  int line;
  int col;
};

// Parses the s-expression term format. Tuple-pattern binders
// (lam (a b) body) are surface sugar and desugar to a single binder with
// fst/snd projections.
TermPtr parse_term(const std::string& text);

// Canonical text form; parse_term(print_term(t)) is alpha-equal to t.
std::string print_term(const TermPtr& t);

// Like print_term but with line breaks and indentation for large terms.
std::string pretty_term(const TermPtr& t);

TermPtr parse_term_file(const std::string& path);

}  // namespace ffl

#endif
