#ifndef FFL_LENGTHS_HPP
#define FFL_LENGTHS_HPP

#include <optional>
#include <vector>

#include "ffl/term.hpp"

namespace ffl {

// Symbolic array length. Either a known literal, a canonical integer term
// (the replicate count, or length(t) for an opaque t), or unknown.
struct LengthExpr {
  enum class Kind : std::uint8_t { Literal, Expr, Unknown } kind;
  Int literal;
  TermPtr expr;  // canonical integer-valued term

  static LengthExpr lit(Int n) { return {Kind::Literal, std::move(n), nullptr}; }
  static LengthExpr of(TermPtr t) { return {Kind::Expr, Int{0}, std::move(t)}; }
  static LengthExpr unknown() { return {Kind::Unknown, Int{0}, nullptr}; }
};

// Length-equality facts usable while inferring (EqualLength premises).
struct LengthFacts {
  std::vector<std::pair<TermPtr, TermPtr>> equal_arrays;
  bool known_equal(const TermPtr& a, const TermPtr& b) const;
};

// Axioms: length(replicate(n,_)) = n; length(range(l,h)) = h-l for literals
// (clamped at 0) or h when l = 0 and h = length(_); length(map(_,xs)) =
// length(xs); length(write(xs,_,_)) = length(xs); length(zip(xs,ys)) =
// length(xs) given EqualLength(xs,ys); length(array literal) = arity;
// otherwise length-of(t).
LengthExpr infer_length(const TermPtr& t, const LengthFacts& facts = {});

bool length_equal(const LengthExpr& a, const LengthExpr& b);

std::string length_to_string(const LengthExpr& e);

}  // namespace ffl

#endif
