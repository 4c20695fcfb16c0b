#include "ffl/lengths.hpp"

#include "ffl/text.hpp"

namespace ffl {

bool LengthFacts::known_equal(const TermPtr& a, const TermPtr& b) const {
  for (const auto& [x, y] : equal_arrays) {
    if ((alpha_equal(a, x) && alpha_equal(b, y)) ||
        (alpha_equal(a, y) && alpha_equal(b, x)))
      return true;
  }
  return false;
}

LengthExpr infer_length(const TermPtr& t, const LengthFacts& facts) {
  switch (t->kind()) {
    case TermKind::ArrayLit:
      return LengthExpr::lit(Int(t->arity()));
    case TermKind::Replicate: {
      const TermPtr& n = t->child(0);
      if (n->kind() == TermKind::IntLit && n->int_value() >= 0)
        return LengthExpr::lit(n->int_value());
      return LengthExpr::of(n);
    }
    case TermKind::Range: {
      const TermPtr& lo = t->child(0);
      const TermPtr& hi = t->child(1);
      if (lo->kind() == TermKind::IntLit && hi->kind() == TermKind::IntLit) {
        Int d = hi->int_value() - lo->int_value();
        return LengthExpr::lit(d < 0 ? Int{0} : d);
      }
      // range(0, length(xs)) has length length(xs): lengths are non-negative.
      if (lo->kind() == TermKind::IntLit && lo->int_value() == 0 &&
          hi->kind() == TermKind::Length)
        return LengthExpr::of(hi);
      return LengthExpr::unknown();
    }
    case TermKind::Map:
      return infer_length(t->child(1), facts);
    case TermKind::Write:
      return infer_length(t->child(0), facts);
    case TermKind::Zip: {
      if (facts.known_equal(t->child(0), t->child(1)))
        return infer_length(t->child(0), facts);
      LengthExpr a = infer_length(t->child(0), facts);
      LengthExpr b = infer_length(t->child(1), facts);
      if (length_equal(a, b) && a.kind != LengthExpr::Kind::Unknown) return a;
      return LengthExpr::unknown();
    }
    case TermKind::Group:
    case TermKind::Concat:
      return LengthExpr::unknown();
    default:
      return LengthExpr::of(length(t));
  }
}

bool length_equal(const LengthExpr& a, const LengthExpr& b) {
  if (a.kind == LengthExpr::Kind::Unknown || b.kind == LengthExpr::Kind::Unknown)
    return false;
  if (a.kind == LengthExpr::Kind::Literal && b.kind == LengthExpr::Kind::Literal)
    return a.literal == b.literal;
  if (a.kind == LengthExpr::Kind::Expr && b.kind == LengthExpr::Kind::Expr)
    return alpha_equal(a.expr, b.expr);
  return false;
}

std::string length_to_string(const LengthExpr& e) {
  switch (e.kind) {
    case LengthExpr::Kind::Literal: return e.literal.str();
    case LengthExpr::Kind::Expr: return print_term(e.expr);
    case LengthExpr::Kind::Unknown: return "unknown";
  }
  return "?";
}

}  // namespace ffl
