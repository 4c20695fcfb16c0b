#ifndef FFL_EVAL_HPP
#define FFL_EVAL_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "ffl/term.hpp"

namespace ffl {

using Fuel = std::int64_t;

enum class StuckReason : std::uint8_t {
  OutOfBounds,
  ZipLengthMismatch,
  NegativeReplicate,
  EmptyRangeInvalid,  // reserved; range with lo >= hi yields the empty array
  DivByZero,
  NonValueScrutinee,
  IllTyped,  // no rule applies on an ill-typed shape (callers typecheck first)
};

const char* stuck_reason_name(StuckReason r);

struct EvalResult {
  enum class Kind : std::uint8_t { Value, Stuck, OutOfFuel } kind;
  TermPtr value;       // when Value
  Path stuck_path;     // when Stuck: position within the term under evaluation
  StuckReason reason = StuckReason::IllTyped;

  bool is_value() const { return kind == Kind::Value; }
  bool is_stuck() const { return kind == Kind::Stuck; }
  bool is_out_of_fuel() const { return kind == Kind::OutOfFuel; }

  static EvalResult make_value(TermPtr v) { return {Kind::Value, std::move(v), {}, StuckReason::IllTyped}; }
  static EvalResult make_stuck(Path p, StuckReason r) { return {Kind::Stuck, nullptr, std::move(p), r}; }
  static EvalResult make_out_of_fuel() { return {Kind::OutOfFuel, nullptr, {}, StuckReason::IllTyped}; }
};

// Big-step evaluation of a closed term. Each semantics-rule application
// consumes one unit of fuel. Errors are expressed in the result, never thrown.
EvalResult eval(const TermPtr& t, Fuel fuel);

// Evaluation of the nested application of a program to argument values.
EvalResult run_program(const TermPtr& t, const std::vector<TermPtr>& args, Fuel fuel);

// Syntactic value check (same predicate as Term::is_value, spec-facing name).
bool is_value(const TermPtr& t);

std::string eval_result_to_string(const EvalResult& r);

}  // namespace ffl

#endif
