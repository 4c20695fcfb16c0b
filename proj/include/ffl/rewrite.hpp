#ifndef FFL_REWRITE_HPP
#define FFL_REWRITE_HPP

#include <optional>
#include <string>
#include <vector>

#include "ffl/lengths.hpp"
#include "ffl/rules.hpp"

namespace ffl {

// An obligation bubbled up to the enclosing context when a side condition
// cannot be discharged locally.
struct Premise {
  enum class Kind : std::uint8_t { EqualLength, NotStuck, ValueEqual } kind;
  TermPtr a;
  TermPtr b;  // EqualLength / ValueEqual

  static Premise equal_length(TermPtr x, TermPtr y) {
    return {Kind::EqualLength, std::move(x), std::move(y)};
  }
  static Premise not_stuck(TermPtr t) { return {Kind::NotStuck, std::move(t), nullptr}; }
  static Premise value_equal(TermPtr x, TermPtr y) {
    return {Kind::ValueEqual, std::move(x), std::move(y)};
  }
};

std::string premise_to_string(const Premise& p);
bool premise_alpha_equal(const Premise& a, const Premise& b);

struct DischargeResult {
  enum class Kind : std::uint8_t { Proven, NeedsPremise, Failed } kind;
  std::string evidence;           // Proven: replayable justification
  std::optional<Premise> premise; // NeedsPremise
  std::string counterexample;     // Failed

  bool proven() const { return kind == Kind::Proven; }
};

// Discharges one side condition under a substitution. NotFree is a syntactic
// free-variable check; NotStuck is proven when the instantiated term is a
// value; EqualLength is proven when the symbolic lengths agree under the
// axioms and the premises already in scope.
DischargeResult discharge(const SideCondition& sc, const Substitution& s,
                          const std::vector<Premise>& premises);

struct ApplyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoMatch : ApplyError {
  using ApplyError::ApplyError;
};

enum class Direction : std::uint8_t { LeftToRight, RightToLeft };

struct ApplyResult {
  TermPtr term;
  std::vector<Premise> residual;
  Substitution subst;
};

// Rewrites the subterm of t at `at` with the given rule variant. Side
// conditions are discharged; NeedsPremise outcomes come back as residual
// premises. Throws NoMatch / ApplyError (failed side condition).
ApplyResult apply_rule(const RewriteRule& rule, int variant, Direction dir,
                       const TermPtr& t, const Path& at,
                       const std::vector<Premise>& premises);

// Approximate matching per the candidate-generation workflow: match the
// source pattern against `source` leniently, fill still-unassigned
// metavariables from the target side, prefer target-side assignments on
// conflict. Returns nullopt when no total substitution exists.
std::optional<Substitution> approximate_match(const RuleVariant& var, Direction dir,
                                              const TermPtr& source,
                                              const TermPtr& target);

}  // namespace ffl

#endif
