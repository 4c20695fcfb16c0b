#ifndef FFL_ORACLE_HPP
#define FFL_ORACLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "ffl/grid.hpp"
#include "ffl/rewrite.hpp"
#include "ffl/typecheck.hpp"

namespace ffl {

struct Counterexample {
  std::vector<std::string> params;
  ArgTuple args;
  std::string left_result;
  std::string right_result;
  std::string to_string() const;
};

struct Verdict {
  enum class Kind : std::uint8_t { Equivalent, NotEquivalent, Inconclusive } kind;
  std::string evidence;
  std::optional<Counterexample> counterexample;  // NotEquivalent
  std::string reason;                            // Inconclusive: fuel | budget | open premises

  bool equivalent() const { return kind == Kind::Equivalent; }
  static Verdict equiv(std::string ev) {
    return {Kind::Equivalent, std::move(ev), std::nullopt, ""};
  }
  static Verdict not_equiv(Counterexample cex, std::string ev = "") {
    return {Kind::NotEquivalent, std::move(ev), std::move(cex), ""};
  }
  static Verdict inconclusive(std::string why, std::string ev = "") {
    return {Kind::Inconclusive, std::move(ev), std::nullopt, std::move(why)};
  }
};

const char* verdict_kind_name(Verdict::Kind k);

using Param = std::pair<std::string, TypePtr>;

// Definition-2 equivalence on a finite grid: enumerates all argument tuples
// satisfying the premises, runs both terms, and compares results. Stuck
// agrees with Stuck (errors are indistinguishable from divergence); a value
// against a stuck term is a counterexample; fuel exhaustion on one side only
// is inconclusive.
Verdict bounded_equiv(const TermPtr& p, const TermPtr& q,
                      const std::vector<Param>& params, const InputGrid& grid,
                      const std::vector<Premise>& premises = {});

// Same, with an explicit argument source (structured families).
Verdict bounded_equiv_args(const TermPtr& p, const TermPtr& q,
                           const std::vector<Param>& params, const ArgSource& args,
                           Fuel fuel, const std::vector<Premise>& premises = {});

// True if the tuple satisfies every premise (each premise term is closed
// after substituting the tuple).
bool premises_hold(const std::vector<Premise>& premises,
                   const std::vector<Param>& params, const ArgTuple& args,
                   Fuel fuel);

TermPtr substitute_args(const TermPtr& t, const std::vector<Param>& params,
                        const ArgTuple& args);

}  // namespace ffl

#endif
