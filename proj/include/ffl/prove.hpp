#ifndef FFL_PROVE_HPP
#define FFL_PROVE_HPP

#include <optional>

#include "ffl/coupling.hpp"
#include "ffl/diff.hpp"
#include "ffl/oracle.hpp"
#include "ffl/rewrite.hpp"

namespace ffl {

struct RuleHint {
  std::string rule_ref;  // "R4", "R12a", or mnemonic
  Direction dir = Direction::LeftToRight;
  std::optional<Path> path;
};

struct CouplingHint {
  CouplingPredicate predicate;
  std::optional<Path> path;
};

struct Hints {
  std::optional<RuleHint> rule;
  std::optional<CouplingHint> coupling;
  std::vector<Premise> declared;  // assumptions over program parameters
};

struct ProofReport {
  std::vector<std::string> lines;
  int widenings = 0;
  void note(const std::string& s) { lines.push_back(s); }
  std::string to_string() const;
};

struct ProveOptions {
  InputGrid grid;
  std::shared_ptr<const ArgSource> family;  // optional program-level input family
};

// The iterative strategy: diff, then prove the subterms equivalent (alpha,
// hinted rewrite rule, coupling, bounded oracle, in that order), adding
// missing premises and widening on failure, then reconstruct the root
// equivalence by congruence, discharging premises on the way up.
std::pair<Verdict, ProofReport> prove_equivalent(const TermPtr& p, const TermPtr& q,
                                                 const Hints& hints,
                                                 const ProveOptions& opts);

// Lifts a child verdict at `at` to the parent pair; requires the contexts
// outside the subterms to be alpha-equal.
struct PathMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
Verdict congruence_lift(const Verdict& child, const TermPtr& p, const TermPtr& q,
                        const Path& at);

// Premise proposal: candidates in schema order (equal lengths over array
// atoms that differ in the counterexample, non-stuckness of function
// parameters, value equality bridging ints to lengths), re-checked under the
// failed oracle; returns the minimal prefix that flips the verdict.
std::vector<Premise> add_missing_premises(const Verdict& failed, const TermPtr& p,
                                          const TermPtr& q,
                                          const std::vector<Param>& params,
                                          const InputGrid& grid,
                                          const std::vector<Premise>& existing);

}  // namespace ffl

#endif
