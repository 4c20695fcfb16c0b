#ifndef FFL_COUPLING_HPP
#define FFL_COUPLING_HPP

#include "ffl/oracle.hpp"

namespace ffl {

// A coupling predicate: a closed term of type (sigma * sigma') -> Bool
// relating the states of two loops.
using CouplingPredicate = TermPtr;

// Checks the fold coupling rule on enumerated data: the predicate holds for
// the initial accumulators and is preserved by every lockstep iteration.
// f/f2/i0/i02 are closed; xs_pairs supplies equal-length array value pairs.
// On success the evidence also records that the final fold results satisfied
// the predicate (trace replay of the rule's conclusion).
Verdict check_fold_coupling(const TermPtr& f, const TermPtr& f2, const TermPtr& i0,
                            const TermPtr& i02,
                            const std::vector<std::pair<TermPtr, TermPtr>>& xs_pairs,
                            const CouplingPredicate& c, const InputGrid& grid);

// The analogous rule for iter: the predicate holds initially, and coupled
// states either both stop or both continue into coupled states. Inconclusive
// when a trace exceeds the fuel budget.
Verdict check_iter_coupling(const TermPtr& f, const TermPtr& f2, const TermPtr& s0,
                            const TermPtr& s02, const CouplingPredicate& c,
                            const InputGrid& grid);

}  // namespace ffl

#endif
