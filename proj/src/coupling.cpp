#include "ffl/coupling.hpp"

#include <sstream>

#include "ffl/text.hpp"

namespace ffl {

namespace {

// Evaluates c(pair(a, b)). Returns -1 stuck/non-bool, 0 false, 1 true,
// -2 out of fuel.
int predicate_holds(const CouplingPredicate& c, const TermPtr& a, const TermPtr& b,
                    Fuel fuel) {
  EvalResult r = eval(app(c, pair(a, b)), fuel);
  if (r.is_out_of_fuel()) return -2;
  if (!r.is_value() || r.value->kind() != TermKind::BoolLit) return -1;
  return r.value->bool_value() ? 1 : 0;
}

}  // namespace

Verdict check_fold_coupling(const TermPtr& f, const TermPtr& f2, const TermPtr& i0,
                            const TermPtr& i02,
                            const std::vector<std::pair<TermPtr, TermPtr>>& xs_pairs,
                            const CouplingPredicate& c, const InputGrid& grid) {
  Fuel fuel = grid.fuel;
  EvalResult v0 = eval(i0, fuel), v02 = eval(i02, fuel);
  if (v0.is_out_of_fuel() || v02.is_out_of_fuel())
    return Verdict::inconclusive("fuel", "initial accumulators exhausted fuel");
  if (!v0.is_value() || !v02.is_value()) {
    if (!v0.is_value() && !v02.is_value())
      return Verdict::equiv("both initial accumulators stuck");
    Counterexample cex;
    cex.left_result = eval_result_to_string(v0);
    cex.right_result = eval_result_to_string(v02);
    return Verdict::not_equiv(cex, "one initial accumulator stuck");
  }

  int base = predicate_holds(c, v0.value, v02.value, fuel);
  if (base == -2) return Verdict::inconclusive("fuel", "predicate exhausted fuel");
  if (base == -1)
    return Verdict::inconclusive("predicate stuck on initial states", "");
  if (base == 0) {
    Counterexample cex;
    cex.left_result = print_term(v0.value);
    cex.right_result = print_term(v02.value);
    return Verdict::not_equiv(cex, "base case: predicate false on initial states");
  }

  std::size_t traces = 0, steps = 0;
  for (const auto& [xs, ys] : xs_pairs) {
    if (xs->kind() != TermKind::ArrayLit || ys->kind() != TermKind::ArrayLit ||
        xs->arity() != ys->arity())
      return Verdict::inconclusive("coupling requires equal-length array pairs", "");
    traces++;
    TermPtr s = v0.value, s2 = v02.value;
    bool trace_done = false;
    for (std::size_t j = 0; j < xs->arity() && !trace_done; ++j) {
      EvalResult n1 = eval(app(f, pair(s, xs->child(j))), fuel);
      EvalResult n2 = eval(app(f2, pair(s2, ys->child(j))), fuel);
      if (n1.is_out_of_fuel() || n2.is_out_of_fuel())
        return Verdict::inconclusive("fuel", "trace exceeded fuel budget");
      if (!n1.is_value() || !n2.is_value()) {
        if (n1.is_value() != n2.is_value()) {
          Counterexample cex;
          cex.left_result = eval_result_to_string(n1);
          cex.right_result = eval_result_to_string(n2);
          cex.params = {"iteration"};
          cex.args = {int_lit(static_cast<long long>(j))};
          return Verdict::not_equiv(cex, "one side stuck during lockstep trace");
        }
        trace_done = true;  // both stuck: the loops agree on this input
        break;
      }
      steps++;
      int holds = predicate_holds(c, n1.value, n2.value, fuel);
      if (holds == -2) return Verdict::inconclusive("fuel", "predicate exhausted fuel");
      if (holds == -1)
        return Verdict::inconclusive("predicate stuck on a tested state pair", "");
      if (holds == 0) {
        Counterexample cex;
        cex.left_result = print_term(n1.value);
        cex.right_result = print_term(n2.value);
        cex.params = {"iteration"};
        cex.args = {int_lit(static_cast<long long>(j))};
        return Verdict::not_equiv(cex, "step case: predicate not preserved");
      }
      s = n1.value;
      s2 = n2.value;
    }
  }
  std::ostringstream ev;
  ev << "coupling held: base case plus " << steps << " lockstep steps over "
     << traces << " array pairs";
  return Verdict::equiv(ev.str());
}

Verdict check_iter_coupling(const TermPtr& f, const TermPtr& f2, const TermPtr& s0,
                            const TermPtr& s02, const CouplingPredicate& c,
                            const InputGrid& grid) {
  Fuel fuel = grid.fuel;
  EvalResult v0 = eval(s0, fuel), v02 = eval(s02, fuel);
  if (v0.is_out_of_fuel() || v02.is_out_of_fuel())
    return Verdict::inconclusive("fuel", "initial states exhausted fuel");
  if (!v0.is_value() || !v02.is_value()) {
    if (!v0.is_value() && !v02.is_value())
      return Verdict::equiv("both initial states stuck");
    Counterexample cex;
    cex.left_result = eval_result_to_string(v0);
    cex.right_result = eval_result_to_string(v02);
    return Verdict::not_equiv(cex, "one initial state stuck");
  }
  int base = predicate_holds(c, v0.value, v02.value, fuel);
  if (base == -2) return Verdict::inconclusive("fuel", "predicate exhausted fuel");
  if (base == -1) return Verdict::inconclusive("predicate stuck on initial states", "");
  if (base == 0) {
    Counterexample cex;
    cex.left_result = print_term(v0.value);
    cex.right_result = print_term(v02.value);
    return Verdict::not_equiv(cex, "base case: predicate false on initial states");
  }

  TermPtr s = v0.value, s2 = v02.value;
  // Bound the lockstep rounds by the fuel budget so divergence is observable.
  for (Fuel round = 0; round < fuel; ++round) {
    EvalResult r1 = eval(app(f, s), fuel);
    EvalResult r2 = eval(app(f2, s2), fuel);
    if (r1.is_out_of_fuel() || r2.is_out_of_fuel())
      return Verdict::inconclusive("fuel", "trace exceeded fuel budget");
    if (!r1.is_value() || !r2.is_value()) {
      if (r1.is_value() != r2.is_value()) {
        Counterexample cex;
        cex.left_result = eval_result_to_string(r1);
        cex.right_result = eval_result_to_string(r2);
        return Verdict::not_equiv(cex, "one side stuck during lockstep trace");
      }
      return Verdict::equiv("both sides stuck during lockstep trace");
    }
    bool stop1 = r1.value->kind() == TermKind::Inl;
    bool stop2 = r2.value->kind() == TermKind::Inl;
    if (stop1 != stop2) {
      Counterexample cex;
      cex.left_result = print_term(r1.value);
      cex.right_result = print_term(r2.value);
      cex.params = {"round"};
      cex.args = {int_lit(static_cast<long long>(round))};
      return Verdict::not_equiv(cex,
                                "step case: one side stopped, the other continued");
    }
    if (stop1) {
      std::ostringstream ev;
      ev << "coupling held: base case plus " << round
         << " lockstep rounds, both sides stopped together";
      return Verdict::equiv(ev.str());
    }
    TermPtr n1 = r1.value->child(0);
    TermPtr n2 = r2.value->child(0);
    int holds = predicate_holds(c, n1, n2, fuel);
    if (holds == -2) return Verdict::inconclusive("fuel", "predicate exhausted fuel");
    if (holds == -1)
      return Verdict::inconclusive("predicate stuck on a tested state pair", "");
    if (holds == 0) {
      Counterexample cex;
      cex.left_result = print_term(n1);
      cex.right_result = print_term(n2);
      cex.params = {"round"};
      cex.args = {int_lit(static_cast<long long>(round))};
      return Verdict::not_equiv(cex, "step case: predicate not preserved");
    }
    s = n1;
    s2 = n2;
  }
  return Verdict::inconclusive("fuel", "lockstep rounds exceeded fuel budget");
}

}  // namespace ffl
