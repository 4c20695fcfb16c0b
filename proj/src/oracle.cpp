#include "ffl/oracle.hpp"

#include <sstream>

#include "ffl/text.hpp"

namespace ffl {

const char* verdict_kind_name(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::Equivalent: return "equivalent";
    case Verdict::Kind::NotEquivalent: return "not-equivalent";
    case Verdict::Kind::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string Counterexample::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) os << ", ";
    os << params[i] << "=" << print_term(args[i]);
  }
  os << ") -> left " << left_result << ", right " << right_result;
  return os.str();
}

TermPtr substitute_args(const TermPtr& t, const std::vector<Param>& params,
                        const ArgTuple& args) {
  TermPtr out = t;
  for (std::size_t i = 0; i < params.size(); ++i)
    out = substitute(out, params[i].first, args[i]);
  return out;
}

bool premises_hold(const std::vector<Premise>& premises,
                   const std::vector<Param>& params, const ArgTuple& args,
                   Fuel fuel) {
  for (const auto& pr : premises) {
    switch (pr.kind) {
      case Premise::Kind::EqualLength: {
        EvalResult a = eval(length(substitute_args(pr.a, params, args)), fuel);
        EvalResult b = eval(length(substitute_args(pr.b, params, args)), fuel);
        if (!a.is_value() || !b.is_value()) return false;
        if (!alpha_equal(a.value, b.value)) return false;
        break;
      }
      case Premise::Kind::NotStuck: {
        EvalResult a = eval(substitute_args(pr.a, params, args), fuel);
        if (!a.is_value()) return false;
        break;
      }
      case Premise::Kind::ValueEqual: {
        EvalResult a = eval(substitute_args(pr.a, params, args), fuel);
        EvalResult b = eval(substitute_args(pr.b, params, args), fuel);
        if (!a.is_value() || !b.is_value()) return false;
        if (!alpha_equal(a.value, b.value)) return false;
        break;
      }
    }
  }
  return true;
}

namespace {

struct OracleRun {
  std::size_t tested = 0;
  std::size_t filtered = 0;
  std::size_t both_out_of_fuel = 0;
  std::optional<Counterexample> cex;
  bool fuel_mismatch = false;

  void feed(const std::vector<Param>& params, const ArgTuple& args,
            const EvalResult& l, const EvalResult& r) {
    tested++;
    if (l.is_out_of_fuel() && r.is_out_of_fuel()) {
      both_out_of_fuel++;
      return;
    }
    if (l.is_out_of_fuel() || r.is_out_of_fuel()) {
      fuel_mismatch = true;
      return;
    }
    bool agree;
    if (l.is_value() && r.is_value())
      agree = alpha_equal(l.value, r.value);
    else
      agree = l.is_stuck() && r.is_stuck();
    if (!agree && !cex) {
      Counterexample c;
      for (const auto& [n, ty] : params) c.params.push_back(n);
      c.args = args;
      c.left_result = eval_result_to_string(l);
      c.right_result = eval_result_to_string(r);
      cex = std::move(c);
    }
  }

  Verdict finish(const std::string& domain) const {
    std::ostringstream ev;
    ev << domain << "; tested " << tested << ", filtered by premises " << filtered;
    if (both_out_of_fuel)
      ev << "; caveat: " << both_out_of_fuel
         << " tuples exhausted fuel on both sides (treated as agreeing)";
    if (cex) return Verdict::not_equiv(*cex, ev.str());
    if (fuel_mismatch) return Verdict::inconclusive("fuel", ev.str());
    return Verdict::equiv(ev.str());
  }
};

Verdict run_oracle(const TermPtr& p, const TermPtr& q,
                   const std::vector<Param>& params, const ArgSource& args,
                   Fuel fuel, const std::vector<Premise>& premises,
                   const std::string& domain) {
  // Condition (a) of the equivalence definition: both sides must have the
  // same type over the parameters.
  TypeContext ctx;
  for (const auto& [n, ty] : params) ctx.push(n, ty);
  TypePtr tp = typecheck(ctx, p);
  TypePtr tq = typecheck(ctx, q);
  if (!type_equal(tp, tq))
    throw TypeError("equivalence", {}, "type mismatch: " + type_to_string(tp) +
                                           " vs " + type_to_string(tq));

  // Compare functions pointwise: add parameters for the arrow domains.
  TermPtr lp = p, lq = q;
  std::vector<Param> all_params = params;
  TypePtr ty = tp;
  int fresh = 0;
  while (ty->kind() == TypeKind::Arrow) {
    std::string name = "arg#" + std::to_string(fresh++);
    all_params.emplace_back(name, ty->arg(0));
    lp = app(lp, var(name));
    lq = app(lq, var(name));
    ty = ty->arg(1);
  }

  OracleRun run;
  for (std::size_t i = 0; i < args.size(); ++i) {
    ArgTuple tuple = args.at(i);
    if (!premises_hold(premises, all_params, tuple, fuel)) {
      run.filtered++;
      continue;
    }
    EvalResult l = eval(substitute_args(lp, all_params, tuple), fuel);
    EvalResult r = eval(substitute_args(lq, all_params, tuple), fuel);
    run.feed(all_params, tuple, l, r);
  }
  return run.finish(domain);
}

}  // namespace

Verdict bounded_equiv(const TermPtr& p, const TermPtr& q,
                      const std::vector<Param>& params, const InputGrid& grid,
                      const std::vector<Premise>& premises) {
  // Determine the full parameter list (including eta-expansion) up front so
  // the grid covers the arrow domains too.
  TypeContext ctx;
  for (const auto& [n, ty] : params) ctx.push(n, ty);
  TypePtr tp = typecheck(ctx, p);
  std::vector<TypePtr> types;
  for (const auto& [n, ty] : params) types.push_back(ty);
  TypePtr ty = tp;
  while (ty->kind() == TypeKind::Arrow) {
    types.push_back(ty->arg(0));
    ty = ty->arg(1);
  }
  GridArgs args(types, grid);
  // run_oracle re-derives the same extended parameter list in the same order.
  std::vector<Param> base = params;
  return run_oracle(p, q, base, args, grid.fuel, premises, args.describe());
}

Verdict bounded_equiv_args(const TermPtr& p, const TermPtr& q,
                           const std::vector<Param>& params, const ArgSource& args,
                           Fuel fuel, const std::vector<Premise>& premises) {
  return run_oracle(p, q, params, args, fuel, premises, args.describe());
}

}  // namespace ffl
