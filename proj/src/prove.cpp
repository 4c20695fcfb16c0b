#include "ffl/prove.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ffl/text.hpp"

namespace ffl {

std::string ProofReport::to_string() const {
  std::string out;
  for (const auto& l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

namespace {

bool is_prefix(const Path& prefix, const Path& p) {
  if (prefix.size() > p.size()) return false;
  return std::equal(prefix.begin(), prefix.end(), p.begin());
}

// Binder correspondences (p-side name, q-side name) along a shared path.
std::vector<std::pair<std::string, std::string>> binders_along(const TermPtr& p,
                                                               const TermPtr& q,
                                                               const Path& path) {
  std::vector<std::pair<std::string, std::string>> out;
  TermPtr cp = p, cq = q;
  for (int step : path) {
    if (cp->kind() == TermKind::Abs && step == 0)
      out.emplace_back(cp->name(), cq->name());
    cp = cp->child(step);
    cq = cq->child(step);
  }
  return out;
}

// Renames q-side binder occurrences to the corresponding p-side names.
TermPtr align_binders(TermPtr q_sub,
                      const std::vector<std::pair<std::string, std::string>>& pairs) {
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (pairs[i].first != pairs[i].second)
      q_sub = substitute(q_sub, pairs[i].second, var("#bnd" + std::to_string(i)));
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (pairs[i].first != pairs[i].second)
      q_sub = substitute(q_sub, "#bnd" + std::to_string(i), var(pairs[i].first));
  return q_sub;
}

struct Prover {
  const TermPtr& p;
  const TermPtr& q;
  const Hints& hints;
  const ProveOptions& opts;
  ProofReport report;
  TypedTerm p_types;

  bool rule_consumed = false;
  bool coupling_consumed = false;

  Prover(const TermPtr& p_, const TermPtr& q_, const Hints& h, const ProveOptions& o)
      : p(p_), q(q_), hints(h), opts(o) {}

  // name -> type for everything visible at `path`: program parameters and
  // binders crossed on the way down (inner bindings shadow outer ones).
  std::map<std::string, TypePtr> scope_types(const Path& path) {
    std::map<std::string, TypePtr> out;
    TermPtr cur = p;
    Path prefix;
    for (std::size_t i = 0; i <= path.size(); ++i) {
      if (cur->kind() == TermKind::Abs) {
        auto it = p_types.binder_types.find(prefix);
        if (it != p_types.binder_types.end()) out[cur->name()] = it->second;
      }
      if (i == path.size()) break;
      prefix.push_back(path[i]);
      cur = cur->child(path[i]);
    }
    return out;
  }

  std::vector<Param> level_params(const Path& path, const TermPtr& a, const TermPtr& b,
                                  const std::vector<Premise>& premises) {
    auto scope = scope_types(path);
    std::set<std::string> names;
    for (const auto& n : free_vars(a)) names.insert(n);
    for (const auto& n : free_vars(b)) names.insert(n);
    for (const auto& pr : premises) {
      for (const auto& n : free_vars(pr.a)) names.insert(n);
      if (pr.b)
        for (const auto& n : free_vars(pr.b)) names.insert(n);
    }
    std::vector<Param> params;
    for (const auto& n : names) {
      auto it = scope.find(n);
      if (it == scope.end())
        throw TypeError("scope", path, "no type for free variable " + n);
      params.emplace_back(n, it->second);
    }
    return params;
  }

  bool params_are_program_params(const std::vector<Param>& params) {
    auto top = scope_types({});
    for (const auto& [n, ty] : params)
      if (top.find(n) == top.end()) return false;
    return true;
  }

  // Program-level families apply when every free variable is a program
  // parameter; family tuples bind the full parameter list.
  Verdict level_oracle(const TermPtr& a, const TermPtr& b,
                       const std::vector<Param>& params,
                       const std::vector<Premise>& premises) {
    if (opts.family && params_are_program_params(params)) {
      Signature sig = program_signature(p);
      std::vector<Param> prog_params;
      for (const auto& [n, ty] : sig.params) prog_params.emplace_back(n, ty);
      TermPtr a2 = a, b2 = b;
      return bounded_equiv_args(a2, b2, prog_params, *opts.family, opts.grid.fuel,
                                premises);
    }
    return bounded_equiv(a, b, params, opts.grid, premises);
  }

  std::optional<Verdict> try_rule(const TermPtr& a, const TermPtr& b, const Path& path,
                                  std::vector<Premise>& premises) {
    if (!hints.rule || rule_consumed) return std::nullopt;
    if (hints.rule->path && *hints.rule->path != path) return std::nullopt;
    int variant_hint = 0;
    const RewriteRule* rule = find_rule(hints.rule->rule_ref, &variant_hint);
    if (!rule) return std::nullopt;
    bool pinned = hints.rule->rule_ref.size() &&
                  (hints.rule->rule_ref.back() == 'a' || hints.rule->rule_ref.back() == 'b');

    for (std::size_t vi = 0; vi < rule->variants.size(); ++vi) {
      if (pinned && static_cast<int>(vi) != variant_hint) continue;
      const RuleVariant& rv = rule->variants[vi];
      auto sigma = approximate_match(rv, hints.rule->dir, a, b);
      if (!sigma) continue;
      const Pattern& src =
          hints.rule->dir == Direction::LeftToRight ? rv.lhs : rv.rhs;
      const Pattern& dst =
          hints.rule->dir == Direction::LeftToRight ? rv.rhs : rv.lhs;
      TermPtr cand_a, cand_b;
      try {
        cand_a = instantiate(src, *sigma);
        cand_b = instantiate(dst, *sigma);
      } catch (const UnboundMetavariable&) {
        continue;
      }

      // Side conditions first; a failed one rules the candidate out.
      std::vector<Premise> residual;
      bool failed = false;
      std::vector<std::string> cond_notes;
      for (const auto& sc : rv.conditions) {
        DischargeResult d = discharge(sc, *sigma, premises);
        if (d.kind == DischargeResult::Kind::Failed) {
          failed = true;
          break;
        }
        if (d.kind == DischargeResult::Kind::NeedsPremise) {
          bool known = false;
          for (const auto& pr : premises)
            if (premise_alpha_equal(pr, *d.premise)) { known = true; break; }
          if (!known) residual.push_back(*d.premise);
          cond_notes.push_back("  side condition " + side_condition_to_string(sc) +
                               ": needs premise " + premise_to_string(*d.premise));
        } else {
          cond_notes.push_back("  side condition " + side_condition_to_string(sc) +
                               ": proven (" + d.evidence + ")");
        }
      }
      if (failed) continue;

      // Candidate-vs-input equivalence covers the beta-reduction and
      // constant-folding gaps between the program and the literal pattern
      // instance.
      std::vector<Premise> all = premises;
      all.insert(all.end(), residual.begin(), residual.end());
      auto check = [&](const TermPtr& x, const TermPtr& y) -> Verdict {
        if (alpha_equal(x, y)) return Verdict::equiv("alpha-equal candidate");
        auto params = level_params(path, x, y, all);
        return level_oracle(x, y, params, all);
      };
      Verdict va = check(a, cand_a);
      if (!va.equivalent()) continue;
      Verdict vb = check(b, cand_b);
      if (!vb.equivalent()) continue;

      report.note("rule " + rule->id() + (rv.tag.empty() ? "" : rv.tag) + " (" +
                  rule->name + ") applied at " + path_to_string(path) +
                  (hints.rule->dir == Direction::LeftToRight ? " left-to-right"
                                                             : " right-to-left"));
      for (const auto& n : cond_notes) report.note(n);
      report.note("  candidate checks: left " + va.evidence + "; right " + vb.evidence);
      for (const auto& r : residual) {
        report.note("  residual premise: " + premise_to_string(r));
        premises.push_back(r);
      }
      rule_consumed = true;
      return Verdict::equiv("rewrite rule " + rule->id());
    }
    return std::nullopt;
  }

  std::optional<Verdict> try_coupling(const TermPtr& a, const TermPtr& b,
                                      const Path& path,
                                      const std::vector<Premise>& premises) {
    if (!hints.coupling || coupling_consumed) return std::nullopt;
    if (hints.coupling->path && *hints.coupling->path != path) return std::nullopt;
    bool folds = a->kind() == TermKind::Fold && b->kind() == TermKind::Fold;
    bool iters = a->kind() == TermKind::Iter && b->kind() == TermKind::Iter;
    if (!folds && !iters) return std::nullopt;
    coupling_consumed = true;

    const CouplingPredicate& c = hints.coupling->predicate;
    auto params = level_params(path, a, b, premises);

    std::vector<std::size_t> sizes;
    std::unique_ptr<ArgSource> grid_args;
    const ArgSource* src = nullptr;
    if (opts.family && params_are_program_params(params)) {
      src = opts.family.get();
    } else {
      std::vector<TypePtr> types;
      for (const auto& [n, ty] : params) types.push_back(ty);
      grid_args = std::make_unique<GridArgs>(types, opts.grid);
      src = grid_args.get();
    }
    std::vector<Param> tuple_params = params;
    if (src == opts.family.get()) {
      Signature sig = program_signature(p);
      tuple_params.clear();
      for (const auto& [n, ty] : sig.params) tuple_params.emplace_back(n, ty);
    }

    std::size_t tested = 0, traced = 0, filtered = 0;
    for (std::size_t i = 0; i < src->size(); ++i) {
      ArgTuple tuple = src->at(i);
      if (!premises_hold(premises, tuple_params, tuple, opts.grid.fuel)) {
        filtered++;
        continue;
      }
      tested++;
      TermPtr ai = substitute_args(a, tuple_params, tuple);
      TermPtr bi = substitute_args(b, tuple_params, tuple);

      // The conclusion must make the two loops interchangeable: their final
      // results have to agree on every tested input.
      EvalResult ra = eval(ai, opts.grid.fuel);
      EvalResult rb = eval(bi, opts.grid.fuel);
      if (ra.is_out_of_fuel() || rb.is_out_of_fuel())
        return Verdict::inconclusive("fuel", "loop evaluation exhausted fuel");
      if (ra.is_value() != rb.is_value()) {
        Counterexample cex;
        for (const auto& [n, ty] : tuple_params) cex.params.push_back(n);
        cex.args = tuple;
        cex.left_result = eval_result_to_string(ra);
        cex.right_result = eval_result_to_string(rb);
        return Verdict::not_equiv(cex, "loops disagree on an input");
      }
      if (!ra.is_value()) continue;  // both stuck: agree, nothing to trace
      if (!alpha_equal(ra.value, rb.value)) {
        Counterexample cex;
        for (const auto& [n, ty] : tuple_params) cex.params.push_back(n);
        cex.args = tuple;
        cex.left_result = print_term(ra.value);
        cex.right_result = print_term(rb.value);
        return Verdict::not_equiv(cex, "loop results differ");
      }

      Verdict cv;
      if (folds) {
        EvalResult fx = eval(ai->child(0), opts.grid.fuel);
        EvalResult fy = eval(bi->child(0), opts.grid.fuel);
        EvalResult xs = eval(ai->child(2), opts.grid.fuel);
        EvalResult ys = eval(bi->child(2), opts.grid.fuel);
        if (!fx.is_value() || !fy.is_value() || !xs.is_value() || !ys.is_value())
          continue;  // loop children stuck; result comparison above decided
        if (xs.value->arity() != ys.value->arity()) continue;
        traced++;
        cv = check_fold_coupling(fx.value, fy.value, ai->child(1), bi->child(1),
                                 {{xs.value, ys.value}}, c, opts.grid);
      } else {
        EvalResult fx = eval(ai->child(0), opts.grid.fuel);
        EvalResult fy = eval(bi->child(0), opts.grid.fuel);
        if (!fx.is_value() || !fy.is_value()) continue;
        traced++;
        cv = check_iter_coupling(fx.value, fy.value, ai->child(1), bi->child(1), c,
                                 opts.grid);
      }
      if (!cv.equivalent()) {
        report.note("coupling check failed on a tuple: " +
                    std::string(verdict_kind_name(cv.kind)) + " (" +
                    (cv.counterexample ? cv.counterexample->to_string() : cv.reason) +
                    ")");
        return cv;
      }
    }
    std::ostringstream ev;
    ev << "coupling invariant held: " << traced << " lockstep traces over " << tested
       << " inputs (" << filtered << " filtered by premises)";
    report.note("coupling predicate verified at " + path_to_string(path) + ": " +
                ev.str());
    return Verdict::equiv(ev.str());
  }

  // One ProveEquivalent attempt at the current diff level.
  Verdict attempt(const TermPtr& a, const TermPtr& b, const Path& path,
                  std::vector<Premise>& premises) {
    if (alpha_equal(a, b)) return Verdict::equiv("alpha-equal");

    if (auto v = try_rule(a, b, path, premises)) return *v;
    if (auto v = try_coupling(a, b, path, premises)) return *v;

    // An unconsumed hint anchored above this level steers the strategy: keep
    // widening instead of running the oracle here.
    bool defer = false;
    if (hints.coupling && !coupling_consumed && hints.coupling->path &&
        *hints.coupling->path != path && is_prefix(*hints.coupling->path, path))
      defer = true;
    if (hints.rule && !rule_consumed && hints.rule->path &&
        *hints.rule->path != path && is_prefix(*hints.rule->path, path))
      defer = true;
    if (defer)
      return Verdict::inconclusive("deferred to hinted context", "hint is anchored above");

    auto params = level_params(path, a, b, premises);
    Verdict v = level_oracle(a, b, params, premises);
    if (v.kind == Verdict::Kind::NotEquivalent) {
      // Work backward from the failure: propose contextual premises.
      auto added = add_missing_premises(v, a, b, params, opts.grid, premises);
      if (!added.empty()) {
        for (const auto& pr : added) {
          report.note("premise introduced at " + path_to_string(path) + ": " +
                      premise_to_string(pr));
          premises.push_back(pr);
        }
        return level_oracle(a, b, level_params(path, a, b, premises), premises);
      }
    }
    return v;
  }

  // Premise bookkeeping while moving one level toward the root.
  void adjust_premises_crossing(const Path& child_path,
                                std::vector<Premise>& premises) {
    if (child_path.empty()) return;
    Path parent_path(child_path.begin(), child_path.end() - 1);
    TermPtr parent = subterm_at(p, parent_path);
    int idx = child_path.back();
    if (parent->kind() == TermKind::App && idx == 0 &&
        parent->child(0)->kind() == TermKind::Abs) {
      const std::string& binder = parent->child(0)->name();
      const TermPtr& arg = parent->child(1);
      for (auto& pr : premises) {
        if (is_free_in(binder, pr.a)) pr.a = substitute(pr.a, binder, arg);
        if (pr.b && is_free_in(binder, pr.b)) pr.b = substitute(pr.b, binder, arg);
      }
    }
  }

  // Tries to discharge open premises at the context `path`.
  void discharge_open(const Path& path, std::vector<Premise>& open,
                      const std::vector<Premise>& assumed) {
    LengthFacts facts;
    for (const auto& pr : assumed)
      if (pr.kind == Premise::Kind::EqualLength)
        facts.equal_arrays.emplace_back(pr.a, pr.b);
    std::vector<Premise> still;
    for (const auto& pr : open) {
      bool done = false;
      switch (pr.kind) {
        case Premise::Kind::EqualLength: {
          if (facts.known_equal(pr.a, pr.b) ||
              length_equal(infer_length(pr.a, facts), infer_length(pr.b, facts)))
            done = true;
          break;
        }
        case Premise::Kind::NotStuck:
          done = pr.a->is_value();
          break;
        case Premise::Kind::ValueEqual:
          done = alpha_equal(pr.a, pr.b);
          break;
      }
      if (!done && path.empty()) done = oracle_discharge(pr);
      if (done)
        report.note("premise discharged at " + path_to_string(path) + ": " +
                    premise_to_string(pr));
      else
        still.push_back(pr);
    }
    open = std::move(still);
  }

  // Root-level fallback: the premise, closed over the program parameters,
  // holds on every enumerated input (inputs on which both programs fail to
  // produce a value are exempt).
  bool oracle_discharge(const Premise& pr) {
    Signature sig = program_signature(p);
    std::vector<Param> prog_params;
    std::set<std::string> names;
    for (const auto& [n, ty] : sig.params) {
      prog_params.emplace_back(n, ty);
      names.insert(n);
    }
    for (const auto& n : free_vars(pr.a))
      if (!names.count(n)) return false;
    if (pr.b)
      for (const auto& n : free_vars(pr.b))
        if (!names.count(n)) return false;

    std::unique_ptr<ArgSource> grid_args;
    const ArgSource* src = opts.family.get();
    if (!src) {
      std::vector<TypePtr> types;
      for (const auto& [n, ty] : prog_params) types.push_back(ty);
      grid_args = std::make_unique<GridArgs>(types, opts.grid);
      src = grid_args.get();
    }
    for (std::size_t i = 0; i < src->size(); ++i) {
      ArgTuple tuple = src->at(i);
      if (premises_hold({pr}, prog_params, tuple, opts.grid.fuel)) continue;
      EvalResult ra = eval(substitute_args(apply_params(p, prog_params), prog_params, tuple),
                           opts.grid.fuel);
      EvalResult rb = eval(substitute_args(apply_params(q, prog_params), prog_params, tuple),
                           opts.grid.fuel);
      if (!ra.is_value() && !rb.is_value()) continue;
      return false;
    }
    return true;
  }

  static TermPtr apply_params(const TermPtr& prog, const std::vector<Param>& params) {
    TermPtr out = prog;
    for (const auto& [n, ty] : params) out = app(out, var(n));
    return out;
  }

  std::pair<Verdict, ProofReport> run() {
    p_types = typecheck_full(TypeContext{}, p);
    TypedTerm q_types = typecheck_full(TypeContext{}, q);
    if (!type_equal(p_types.type, q_types.type)) {
      Counterexample cex;
      cex.left_result = type_to_string(p_types.type);
      cex.right_result = type_to_string(q_types.type);
      report.note("type mismatch: " + cex.left_result + " vs " + cex.right_result);
      return {Verdict::not_equiv(cex, "the programs have different types"),
              report};
    }

    if (alpha_equal(p, q)) {
      report.note("programs are alpha-equal");
      return {Verdict::equiv("alpha-equal"), report};
    }

    DiffResult d = diff(p, q);
    report.note("diff at " + path_to_string(d.path) + ": " +
                std::string(kind_name(d.left->kind())) + " vs " +
                std::string(kind_name(d.right->kind())));

    std::vector<Premise> premises = hints.declared;
    for (const auto& pr : hints.declared)
      report.note("declared premise: " + premise_to_string(pr));
    std::size_t assumed_count = hints.declared.size();

    Path path = d.path;
    TermPtr a = d.left;
    TermPtr b = align_binders(d.right, binders_along(p, q, path));

    for (;;) {
      Verdict v = attempt(a, b, path, premises);
      report.note("level " + path_to_string(path) + ": " +
                  verdict_kind_name(v.kind) +
                  (v.evidence.empty() ? "" : " (" + v.evidence + ")"));
      if (v.equivalent()) {
        // Reconstruct the root equivalence by congruence, discharging the
        // premises this proof introduced on the way up.
        std::vector<Premise> open(premises.begin() + assumed_count, premises.end());
        std::vector<Premise> assumed(premises.begin(),
                                     premises.begin() + assumed_count);
        Path lift = path;
        discharge_open(lift, open, assumed);
        while (!lift.empty()) {
          adjust_premises_crossing(lift, open);
          lift.pop_back();
          discharge_open(lift, open, assumed);
          report.note("congruence lift to " + path_to_string(lift) + " (" +
                      kind_name(subterm_at(p, lift)->kind()) + ")");
        }
        if (!open.empty()) {
          std::string names;
          for (const auto& pr : open) names += "\n  open: " + premise_to_string(pr);
          report.note("premises left open at the root:" + names);
          return {Verdict::inconclusive("open premises" + names, v.evidence), report};
        }
        return {v, report};
      }
      if (path.empty()) {
        report.note("failed at the root");
        return {v, report};
      }
      if (v.counterexample)
        report.note("  counterexample: " + v.counterexample->to_string());
      adjust_premises_crossing(path, premises);
      WidenResult w = widen(p, q, path);
      report.widenings++;
      report.note("widening to " + path_to_string(w.path));
      path = w.path;
      a = w.left;
      b = align_binders(w.right, binders_along(p, q, path));
    }
  }
};

}  // namespace

std::pair<Verdict, ProofReport> prove_equivalent(const TermPtr& p, const TermPtr& q,
                                                 const Hints& hints,
                                                 const ProveOptions& opts) {
  Prover prover(p, q, hints, opts);
  return prover.run();
}

Verdict congruence_lift(const Verdict& child, const TermPtr& p, const TermPtr& q,
                        const Path& at) {
  TermPtr hole = meta("hole");
  TermPtr pc = replace_at(p, at, hole);
  TermPtr qc = replace_at(q, at, hole);
  if (!alpha_equal(pc, qc))
    throw PathMismatch("contexts differ outside the subterms at " +
                       path_to_string(at));
  Verdict out = child;
  if (!at.empty()) {
    TermPtr parent = subterm_at(p, {at.front()});
    out.evidence = "congruence over " +
                   std::string(kind_name(subterm_at(p, Path(at.begin(), at.end() - 1))->kind())) +
                   (child.evidence.empty() ? "" : ": " + child.evidence);
  }
  return out;
}

std::vector<Premise> add_missing_premises(const Verdict& failed, const TermPtr& p,
                                          const TermPtr& q,
                                          const std::vector<Param>& params,
                                          const InputGrid& grid,
                                          const std::vector<Premise>& existing) {
  if (failed.kind != Verdict::Kind::NotEquivalent || !failed.counterexample)
    return {};
  const Counterexample& cex = *failed.counterexample;

  // Atoms: parameters plus fst/snd projections of pair parameters.
  struct Atom {
    TermPtr term;
    TypePtr type;
  };
  std::vector<Atom> atoms;
  for (const auto& [n, ty] : params) {
    atoms.push_back({var(n), ty});
    if (ty->kind() == TypeKind::Prod) {
      atoms.push_back({fst(var(n)), ty->arg(0)});
      atoms.push_back({snd(var(n)), ty->arg(1)});
    }
  }

  auto cex_value = [&](const TermPtr& t) -> std::optional<EvalResult> {
    std::vector<Param> cex_params;
    for (const auto& n : cex.params) {
      for (const auto& [pn, pty] : params)
        if (pn == n) cex_params.emplace_back(pn, pty);
    }
    if (cex_params.size() != cex.params.size()) {
      cex_params.clear();
      for (std::size_t i = 0; i < cex.params.size(); ++i)
        cex_params.emplace_back(cex.params[i], nullptr);
    }
    ArgTuple args = cex.args;
    TermPtr closed = t;
    for (std::size_t i = 0; i < cex_params.size() && i < args.size(); ++i)
      closed = substitute(closed, cex_params[i].first, args[i]);
    return eval(closed, grid.fuel);
  };

  std::vector<Premise> candidates;
  // Schema 1: equal lengths over array atoms whose lengths differ in the
  // counterexample.
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (atoms[i].type->kind() != TypeKind::List) continue;
    for (std::size_t j = i + 1; j < atoms.size(); ++j) {
      if (atoms[j].type->kind() != TypeKind::List) continue;
      auto li = cex_value(length(atoms[i].term));
      auto lj = cex_value(length(atoms[j].term));
      if (!li || !lj || !li->is_value() || !lj->is_value()) continue;
      if (alpha_equal(li->value, lj->value)) continue;
      candidates.push_back(Premise::equal_length(atoms[i].term, atoms[j].term));
    }
  }
  // Schema 2: non-stuckness of function-typed parameters.
  for (const auto& [n, ty] : params)
    if (ty->kind() == TypeKind::Arrow)
      candidates.push_back(Premise::not_stuck(var(n)));
  // Schema 3: value equality bridging int atoms to array lengths, violated
  // in the counterexample.
  for (const auto& ia : atoms) {
    if (ia.type->kind() != TypeKind::Int) continue;
    for (const auto& aa : atoms) {
      if (aa.type->kind() != TypeKind::List) continue;
      auto vi = cex_value(ia.term);
      auto vl = cex_value(length(aa.term));
      if (!vi || !vl || !vi->is_value() || !vl->is_value()) continue;
      if (alpha_equal(vi->value, vl->value)) continue;
      candidates.push_back(Premise::value_equal(ia.term, length(aa.term)));
    }
  }

  // Drop candidates already present.
  std::vector<Premise> fresh;
  for (const auto& c : candidates) {
    bool known = false;
    for (const auto& e : existing)
      if (premise_alpha_equal(c, e)) { known = true; break; }
    if (!known) fresh.push_back(c);
  }

  // Minimal prefix that flips the verdict.
  for (std::size_t k = 1; k <= fresh.size(); ++k) {
    std::vector<Premise> attempt_set = existing;
    attempt_set.insert(attempt_set.end(), fresh.begin(), fresh.begin() + k);
    Verdict v = bounded_equiv(p, q, params, grid, attempt_set);
    if (v.equivalent()) return {fresh.begin(), fresh.begin() + k};
  }
  return {};
}

}  // namespace ffl
