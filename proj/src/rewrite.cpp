#include "ffl/rewrite.hpp"

#include "ffl/text.hpp"

namespace ffl {

std::string premise_to_string(const Premise& p) {
  switch (p.kind) {
    case Premise::Kind::EqualLength:
      return "equal-length(" + print_term(p.a) + ", " + print_term(p.b) + ")";
    case Premise::Kind::NotStuck:
      return "not-stuck(" + print_term(p.a) + ")";
    case Premise::Kind::ValueEqual:
      return "value-equal(" + print_term(p.a) + ", " + print_term(p.b) + ")";
  }
  return "?";
}

bool premise_alpha_equal(const Premise& a, const Premise& b) {
  if (a.kind != b.kind) return false;
  if (!alpha_equal(a.a, b.a)) return false;
  if (a.b || b.b) return a.b && b.b && alpha_equal(a.b, b.b);
  return true;
}

namespace {

LengthFacts facts_from_premises(const std::vector<Premise>& premises) {
  LengthFacts facts;
  for (const auto& p : premises)
    if (p.kind == Premise::Kind::EqualLength)
      facts.equal_arrays.emplace_back(p.a, p.b);
  return facts;
}

}  // namespace

DischargeResult discharge(const SideCondition& sc, const Substitution& s,
                          const std::vector<Premise>& premises) {
  switch (sc.kind) {
    case SideCondition::Kind::NotFree: {
      auto it = s.binders.find(sc.binder);
      if (it == s.binders.end()) {
        // Binder never corresponded to a concrete name; instantiation picks a
        // fresh one, so freshness holds by construction.
        return {DischargeResult::Kind::Proven, "fresh binder " + sc.binder, {}, ""};
      }
      TermPtr inst = instantiate(sc.a, s);
      if (!is_free_in(it->second, inst))
        return {DischargeResult::Kind::Proven,
                it->second + " not free in " + print_term(inst), {}, ""};
      return {DischargeResult::Kind::Failed, "", {},
              it->second + " occurs free in " + print_term(inst)};
    }
    case SideCondition::Kind::NotStuck: {
      TermPtr inst = instantiate(sc.a, s);
      if (inst->is_value())
        return {DischargeResult::Kind::Proven, "value " + print_term(inst), {}, ""};
      return {DischargeResult::Kind::NeedsPremise, "", Premise::not_stuck(inst), ""};
    }
    case SideCondition::Kind::EqualLength: {
      TermPtr lhs = instantiate(sc.a, s);
      TermPtr rhs = instantiate(sc.b, s);
      LengthFacts facts = facts_from_premises(premises);
      if (facts.known_equal(lhs, rhs))
        return {DischargeResult::Kind::Proven, "premised equal lengths", {}, ""};
      LengthExpr la = infer_length(lhs, facts);
      LengthExpr lb = infer_length(rhs, facts);
      if (length_equal(la, lb))
        return {DischargeResult::Kind::Proven,
                "length " + length_to_string(la) + " on both sides", {}, ""};
      return {DischargeResult::Kind::NeedsPremise, "",
              Premise::equal_length(lhs, rhs), ""};
    }
  }
  return {DischargeResult::Kind::Failed, "", {}, "unknown side condition"};
}

ApplyResult apply_rule(const RewriteRule& rule, int variant, Direction dir,
                       const TermPtr& t, const Path& at,
                       const std::vector<Premise>& premises) {
  if (variant < 0 || static_cast<std::size_t>(variant) >= rule.variants.size())
    throw ApplyError(rule.id() + ": no such variant");
  const RuleVariant& rv = rule.variants[static_cast<std::size_t>(variant)];
  const Pattern& src = dir == Direction::LeftToRight ? rv.lhs : rv.rhs;
  const Pattern& dst = dir == Direction::LeftToRight ? rv.rhs : rv.lhs;

  TermPtr sub = subterm_at(t, at);
  if (!sub) throw ApplyError(rule.id() + ": invalid path " + path_to_string(at));
  auto m = match_pattern(src, sub);
  if (!m)
    throw NoMatch(rule.id() + ": source pattern does not match at " +
                  path_to_string(at));

  // The destination may mention metavariables the source did not bind.
  for (const auto& mvname : pattern_metas(dst))
    if (!m->lookup(mvname))
      throw NoMatch(rule.id() + ": metavariable ?" + mvname +
                    " not determined by the source side");

  ApplyResult out;
  out.subst = *m;
  for (const auto& sc : rv.conditions) {
    DischargeResult d = discharge(sc, *m, premises);
    switch (d.kind) {
      case DischargeResult::Kind::Proven: break;
      case DischargeResult::Kind::NeedsPremise: {
        bool already = false;
        for (const auto& p : premises)
          if (premise_alpha_equal(p, *d.premise)) { already = true; break; }
        if (!already) out.residual.push_back(*d.premise);
        break;
      }
      case DischargeResult::Kind::Failed:
        throw ApplyError(rule.id() + ": side condition failed: " +
                         side_condition_to_string(sc) + " (" + d.counterexample + ")");
    }
  }

  TermPtr replacement = instantiate(dst, *m);
  out.term = replace_at(t, at, std::move(replacement));
  return out;
}

std::optional<Substitution> approximate_match(const RuleVariant& var, Direction dir,
                                              const TermPtr& source,
                                              const TermPtr& target) {
  const Pattern& src = dir == Direction::LeftToRight ? var.lhs : var.rhs;
  const Pattern& dst = dir == Direction::LeftToRight ? var.rhs : var.lhs;

  Substitution from_source = match_pattern_lenient(src, source);
  Substitution from_target = match_pattern_lenient(dst, target);

  // Target-side assignments win on conflict.
  Substitution merged = from_source;
  for (const auto& [k, v] : from_target.metas) merged.metas[k] = v;
  for (const auto& [k, v] : from_target.binders) merged.binders[k] = v;

  for (const auto& mvname : pattern_metas(src))
    if (!merged.lookup(mvname)) return std::nullopt;
  for (const auto& mvname : pattern_metas(dst))
    if (!merged.lookup(mvname)) return std::nullopt;
  return merged;
}

}  // namespace ffl
