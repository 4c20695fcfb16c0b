#include "ffl/pattern.hpp"

#include <algorithm>
#include <set>

namespace ffl {

namespace {

struct Matcher {
  Substitution out;
  std::vector<std::pair<std::string, std::string>> scope;  // pattern/concrete
  bool lenient = false;
  bool ok = true;

  bool bind_meta(const std::string& m, const TermPtr& t) {
    auto it = out.metas.find(m);
    if (it != out.metas.end()) return alpha_equal(it->second, t);
    out.metas.emplace(m, t);
    return true;
  }

  bool match(const Pattern& p, const TermPtr& t) {
    if (p->kind() == TermKind::Meta) return bind_meta(p->name(), t);
    if (p->kind() != t->kind()) return false;
    switch (p->kind()) {
      case TermKind::Var: {
        for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
          bool lp = it->first == p->name();
          bool lt = it->second == t->name();
          if (lp || lt) return lp && lt;
        }
        return p->name() == t->name();
      }
      case TermKind::IntLit: return p->int_value() == t->int_value();
      case TermKind::BoolLit: return p->bool_value() == t->bool_value();
      case TermKind::Abs: {
        scope.emplace_back(p->name(), t->name());
        out.binders[p->name()] = t->name();
        bool r = descend(p->child(0), t->child(0));
        scope.pop_back();
        return r;
      }
      default: {
        if (p->arity() != t->arity()) return false;
        for (std::size_t i = 0; i < p->arity(); ++i)
          if (!descend(p->child(i), t->child(i))) return false;
        return true;
      }
    }
  }

  // In lenient mode a local mismatch is recorded but siblings continue;
  // assignments made inside the failed subtree are dropped.
  bool descend(const Pattern& p, const TermPtr& t) {
    if (!lenient) return match(p, t);
    auto metas_snapshot = out.metas;
    auto binders_snapshot = out.binders;
    if (!match(p, t)) {
      out.metas = std::move(metas_snapshot);
      out.binders = std::move(binders_snapshot);
      ok = false;
    }
    return true;
  }
};

void collect_metas(const Pattern& p, std::vector<std::string>& out,
                   std::set<std::string>& seen) {
  if (p->kind() == TermKind::Meta) {
    if (seen.insert(p->name()).second) out.push_back(p->name());
    return;
  }
  for (const auto& c : p->children()) collect_metas(c, out, seen);
}

struct Instantiator {
  const Substitution& s;
  std::vector<std::string> avoid;  // names that fresh binders must dodge
  std::vector<std::pair<std::string, std::string>> scope;

  explicit Instantiator(const Substitution& subst) : s(subst) {
    for (const auto& [m, t] : s.metas) {
      auto fv = free_vars(t);
      avoid.insert(avoid.end(), fv.begin(), fv.end());
    }
  }

  TermPtr go(const Pattern& p) {
    switch (p->kind()) {
      case TermKind::Meta: {
        const TermPtr* b = s.lookup(p->name());
        if (!b) throw UnboundMetavariable(p->name());
        return *b;
      }
      case TermKind::Var: {
        for (auto it = scope.rbegin(); it != scope.rend(); ++it)
          if (it->first == p->name()) return var(it->second);
        return p;
      }
      case TermKind::Abs: {
        std::string chosen = fresh_name(p->name(), avoid);
        avoid.push_back(chosen);
        scope.emplace_back(p->name(), chosen);
        TermPtr body = go(p->child(0));
        scope.pop_back();
        return abs(chosen, std::move(body));
      }
      default: {
        std::vector<TermPtr> kids;
        kids.reserve(p->arity());
        bool changed = false;
        for (const auto& c : p->children()) {
          TermPtr nc = go(c);
          changed = changed || nc.get() != c.get();
          kids.push_back(std::move(nc));
        }
        if (!changed) return p;
        return Term::make(p->kind(), p->name(), p->int_value(), p->bool_value(),
                          std::move(kids));
      }
    }
  }
};

}  // namespace

std::optional<Substitution> match_pattern(const Pattern& p, const TermPtr& t) {
  Matcher m;
  if (!m.match(p, t)) return std::nullopt;
  return m.out;
}

Substitution match_pattern_lenient(const Pattern& p, const TermPtr& t) {
  Matcher m;
  m.lenient = true;
  m.match(p, t);
  return m.out;
}

TermPtr instantiate(const Pattern& p, const Substitution& s) {
  Instantiator inst(s);
  return inst.go(p);
}

std::vector<std::string> pattern_metas(const Pattern& p) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  collect_metas(p, out, seen);
  return out;
}

}  // namespace ffl
