#include "ffl/diff.hpp"

namespace ffl {

namespace {

bool alpha_eq_env(const TermPtr& a, const TermPtr& b,
                  std::vector<std::pair<std::string, std::string>>& env) {
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case TermKind::Var: {
      for (auto it = env.rbegin(); it != env.rend(); ++it) {
        bool la = it->first == a->name();
        bool lb = it->second == b->name();
        if (la || lb) return la && lb;
      }
      return a->name() == b->name();
    }
    case TermKind::IntLit: return a->int_value() == b->int_value();
    case TermKind::BoolLit: return a->bool_value() == b->bool_value();
    case TermKind::Meta: return a->name() == b->name();
    case TermKind::Abs: {
      env.emplace_back(a->name(), b->name());
      bool ok = alpha_eq_env(a->child(0), b->child(0), env);
      env.pop_back();
      return ok;
    }
    default: {
      if (a->arity() != b->arity()) return false;
      for (std::size_t i = 0; i < a->arity(); ++i)
        if (!alpha_eq_env(a->child(i), b->child(i), env)) return false;
      return true;
    }
  }
}

void diff_rec(const TermPtr& p, const TermPtr& q,
              std::vector<std::pair<std::string, std::string>>& env, Path& path,
              DiffResult& out) {
  // Constructor/arity clash, differing leaves, or a binder pair: this pair is
  // the difference.
  if (p->kind() != q->kind() || p->arity() != q->arity() ||
      p->kind() == TermKind::Abs ||
      (p->kind() == TermKind::Var && p->name() != q->name()) ||
      (p->kind() == TermKind::IntLit && p->int_value() != q->int_value()) ||
      (p->kind() == TermKind::BoolLit && p->bool_value() != q->bool_value()) ||
      (p->kind() == TermKind::Meta && p->name() != q->name())) {
    out = {false, p, q, path};
    return;
  }
  int differing = -1;
  for (std::size_t i = 0; i < p->arity(); ++i) {
    if (!alpha_eq_env(p->child(i), q->child(i), env)) {
      if (differing >= 0) {  // two or more differing children
        out = {false, p, q, path};
        return;
      }
      differing = static_cast<int>(i);
    }
  }
  if (differing < 0) {
    out = DiffResult::same();
    return;
  }
  path.push_back(differing);
  diff_rec(p->child(differing), q->child(differing), env, path, out);
  path.pop_back();
}

}  // namespace

DiffResult diff(const TermPtr& p, const TermPtr& q) {
  std::vector<std::pair<std::string, std::string>> env;
  if (alpha_eq_env(p, q, env)) return DiffResult::same();
  DiffResult out;
  Path path;
  diff_rec(p, q, env, path, out);
  return out;
}

WidenResult widen(const TermPtr& p, const TermPtr& q, const Path& at) {
  if (at.empty()) throw AlreadyAtRoot();
  Path parent(at.begin(), at.end() - 1);
  return {subterm_at(p, parent), subterm_at(q, parent), parent};
}

}  // namespace ffl
