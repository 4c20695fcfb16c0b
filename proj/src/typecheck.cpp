#include "ffl/typecheck.hpp"

#include <functional>
#include <vector>

namespace ffl {

namespace {

struct Infer {
  std::vector<TypePtr> subst;  // tvar id -> binding (or null)
  std::map<Path, TypePtr> binder_types;

  TypePtr fresh() {
    subst.push_back(nullptr);
    return std::make_shared<Type>(TypeKind::TVar, std::vector<TypePtr>{},
                                  static_cast<int>(subst.size()) - 1);
  }

  TypePtr resolve(TypePtr t) {
    while (t->kind() == TypeKind::TVar && subst[t->tvar_id()])
      t = subst[t->tvar_id()];
    return t;
  }

  TypePtr deep_resolve(const TypePtr& t0) {
    TypePtr t = resolve(t0);
    if (t->args().empty()) return t;
    std::vector<TypePtr> args;
    args.reserve(t->args().size());
    for (const auto& a : t->args()) args.push_back(deep_resolve(a));
    return std::make_shared<Type>(t->kind(), std::move(args), t->tvar_id());
  }

  bool occurs(int id, const TypePtr& t0) {
    TypePtr t = resolve(t0);
    if (t->kind() == TypeKind::TVar) return t->tvar_id() == id;
    for (const auto& a : t->args())
      if (occurs(id, a)) return true;
    return false;
  }

  void unify(const TypePtr& a0, const TypePtr& b0, const char* rule, const Path& path) {
    TypePtr a = resolve(a0), b = resolve(b0);
    if (a->kind() == TypeKind::TVar) {
      if (b->kind() == TypeKind::TVar && b->tvar_id() == a->tvar_id()) return;
      if (occurs(a->tvar_id(), b))
        throw TypeError(rule, path, "cannot construct recursive type");
      subst[a->tvar_id()] = b;
      return;
    }
    if (b->kind() == TypeKind::TVar) { unify(b, a, rule, path); return; }
    if (a->kind() != b->kind() || a->args().size() != b->args().size())
      throw TypeError(rule, path,
                      "expected " + type_to_string(deep_resolve(a)) + ", got " +
                          type_to_string(deep_resolve(b)));
    for (std::size_t i = 0; i < a->args().size(); ++i)
      unify(a->arg(i), b->arg(i), rule, path);
  }

  TypePtr infer(TypeContext& ctx, const TermPtr& t, Path& path) {
    switch (t->kind()) {
      case TermKind::Var: {
        const TypePtr* ty = ctx.lookup(t->name());
        if (!ty) throw UnboundVariable(t->name(), path);
        return *ty;
      }
      case TermKind::App: {
        TypePtr ft = child(ctx, t, 0, path);
        TypePtr at = child(ctx, t, 1, path);
        TypePtr res = fresh();
        unify(ft, t_arrow(at, res), "app", path);
        return res;
      }
      case TermKind::Abs: {
        TypePtr pt = fresh();
        ctx.push(t->name(), pt);
        TypePtr bt = child(ctx, t, 0, path);
        ctx.pop();
        binder_types[path] = pt;
        return t_arrow(pt, bt);
      }
      case TermKind::IntLit: return t_int();
      case TermKind::BoolLit: return t_bool();
      case TermKind::Unit: return t_unit();
      case TermKind::ArrayLit: {
        TypePtr elem = fresh();
        for (std::size_t i = 0; i < t->arity(); ++i)
          unify(elem, child(ctx, t, static_cast<int>(i), path), "list", path);
        return t_list(elem);
      }
      case TermKind::Add:
      case TermKind::Sub:
      case TermKind::Mul:
      case TermKind::Div:
        unify(child(ctx, t, 0, path), t_int(), kind_name(t->kind()), path);
        unify(child(ctx, t, 1, path), t_int(), kind_name(t->kind()), path);
        return t_int();
      case TermKind::Gt:
      case TermKind::Lt:
        unify(child(ctx, t, 0, path), t_int(), kind_name(t->kind()), path);
        unify(child(ctx, t, 1, path), t_int(), kind_name(t->kind()), path);
        return t_bool();
      case TermKind::Pair:
        return t_prod(child(ctx, t, 0, path), child(ctx, t, 1, path));
      case TermKind::Fst: {
        TypePtr a = fresh(), b = fresh();
        unify(child(ctx, t, 0, path), t_prod(a, b), "fst", path);
        return a;
      }
      case TermKind::Snd: {
        TypePtr a = fresh(), b = fresh();
        unify(child(ctx, t, 0, path), t_prod(a, b), "snd", path);
        return b;
      }
      case TermKind::Inl: {
        TypePtr b = fresh();
        return t_sum(child(ctx, t, 0, path), b);
      }
      case TermKind::Inr: {
        TypePtr a = fresh();
        return t_sum(a, child(ctx, t, 0, path));
      }
      case TermKind::Case: {
        TypePtr st = child(ctx, t, 0, path);
        TypePtr a = fresh(), b = fresh();
        unify(st, t_sum(a, b), "case", path);
        TypePtr lt_ = child(ctx, t, 1, path);
        TypePtr rt = child(ctx, t, 2, path);
        TypePtr res = fresh();
        unify(lt_, t_arrow(a, res), "case", path);
        unify(rt, t_arrow(b, res), "case", path);
        return res;
      }
      case TermKind::Iter: {
        TypePtr ft = child(ctx, t, 0, path);
        TypePtr st = child(ctx, t, 1, path);
        unify(ft, t_arrow(st, t_sum(t_unit(), st)), "iter", path);
        return st;
      }
      case TermKind::Fold: {
        TypePtr ft = child(ctx, t, 0, path);
        TypePtr acc = child(ctx, t, 1, path);
        TypePtr xs = child(ctx, t, 2, path);
        TypePtr elem = fresh();
        unify(xs, t_list(elem), "fold", path);
        unify(ft, t_arrow(t_prod(acc, elem), acc), "fold", path);
        return acc;
      }
      case TermKind::If: {
        unify(child(ctx, t, 0, path), t_bool(), "if", path);
        TypePtr a = child(ctx, t, 1, path);
        unify(a, child(ctx, t, 2, path), "if", path);
        return a;
      }
      case TermKind::Read: {
        TypePtr elem = fresh();
        unify(child(ctx, t, 0, path), t_list(elem), "read", path);
        unify(child(ctx, t, 1, path), t_int(), "read", path);
        return elem;
      }
      case TermKind::Write: {
        TypePtr elem = fresh();
        unify(child(ctx, t, 0, path), t_list(elem), "write", path);
        unify(child(ctx, t, 1, path), t_int(), "write", path);
        unify(child(ctx, t, 2, path), elem, "write", path);
        return t_list(elem);
      }
      case TermKind::ReadAtKey: {
        TypePtr k = fresh(), v = fresh();
        unify(child(ctx, t, 0, path), t_list(t_prod(k, v)), "readk", path);
        unify(child(ctx, t, 1, path), k, "readk", path);
        return t_sum(t_unit(), v);
      }
      case TermKind::WriteAtKey: {
        TypePtr k = fresh(), v = fresh();
        unify(child(ctx, t, 0, path), t_list(t_prod(k, v)), "writek", path);
        unify(child(ctx, t, 1, path), k, "writek", path);
        unify(child(ctx, t, 2, path), v, "writek", path);
        return t_list(t_prod(k, v));
      }
      case TermKind::Replicate: {
        unify(child(ctx, t, 0, path), t_int(), "replicate", path);
        return t_list(child(ctx, t, 1, path));
      }
      case TermKind::Range:
        unify(child(ctx, t, 0, path), t_int(), "range", path);
        unify(child(ctx, t, 1, path), t_int(), "range", path);
        return t_list(t_int());
      case TermKind::Length: {
        TypePtr elem = fresh();
        unify(child(ctx, t, 0, path), t_list(elem), "length", path);
        return t_int();
      }
      case TermKind::Map: {
        TypePtr a = fresh(), b = fresh();
        unify(child(ctx, t, 0, path), t_arrow(a, b), "map", path);
        unify(child(ctx, t, 1, path), t_list(a), "map", path);
        return t_list(b);
      }
      case TermKind::Group: {
        TypePtr k = fresh(), v = fresh();
        unify(child(ctx, t, 0, path), t_list(t_prod(k, v)), "group", path);
        return t_list(t_prod(k, t_list(v)));
      }
      case TermKind::Zip: {
        TypePtr a = fresh(), b = fresh();
        unify(child(ctx, t, 0, path), t_list(a), "zip", path);
        unify(child(ctx, t, 1, path), t_list(b), "zip", path);
        return t_list(t_prod(a, b));
      }
      case TermKind::Concat: {
        TypePtr elem = fresh();
        unify(child(ctx, t, 0, path), t_list(t_list(elem)), "concat", path);
        return t_list(elem);
      }
      case TermKind::Meta:
        throw TypeError("meta", path, "metavariable " + t->name() + " in plain term");
    }
    throw TypeError("?", path, "unknown term kind");
  }

  TypePtr child(TypeContext& ctx, const TermPtr& t, int i, Path& path) {
    path.push_back(i);
    TypePtr r = infer(ctx, t->child(i), path);
    path.pop_back();
    return r;
  }
};

}  // namespace

TypedTerm typecheck_full(const TypeContext& ctx, const TermPtr& t) {
  Infer inf;
  TypeContext local = ctx;
  Path path;
  TypePtr ty = inf.infer(local, t, path);
  TypedTerm out;
  out.type = inf.deep_resolve(ty);
  if (contains_tvar(out.type))
    throw TypeError("ambiguous", {}, "ambiguous type " + type_to_string(out.type));
  for (auto& [p, bt] : inf.binder_types) {
    TypePtr r = inf.deep_resolve(bt);
    out.binder_types[p] = r;
  }
  return out;
}

TypePtr typecheck(const TypeContext& ctx, const TermPtr& t) {
  return typecheck_full(ctx, t).type;
}

Signature program_signature(const TermPtr& t) {
  TypeContext empty;
  TypedTerm tt = typecheck_full(empty, t);
  Signature sig;
  TypePtr ty = tt.type;
  TermPtr cur = t;
  while (cur->kind() == TermKind::Abs && ty->kind() == TypeKind::Arrow) {
    sig.params.emplace_back(cur->name(), ty->arg(0));
    ty = ty->arg(1);
    cur = cur->child(0);
  }
  sig.result = ty;
  return sig;
}

bool signature_equal(const Signature& a, const Signature& b) {
  if (a.params.size() != b.params.size()) return false;
  for (std::size_t i = 0; i < a.params.size(); ++i)
    if (!type_equal(a.params[i].second, b.params[i].second)) return false;
  return type_equal(a.result, b.result);
}

std::string signature_to_string(const Signature& s) {
  std::string out;
  for (const auto& [n, ty] : s.params) out += type_to_string(ty) + " -> ";
  out += type_to_string(s.result);
  return out;
}

}  // namespace ffl
