#include "ffl/type.hpp"

namespace ffl {

namespace {
TypePtr make(TypeKind k, std::vector<TypePtr> args = {}, int id = 0) {
  return std::make_shared<Type>(k, std::move(args), id);
}
}  // namespace

TypePtr t_int() {
  static TypePtr t = make(TypeKind::Int);
  return t;
}
TypePtr t_bool() {
  static TypePtr t = make(TypeKind::Bool);
  return t;
}
TypePtr t_unit() {
  static TypePtr t = make(TypeKind::Unit);
  return t;
}
TypePtr t_prod(TypePtr a, TypePtr b) { return make(TypeKind::Prod, {std::move(a), std::move(b)}); }
TypePtr t_sum(TypePtr a, TypePtr b) { return make(TypeKind::Sum, {std::move(a), std::move(b)}); }
TypePtr t_arrow(TypePtr a, TypePtr b) { return make(TypeKind::Arrow, {std::move(a), std::move(b)}); }
TypePtr t_list(TypePtr a) { return make(TypeKind::List, {std::move(a)}); }

bool type_equal(const TypePtr& a, const TypePtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind() != b->kind()) return false;
  if (a->kind() == TypeKind::TVar) return a->tvar_id() == b->tvar_id();
  if (a->args().size() != b->args().size()) return false;
  for (std::size_t i = 0; i < a->args().size(); ++i)
    if (!type_equal(a->arg(i), b->arg(i))) return false;
  return true;
}

bool contains_tvar(const TypePtr& t) {
  if (t->kind() == TypeKind::TVar) return true;
  for (const auto& a : t->args())
    if (contains_tvar(a)) return true;
  return false;
}

std::string type_to_string(const TypePtr& t) {
  switch (t->kind()) {
    case TypeKind::Int: return "int";
    case TypeKind::Bool: return "bool";
    case TypeKind::Unit: return "unit";
    case TypeKind::Prod:
      return "(" + type_to_string(t->arg(0)) + " * " + type_to_string(t->arg(1)) + ")";
    case TypeKind::Sum:
      return "(" + type_to_string(t->arg(0)) + " + " + type_to_string(t->arg(1)) + ")";
    case TypeKind::Arrow:
      return "(" + type_to_string(t->arg(0)) + " -> " + type_to_string(t->arg(1)) + ")";
    case TypeKind::List: return "[" + type_to_string(t->arg(0)) + "]";
    case TypeKind::TVar: return "?t" + std::to_string(t->tvar_id());
  }
  return "?";
}

}  // namespace ffl
