#ifndef FFL_TYPE_HPP
#define FFL_TYPE_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace ffl {

enum class TypeKind : std::uint8_t {
  Int,
  Bool,
  Unit,
  Prod,
  Sum,
  Arrow,
  List,
  TVar,  // inference-internal; never part of a fully checked type
};

class Type;
using TypePtr = std::shared_ptr<const Type>;

class Type {
 public:
  Type(TypeKind k, std::vector<TypePtr> args, int id = 0)
      : kind_(k), args_(std::move(args)), id_(id) {}

  TypeKind kind() const { return kind_; }
  const std::vector<TypePtr>& args() const { return args_; }
  const TypePtr& arg(std::size_t i) const { return args_[i]; }
  int tvar_id() const { return id_; }

 private:
  TypeKind kind_;
  std::vector<TypePtr> args_;
  int id_;
};

TypePtr t_int();
TypePtr t_bool();
TypePtr t_unit();
TypePtr t_prod(TypePtr a, TypePtr b);
TypePtr t_sum(TypePtr a, TypePtr b);
TypePtr t_arrow(TypePtr a, TypePtr b);
TypePtr t_list(TypePtr a);

bool type_equal(const TypePtr& a, const TypePtr& b);
bool contains_tvar(const TypePtr& t);
std::string type_to_string(const TypePtr& t);

// Ordered variable typing context; inner bindings shadow outer ones.
class TypeContext {
 public:
  void push(const std::string& name, TypePtr ty) { entries_.emplace_back(name, std::move(ty)); }
  void pop() { entries_.pop_back(); }
  const TypePtr* lookup(const std::string& name) const {
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
      if (it->first == name) return &it->second;
    return nullptr;
  }
  const std::vector<std::pair<std::string, TypePtr>>& entries() const { return entries_; }

 private:
  std::vector<std::pair<std::string, TypePtr>> entries_;
};

}  // namespace ffl

#endif
