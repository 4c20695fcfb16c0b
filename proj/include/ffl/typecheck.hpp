#ifndef FFL_TYPECHECK_HPP
#define FFL_TYPECHECK_HPP

#include <map>
#include <stdexcept>
#include <string>

#include "ffl/term.hpp"
#include "ffl/type.hpp"

namespace ffl {

struct TypeError : std::runtime_error {
  TypeError(std::string rule_, Path path_, const std::string& what_)
      : std::runtime_error(what_ + " at " + path_to_string(path_) +
                           " (rule: " + rule_ + ")"),
        rule(std::move(rule_)),
        path(std::move(path_)) {}
  std::string rule;
  Path path;
};

struct UnboundVariable : TypeError {
  UnboundVariable(const std::string& name, Path path_)
      : TypeError("var", std::move(path_), "unbound variable " + name) {}
};

// Result of a full inference pass: the term's type plus the resolved type of
// every binder, keyed by the path of its Abs node.
struct TypedTerm {
  TypePtr type;
  std::map<Path, TypePtr> binder_types;
};

// Infers the unique monomorphic type of t under ctx. Throws TypeError if no
// rule applies or the type is ambiguous (unconstrained type variables).
TypePtr typecheck(const TypeContext& ctx, const TermPtr& t);

TypedTerm typecheck_full(const TypeContext& ctx, const TermPtr& t);

// The curried parameter list of a program term: successive Abs binders from
// the root, with their inferred types, plus the result type.
struct Signature {
  std::vector<std::pair<std::string, TypePtr>> params;
  TypePtr result;
};
Signature program_signature(const TermPtr& t);
bool signature_equal(const Signature& a, const Signature& b);
std::string signature_to_string(const Signature& s);

}  // namespace ffl

#endif
