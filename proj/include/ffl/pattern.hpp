#ifndef FFL_PATTERN_HPP
#define FFL_PATTERN_HPP

#include <map>
#include <optional>
#include <string>

#include "ffl/term.hpp"

namespace ffl {

// A pattern is a Term containing Meta nodes at expression positions. Every
// binder occurring in a pattern is a binder metavariable: it matches any
// concrete binder name, consistently within its scope.
using Pattern = TermPtr;

struct Substitution {
  std::map<std::string, TermPtr> metas;       // metavariable -> matched term
  std::map<std::string, std::string> binders; // pattern binder -> concrete name

  const TermPtr* lookup(const std::string& m) const {
    auto it = metas.find(m);
    return it == metas.end() ? nullptr : &it->second;
  }
};

// First-order matching with binder consistency. Repeated metavariables must
// match alpha-equal subterms. Returns nullopt on constructor clash,
// inconsistent repeat, or binder mismatch.
std::optional<Substitution> match_pattern(const Pattern& p, const TermPtr& t);

// Lenient variant for approximate matching: mismatched subtrees are skipped
// (their metavariables stay unassigned) instead of failing the whole match.
Substitution match_pattern_lenient(const Pattern& p, const TermPtr& t);

struct UnboundMetavariable : std::runtime_error {
  explicit UnboundMetavariable(const std::string& m)
      : std::runtime_error("unbound metavariable ?" + m) {}
};

// Hole-filling with fresh binder names chosen to avoid capturing free
// variables of the substituted terms.
TermPtr instantiate(const Pattern& p, const Substitution& s);

std::vector<std::string> pattern_metas(const Pattern& p);

}  // namespace ffl

#endif
