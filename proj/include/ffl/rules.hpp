#ifndef FFL_RULES_HPP
#define FFL_RULES_HPP

#include <string>
#include <vector>

#include "ffl/pattern.hpp"

namespace ffl {

struct SideCondition {
  enum class Kind : std::uint8_t { EqualLength, NotStuck, NotFree } kind;
  TermPtr a;           // EqualLength: first array pattern; NotStuck/NotFree: the pattern
  TermPtr b;           // EqualLength: second array pattern
  std::string binder;  // NotFree: binder metavariable

  static SideCondition equal_length(TermPtr x, TermPtr y) {
    return {Kind::EqualLength, std::move(x), std::move(y), ""};
  }
  static SideCondition not_stuck(TermPtr t) {
    return {Kind::NotStuck, std::move(t), nullptr, ""};
  }
  static SideCondition not_free(std::string binder, TermPtr t) {
    return {Kind::NotFree, std::move(t), nullptr, std::move(binder)};
  }
};

std::string side_condition_to_string(const SideCondition& sc);

// One left/right pattern pair. Rules 12 and 13 carry two variants under a
// single catalogue number.
struct RuleVariant {
  std::string tag;  // "" or "a"/"b"
  Pattern lhs;
  Pattern rhs;
  std::vector<SideCondition> conditions;
};

struct RewriteRule {
  int number = 0;            // 1..13
  std::string name;          // mnemonic, e.g. "map-fusion"
  std::vector<RuleVariant> variants;

  std::string id() const { return "R" + std::to_string(number); }
};

// The full catalogue, exactly 13 entries.
const std::vector<RewriteRule>& catalog();

// Lookup by "R4", "R12a", or mnemonic name. For an id with a variant suffix
// the variant index is returned in *variant (otherwise 0).
const RewriteRule* find_rule(const std::string& ref, int* variant = nullptr);

}  // namespace ffl

#endif
