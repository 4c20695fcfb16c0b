#ifndef FFL_DIFF_HPP
#define FFL_DIFF_HPP

#include <optional>

#include "ffl/term.hpp"

namespace ffl {

// Smallest pair of subterms whose replacement by a shared placeholder makes
// the two terms alpha-equal; the path is valid in both terms. Descent stops
// at binders: an abstraction pair with differing bodies is itself the
// difference.
struct DiffResult {
  bool identical = false;
  TermPtr left;
  TermPtr right;
  Path path;

  static DiffResult same() { return {true, nullptr, nullptr, {}}; }
};

DiffResult diff(const TermPtr& p, const TermPtr& q);

// One step toward the root: the enclosing subterms and the shortened path.
struct AlreadyAtRoot : std::runtime_error {
  AlreadyAtRoot() : std::runtime_error("widen: already at root") {}
};
struct WidenResult {
  TermPtr left;
  TermPtr right;
  Path path;
};
WidenResult widen(const TermPtr& p, const TermPtr& q, const Path& at);

}  // namespace ffl

#endif
