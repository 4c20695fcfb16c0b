#ifndef FFL_TERM_HPP
#define FFL_TERM_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ffl {

using Int = boost::multiprecision::cpp_int;

enum class TermKind : std::uint8_t {
  Var,
  App,
  Abs,
  IntLit,
  BoolLit,
  ArrayLit,
  Add,
  Sub,
  Mul,
  Div,
  Gt,
  Lt,
  Unit,
  Pair,
  Fst,
  Snd,
  Inl,
  Inr,
  Case,  // children: scrutinee, left branch (Abs), right branch (Abs)
  Iter,  // children: function, initial state
  Fold,  // children: function, initial accumulator, array
  If,
  Read,
  Write,
  ReadAtKey,
  WriteAtKey,
  Replicate,
  Range,
  Length,
  Map,
  Group,
  Zip,
  Concat,
  Meta,  // pattern metavariable; never occurs in a plain term
};

const char* kind_name(TermKind k);

class Term;
using TermPtr = std::shared_ptr<const Term>;
using Path = std::vector<int>;

// Immutable AST node. Terms are shared freely; all operations build fresh
// spines and never mutate existing nodes.
class Term {
 public:
  TermKind kind() const { return kind_; }
  const std::string& name() const { return name_; }  // Var/Abs/Meta
  const Int& int_value() const { return int_; }
  bool bool_value() const { return bool_; }
  const std::vector<TermPtr>& children() const { return kids_; }
  const TermPtr& child(std::size_t i) const { return kids_[i]; }
  std::size_t arity() const { return kids_.size(); }

  // Syntactic value check per the big-step semantics: literals, unit,
  // abstractions, and pairs/sums/array literals of values.
  bool is_value() const { return value_flag_; }

  // Number of rule applications in the self-derivation of a value
  // (abstractions are axioms regardless of body size). Meaningful only
  // when is_value().
  std::int64_t value_cost() const { return vcost_; }

  // Over-approximate bitmask of variable names occurring anywhere in the
  // subtree (free or bound). Used to skip substitution into subtrees that
  // cannot contain the variable.
  std::uint64_t name_mask() const { return mask_; }

  std::size_t size() const { return size_; }

  static TermPtr make(TermKind k, std::string name, Int iv, bool bv,
                      std::vector<TermPtr> kids);

 private:
  friend struct TermFactory;
  TermKind kind_;
  bool bool_ = false;
  bool value_flag_ = false;
  std::string name_;
  Int int_;
  std::vector<TermPtr> kids_;
  std::uint64_t mask_ = 0;
  std::size_t size_ = 1;
  std::int64_t vcost_ = 1;
};

std::uint64_t name_bit(const std::string& name);

// Constructors.
TermPtr var(std::string name);
TermPtr app(TermPtr f, TermPtr a);
TermPtr abs(std::string binder, TermPtr body);
TermPtr int_lit(Int v);
TermPtr int_lit(long long v);
TermPtr bool_lit(bool v);
TermPtr array_lit(std::vector<TermPtr> elems);
TermPtr add(TermPtr a, TermPtr b);
TermPtr sub(TermPtr a, TermPtr b);
TermPtr mul(TermPtr a, TermPtr b);
TermPtr div_op(TermPtr a, TermPtr b);
TermPtr gt(TermPtr a, TermPtr b);
TermPtr lt(TermPtr a, TermPtr b);
TermPtr unit();
TermPtr pair(TermPtr a, TermPtr b);
TermPtr fst(TermPtr p);
TermPtr snd(TermPtr p);
TermPtr inl(TermPtr t);
TermPtr inr(TermPtr t);
// Branches must be abstractions carrying the case binders.
TermPtr case_of(TermPtr scrutinee, TermPtr left_abs, TermPtr right_abs);
TermPtr iter(TermPtr f, TermPtr s);
TermPtr fold(TermPtr f, TermPtr acc, TermPtr xs);
TermPtr if_then_else(TermPtr c, TermPtr t, TermPtr e);
TermPtr read(TermPtr xs, TermPtr i);
TermPtr write(TermPtr xs, TermPtr i, TermPtr v);
TermPtr read_at_key(TermPtr xs, TermPtr k);
TermPtr write_at_key(TermPtr xs, TermPtr k, TermPtr v);
TermPtr replicate(TermPtr n, TermPtr v);
TermPtr range(TermPtr lo, TermPtr hi);
TermPtr length(TermPtr xs);
TermPtr map_op(TermPtr f, TermPtr xs);
TermPtr group(TermPtr xs);
TermPtr zip(TermPtr xs, TermPtr ys);
TermPtr concat(TermPtr xss);
TermPtr meta(std::string name);

// Structural equality up to consistent renaming of bound variables.
bool alpha_equal(const TermPtr& a, const TermPtr& b);

// Free variables (set semantics).
std::vector<std::string> free_vars(const TermPtr& t);
bool is_free_in(const std::string& name, const TermPtr& t);

// Capture-avoiding substitution of v for free occurrences of x in t.
TermPtr substitute(const TermPtr& t, const std::string& x, const TermPtr& v);

// A name based on `base` that differs from every name in `avoid`.
// Appends primes: x, x', x'', ...
std::string fresh_name(const std::string& base,
                       const std::vector<std::string>& avoid);

// Subterm access by child-index path. Returns nullptr if the path is invalid.
TermPtr subterm_at(const TermPtr& t, const Path& path);

// Replace the subterm at `path` with `replacement`.
TermPtr replace_at(const TermPtr& t, const Path& path, TermPtr replacement);

// True if the subtree contains a Meta node.
bool contains_meta(const TermPtr& t);

std::string path_to_string(const Path& p);
Path path_from_string(const std::string& s);

}  // namespace ffl

#endif
