#ifndef FFL_IL_HPP
#define FFL_IL_HPP

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ffl/term.hpp"
#include "ffl/type.hpp"

namespace ffl::il {

struct IlError : std::runtime_error {
  IlError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
        line(line_) {}
  int line;
};

enum class ExprKind : std::uint8_t {
  IntLit,
  BoolLit,
  Var,
  Binary,  // op in name: add sub mul div gt lt
  Index,   // args: array, index
  Call,    // builtin name + args
  Tuple,   // args: two components
  Lambda,  // params (1 = plain, 2 = pair pattern), args: [body]
  IfExpr,  // args: cond, then, else
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  ExprKind kind;
  int line = 0;
  Int int_val;
  bool bool_val = false;
  std::string name;  // Var name, Binary op, Call builtin
  std::vector<std::string> params;
  std::vector<ExprPtr> args;
};

enum class StmtKind : std::uint8_t {
  Assign,       // var <- e1
  IndexAssign,  // var[e1] <- e2
  For,          // for var in e1 .. e2
  Foreach,      // foreach var in e1 / foreach (a, b) in e1
  While,        // while e1
  If,           // if e1 ... else ...
  Return,       // return e1
};

struct Stmt;
using StmtPtr = std::shared_ptr<const Stmt>;

struct Stmt {
  StmtKind kind;
  int line = 0;
  int order = 0;  // source position, used for deterministic state ordering
  std::string var;
  std::vector<std::string> pattern;  // foreach pair destructuring
  ExprPtr e1, e2;
  std::vector<StmtPtr> body;
  std::vector<StmtPtr> else_body;
};

struct IlProgram {
  std::string name;
  std::vector<std::pair<std::string, TypePtr>> params;
  TypePtr return_type;
  std::vector<StmtPtr> body;
};

// Parses the keyword IL syntax (one statement per line, blocks closed by
// `end`). Rejects calls to anything but the builtins, including recursive
// calls to the function itself.
IlProgram parse_il(const std::string& text);
IlProgram parse_il_file(const std::string& path);

// Assigns a monomorphic type to every variable (parameters, assignments,
// loop variables) or fails with the offending statement line.
std::map<std::string, TypePtr> typecheck_il(const IlProgram& p);

}  // namespace ffl::il

#endif
