#include "ffl/il.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace ffl::il {

namespace {

const std::set<std::string> kBuiltins = {
    "replicate", "length", "zip",  "map",  "flatMap", "reduceByKey",
    "group",     "concat", "range", "fst", "snd",     "fold"};

ExprPtr mk(Expr e) { return std::make_shared<Expr>(std::move(e)); }

struct ExprLexer {
  std::string s;
  std::size_t pos = 0;
  int line;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) pos++;
  }
  bool eof() {
    skip();
    return pos >= s.size();
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      pos++;
      return true;
    }
    return false;
  }
  bool eat_word(const std::string& w) {
    skip();
    if (s.compare(pos, w.size(), w) == 0) {
      std::size_t end = pos + w.size();
      if (end >= s.size() || !(std::isalnum(static_cast<unsigned char>(s[end])) || s[end] == '_')) {
        pos = end;
        return true;
      }
    }
    return false;
  }
  std::string ident() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      pos++;
    if (start == pos) throw IlError(line, "expected identifier near '" + s.substr(start, 8) + "'");
    return s.substr(start, pos - start);
  }
  [[noreturn]] void fail(const std::string& msg) { throw IlError(line, msg); }
};

struct ExprParser {
  ExprLexer lex;
  const std::string& fn_name;

  ExprParser(std::string text, int line, const std::string& fn)
      : fn_name(fn) {
    lex.s = std::move(text);
    lex.line = line;
  }

  ExprPtr parse() {
    ExprPtr e = expr();
    if (!lex.eof()) lex.fail("trailing input in expression: '" + lex.s.substr(lex.pos) + "'");
    return e;
  }

  ExprPtr expr() { return if_expr(); }

  ExprPtr if_expr() {
    if (lex.eat_word("if")) {
      ExprPtr c = if_expr();
      if (!lex.eat_word("then")) lex.fail("expected 'then'");
      ExprPtr t = if_expr();
      if (!lex.eat_word("else")) lex.fail("expected 'else'");
      ExprPtr e = if_expr();
      Expr out{ExprKind::IfExpr, lex.line};
      out.args = {c, t, e};
      return mk(std::move(out));
    }
    return comparison();
  }

  ExprPtr binary(const char* op, ExprPtr a, ExprPtr b) {
    Expr out{ExprKind::Binary, lex.line};
    out.name = op;
    out.args = {std::move(a), std::move(b)};
    return mk(std::move(out));
  }

  ExprPtr comparison() {
    ExprPtr a = additive();
    for (;;) {
      if (lex.eat('<')) a = binary("lt", a, additive());
      else if (lex.eat('>')) a = binary("gt", a, additive());
      else return a;
    }
  }

  ExprPtr additive() {
    ExprPtr a = multiplicative();
    for (;;) {
      lex.skip();
      // '-' could start a negative literal only at primary position.
      if (lex.eat('+')) a = binary("add", a, multiplicative());
      else if (lex.eat('-')) a = binary("sub", a, multiplicative());
      else return a;
    }
  }

  ExprPtr multiplicative() {
    ExprPtr a = postfix();
    for (;;) {
      if (lex.eat('*')) a = binary("mul", a, postfix());
      else if (lex.eat('/')) a = binary("div", a, postfix());
      else return a;
    }
  }

  ExprPtr postfix() {
    ExprPtr a = primary();
    while (lex.peek() == '[') {
      lex.eat('[');
      ExprPtr i = expr();
      if (!lex.eat(']')) lex.fail("expected ']'");
      Expr out{ExprKind::Index, lex.line};
      out.args = {a, i};
      a = mk(std::move(out));
    }
    return a;
  }

  ExprPtr primary() {
    char c = lex.peek();
    if (c == '\\') {
      lex.eat('\\');
      Expr out{ExprKind::Lambda, lex.line};
      if (lex.peek() == '(') {
        lex.eat('(');
        out.params.push_back(lex.ident());
        if (!lex.eat(',')) lex.fail("expected ',' in lambda pattern");
        out.params.push_back(lex.ident());
        if (!lex.eat(')')) lex.fail("expected ')' in lambda pattern");
      } else {
        out.params.push_back(lex.ident());
      }
      if (!lex.eat('.')) lex.fail("expected '.' after lambda parameters");
      out.args = {expr()};
      return mk(std::move(out));
    }
    if (c == '(') {
      lex.eat('(');
      ExprPtr a = expr();
      if (lex.eat(',')) {
        ExprPtr b = expr();
        std::vector<ExprPtr> parts{a, b};
        while (lex.eat(',')) parts.push_back(expr());
        if (!lex.eat(')')) lex.fail("expected ')'");
        // Right-nested tuple.
        ExprPtr acc = parts.back();
        for (std::size_t i = parts.size() - 1; i-- > 0;) {
          Expr t{ExprKind::Tuple, lex.line};
          t.args = {parts[i], acc};
          acc = mk(std::move(t));
        }
        return acc;
      }
      if (!lex.eat(')')) lex.fail("expected ')'");
      return a;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      lex.skip();
      std::size_t start = lex.pos;
      if (c == '-') lex.pos++;
      if (lex.pos >= lex.s.size() || !std::isdigit(static_cast<unsigned char>(lex.s[lex.pos])))
        lex.fail("expected number");
      while (lex.pos < lex.s.size() &&
             std::isdigit(static_cast<unsigned char>(lex.s[lex.pos])))
        lex.pos++;
      Expr out{ExprKind::IntLit, lex.line};
      out.int_val = Int(lex.s.substr(start, lex.pos - start));
      return mk(std::move(out));
    }
    std::string id = lex.ident();
    if (id == "true" || id == "false") {
      Expr out{ExprKind::BoolLit, lex.line};
      out.bool_val = id == "true";
      return mk(std::move(out));
    }
    if (lex.peek() == '(') {
      if (id == fn_name)
        lex.fail("recursion detected: call to " + id);
      if (!kBuiltins.count(id))
        lex.fail("unknown function " + id + " (only builtins may be called)");
      lex.eat('(');
      Expr out{ExprKind::Call, lex.line};
      out.name = id;
      if (lex.peek() != ')') {
        out.args.push_back(expr());
        while (lex.eat(',')) out.args.push_back(expr());
      }
      if (!lex.eat(')')) lex.fail("expected ')' after call arguments");
      return mk(std::move(out));
    }
    Expr out{ExprKind::Var, lex.line};
    out.name = id;
    return mk(std::move(out));
  }
};

// --- line-oriented statement parsing ---

struct LineParser {
  std::vector<std::pair<int, std::string>> lines;  // line number, content
  std::size_t idx = 0;
  std::string fn_name;
  int order = 0;

  static std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
  }

  bool done() const { return idx >= lines.size(); }
  int cur_line() const { return done() ? (lines.empty() ? 0 : lines.back().first) : lines[idx].first; }
  const std::string& cur() const { return lines[idx].second; }

  ExprPtr parse_expr(const std::string& text, int line) {
    ExprParser p(text, line, fn_name);
    return p.parse();
  }

  StmtPtr stmt_of(Stmt s) {
    s.order = order++;
    return std::make_shared<Stmt>(std::move(s));
  }

  std::vector<StmtPtr> block(bool top) {
    std::vector<StmtPtr> out;
    while (!done()) {
      const std::string line = cur();
      int ln = cur_line();
      if (line == "end" || line == "else") return out;
      idx++;
      if (line.rfind("for ", 0) == 0) {
        std::size_t in_pos = line.find(" in ");
        if (in_pos == std::string::npos) throw IlError(ln, "for: expected 'in'");
        std::string var = strip(line.substr(4, in_pos - 4));
        std::string rest = line.substr(in_pos + 4);
        std::size_t dots = rest.find("..");
        if (dots == std::string::npos) throw IlError(ln, "for: expected '..' range");
        Stmt s{StmtKind::For, ln};
        s.var = var;
        s.e1 = parse_expr(strip(rest.substr(0, dots)), ln);
        s.e2 = parse_expr(strip(rest.substr(dots + 2)), ln);
        auto sp = stmt_of(std::move(s));
        auto body = block(false);
        expect_end(ln);
        const_cast<Stmt&>(*sp).body = std::move(body);
        out.push_back(sp);
      } else if (line.rfind("foreach ", 0) == 0) {
        std::size_t in_pos = line.find(" in ");
        if (in_pos == std::string::npos) throw IlError(ln, "foreach: expected 'in'");
        std::string target = strip(line.substr(8, in_pos - 8));
        Stmt s{StmtKind::Foreach, ln};
        if (!target.empty() && target.front() == '(') {
          if (target.back() != ')') throw IlError(ln, "foreach: bad pattern");
          std::string inner = target.substr(1, target.size() - 2);
          std::size_t comma = inner.find(',');
          if (comma == std::string::npos) throw IlError(ln, "foreach: bad pattern");
          s.pattern = {strip(inner.substr(0, comma)), strip(inner.substr(comma + 1))};
        } else {
          s.var = target;
        }
        s.e1 = parse_expr(strip(line.substr(in_pos + 4)), ln);
        auto sp = stmt_of(std::move(s));
        auto body = block(false);
        expect_end(ln);
        const_cast<Stmt&>(*sp).body = std::move(body);
        out.push_back(sp);
      } else if (line.rfind("while ", 0) == 0) {
        Stmt s{StmtKind::While, ln};
        s.e1 = parse_expr(strip(line.substr(6)), ln);
        auto sp = stmt_of(std::move(s));
        auto body = block(false);
        expect_end(ln);
        const_cast<Stmt&>(*sp).body = std::move(body);
        out.push_back(sp);
      } else if (line.rfind("if ", 0) == 0) {
        Stmt s{StmtKind::If, ln};
        s.e1 = parse_expr(strip(line.substr(3)), ln);
        auto sp = stmt_of(std::move(s));
        auto body = block(false);
        std::vector<StmtPtr> else_body;
        if (!done() && cur() == "else") {
          idx++;
          else_body = block(false);
        }
        expect_end(ln);
        const_cast<Stmt&>(*sp).body = std::move(body);
        const_cast<Stmt&>(*sp).else_body = std::move(else_body);
        out.push_back(sp);
      } else if (line.rfind("return", 0) == 0 &&
                 (line.size() == 6 || line[6] == ' ')) {
        if (line.size() <= 7) throw IlError(ln, "return needs an expression");
        Stmt s{StmtKind::Return, ln};
        s.e1 = parse_expr(strip(line.substr(7)), ln);
        out.push_back(stmt_of(std::move(s)));
      } else {
        std::size_t arrow = line.find("<-");
        if (arrow == std::string::npos)
          throw IlError(ln, "expected a statement, got '" + line + "'");
        std::string lhs = strip(line.substr(0, arrow));
        std::string rhs = strip(line.substr(arrow + 2));
        std::size_t bracket = lhs.find('[');
        if (bracket != std::string::npos) {
          if (lhs.back() != ']') throw IlError(ln, "bad indexed assignment target");
          Stmt s{StmtKind::IndexAssign, ln};
          s.var = strip(lhs.substr(0, bracket));
          s.e1 = parse_expr(lhs.substr(bracket + 1, lhs.size() - bracket - 2), ln);
          s.e2 = parse_expr(rhs, ln);
          out.push_back(stmt_of(std::move(s)));
        } else {
          Stmt s{StmtKind::Assign, ln};
          s.var = lhs;
          s.e1 = parse_expr(rhs, ln);
          out.push_back(stmt_of(std::move(s)));
        }
      }
    }
    if (!top) throw IlError(cur_line(), "missing 'end'");
    return out;
  }

  void expect_end(int ln) {
    if (done() || cur() != "end") throw IlError(ln, "missing 'end' for block");
    idx++;
  }
};

TypePtr parse_type(const std::string& text, int line, std::size_t& pos);

TypePtr parse_type_inner(const std::string& s, int line, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) pos++;
  if (pos >= s.size()) throw IlError(line, "expected type");
  if (s[pos] == '[') {
    pos++;
    TypePtr inner = parse_type(s, line, pos);
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) pos++;
    if (pos >= s.size() || s[pos] != ']') throw IlError(line, "expected ']' in type");
    pos++;
    return t_list(inner);
  }
  if (s[pos] == '(') {
    pos++;
    std::vector<TypePtr> parts{parse_type(s, line, pos)};
    while (pos < s.size() && s[pos] == ',') {
      pos++;
      parts.push_back(parse_type(s, line, pos));
    }
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) pos++;
    if (pos >= s.size() || s[pos] != ')') throw IlError(line, "expected ')' in type");
    pos++;
    if (parts.size() == 1) return parts[0];
    TypePtr acc = parts.back();
    for (std::size_t i = parts.size() - 1; i-- > 0;) acc = t_prod(parts[i], acc);
    return acc;
  }
  std::size_t start = pos;
  while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) pos++;
  std::string word = s.substr(start, pos - start);
  if (word == "int") return t_int();
  if (word == "bool") return t_bool();
  if (word == "unit") return t_unit();
  throw IlError(line, "unknown type '" + word + "'");
}

TypePtr parse_type(const std::string& s, int line, std::size_t& pos) {
  TypePtr t = parse_type_inner(s, line, pos);
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) pos++;
  return t;
}

}  // namespace

IlProgram parse_il(const std::string& text) {
  LineParser lp;
  int lineno = 0;
  std::istringstream is(text);
  std::string raw;
  while (std::getline(is, raw)) {
    lineno++;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string s = LineParser::strip(raw);
    if (!s.empty()) lp.lines.emplace_back(lineno, s);
  }
  if (lp.lines.empty()) throw IlError(0, "empty program");

  // Header: function Name(p: T, ...) -> T
  const std::string& header = lp.lines[0].second;
  int hline = lp.lines[0].first;
  if (header.rfind("function ", 0) != 0) throw IlError(hline, "expected 'function'");
  std::size_t open = header.find('(');
  std::size_t close = header.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw IlError(hline, "bad function header");
  IlProgram prog;
  prog.name = LineParser::strip(header.substr(9, open - 9));
  std::string params = header.substr(open + 1, close - open - 1);
  if (!LineParser::strip(params).empty()) {
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= params.size(); ++i) {
      if (i < params.size() && (params[i] == '(' || params[i] == '[')) depth++;
      if (i < params.size() && (params[i] == ')' || params[i] == ']')) depth--;
      if (i == params.size() || (params[i] == ',' && depth == 0)) {
        std::string piece = LineParser::strip(params.substr(start, i - start));
        std::size_t colon = piece.find(':');
        if (colon == std::string::npos) throw IlError(hline, "parameter needs ': type'");
        std::string pname = LineParser::strip(piece.substr(0, colon));
        std::size_t tpos = 0;
        std::string tstr = LineParser::strip(piece.substr(colon + 1));
        prog.params.emplace_back(pname, parse_type(tstr, hline, tpos));
        start = i + 1;
      }
    }
  }
  std::size_t arrow = header.find("->", close);
  if (arrow == std::string::npos) throw IlError(hline, "expected '-> returntype'");
  std::string rts = LineParser::strip(header.substr(arrow + 2));
  std::size_t rpos = 0;
  prog.return_type = parse_type(rts, hline, rpos);

  lp.fn_name = prog.name;
  lp.idx = 1;
  prog.body = lp.block(true);  // stops at the 'end' closing the function
  if (prog.body.empty() || prog.body.back()->kind != StmtKind::Return)
    throw IlError(lp.lines.back().first, "function must end with 'return'");
  for (std::size_t i = 0; i + 1 < prog.body.size(); ++i)
    if (prog.body[i]->kind == StmtKind::Return)
      throw IlError(prog.body[i]->line, "return must be the last statement");
  return prog;
}

IlProgram parse_il_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_il(ss.str());
}

// --- type checking ---

namespace {

struct IlChecker {
  std::map<std::string, TypePtr> types;

  TypePtr get(const std::string& n, int line) {
    auto it = types.find(n);
    if (it == types.end())
      throw IlError(line, "variable " + n + " used before assignment");
    return it->second;
  }

  void assign(const std::string& n, TypePtr t, int line) {
    auto it = types.find(n);
    if (it == types.end()) {
      types[n] = std::move(t);
      return;
    }
    if (!type_equal(it->second, t))
      throw IlError(line, "type mismatch for " + n + ": " +
                              type_to_string(it->second) + " vs " + type_to_string(t));
  }

  TypePtr expr(const ExprPtr& e) {
    switch (e->kind) {
      case ExprKind::IntLit: return t_int();
      case ExprKind::BoolLit: return t_bool();
      case ExprKind::Var: return get(e->name, e->line);
      case ExprKind::Binary: {
        TypePtr a = expr(e->args[0]);
        TypePtr b = expr(e->args[1]);
        if (!type_equal(a, t_int()) || !type_equal(b, t_int()))
          throw IlError(e->line, "arithmetic needs int operands");
        if (e->name == "gt" || e->name == "lt") return t_bool();
        return t_int();
      }
      case ExprKind::Index: {
        TypePtr a = expr(e->args[0]);
        if (a->kind() != TypeKind::List)
          throw IlError(e->line, "indexing a non-array");
        if (!type_equal(expr(e->args[1]), t_int()))
          throw IlError(e->line, "index must be int");
        return a->arg(0);
      }
      case ExprKind::Tuple:
        return t_prod(expr(e->args[0]), expr(e->args[1]));
      case ExprKind::IfExpr: {
        if (!type_equal(expr(e->args[0]), t_bool()))
          throw IlError(e->line, "if condition must be bool");
        TypePtr t = expr(e->args[1]);
        TypePtr f = expr(e->args[2]);
        if (!type_equal(t, f)) throw IlError(e->line, "if branches differ in type");
        return t;
      }
      case ExprKind::Lambda:
        throw IlError(e->line, "lambda outside a builtin argument position");
      case ExprKind::Call: return call(e);
    }
    throw IlError(e->line, "bad expression");
  }

  TypePtr lambda(const ExprPtr& lam, const TypePtr& param_type) {
    if (lam->kind != ExprKind::Lambda)
      throw IlError(lam->line, "expected a lambda argument");
    std::vector<std::pair<std::string, TypePtr>> saved;
    auto bind = [&](const std::string& n, TypePtr t) {
      auto it = types.find(n);
      saved.emplace_back(n, it == types.end() ? nullptr : it->second);
      types[n] = std::move(t);
    };
    if (lam->params.size() == 1) {
      bind(lam->params[0], param_type);
    } else {
      if (param_type->kind() != TypeKind::Prod)
        throw IlError(lam->line, "pair lambda needs a pair-typed argument");
      bind(lam->params[0], param_type->arg(0));
      bind(lam->params[1], param_type->arg(1));
    }
    TypePtr out = expr(lam->args[0]);
    for (auto& [n, t] : saved) {
      if (t) types[n] = t;
      else types.erase(n);
    }
    return out;
  }

  TypePtr call(const ExprPtr& e) {
    const std::string& f = e->name;
    auto need = [&](std::size_t n) {
      if (e->args.size() != n)
        throw IlError(e->line, f + " expects " + std::to_string(n) + " arguments");
    };
    if (f == "replicate") {
      need(2);
      if (!type_equal(expr(e->args[0]), t_int()))
        throw IlError(e->line, "replicate count must be int");
      return t_list(expr(e->args[1]));
    }
    if (f == "length") {
      need(1);
      if (expr(e->args[0])->kind() != TypeKind::List)
        throw IlError(e->line, "length of a non-array");
      return t_int();
    }
    if (f == "range") {
      need(2);
      if (!type_equal(expr(e->args[0]), t_int()) ||
          !type_equal(expr(e->args[1]), t_int()))
        throw IlError(e->line, "range bounds must be int");
      return t_list(t_int());
    }
    if (f == "zip") {
      need(2);
      TypePtr a = expr(e->args[0]);
      TypePtr b = expr(e->args[1]);
      if (a->kind() != TypeKind::List || b->kind() != TypeKind::List)
        throw IlError(e->line, "zip needs arrays");
      return t_list(t_prod(a->arg(0), b->arg(0)));
    }
    if (f == "fst" || f == "snd") {
      need(1);
      TypePtr p = expr(e->args[0]);
      if (p->kind() != TypeKind::Prod) throw IlError(e->line, f + " of a non-pair");
      return f == "fst" ? p->arg(0) : p->arg(1);
    }
    if (f == "group") {
      need(1);
      TypePtr a = expr(e->args[0]);
      if (a->kind() != TypeKind::List || a->arg(0)->kind() != TypeKind::Prod)
        throw IlError(e->line, "group needs an array of pairs");
      return t_list(t_prod(a->arg(0)->arg(0), t_list(a->arg(0)->arg(1))));
    }
    if (f == "concat") {
      need(1);
      TypePtr a = expr(e->args[0]);
      if (a->kind() != TypeKind::List || a->arg(0)->kind() != TypeKind::List)
        throw IlError(e->line, "concat needs an array of arrays");
      return a->arg(0);
    }
    if (f == "map") {
      need(2);
      TypePtr a = expr(e->args[1]);
      if (a->kind() != TypeKind::List) throw IlError(e->line, "map needs an array");
      return t_list(lambda(e->args[0], a->arg(0)));
    }
    if (f == "flatMap") {
      need(2);
      TypePtr a = expr(e->args[1]);
      if (a->kind() != TypeKind::List) throw IlError(e->line, "flatMap needs an array");
      TypePtr out = lambda(e->args[0], a->arg(0));
      if (out->kind() != TypeKind::List)
        throw IlError(e->line, "flatMap lambda must return an array");
      return out;
    }
    if (f == "fold") {
      need(3);
      TypePtr acc = expr(e->args[1]);
      TypePtr a = expr(e->args[2]);
      if (a->kind() != TypeKind::List) throw IlError(e->line, "fold needs an array");
      TypePtr out = lambda(e->args[0], t_prod(acc, a->arg(0)));
      if (!type_equal(out, acc))
        throw IlError(e->line, "fold lambda must return the accumulator type");
      return acc;
    }
    if (f == "reduceByKey") {
      need(3);
      TypePtr init = expr(e->args[1]);
      TypePtr kvs = expr(e->args[2]);
      if (kvs->kind() != TypeKind::List || kvs->arg(0)->kind() != TypeKind::Prod)
        throw IlError(e->line, "reduceByKey needs an array of pairs");
      TypePtr out = lambda(e->args[0], t_prod(init, kvs->arg(0)->arg(1)));
      if (!type_equal(out, init))
        throw IlError(e->line, "reduceByKey lambda must return the accumulator type");
      return t_list(t_prod(kvs->arg(0)->arg(0), init));
    }
    throw IlError(e->line, "unknown builtin " + f);
  }

  void stmts(const std::vector<StmtPtr>& list) {
    for (const auto& s : list) stmt(s);
  }

  void stmt(const StmtPtr& s) {
    switch (s->kind) {
      case StmtKind::Assign:
        assign(s->var, expr(s->e1), s->line);
        break;
      case StmtKind::IndexAssign: {
        TypePtr arr = get(s->var, s->line);
        if (arr->kind() != TypeKind::List)
          throw IlError(s->line, s->var + " is not an array");
        if (!type_equal(expr(s->e1), t_int()))
          throw IlError(s->line, "index must be int");
        if (!type_equal(expr(s->e2), arr->arg(0)))
          throw IlError(s->line, "element type mismatch for " + s->var);
        break;
      }
      case StmtKind::For: {
        if (!type_equal(expr(s->e1), t_int()) || !type_equal(expr(s->e2), t_int()))
          throw IlError(s->line, "for bounds must be int");
        assign(s->var, t_int(), s->line);
        stmts(s->body);
        break;
      }
      case StmtKind::Foreach: {
        TypePtr arr = expr(s->e1);
        if (arr->kind() != TypeKind::List)
          throw IlError(s->line, "foreach needs an array");
        if (s->pattern.empty()) {
          assign(s->var, arr->arg(0), s->line);
        } else {
          if (arr->arg(0)->kind() != TypeKind::Prod)
            throw IlError(s->line, "foreach pattern needs an array of pairs");
          assign(s->pattern[0], arr->arg(0)->arg(0), s->line);
          assign(s->pattern[1], arr->arg(0)->arg(1), s->line);
        }
        stmts(s->body);
        break;
      }
      case StmtKind::While:
        if (!type_equal(expr(s->e1), t_bool()))
          throw IlError(s->line, "while condition must be bool");
        stmts(s->body);
        break;
      case StmtKind::If:
        if (!type_equal(expr(s->e1), t_bool()))
          throw IlError(s->line, "if condition must be bool");
        stmts(s->body);
        stmts(s->else_body);
        break;
      case StmtKind::Return:
        return_type = expr(s->e1);
        break;
    }
  }

  TypePtr return_type;
};

}  // namespace

std::map<std::string, TypePtr> typecheck_il(const IlProgram& p) {
  IlChecker ck;
  for (const auto& [n, t] : p.params) ck.types[n] = t;
  ck.stmts(p.body);
  if (!ck.return_type) throw IlError(0, "no return statement");
  if (!type_equal(ck.return_type, p.return_type))
    throw IlError(0, "returned " + type_to_string(ck.return_type) +
                         " but declared " + type_to_string(p.return_type));
  return ck.types;
}

}  // namespace ffl::il
