#include "ffl/text.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace ffl {

namespace {

struct Lexer {
  const std::string& src;
  std::size_t pos = 0;
  int line = 1, col = 1;

  explicit Lexer(const std::string& s) : src(s) {}

  void advance() {
    if (pos < src.size() && src[pos] == '\n') { line++; col = 1; }
    else col++;
    pos++;
  }

  void skip_ws() {
    while (pos < src.size()) {
      char c = src[pos];
      if (c == ';') {  // comment to end of line
        while (pos < src.size() && src[pos] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_ws();
    return pos >= src.size();
  }

  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(line, col, msg); }

  std::string symbol() {
    skip_ws();
    std::size_t start = pos;
    while (pos < src.size()) {
      char c = src[pos];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')') break;
      advance();
    }
    if (start == pos) fail("expected symbol");
    return src.substr(start, pos - start);
  }
};

bool is_integer(const std::string& s) {
  std::size_t i = (s.size() > 1 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

struct Parser {
  Lexer lex;
  int fresh_counter = 0;

  explicit Parser(const std::string& s) : lex(s) {}

  std::string fresh_tuple_binder() { return "p#" + std::to_string(fresh_counter++); }

  TermPtr atom(const std::string& sym) {
    if (sym == "unit") return unit();
    if (sym == "true") return bool_lit(true);
    if (sym == "false") return bool_lit(false);
    if (is_integer(sym)) return int_lit(Int(sym));
    if (sym[0] == '?') return meta(sym.substr(1));
    return var(sym);
  }

  // A binder is either a plain name or a tuple pattern (a b), (a (b c)), ...
  // Tuple patterns desugar to one binder plus projections.
  struct BinderPattern {
    std::string name;                      // leaf
    std::vector<BinderPattern> parts;      // tuple
    bool is_tuple() const { return !parts.empty(); }
  };

  BinderPattern binder_pattern() {
    if (lex.peek() == '(') {
      lex.advance();
      BinderPattern bp;
      while (lex.peek() != ')') {
        if (lex.at_end()) lex.fail("unterminated binder pattern");
        bp.parts.push_back(binder_pattern());
      }
      lex.advance();
      if (bp.parts.size() < 2) lex.fail("tuple binder needs at least two parts");
      // Right-associate (a b c) as (a (b c)).
      while (bp.parts.size() > 2) {
        BinderPattern tail;
        tail.parts.push_back(bp.parts[bp.parts.size() - 2]);
        tail.parts.push_back(bp.parts[bp.parts.size() - 1]);
        bp.parts.pop_back();
        bp.parts.back() = tail;
      }
      return bp;
    }
    BinderPattern bp;
    bp.name = lex.symbol();
    return bp;
  }

  TermPtr bind_pattern(const BinderPattern& bp, TermPtr body) {
    if (!bp.is_tuple()) return abs(bp.name, std::move(body));
    std::string p = fresh_tuple_binder();
    body = project_into(bp, var(p), std::move(body));
    return abs(p, std::move(body));
  }

  TermPtr project_into(const BinderPattern& bp, TermPtr source, TermPtr body) {
    if (!bp.is_tuple()) return substitute(body, bp.name, source);
    body = project_into(bp.parts[0], fst(source), std::move(body));
    body = project_into(bp.parts[1], snd(source), std::move(body));
    return body;
  }

  TermPtr expr() {
    if (lex.peek() != '(') return atom(lex.symbol());
    lex.advance();  // consume '('
    if (lex.peek() == ')') lex.fail("empty form");
    std::string head = lex.symbol();
    TermPtr result = form(head);
    if (lex.peek() != ')') lex.fail("expected ')' after " + head);
    lex.advance();
    return result;
  }

  std::vector<TermPtr> args_until_close() {
    std::vector<TermPtr> out;
    while (lex.peek() != ')') {
      if (lex.at_end()) lex.fail("unbalanced form");
      out.push_back(expr());
    }
    return out;
  }

  TermPtr nary(const std::string& head, std::size_t n, TermPtr (*make2)(TermPtr, TermPtr),
               TermPtr (*make1)(TermPtr), TermPtr (*make3)(TermPtr, TermPtr, TermPtr)) {
    auto as = args_until_close();
    if (as.size() != n) lex.fail(head + " expects " + std::to_string(n) + " arguments");
    if (n == 1) return make1(std::move(as[0]));
    if (n == 2) return make2(std::move(as[0]), std::move(as[1]));
    return make3(std::move(as[0]), std::move(as[1]), std::move(as[2]));
  }

  TermPtr form(const std::string& head) {
    if (head == "lam") {
      BinderPattern bp = binder_pattern();
      TermPtr body = expr();
      return bind_pattern(bp, std::move(body));
    }
    if (head == "case") {
      TermPtr scrut = expr();
      BinderPattern lb = binder_pattern();
      TermPtr lbody = expr();
      BinderPattern rb = binder_pattern();
      TermPtr rbody = expr();
      return case_of(std::move(scrut), bind_pattern(lb, std::move(lbody)),
                     bind_pattern(rb, std::move(rbody)));
    }
    if (head == "list") return array_lit(args_until_close());
    if (head == "app") return nary(head, 2, app, nullptr, nullptr);
    if (head == "add") return nary(head, 2, add, nullptr, nullptr);
    if (head == "sub") return nary(head, 2, sub, nullptr, nullptr);
    if (head == "mul") return nary(head, 2, mul, nullptr, nullptr);
    if (head == "div") return nary(head, 2, div_op, nullptr, nullptr);
    if (head == "gt") return nary(head, 2, gt, nullptr, nullptr);
    if (head == "lt") return nary(head, 2, lt, nullptr, nullptr);
    if (head == "pair") return nary(head, 2, pair, nullptr, nullptr);
    if (head == "fst") return nary(head, 1, nullptr, fst, nullptr);
    if (head == "snd") return nary(head, 1, nullptr, snd, nullptr);
    if (head == "inl") return nary(head, 1, nullptr, inl, nullptr);
    if (head == "inr") return nary(head, 1, nullptr, inr, nullptr);
    if (head == "iter") return nary(head, 2, iter, nullptr, nullptr);
    if (head == "fold") return nary(head, 3, nullptr, nullptr, fold);
    if (head == "if") return nary(head, 3, nullptr, nullptr, if_then_else);
    if (head == "read") return nary(head, 2, read, nullptr, nullptr);
    if (head == "write") return nary(head, 3, nullptr, nullptr, write);
    if (head == "readk") return nary(head, 2, read_at_key, nullptr, nullptr);
    if (head == "writek") return nary(head, 3, nullptr, nullptr, write_at_key);
    if (head == "replicate") return nary(head, 2, replicate, nullptr, nullptr);
    if (head == "range") return nary(head, 2, range, nullptr, nullptr);
    if (head == "length") return nary(head, 1, nullptr, length, nullptr);
    if (head == "map") return nary(head, 2, map_op, nullptr, nullptr);
    if (head == "group") return nary(head, 1, nullptr, group, nullptr);
    if (head == "zip") return nary(head, 2, zip, nullptr, nullptr);
    if (head == "concat") return nary(head, 1, nullptr, concat, nullptr);
    lex.fail("unknown constructor " + head);
  }
};

void print_rec(const TermPtr& t, std::string& out) {
  switch (t->kind()) {
    case TermKind::Var: out += t->name(); return;
    case TermKind::Meta: out += '?'; out += t->name(); return;
    case TermKind::IntLit: out += t->int_value().str(); return;
    case TermKind::BoolLit: out += t->bool_value() ? "true" : "false"; return;
    case TermKind::Unit: out += "unit"; return;
    case TermKind::Abs:
      out += "(lam ";
      out += t->name();
      out += ' ';
      print_rec(t->child(0), out);
      out += ')';
      return;
    case TermKind::Case:
      out += "(case ";
      print_rec(t->child(0), out);
      out += ' ';
      out += t->child(1)->name();
      out += ' ';
      print_rec(t->child(1)->child(0), out);
      out += ' ';
      out += t->child(2)->name();
      out += ' ';
      print_rec(t->child(2)->child(0), out);
      out += ')';
      return;
    default:
      out += '(';
      out += kind_name(t->kind());
      for (const auto& c : t->children()) {
        out += ' ';
        print_rec(c, out);
      }
      out += ')';
      return;
  }
}

void pretty_rec(const TermPtr& t, std::string& out, int indent) {
  if (t->size() <= 12) {
    print_rec(t, out);
    return;
  }
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  std::string pad2(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (t->kind()) {
    case TermKind::Abs:
      out += "(lam ";
      out += t->name();
      out += '\n';
      out += pad2;
      pretty_rec(t->child(0), out, indent + 1);
      out += ')';
      return;
    case TermKind::Case:
      out += "(case ";
      pretty_rec(t->child(0), out, indent + 1);
      out += '\n';
      out += pad2;
      out += t->child(1)->name();
      out += ' ';
      pretty_rec(t->child(1)->child(0), out, indent + 1);
      out += '\n';
      out += pad2;
      out += t->child(2)->name();
      out += ' ';
      pretty_rec(t->child(2)->child(0), out, indent + 1);
      out += ')';
      return;
    default:
      out += '(';
      out += kind_name(t->kind());
      for (const auto& c : t->children()) {
        out += '\n';
        out += pad2;
        pretty_rec(c, out, indent + 1);
      }
      out += ')';
      return;
  }
}

}  // namespace

TermPtr parse_term(const std::string& text) {
  Parser p(text);
  TermPtr t = p.expr();
  if (!p.lex.at_end()) p.lex.fail("trailing input after term");
  return t;
}

std::string print_term(const TermPtr& t) {
  std::string out;
  print_rec(t, out);
  return out;
}

std::string pretty_term(const TermPtr& t) {
  std::string out;
  pretty_rec(t, out, 0);
  return out;
}

TermPtr parse_term_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_term(ss.str());
}

}  // namespace ffl
