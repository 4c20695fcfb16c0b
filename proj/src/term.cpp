#include "ffl/term.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ffl {

const char* kind_name(TermKind k) {
  switch (k) {
    case TermKind::Var: return "var";
    case TermKind::App: return "app";
    case TermKind::Abs: return "lam";
    case TermKind::IntLit: return "int";
    case TermKind::BoolLit: return "bool";
    case TermKind::ArrayLit: return "list";
    case TermKind::Add: return "add";
    case TermKind::Sub: return "sub";
    case TermKind::Mul: return "mul";
    case TermKind::Div: return "div";
    case TermKind::Gt: return "gt";
    case TermKind::Lt: return "lt";
    case TermKind::Unit: return "unit";
    case TermKind::Pair: return "pair";
    case TermKind::Fst: return "fst";
    case TermKind::Snd: return "snd";
    case TermKind::Inl: return "inl";
    case TermKind::Inr: return "inr";
    case TermKind::Case: return "case";
    case TermKind::Iter: return "iter";
    case TermKind::Fold: return "fold";
    case TermKind::If: return "if";
    case TermKind::Read: return "read";
    case TermKind::Write: return "write";
    case TermKind::ReadAtKey: return "readk";
    case TermKind::WriteAtKey: return "writek";
    case TermKind::Replicate: return "replicate";
    case TermKind::Range: return "range";
    case TermKind::Length: return "length";
    case TermKind::Map: return "map";
    case TermKind::Group: return "group";
    case TermKind::Zip: return "zip";
    case TermKind::Concat: return "concat";
    case TermKind::Meta: return "meta";
  }
  return "?";
}

std::uint64_t name_bit(const std::string& name) {
  return std::uint64_t{1} << (std::hash<std::string>{}(name) & 63u);
}

TermPtr Term::make(TermKind k, std::string name, Int iv, bool bv,
                   std::vector<TermPtr> kids) {
  auto t = std::make_shared<Term>();
  t->kind_ = k;
  t->name_ = std::move(name);
  t->int_ = std::move(iv);
  t->bool_ = bv;
  t->kids_ = std::move(kids);
  std::uint64_t mask = 0;
  std::size_t size = 1;
  for (const auto& c : t->kids_) {
    mask |= c->mask_;
    size += c->size_;
  }
  if (k == TermKind::Var || k == TermKind::Abs) mask |= name_bit(t->name_);
  t->mask_ = mask;
  t->size_ = size;
  switch (k) {
    case TermKind::IntLit:
    case TermKind::BoolLit:
    case TermKind::Unit:
    case TermKind::Abs:
      t->value_flag_ = true;
      break;
    case TermKind::Pair:
    case TermKind::Inl:
    case TermKind::Inr:
    case TermKind::ArrayLit: {
      bool all = true;
      std::int64_t vc = 1;
      for (const auto& c : t->kids_) {
        if (!c->value_flag_) { all = false; break; }
        vc += c->vcost_;
      }
      t->value_flag_ = all;
      if (all) t->vcost_ = vc;
      break;
    }
    default:
      t->value_flag_ = false;
  }
  return t;
}

namespace {
TermPtr node(TermKind k, std::vector<TermPtr> kids) {
  return Term::make(k, "", Int{0}, false, std::move(kids));
}
}  // namespace

TermPtr var(std::string name) {
  return Term::make(TermKind::Var, std::move(name), Int{0}, false, {});
}
TermPtr app(TermPtr f, TermPtr a) { return node(TermKind::App, {std::move(f), std::move(a)}); }
TermPtr abs(std::string binder, TermPtr body) {
  return Term::make(TermKind::Abs, std::move(binder), Int{0}, false, {std::move(body)});
}
TermPtr int_lit(Int v) {
  // Small literals are shared; they dominate enumeration grids.
  static const std::vector<TermPtr> cache = [] {
    std::vector<TermPtr> c;
    for (long long i = -16; i <= 16; ++i)
      c.push_back(Term::make(TermKind::IntLit, "", Int{i}, false, {}));
    return c;
  }();
  if (v >= -16 && v <= 16)
    return cache[static_cast<std::size_t>(static_cast<long long>(v) + 16)];
  return Term::make(TermKind::IntLit, "", std::move(v), false, {});
}
TermPtr int_lit(long long v) { return int_lit(Int{v}); }
TermPtr bool_lit(bool v) { return Term::make(TermKind::BoolLit, "", Int{0}, v, {}); }
TermPtr array_lit(std::vector<TermPtr> elems) { return node(TermKind::ArrayLit, std::move(elems)); }
TermPtr add(TermPtr a, TermPtr b) { return node(TermKind::Add, {std::move(a), std::move(b)}); }
TermPtr sub(TermPtr a, TermPtr b) { return node(TermKind::Sub, {std::move(a), std::move(b)}); }
TermPtr mul(TermPtr a, TermPtr b) { return node(TermKind::Mul, {std::move(a), std::move(b)}); }
TermPtr div_op(TermPtr a, TermPtr b) { return node(TermKind::Div, {std::move(a), std::move(b)}); }
TermPtr gt(TermPtr a, TermPtr b) { return node(TermKind::Gt, {std::move(a), std::move(b)}); }
TermPtr lt(TermPtr a, TermPtr b) { return node(TermKind::Lt, {std::move(a), std::move(b)}); }
TermPtr unit() { return node(TermKind::Unit, {}); }
TermPtr pair(TermPtr a, TermPtr b) { return node(TermKind::Pair, {std::move(a), std::move(b)}); }
TermPtr fst(TermPtr p) { return node(TermKind::Fst, {std::move(p)}); }
TermPtr snd(TermPtr p) { return node(TermKind::Snd, {std::move(p)}); }
TermPtr inl(TermPtr t) { return node(TermKind::Inl, {std::move(t)}); }
TermPtr inr(TermPtr t) { return node(TermKind::Inr, {std::move(t)}); }

TermPtr case_of(TermPtr scrutinee, TermPtr left_abs, TermPtr right_abs) {
  if (left_abs->kind() != TermKind::Abs || right_abs->kind() != TermKind::Abs)
    throw std::invalid_argument("case branches must be abstractions");
  return node(TermKind::Case, {std::move(scrutinee), std::move(left_abs), std::move(right_abs)});
}

TermPtr iter(TermPtr f, TermPtr s) { return node(TermKind::Iter, {std::move(f), std::move(s)}); }
TermPtr fold(TermPtr f, TermPtr acc, TermPtr xs) {
  return node(TermKind::Fold, {std::move(f), std::move(acc), std::move(xs)});
}
TermPtr if_then_else(TermPtr c, TermPtr t, TermPtr e) {
  return node(TermKind::If, {std::move(c), std::move(t), std::move(e)});
}
TermPtr read(TermPtr xs, TermPtr i) { return node(TermKind::Read, {std::move(xs), std::move(i)}); }
TermPtr write(TermPtr xs, TermPtr i, TermPtr v) {
  return node(TermKind::Write, {std::move(xs), std::move(i), std::move(v)});
}
TermPtr read_at_key(TermPtr xs, TermPtr k) {
  return node(TermKind::ReadAtKey, {std::move(xs), std::move(k)});
}
TermPtr write_at_key(TermPtr xs, TermPtr k, TermPtr v) {
  return node(TermKind::WriteAtKey, {std::move(xs), std::move(k), std::move(v)});
}
TermPtr replicate(TermPtr n, TermPtr v) {
  return node(TermKind::Replicate, {std::move(n), std::move(v)});
}
TermPtr range(TermPtr lo, TermPtr hi) { return node(TermKind::Range, {std::move(lo), std::move(hi)}); }
TermPtr length(TermPtr xs) { return node(TermKind::Length, {std::move(xs)}); }
TermPtr map_op(TermPtr f, TermPtr xs) { return node(TermKind::Map, {std::move(f), std::move(xs)}); }
TermPtr group(TermPtr xs) { return node(TermKind::Group, {std::move(xs)}); }
TermPtr zip(TermPtr xs, TermPtr ys) { return node(TermKind::Zip, {std::move(xs), std::move(ys)}); }
TermPtr concat(TermPtr xss) { return node(TermKind::Concat, {std::move(xss)}); }
TermPtr meta(std::string name) {
  return Term::make(TermKind::Meta, std::move(name), Int{0}, false, {});
}

namespace {

// Paired binder stacks for alpha comparison.
bool alpha_eq_rec(const TermPtr& a, const TermPtr& b,
                  std::vector<std::pair<std::string, std::string>>& env) {
  if (a.get() == b.get() && env.empty()) return true;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case TermKind::Var: {
      for (auto it = env.rbegin(); it != env.rend(); ++it) {
        bool la = it->first == a->name();
        bool lb = it->second == b->name();
        if (la || lb) return la && lb;
      }
      return a->name() == b->name();
    }
    case TermKind::IntLit: return a->int_value() == b->int_value();
    case TermKind::BoolLit: return a->bool_value() == b->bool_value();
    case TermKind::Meta: return a->name() == b->name();
    case TermKind::Abs: {
      env.emplace_back(a->name(), b->name());
      bool ok = alpha_eq_rec(a->child(0), b->child(0), env);
      env.pop_back();
      return ok;
    }
    default: {
      if (a->arity() != b->arity()) return false;
      for (std::size_t i = 0; i < a->arity(); ++i)
        if (!alpha_eq_rec(a->child(i), b->child(i), env)) return false;
      return true;
    }
  }
}

void free_vars_rec(const TermPtr& t, std::vector<std::string>& bound,
                   std::set<std::string>& out) {
  switch (t->kind()) {
    case TermKind::Var:
      if (std::find(bound.rbegin(), bound.rend(), t->name()) == bound.rend())
        out.insert(t->name());
      break;
    case TermKind::Abs:
      bound.push_back(t->name());
      free_vars_rec(t->child(0), bound, out);
      bound.pop_back();
      break;
    default:
      for (const auto& c : t->children()) free_vars_rec(c, bound, out);
  }
}

}  // namespace

bool alpha_equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  std::vector<std::pair<std::string, std::string>> env;
  return alpha_eq_rec(a, b, env);
}

std::vector<std::string> free_vars(const TermPtr& t) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  free_vars_rec(t, bound, out);
  return {out.begin(), out.end()};
}

bool is_free_in(const std::string& name, const TermPtr& t) {
  if ((t->name_mask() & name_bit(name)) == 0) return false;
  switch (t->kind()) {
    case TermKind::Var: return t->name() == name;
    case TermKind::Abs:
      if (t->name() == name) return false;
      return is_free_in(name, t->child(0));
    default:
      for (const auto& c : t->children())
        if (is_free_in(name, c)) return true;
      return false;
  }
}

std::string fresh_name(const std::string& base,
                       const std::vector<std::string>& avoid) {
  std::string cand = base;
  while (std::find(avoid.begin(), avoid.end(), cand) != avoid.end())
    cand += '\'';
  return cand;
}

TermPtr substitute(const TermPtr& t, const std::string& x, const TermPtr& v) {
  if ((t->name_mask() & name_bit(x)) == 0) return t;
  switch (t->kind()) {
    case TermKind::Var:
      return t->name() == x ? v : t;
    case TermKind::Abs: {
      if (t->name() == x) return t;
      if (is_free_in(t->name(), v) && is_free_in(x, t->child(0))) {
        auto avoid = free_vars(v);
        auto body_fv = free_vars(t->child(0));
        avoid.insert(avoid.end(), body_fv.begin(), body_fv.end());
        avoid.push_back(x);
        std::string nn = fresh_name(t->name(), avoid);
        TermPtr renamed = substitute(t->child(0), t->name(), var(nn));
        return abs(nn, substitute(renamed, x, v));
      }
      TermPtr nb = substitute(t->child(0), x, v);
      if (nb.get() == t->child(0).get()) return t;
      return abs(t->name(), nb);
    }
    default: {
      std::vector<TermPtr> kids;
      kids.reserve(t->arity());
      bool changed = false;
      for (const auto& c : t->children()) {
        TermPtr nc = substitute(c, x, v);
        changed = changed || nc.get() != c.get();
        kids.push_back(std::move(nc));
      }
      if (!changed) return t;
      return Term::make(t->kind(), t->name(), t->int_value(), t->bool_value(),
                        std::move(kids));
    }
  }
}

TermPtr subterm_at(const TermPtr& t, const Path& path) {
  TermPtr cur = t;
  for (int i : path) {
    if (i < 0 || static_cast<std::size_t>(i) >= cur->arity()) return nullptr;
    cur = cur->child(i);
  }
  return cur;
}

TermPtr replace_at(const TermPtr& t, const Path& path, TermPtr replacement) {
  if (path.empty()) return replacement;
  int i = path.front();
  if (i < 0 || static_cast<std::size_t>(i) >= t->arity())
    throw std::out_of_range("replace_at: invalid path");
  Path rest(path.begin() + 1, path.end());
  std::vector<TermPtr> kids = t->children();
  kids[i] = replace_at(kids[i], rest, std::move(replacement));
  return Term::make(t->kind(), t->name(), t->int_value(), t->bool_value(),
                    std::move(kids));
}

bool contains_meta(const TermPtr& t) {
  if (t->kind() == TermKind::Meta) return true;
  for (const auto& c : t->children())
    if (contains_meta(c)) return true;
  return false;
}

std::string path_to_string(const Path& p) {
  if (p.empty()) return "[]";
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << '.';
    os << p[i];
  }
  os << ']';
  return os.str();
}

Path path_from_string(const std::string& s) {
  std::string body = s;
  if (!body.empty() && body.front() == '[') body = body.substr(1);
  if (!body.empty() && body.back() == ']') body.pop_back();
  Path p;
  std::string tok;
  std::istringstream is(body);
  while (std::getline(is, tok, '.'))
    if (!tok.empty()) p.push_back(std::stoi(tok));
  return p;
}

}  // namespace ffl
