#include "ffl/translate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace ffl::il {

namespace {

using Env = std::map<std::string, TermPtr>;
using Span = std::vector<StmtPtr>;

// Terms cheap and safe to splice at any use site: variables, literals, and
// projection chains over variables.
bool atomic(const TermPtr& t) {
  switch (t->kind()) {
    case TermKind::Var:
    case TermKind::IntLit:
    case TermKind::BoolLit:
    case TermKind::Unit:
      return true;
    case TermKind::Fst:
    case TermKind::Snd:
      return atomic(t->child(0));
    default:
      return false;
  }
}

void expr_vars(const ExprPtr& e, std::set<std::string>& out,
               std::vector<std::string>& shadow) {
  switch (e->kind) {
    case ExprKind::Var:
      if (std::find(shadow.begin(), shadow.end(), e->name) == shadow.end())
        out.insert(e->name);
      return;
    case ExprKind::Lambda: {
      for (const auto& p : e->params) shadow.push_back(p);
      expr_vars(e->args[0], out, shadow);
      for (std::size_t i = 0; i < e->params.size(); ++i) shadow.pop_back();
      return;
    }
    default:
      for (const auto& a : e->args) expr_vars(a, out, shadow);
  }
}

std::set<std::string> expr_reads(const ExprPtr& e) {
  std::set<std::string> out;
  std::vector<std::string> shadow;
  expr_vars(e, out, shadow);
  return out;
}

// Does x occur in a position that might not be evaluated (inside a lambda)?
void expr_use(const ExprPtr& e, const std::string& x, bool in_lambda, int& eager,
              int& skippable, std::vector<std::string>& shadow) {
  switch (e->kind) {
    case ExprKind::Var:
      if (e->name == x &&
          std::find(shadow.begin(), shadow.end(), x) == shadow.end()) {
        if (in_lambda) skippable++;
        else eager++;
      }
      return;
    case ExprKind::Lambda: {
      for (const auto& p : e->params) shadow.push_back(p);
      expr_use(e->args[0], x, true, eager, skippable, shadow);
      for (std::size_t i = 0; i < e->params.size(); ++i) shadow.pop_back();
      return;
    }
    case ExprKind::IfExpr: {
      expr_use(e->args[0], x, in_lambda, eager, skippable, shadow);
      // Branches of an if expression may be skipped.
      expr_use(e->args[1], x, true, eager, skippable, shadow);
      expr_use(e->args[2], x, true, eager, skippable, shadow);
      return;
    }
    default:
      for (const auto& a : e->args) expr_use(a, x, in_lambda, eager, skippable, shadow);
  }
}

struct UseInfo {
  int eager = 0;
  int skippable = 0;
  bool any() const { return eager + skippable > 0; }
};

// Variables assigned anywhere within a statement list (including nested).
void assigned_vars(const Span& list, std::set<std::string>& out) {
  for (const auto& s : list) {
    switch (s->kind) {
      case StmtKind::Assign:
      case StmtKind::IndexAssign:
        out.insert(s->var);
        break;
      case StmtKind::For:
        out.insert(s->var);
        assigned_vars(s->body, out);
        break;
      case StmtKind::Foreach:
        if (s->pattern.empty()) out.insert(s->var);
        else { out.insert(s->pattern[0]); out.insert(s->pattern[1]); }
        assigned_vars(s->body, out);
        break;
      case StmtKind::While:
        assigned_vars(s->body, out);
        break;
      case StmtKind::If:
        assigned_vars(s->body, out);
        assigned_vars(s->else_body, out);
        break;
      case StmtKind::Return:
        break;
    }
  }
}

// Variables read before being (definitely) assigned at this level.
void upward_exposed(const Span& list, std::set<std::string>& exposed,
                    std::set<std::string>& assigned) {
  auto expose = [&](const std::set<std::string>& reads) {
    for (const auto& r : reads)
      if (!assigned.count(r)) exposed.insert(r);
  };
  for (const auto& s : list) {
    switch (s->kind) {
      case StmtKind::Assign:
        expose(expr_reads(s->e1));
        assigned.insert(s->var);
        break;
      case StmtKind::IndexAssign:
        expose({s->var});
        expose(expr_reads(s->e1));
        expose(expr_reads(s->e2));
        break;
      case StmtKind::Return:
        expose(expr_reads(s->e1));
        break;
      case StmtKind::For: {
        expose(expr_reads(s->e1));
        expose(expr_reads(s->e2));
        std::set<std::string> inner_assigned = assigned;
        inner_assigned.insert(s->var);
        std::set<std::string> inner_exposed;
        // Body may read its own later assignments on the next iteration.
        std::set<std::string> none;
        upward_exposed(s->body, inner_exposed, none);
        expose(inner_exposed);
        std::set<std::string> body_assigned;
        assigned_vars(s->body, body_assigned);
        for (const auto& v : body_assigned) assigned.insert(v);
        assigned.insert(s->var);
        break;
      }
      case StmtKind::Foreach:
      case StmtKind::While: {
        expose(expr_reads(s->e1));
        std::set<std::string> none;
        std::set<std::string> inner_exposed;
        upward_exposed(s->body, inner_exposed, none);
        // Anything read in the body (even after an assignment within the
        // body) is exposed across iterations; be conservative and expose all
        // body reads that are not body-local temporaries assigned first.
        expose(inner_exposed);
        std::set<std::string> body_assigned;
        assigned_vars(s->body, body_assigned);
        for (const auto& v : body_assigned) assigned.insert(v);
        if (s->kind == StmtKind::Foreach) {
          if (s->pattern.empty()) assigned.insert(s->var);
          else { assigned.insert(s->pattern[0]); assigned.insert(s->pattern[1]); }
        }
        break;
      }
      case StmtKind::If: {
        expose(expr_reads(s->e1));
        std::set<std::string> then_exposed, else_exposed, a1 = assigned, a2 = assigned;
        upward_exposed(s->body, then_exposed, a1);
        upward_exposed(s->else_body, else_exposed, a2);
        expose(then_exposed);
        expose(else_exposed);
        // Only variables assigned on both paths are definitely assigned.
        for (const auto& v : a1)
          if (a2.count(v)) assigned.insert(v);
        break;
      }
    }
  }
}

// All variables read anywhere in a statement list.
void all_reads(const Span& list, std::set<std::string>& out) {
  std::set<std::string> assigned;
  // Upward-exposed with an empty assigned set under-approximates; gather raw
  // reads instead.
  for (const auto& s : list) {
    auto add = [&](const ExprPtr& e) {
      if (!e) return;
      for (const auto& r : expr_reads(e)) out.insert(r);
    };
    switch (s->kind) {
      case StmtKind::Assign: add(s->e1); break;
      case StmtKind::IndexAssign: out.insert(s->var); add(s->e1); add(s->e2); break;
      case StmtKind::Return: add(s->e1); break;
      case StmtKind::For: add(s->e1); add(s->e2); all_reads(s->body, out); break;
      case StmtKind::Foreach: add(s->e1); all_reads(s->body, out); break;
      case StmtKind::While: add(s->e1); all_reads(s->body, out); break;
      case StmtKind::If:
        add(s->e1);
        all_reads(s->body, out);
        all_reads(s->else_body, out);
        break;
    }
  }
}

struct Translator {
  std::map<std::string, int> first_assignment;  // deterministic state order
  int fresh_counter = 0;

  std::string fresh(const std::string& base, const Env& env) {
    std::vector<std::string> avoid;
    for (const auto& [n, t] : env) {
      auto fv = free_vars(t);
      avoid.insert(avoid.end(), fv.begin(), fv.end());
    }
    std::string name = base;
    while (std::find(avoid.begin(), avoid.end(), name) != avoid.end())
      name = base + "#" + std::to_string(fresh_counter++);
    return name;
  }

  void record_order(const Span& list) {
    for (const auto& s : list) {
      auto note = [&](const std::string& v) {
        if (!first_assignment.count(v)) first_assignment[v] = s->order;
      };
      switch (s->kind) {
        case StmtKind::Assign:
        case StmtKind::IndexAssign: note(s->var); break;
        case StmtKind::For: note(s->var); record_order(s->body); break;
        case StmtKind::Foreach:
          if (s->pattern.empty()) note(s->var);
          else { note(s->pattern[0]); note(s->pattern[1]); }
          record_order(s->body);
          break;
        case StmtKind::While: record_order(s->body); break;
        case StmtKind::If:
          record_order(s->body);
          record_order(s->else_body);
          break;
        case StmtKind::Return: break;
      }
    }
  }

  TermPtr expr(const ExprPtr& e, const Env& env) {
    switch (e->kind) {
      case ExprKind::IntLit: return int_lit(e->int_val);
      case ExprKind::BoolLit: return bool_lit(e->bool_val);
      case ExprKind::Var: {
        auto it = env.find(e->name);
        if (it == env.end())
          throw IlError(e->line, "variable " + e->name + " used before assignment");
        return it->second;
      }
      case ExprKind::Binary: {
        TermPtr a = expr(e->args[0], env);
        TermPtr b = expr(e->args[1], env);
        if (e->name == "add") return add(a, b);
        if (e->name == "sub") return sub(a, b);
        if (e->name == "mul") return mul(a, b);
        if (e->name == "div") return div_op(a, b);
        if (e->name == "gt") return gt(a, b);
        return lt(a, b);
      }
      case ExprKind::Index:
        return read(expr(e->args[0], env), expr(e->args[1], env));
      case ExprKind::Tuple:
        return pair(expr(e->args[0], env), expr(e->args[1], env));
      case ExprKind::IfExpr:
        return if_then_else(expr(e->args[0], env), expr(e->args[1], env),
                            expr(e->args[2], env));
      case ExprKind::Lambda: return lambda(e, env);
      case ExprKind::Call: return call(e, env);
    }
    throw IlError(e->line, "bad expression");
  }

  TermPtr lambda(const ExprPtr& e, const Env& env) {
    if (e->params.size() == 1) {
      std::string b = fresh(e->params[0], env);
      Env inner = env;
      inner[e->params[0]] = var(b);
      return abs(b, expr(e->args[0], inner));
    }
    std::string b = fresh(e->params[0] + "_" + e->params[1], env);
    Env inner = env;
    inner[e->params[0]] = fst(var(b));
    inner[e->params[1]] = snd(var(b));
    return abs(b, expr(e->args[0], inner));
  }

  TermPtr call(const ExprPtr& e, const Env& env) {
    const std::string& f = e->name;
    if (f == "replicate") return replicate(expr(e->args[0], env), expr(e->args[1], env));
    if (f == "length") return length(expr(e->args[0], env));
    if (f == "range") return range(expr(e->args[0], env), expr(e->args[1], env));
    if (f == "zip") return zip(expr(e->args[0], env), expr(e->args[1], env));
    if (f == "fst") return fst(expr(e->args[0], env));
    if (f == "snd") return snd(expr(e->args[0], env));
    if (f == "group") return group(expr(e->args[0], env));
    if (f == "concat") return concat(expr(e->args[0], env));
    if (f == "map") return map_op(lambda(e->args[0], env), expr(e->args[1], env));
    if (f == "flatMap")
      return concat(map_op(lambda(e->args[0], env), expr(e->args[1], env)));
    if (f == "fold")
      return fold(lambda(e->args[0], env), expr(e->args[1], env),
                  expr(e->args[2], env));
    if (f == "reduceByKey") {
      // reduceByKey(f, init, kvs) groups the pairs and folds each value list.
      TermPtr fn = lambda(e->args[0], env);
      TermPtr init = expr(e->args[1], env);
      TermPtr kvs = expr(e->args[2], env);
      std::string g = fresh("g", env);
      return map_op(
          abs(g, pair(fst(var(g)), fold(fn, init, snd(var(g))))), group(kvs));
    }
    throw IlError(e->line, "unknown builtin " + f);
  }

  // Use classification of x across the remaining statements. Reads that flow
  // through a loop state or loop result do not splice env[x] and are not
  // counted; reads inside loop bodies of non-state variables splice into a
  // lambda and count as skippable.
  UseInfo uses(const std::string& x, const Span& rest) {
    UseInfo u;
    scan_uses(x, rest, false, u);
    return u;
  }

  void scan_expr_use(const std::string& x, const ExprPtr& e, bool in_lambda,
                     UseInfo& u) {
    if (!e) return;
    std::vector<std::string> shadow;
    expr_use(e, x, in_lambda, u.eager, u.skippable, shadow);
  }

  void scan_uses(const std::string& x, const Span& rest, bool in_skippable,
                 UseInfo& u) {
    for (std::size_t i = 0; i < rest.size(); ++i) {
      const StmtPtr& s = rest[i];
      Span after(rest.begin() + i + 1, rest.end());
      switch (s->kind) {
        case StmtKind::Assign: {
          scan_expr_use(x, s->e1, in_skippable, u);
          if (s->var == x) return;  // reassignment: later uses see the new value
          break;
        }
        case StmtKind::IndexAssign: {
          if (s->var == x) {
            if (in_skippable) u.skippable++;
            else u.eager++;
          }
          scan_expr_use(x, s->e1, in_skippable, u);
          scan_expr_use(x, s->e2, in_skippable, u);
          if (s->var == x) return;
          break;
        }
        case StmtKind::Return:
          scan_expr_use(x, s->e1, in_skippable, u);
          return;
        case StmtKind::For:
        case StmtKind::Foreach:
        case StmtKind::While: {
          if (s->kind == StmtKind::For) {
            scan_expr_use(x, s->e1, in_skippable, u);
            scan_expr_use(x, s->e2, in_skippable, u);
          } else {
            scan_expr_use(x, s->e1, in_skippable, u);
          }
          auto live = live_state(s, after);
          bool is_state = std::find(live.begin(), live.end(), x) != live.end();
          bool bound_here =
              (s->kind == StmtKind::For && s->var == x) ||
              (s->kind == StmtKind::Foreach &&
               ((s->pattern.empty() && s->var == x) ||
                (!s->pattern.empty() &&
                 (s->pattern[0] == x || s->pattern[1] == x))));
          if (is_state) {
            u.eager++;  // spliced once into the initial state
            return;     // body and later reads go through the state tuple
          }
          if (bound_here) {
            // The loop variable shadows x inside the body only; while the
            // body does not splice env[x], later statements might.
            std::set<std::string> body_assigned;
            assigned_vars(s->body, body_assigned);
            (void)body_assigned;
          } else {
            std::set<std::string> body_reads;
            all_reads(s->body, body_reads);
            if (body_reads.count(x)) u.skippable++;
          }
          std::set<std::string> body_assigned;
          assigned_vars(s->body, body_assigned);
          if (body_assigned.count(x) || bound_here) return;
          break;
        }
        case StmtKind::If: {
          scan_expr_use(x, s->e1, in_skippable, u);
          std::set<std::string> reads;
          all_reads(s->body, reads);
          all_reads(s->else_body, reads);
          if (reads.count(x)) u.skippable++;
          std::set<std::string> assigned;
          assigned_vars(s->body, assigned);
          assigned_vars(s->else_body, assigned);
          if (assigned.count(x)) return;
          break;
        }
      }
    }
  }

  // The live loop state: variables assigned inside the body whose value is
  // read across iterations or after the loop, ordered by first assignment.
  std::vector<std::string> live_state(const StmtPtr& loop, const Span& after) {
    std::set<std::string> assigned;
    assigned_vars(loop->body, assigned);
    // Loop-bound variables are not carried state.
    if (loop->kind == StmtKind::For) assigned.erase(loop->var);
    if (loop->kind == StmtKind::Foreach) {
      if (loop->pattern.empty()) assigned.erase(loop->var);
      else { assigned.erase(loop->pattern[0]); assigned.erase(loop->pattern[1]); }
    }

    std::set<std::string> needed;
    {
      std::set<std::string> none;
      upward_exposed(loop->body, needed, none);
    }
    if (loop->kind == StmtKind::While)
      for (const auto& r : expr_reads(loop->e1)) needed.insert(r);
    std::set<std::string> later;
    all_reads(after, later);
    for (const auto& r : later) needed.insert(r);

    std::vector<std::string> live;
    for (const auto& v : assigned)
      if (needed.count(v)) live.push_back(v);
    std::sort(live.begin(), live.end(), [&](const std::string& a, const std::string& b) {
      return first_assignment.at(a) < first_assignment.at(b);
    });
    return live;
  }

  static TermPtr tuple_of(const std::vector<TermPtr>& parts) {
    if (parts.empty()) return unit();
    TermPtr acc = parts.back();
    for (std::size_t i = parts.size() - 1; i-- > 0;) acc = pair(parts[i], acc);
    return acc;
  }

  // Projection of component i out of a right-nested tuple of n parts.
  static TermPtr project(TermPtr tup, std::size_t i, std::size_t n) {
    if (n == 1) return tup;
    for (std::size_t k = 0; k < i; ++k) tup = snd(tup);
    return i + 1 == n ? tup : fst(tup);
  }

  // Binds `name := value` following the inline/redex policy, then translates
  // the remaining statements.
  TermPtr bind_and_continue(const std::string& name, TermPtr value, Env env,
                            const Span& rest) {
    UseInfo u = uses(name, rest);
    if (atomic(value) || (u.skippable == 0 && u.eager >= 1)) {
      env[name] = std::move(value);
      return stmts(rest, env);
    }
    // Redex-bind: evaluation happens here, exactly once, like the reference
    // order of the source.
    std::string binder = fresh(name, env);
    env[name] = var(binder);
    return app(abs(binder, stmts(rest, env)), std::move(value));
  }

  // Multi-variable results (loops, ifs) bind the tuple once and project.
  TermPtr bind_many_and_continue(const std::vector<std::string>& names,
                                 TermPtr value, Env env, const Span& rest) {
    if (names.empty()) {
      // Value still evaluates (it may be stuck); bind to an unused name.
      std::string binder = fresh("ignored", env);
      return app(abs(binder, stmts(rest, env)), std::move(value));
    }
    if (names.size() == 1)
      return bind_and_continue(names[0], std::move(value), std::move(env), rest);
    std::string binder = fresh(names[0] + "_state", env);
    for (std::size_t i = 0; i < names.size(); ++i)
      env[names[i]] = project(var(binder), i, names.size());
    return app(abs(binder, stmts(rest, env)), std::move(value));
  }

  TermPtr stmts(const Span& list, Env env) {
    if (list.empty())
      throw IlError(0, "statement block fell through without return");
    const StmtPtr& s = list.front();
    Span rest(list.begin() + 1, list.end());
    switch (s->kind) {
      case StmtKind::Return:
        return expr(s->e1, env);
      case StmtKind::Assign:
        return bind_and_continue(s->var, expr(s->e1, env), env, rest);
      case StmtKind::IndexAssign: {
        auto it = env.find(s->var);
        if (it == env.end())
          throw IlError(s->line, s->var + " assigned by index before definition");
        TermPtr updated = write(it->second, expr(s->e1, env), expr(s->e2, env));
        return bind_and_continue(s->var, std::move(updated), env, rest);
      }
      case StmtKind::For:
      case StmtKind::Foreach: {
        auto live = live_state(s, rest);
        TermPtr array = s->kind == StmtKind::For
                            ? range(expr(s->e1, env), expr(s->e2, env))
                            : expr(s->e1, env);
        std::vector<TermPtr> init;
        for (const auto& v : live) {
          auto it = env.find(v);
          if (it == env.end())
            throw IlError(s->line, "loop state variable " + v + " unassigned");
          init.push_back(it->second);
        }
        std::string binder = fresh("s", env);
        Env body_env = env;
        std::size_t n = live.size();
        TermPtr state_part = n == 0 ? nullptr : fst(var(binder));
        if (n == 1)
          body_env[live[0]] = fst(var(binder));
        else
          for (std::size_t i = 0; i < n; ++i)
            body_env[live[i]] = project(fst(var(binder)), i, n);
        TermPtr elem = snd(var(binder));
        if (s->kind == StmtKind::For) {
          body_env[s->var] = elem;
        } else if (s->pattern.empty()) {
          body_env[s->var] = elem;
        } else {
          body_env[s->pattern[0]] = fst(elem);
          body_env[s->pattern[1]] = snd(elem);
        }
        TermPtr body = block(s->body, body_env, live);
        TermPtr loop = fold(abs(binder, std::move(body)),
                            n == 0 ? unit() : tuple_of(init), std::move(array));
        if (n == 0) {
          std::string ign = fresh("ignored", env);
          return app(abs(ign, stmts(rest, env)), std::move(loop));
        }
        return bind_many_and_continue(live, std::move(loop), env, rest);
      }
      case StmtKind::While: {
        auto live = live_state(s, rest);
        if (live.empty())
          throw IlError(s->line, "while loop with no live state");
        std::vector<TermPtr> init;
        for (const auto& v : live) init.push_back(env.at(v));
        std::string binder = fresh("s", env);
        Env body_env = env;
        std::size_t n = live.size();
        for (std::size_t i = 0; i < n; ++i)
          body_env[live[i]] = project(var(binder), i, n);
        TermPtr cond = expr(s->e1, body_env);
        TermPtr body = block(s->body, body_env, live);
        TermPtr loop = iter(
            abs(binder, if_then_else(std::move(cond), inr(std::move(body)),
                                     inl(unit()))),
            tuple_of(init));
        return bind_many_and_continue(live, std::move(loop), env, rest);
      }
      case StmtKind::If: {
        std::set<std::string> assigned;
        assigned_vars(s->body, assigned);
        assigned_vars(s->else_body, assigned);
        std::vector<std::string> outs(assigned.begin(), assigned.end());
        std::sort(outs.begin(), outs.end(),
                  [&](const std::string& a, const std::string& b) {
                    return first_assignment.at(a) < first_assignment.at(b);
                  });
        TermPtr cond = expr(s->e1, env);
        TermPtr then_t = block(s->body, env, outs);
        TermPtr else_t = block(s->else_body, env, outs);
        TermPtr value = if_then_else(std::move(cond), std::move(then_t),
                                     std::move(else_t));
        return bind_many_and_continue(outs, std::move(value), env, rest);
      }
    }
    throw IlError(s->line, "bad statement");
  }

  // Translates a block that ends by yielding the tuple of `yields` values.
  TermPtr block(const Span& list, Env env, const std::vector<std::string>& yields) {
    if (list.empty()) {
      std::vector<TermPtr> parts;
      for (const auto& v : yields) {
        auto it = env.find(v);
        if (it == env.end())
          throw IlError(0, "block result variable " + v + " unassigned");
        parts.push_back(it->second);
      }
      return tuple_of(parts);
    }
    const StmtPtr& s = list.front();
    Span rest(list.begin() + 1, list.end());
    switch (s->kind) {
      case StmtKind::Return:
        throw IlError(s->line, "return inside a loop or branch is not supported");
      case StmtKind::Assign:
        return bind_block(s->var, expr(s->e1, env), env, rest, yields);
      case StmtKind::IndexAssign: {
        auto it = env.find(s->var);
        if (it == env.end())
          throw IlError(s->line, s->var + " assigned by index before definition");
        TermPtr updated = write(it->second, expr(s->e1, env), expr(s->e2, env));
        return bind_block(s->var, std::move(updated), env, rest, yields);
      }
      default: {
        // Nested control: reuse stmts() by translating the nested construct
        // with a continuation that yields the block result.
        return nested_control(s, rest, env, yields);
      }
    }
  }

  // bind_and_continue for block position (continuation yields a tuple).
  TermPtr bind_block(const std::string& name, TermPtr value, Env env,
                     const Span& rest, const std::vector<std::string>& yields) {
    UseInfo u = uses_in_block(name, rest, yields);
    if (atomic(value) || (u.skippable == 0 && u.eager >= 1)) {
      env[name] = std::move(value);
      return block(rest, env, yields);
    }
    std::string binder = fresh(name, env);
    env[name] = var(binder);
    return app(abs(binder, block(rest, env, yields)), std::move(value));
  }

  UseInfo uses_in_block(const std::string& x, const Span& rest,
                        const std::vector<std::string>& yields) {
    UseInfo u = uses(x, rest);
    // The yield tuple reads every yielded variable, eagerly, unless a later
    // statement reassigns it.
    std::set<std::string> reassigned;
    assigned_vars(rest, reassigned);
    if (!reassigned.count(x) &&
        std::find(yields.begin(), yields.end(), x) != yields.end())
      u.eager++;
    return u;
  }

  TermPtr nested_control(const StmtPtr& s, const Span& rest, Env env,
                         const std::vector<std::string>& yields) {
    switch (s->kind) {
      case StmtKind::For:
      case StmtKind::Foreach: {
        auto live = live_state_block(s, rest, yields);
        TermPtr array = s->kind == StmtKind::For
                            ? range(expr(s->e1, env), expr(s->e2, env))
                            : expr(s->e1, env);
        std::vector<TermPtr> init;
        for (const auto& v : live) init.push_back(env.at(v));
        std::string binder = fresh("s", env);
        Env body_env = env;
        std::size_t n = live.size();
        for (std::size_t i = 0; i < n; ++i)
          body_env[live[i]] = project(fst(var(binder)), i, n);
        TermPtr elem = snd(var(binder));
        if (s->kind == StmtKind::For) body_env[s->var] = elem;
        else if (s->pattern.empty()) body_env[s->var] = elem;
        else {
          body_env[s->pattern[0]] = fst(elem);
          body_env[s->pattern[1]] = snd(elem);
        }
        TermPtr body = block(s->body, body_env, live);
        TermPtr loop = fold(abs(binder, std::move(body)),
                            n == 0 ? unit() : tuple_of(init), std::move(array));
        if (n == 0) {
          std::string ign = fresh("ignored", env);
          return app(abs(ign, block(rest, env, yields)), std::move(loop));
        }
        return bind_many_block(live, std::move(loop), env, rest, yields);
      }
      case StmtKind::While: {
        auto live = live_state_block(s, rest, yields);
        if (live.empty()) throw IlError(s->line, "while loop with no live state");
        std::vector<TermPtr> init;
        for (const auto& v : live) init.push_back(env.at(v));
        std::string binder = fresh("s", env);
        Env body_env = env;
        std::size_t n = live.size();
        for (std::size_t i = 0; i < n; ++i)
          body_env[live[i]] = project(var(binder), i, n);
        TermPtr cond = expr(s->e1, body_env);
        TermPtr body = block(s->body, body_env, live);
        TermPtr loop = iter(abs(binder, if_then_else(std::move(cond),
                                                     inr(std::move(body)),
                                                     inl(unit()))),
                            tuple_of(init));
        return bind_many_block(live, std::move(loop), env, rest, yields);
      }
      case StmtKind::If: {
        std::set<std::string> assigned;
        assigned_vars(s->body, assigned);
        assigned_vars(s->else_body, assigned);
        std::vector<std::string> outs(assigned.begin(), assigned.end());
        std::sort(outs.begin(), outs.end(),
                  [&](const std::string& a, const std::string& b) {
                    return first_assignment.at(a) < first_assignment.at(b);
                  });
        TermPtr cond = expr(s->e1, env);
        TermPtr then_t = block(s->body, env, outs);
        TermPtr else_t = block(s->else_body, env, outs);
        TermPtr value = if_then_else(std::move(cond), std::move(then_t),
                                     std::move(else_t));
        return bind_many_block(outs, std::move(value), env, rest, yields);
      }
      default:
        throw IlError(s->line, "bad nested statement");
    }
  }

  TermPtr bind_many_block(const std::vector<std::string>& names, TermPtr value,
                          Env env, const Span& rest,
                          const std::vector<std::string>& yields) {
    if (names.empty()) {
      std::string binder = fresh("ignored", env);
      return app(abs(binder, block(rest, env, yields)), std::move(value));
    }
    if (names.size() == 1)
      return bind_block(names[0], std::move(value), std::move(env), rest, yields);
    std::string binder = fresh(names[0] + "_state", env);
    for (std::size_t i = 0; i < names.size(); ++i)
      env[names[i]] = project(var(binder), i, names.size());
    return app(abs(binder, block(rest, env, yields)), std::move(value));
  }

  std::vector<std::string> live_state_block(const StmtPtr& loop, const Span& after,
                                            const std::vector<std::string>& yields) {
    // Same as live_state, but yields count as reads after the loop.
    std::set<std::string> assigned;
    assigned_vars(loop->body, assigned);
    if (loop->kind == StmtKind::For) assigned.erase(loop->var);
    if (loop->kind == StmtKind::Foreach) {
      if (loop->pattern.empty()) assigned.erase(loop->var);
      else { assigned.erase(loop->pattern[0]); assigned.erase(loop->pattern[1]); }
    }
    std::set<std::string> needed;
    {
      std::set<std::string> none;
      upward_exposed(loop->body, needed, none);
    }
    if (loop->kind == StmtKind::While)
      for (const auto& r : expr_reads(loop->e1)) needed.insert(r);
    std::set<std::string> later;
    all_reads(after, later);
    std::set<std::string> reassigned_later;
    assigned_vars(after, reassigned_later);
    for (const auto& r : later) needed.insert(r);
    for (const auto& y : yields)
      if (!reassigned_later.count(y)) needed.insert(y);
    std::vector<std::string> live;
    for (const auto& v : assigned)
      if (needed.count(v)) live.push_back(v);
    std::sort(live.begin(), live.end(), [&](const std::string& a, const std::string& b) {
      return first_assignment.at(a) < first_assignment.at(b);
    });
    return live;
  }
};

}  // namespace

TermPtr translate(const IlProgram& p) {
  typecheck_il(p);  // reject ill-typed programs up front
  Translator tr;
  for (std::size_t i = 0; i < p.params.size(); ++i)
    tr.first_assignment[p.params[i].first] = -static_cast<int>(p.params.size() - i);
  tr.record_order(p.body);
  Env env;
  for (const auto& [n, ty] : p.params) env[n] = var(n);
  TermPtr body = tr.stmts(p.body, env);
  for (std::size_t i = p.params.size(); i-- > 0;)
    body = abs(p.params[i].first, std::move(body));
  return body;
}

}  // namespace ffl::il
