#include "ffl/eval.hpp"

#include "ffl/text.hpp"

namespace ffl {

const char* stuck_reason_name(StuckReason r) {
  switch (r) {
    case StuckReason::OutOfBounds: return "out-of-bounds";
    case StuckReason::ZipLengthMismatch: return "zip-length-mismatch";
    case StuckReason::NegativeReplicate: return "negative-replicate";
    case StuckReason::EmptyRangeInvalid: return "empty-range-invalid";
    case StuckReason::DivByZero: return "div-by-zero";
    case StuckReason::NonValueScrutinee: return "non-value-scrutinee";
    case StuckReason::IllTyped: return "ill-typed";
  }
  return "?";
}

namespace {

struct Evaluator {
  Fuel fuel;
  Path where;
  EvalResult failure{EvalResult::Kind::Value, nullptr, {}, StuckReason::IllTyped};
  bool failed = false;

  // One semantics-rule application. Returns false when the budget is spent.
  bool charge() {
    if (fuel <= 0) {
      failure = EvalResult::make_out_of_fuel();
      failed = true;
      return false;
    }
    fuel--;
    return true;
  }

  bool charge_n(std::int64_t n) {
    if (fuel < n) {
      fuel = 0;
      failure = EvalResult::make_out_of_fuel();
      failed = true;
      return false;
    }
    fuel -= n;
    return true;
  }

  TermPtr stuck(StuckReason r) {
    if (!failed) {
      failure = EvalResult::make_stuck(where, r);
      failed = true;
    }
    return nullptr;
  }

  TermPtr at(int idx, const TermPtr& t) {
    where.push_back(idx);
    TermPtr r = go(t);
    where.pop_back();
    return r;
  }

  // Returns the value of t, or nullptr with `failure` set.
  TermPtr go(const TermPtr& t) {
    if (t->is_value()) {
      if (!charge_n(t->value_cost())) return nullptr;
      return t;
    }
    if (!charge()) return nullptr;
    switch (t->kind()) {
      case TermKind::Abs:
      case TermKind::IntLit:
      case TermKind::BoolLit:
      case TermKind::Unit:
        return t;

      case TermKind::Var:
      case TermKind::Meta:
        return stuck(StuckReason::IllTyped);

      case TermKind::App: {
        TermPtr f = at(0, t->child(0));
        if (!f) return nullptr;
        if (f->kind() != TermKind::Abs) return stuck(StuckReason::IllTyped);
        TermPtr a = at(1, t->child(1));
        if (!a) return nullptr;
        return go(substitute(f->child(0), f->name(), a));
      }

      case TermKind::ArrayLit: {
        std::vector<TermPtr> vals;
        vals.reserve(t->arity());
        bool same = true;
        for (std::size_t i = 0; i < t->arity(); ++i) {
          TermPtr v = at(static_cast<int>(i), t->child(i));
          if (!v) return nullptr;
          same = same && v.get() == t->child(i).get();
          vals.push_back(std::move(v));
        }
        return same ? t : array_lit(std::move(vals));
      }

      case TermKind::Pair: {
        TermPtr a = at(0, t->child(0));
        if (!a) return nullptr;
        TermPtr b = at(1, t->child(1));
        if (!b) return nullptr;
        if (a.get() == t->child(0).get() && b.get() == t->child(1).get()) return t;
        return pair(std::move(a), std::move(b));
      }

      case TermKind::Inl: {
        TermPtr v = at(0, t->child(0));
        if (!v) return nullptr;
        return v.get() == t->child(0).get() ? t : inl(std::move(v));
      }
      case TermKind::Inr: {
        TermPtr v = at(0, t->child(0));
        if (!v) return nullptr;
        return v.get() == t->child(0).get() ? t : inr(std::move(v));
      }

      case TermKind::Add:
      case TermKind::Sub:
      case TermKind::Mul:
      case TermKind::Div:
      case TermKind::Gt:
      case TermKind::Lt: {
        TermPtr a = at(0, t->child(0));
        if (!a) return nullptr;
        TermPtr b = at(1, t->child(1));
        if (!b) return nullptr;
        if (a->kind() != TermKind::IntLit || b->kind() != TermKind::IntLit)
          return stuck(StuckReason::IllTyped);
        const Int& x = a->int_value();
        const Int& y = b->int_value();
        switch (t->kind()) {
          case TermKind::Add: return int_lit(x + y);
          case TermKind::Sub: return int_lit(x - y);
          case TermKind::Mul: return int_lit(x * y);
          case TermKind::Div:
            if (y == 0) return stuck(StuckReason::DivByZero);
            return int_lit(x / y);  // truncates toward zero
          case TermKind::Gt: return bool_lit(x > y);
          default: return bool_lit(x < y);
        }
      }

      case TermKind::If: {
        TermPtr c = at(0, t->child(0));
        if (!c) return nullptr;
        if (c->kind() != TermKind::BoolLit) return stuck(StuckReason::IllTyped);
        return c->bool_value() ? at(1, t->child(1)) : at(2, t->child(2));
      }

      case TermKind::Fst:
      case TermKind::Snd: {
        TermPtr p = at(0, t->child(0));
        if (!p) return nullptr;
        if (p->kind() != TermKind::Pair) return stuck(StuckReason::IllTyped);
        return p->child(t->kind() == TermKind::Fst ? 0 : 1);
      }

      case TermKind::Case: {
        TermPtr s = at(0, t->child(0));
        if (!s) return nullptr;
        if (s->kind() == TermKind::Inl) {
          const TermPtr& br = t->child(1);
          return go(substitute(br->child(0), br->name(), s->child(0)));
        }
        if (s->kind() == TermKind::Inr) {
          const TermPtr& br = t->child(2);
          return go(substitute(br->child(0), br->name(), s->child(0)));
        }
        return stuck(StuckReason::NonValueScrutinee);
      }

      case TermKind::Read: {
        TermPtr i = at(1, t->child(1));
        if (!i) return nullptr;
        TermPtr xs = at(0, t->child(0));
        if (!xs) return nullptr;
        if (i->kind() != TermKind::IntLit || xs->kind() != TermKind::ArrayLit)
          return stuck(StuckReason::IllTyped);
        const Int& idx = i->int_value();
        if (idx < 0 || idx >= Int(xs->arity())) return stuck(StuckReason::OutOfBounds);
        return xs->child(static_cast<std::size_t>(idx));
      }

      case TermKind::Write: {
        TermPtr i = at(1, t->child(1));
        if (!i) return nullptr;
        TermPtr xs = at(0, t->child(0));
        if (!xs) return nullptr;
        TermPtr v = at(2, t->child(2));
        if (!v) return nullptr;
        if (i->kind() != TermKind::IntLit || xs->kind() != TermKind::ArrayLit)
          return stuck(StuckReason::IllTyped);
        const Int& idx = i->int_value();
        if (idx < 0 || idx >= Int(xs->arity())) return stuck(StuckReason::OutOfBounds);
        std::vector<TermPtr> kids = xs->children();
        kids[static_cast<std::size_t>(idx)] = std::move(v);
        return array_lit(std::move(kids));
      }

      case TermKind::Length: {
        TermPtr xs = at(0, t->child(0));
        if (!xs) return nullptr;
        if (xs->kind() != TermKind::ArrayLit) return stuck(StuckReason::IllTyped);
        return int_lit(Int(xs->arity()));
      }

      case TermKind::Replicate: {
        TermPtr n = at(0, t->child(0));
        if (!n) return nullptr;
        TermPtr v = at(1, t->child(1));
        if (!v) return nullptr;
        if (n->kind() != TermKind::IntLit) return stuck(StuckReason::IllTyped);
        const Int& cnt = n->int_value();
        if (cnt < 0) return stuck(StuckReason::NegativeReplicate);
        std::vector<TermPtr> kids(static_cast<std::size_t>(cnt), v);
        return array_lit(std::move(kids));
      }

      case TermKind::Range: {
        TermPtr lo = at(0, t->child(0));
        if (!lo) return nullptr;
        TermPtr hi = at(1, t->child(1));
        if (!hi) return nullptr;
        if (lo->kind() != TermKind::IntLit || hi->kind() != TermKind::IntLit)
          return stuck(StuckReason::IllTyped);
        std::vector<TermPtr> kids;
        for (Int i = lo->int_value(); i < hi->int_value(); ++i) kids.push_back(int_lit(i));
        return array_lit(std::move(kids));
      }

      case TermKind::Fold: {
        // Both fold rules require the function to evaluate to an abstraction.
        TermPtr f = at(0, t->child(0));
        if (!f) return nullptr;
        if (f->kind() != TermKind::Abs) return stuck(StuckReason::IllTyped);
        TermPtr acc = at(1, t->child(1));
        if (!acc) return nullptr;
        TermPtr xs = at(2, t->child(2));
        if (!xs) return nullptr;
        if (xs->kind() != TermKind::ArrayLit) return stuck(StuckReason::IllTyped);
        for (std::size_t i = 0; i < xs->arity(); ++i) {
          // One unfolding of the non-empty rule per element.
          if (!charge()) return nullptr;
          acc = go(app(f, pair(std::move(acc), xs->child(i))));
          if (!acc) return nullptr;
        }
        return acc;
      }

      case TermKind::Iter: {
        TermPtr s = at(1, t->child(1));
        if (!s) return nullptr;
        for (;;) {
          TermPtr r = go(app(t->child(0), s));
          if (!r) return nullptr;
          if (r->kind() == TermKind::Inl && r->child(0)->kind() == TermKind::Unit)
            return s;
          if (r->kind() != TermKind::Inr) return stuck(StuckReason::IllTyped);
          s = r->child(0);
          // One application of the continue rule per round.
          if (!charge()) return nullptr;
        }
      }

      case TermKind::Map: {
        TermPtr xs = at(1, t->child(1));
        if (!xs) return nullptr;
        if (xs->kind() != TermKind::ArrayLit) return stuck(StuckReason::IllTyped);
        std::vector<TermPtr> out;
        out.reserve(xs->arity());
        for (std::size_t i = 0; i < xs->arity(); ++i) {
          // The rule re-derives the application of the unevaluated f per element.
          TermPtr v = go(app(t->child(0), xs->child(i)));
          if (!v) return nullptr;
          out.push_back(std::move(v));
        }
        return array_lit(std::move(out));
      }

      case TermKind::Zip: {
        TermPtr as = at(0, t->child(0));
        if (!as) return nullptr;
        TermPtr bs = at(1, t->child(1));
        if (!bs) return nullptr;
        if (as->kind() != TermKind::ArrayLit || bs->kind() != TermKind::ArrayLit)
          return stuck(StuckReason::IllTyped);
        if (as->arity() != bs->arity()) return stuck(StuckReason::ZipLengthMismatch);
        std::vector<TermPtr> out;
        out.reserve(as->arity());
        for (std::size_t i = 0; i < as->arity(); ++i)
          out.push_back(pair(as->child(i), bs->child(i)));
        return array_lit(std::move(out));
      }

      case TermKind::Concat: {
        TermPtr xss = at(0, t->child(0));
        if (!xss) return nullptr;
        if (xss->kind() != TermKind::ArrayLit) return stuck(StuckReason::IllTyped);
        std::vector<TermPtr> out;
        for (std::size_t i = 0; i < xss->arity(); ++i) {
          const TermPtr& inner = xss->child(i);
          if (inner->kind() != TermKind::ArrayLit) return stuck(StuckReason::IllTyped);
          for (const auto& e : inner->children()) out.push_back(e);
        }
        return array_lit(std::move(out));
      }

      case TermKind::ReadAtKey: {
        TermPtr xs = at(0, t->child(0));
        if (!xs) return nullptr;
        TermPtr k = at(1, t->child(1));
        if (!k) return nullptr;
        if (xs->kind() != TermKind::ArrayLit) return stuck(StuckReason::IllTyped);
        for (const auto& e : xs->children()) {
          if (e->kind() != TermKind::Pair) return stuck(StuckReason::IllTyped);
          if (alpha_equal(e->child(0), k)) return inr(e->child(1));
        }
        return inl(unit());
      }

      case TermKind::WriteAtKey: {
        TermPtr xs = at(0, t->child(0));
        if (!xs) return nullptr;
        TermPtr k = at(1, t->child(1));
        if (!k) return nullptr;
        TermPtr v = at(2, t->child(2));
        if (!v) return nullptr;
        if (xs->kind() != TermKind::ArrayLit) return stuck(StuckReason::IllTyped);
        std::vector<TermPtr> kids = xs->children();
        for (std::size_t i = 0; i < kids.size(); ++i) {
          if (kids[i]->kind() != TermKind::Pair) return stuck(StuckReason::IllTyped);
          if (alpha_equal(kids[i]->child(0), k)) {
            kids[i] = pair(kids[i]->child(0), std::move(v));
            return array_lit(std::move(kids));
          }
        }
        kids.push_back(pair(std::move(k), std::move(v)));
        return array_lit(std::move(kids));
      }

      case TermKind::Group: {
        TermPtr xs = at(0, t->child(0));
        if (!xs) return nullptr;
        if (xs->kind() != TermKind::ArrayLit) return stuck(StuckReason::IllTyped);
        // Keys in order of first occurrence; values per key in input order.
        std::vector<TermPtr> keys;
        std::vector<std::vector<TermPtr>> values;
        for (const auto& e : xs->children()) {
          // One unfolding of the recursive group rule per element.
          if (!charge()) return nullptr;
          if (e->kind() != TermKind::Pair) return stuck(StuckReason::IllTyped);
          bool found = false;
          for (std::size_t i = 0; i < keys.size(); ++i) {
            if (alpha_equal(keys[i], e->child(0))) {
              values[i].push_back(e->child(1));
              found = true;
              break;
            }
          }
          if (!found) {
            keys.push_back(e->child(0));
            values.push_back({e->child(1)});
          }
        }
        std::vector<TermPtr> out;
        out.reserve(keys.size());
        for (std::size_t i = 0; i < keys.size(); ++i)
          out.push_back(pair(keys[i], array_lit(std::move(values[i]))));
        return array_lit(std::move(out));
      }
    }
    return stuck(StuckReason::IllTyped);
  }
};

}  // namespace

EvalResult eval(const TermPtr& t, Fuel fuel) {
  Evaluator ev;
  ev.fuel = fuel;
  TermPtr v = ev.go(t);
  if (v) return EvalResult::make_value(std::move(v));
  return ev.failure;
}

EvalResult run_program(const TermPtr& t, const std::vector<TermPtr>& args, Fuel fuel) {
  TermPtr applied = t;
  for (const auto& a : args) applied = app(applied, a);
  return eval(applied, fuel);
}

bool is_value(const TermPtr& t) { return t->is_value(); }

std::string eval_result_to_string(const EvalResult& r) {
  switch (r.kind) {
    case EvalResult::Kind::Value: return print_term(r.value);
    case EvalResult::Kind::Stuck:
      return std::string("stuck:") + stuck_reason_name(r.reason) + " at " +
             path_to_string(r.stuck_path);
    case EvalResult::Kind::OutOfFuel: return "out-of-fuel";
  }
  return "?";
}

}  // namespace ffl
