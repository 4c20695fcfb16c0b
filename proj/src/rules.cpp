#include "ffl/rules.hpp"

#include "ffl/text.hpp"

namespace ffl {

namespace {

TermPtr mv(const char* n) { return meta(n); }
TermPtr vr(const char* n) { return var(n); }
TermPtr fstv(const char* n) { return fst(var(n)); }
TermPtr sndv(const char* n) { return snd(var(n)); }

RewriteRule rule(int number, std::string name, std::vector<RuleVariant> vars) {
  RewriteRule r;
  r.number = number;
  r.name = std::move(name);
  r.variants = std::move(vars);
  return r;
}

std::vector<RewriteRule> build_catalog() {
  std::vector<RewriteRule> rules;

  // 1: separating a loop body into an iteration-independent part computed
  // by map and a dependent part folded over the mapped array.
  rules.push_back(rule(
      1, "extract-independent-to-map",
      {{"",
        fold(abs("acc", app(mv("f"), pair(fstv("acc"), app(mv("g"), sndv("acc"))))),
             mv("init"), mv("xs")),
        fold(abs("y", app(mv("f"), pair(fstv("y"), sndv("y")))), mv("init"),
             map_op(mv("g"), mv("xs"))),
        {SideCondition::not_free("acc", mv("f")),
         SideCondition::not_free("acc", mv("g")),
         SideCondition::not_free("y", mv("f")),
         SideCondition::not_stuck(mv("g"))}}}));

  // 2: grouping loop iterations that write to the same array index.
  rules.push_back(rule(
      2, "group-same-index",
      {{"",
        fold(abs("acc", write(fstv("acc"), fst(sndv("acc")),
                              app(mv("f"),
                                  pair(fst(sndv("acc")),
                                       pair(snd(sndv("acc")),
                                            read(fstv("acc"), fst(sndv("acc")))))))),
             mv("ys"), mv("xs")),
        fold(abs("upd", write(fstv("upd"), fst(sndv("upd")), snd(sndv("upd")))),
             mv("ys"),
             map_op(abs("kv", pair(fstv("kv"),
                                   fold(abs("st", app(mv("f"),
                                                      pair(fstv("kv"),
                                                           pair(sndv("st"), fstv("st"))))),
                                        read(mv("ys"), fstv("kv")), sndv("kv")))),
                    group(mv("xs")))),
        {SideCondition::not_free("acc", mv("f")),
         SideCondition::not_free("kv", mv("f")),
         SideCondition::not_free("st", mv("f"))}}}));

  // 3: grouping accesses to the same key of a key-value array. The grouped
  // side threads the running value through a unit-sum so the first iteration
  // sees the same absent/present distinction that readAtKey provides.
  rules.push_back(rule(
      3, "group-same-key",
      {{"",
        fold(abs("acc", write_at_key(fstv("acc"), fst(sndv("acc")),
                                     app(mv("f"),
                                         pair(fst(sndv("acc")),
                                              pair(snd(sndv("acc")),
                                                   read_at_key(fstv("acc"),
                                                               fst(sndv("acc")))))))),
             mv("m"), mv("xs")),
        fold(abs("upd", case_of(snd(sndv("upd")), abs("u", fstv("upd")),
                                abs("w", write_at_key(fstv("upd"), fst(sndv("upd")),
                                                      vr("w"))))),
             mv("m"),
             map_op(abs("kv", pair(fstv("kv"),
                                   fold(abs("st", inr(app(mv("f"),
                                                          pair(fstv("kv"),
                                                               pair(sndv("st"),
                                                                    fstv("st")))))),
                                        read_at_key(mv("m"), fstv("kv")), sndv("kv")))),
                    group(mv("xs")))),
        {SideCondition::not_free("acc", mv("f")),
         SideCondition::not_free("kv", mv("f")),
         SideCondition::not_free("st", mv("f"))}}}));

  // 4: fuses two consecutive applications of map.
  rules.push_back(rule(
      4, "map-fusion",
      {{"",
        map_op(mv("f"), map_op(mv("g"), mv("xs"))),
        map_op(abs("x", app(mv("f"), app(mv("g"), vr("x")))), mv("xs")),
        {SideCondition::not_free("x", mv("f")),
         SideCondition::not_free("x", mv("g")),
         SideCondition::not_stuck(mv("f")),
         SideCondition::not_stuck(mv("g"))}}}));

  // 5: a loop that updates an array it also reads from writes to a separate
  // array instead.
  rules.push_back(rule(
      5, "separate-read-write-arrays",
      {{"",
        fold(abs("xsw", write(fstv("xsw"), sndv("xsw"),
                              app(mv("f"), pair(sndv("xsw"),
                                                read(fstv("xsw"), sndv("xsw")))))),
             mv("xs"), range(int_lit(0), length(mv("xs")))),
        fold(abs("ysw", write(fstv("ysw"), sndv("ysw"),
                              app(mv("f"), pair(sndv("ysw"),
                                                read(mv("xs"), sndv("ysw")))))),
             mv("ys"), range(int_lit(0), length(mv("xs")))),
        {SideCondition::equal_length(mv("xs"), mv("ys")),
         SideCondition::not_free("xsw", mv("f")),
         SideCondition::not_free("ysw", mv("xs"))}}}));

  // 6: flattens a nested fold over an array of arrays.
  rules.push_back(rule(
      6, "flatten-fold-over-concat",
      {{"",
        fold(abs("accxs", fold(mv("f"), fstv("accxs"), sndv("accxs"))), mv("acc"),
             mv("xss")),
        fold(mv("f"), mv("acc"), concat(mv("xss"))),
        {SideCondition::not_stuck(mv("f")),
         SideCondition::not_free("accxs", mv("f"))}}}));

  // 7: counted iter loops become fold over the index range.
  rules.push_back(rule(
      7, "iter-to-fold",
      {{"",
        fst(iter(abs("st", if_then_else(
                               lt(sndv("st"), mv("max")),
                               inr(pair(app(mv("f"), pair(fstv("st"), sndv("st"))),
                                        add(sndv("st"), int_lit(1)))),
                               inl(unit()))),
                 pair(mv("acc0"), mv("min")))),
        fold(mv("f"), mv("acc0"), range(mv("min"), mv("max"))),
        {SideCondition::not_stuck(mv("f")),
         SideCondition::not_free("st", mv("f")),
         SideCondition::not_free("st", mv("max"))}}}));

  // 8: an index fold that overwrites every position becomes map. The two
  // arrays must have the same length for the written array to be fully
  // replaced.
  rules.push_back(rule(
      8, "fold-to-map",
      {{"",
        fold(abs("ysw", write(fstv("ysw"), sndv("ysw"),
                              app(mv("f"), read(mv("xs"), sndv("ysw"))))),
             mv("ys"), range(int_lit(0), length(mv("xs")))),
        map_op(mv("f"), mv("xs")),
        {SideCondition::not_free("ysw", mv("f")),
         SideCondition::not_free("ysw", mv("xs")),
         SideCondition::not_stuck(mv("f")),
         SideCondition::equal_length(mv("xs"), mv("ys"))}}}));

  // 9: fold over an index range reading xs[i] becomes fold over the values.
  rules.push_back(rule(
      9, "fold-over-values",
      {{"",
        fold(abs("st", app(mv("f"), pair(fstv("st"), read(mv("xs"), sndv("st"))))),
             mv("init"), range(int_lit(0), length(mv("xs")))),
        fold(mv("f"), mv("init"), mv("xs")),
        {SideCondition::not_free("st", mv("xs")),
         SideCondition::not_free("st", mv("f")),
         SideCondition::not_stuck(mv("f"))}}}));

  // 10: map over an index range reading xs[i] becomes map over the values.
  rules.push_back(rule(
      10, "map-over-values",
      {{"",
        map_op(abs("i", app(mv("f"), read(mv("xs"), vr("i")))),
               range(int_lit(0), length(mv("xs")))),
        map_op(mv("f"), mv("xs")),
        {SideCondition::not_free("i", mv("xs")),
         SideCondition::not_free("i", mv("f")),
         SideCondition::not_stuck(mv("f"))}}}));

  // 11: commutes writing back (index, value) updates with mapping f over the
  // result.
  rules.push_back(rule(
      11, "commute-writeback-map",
      {{"",
        map_op(mv("f"),
               fold(abs("wb", write(fstv("wb"), fst(sndv("wb")), snd(sndv("wb")))),
                    mv("xs"), mv("ys"))),
        fold(abs("wb", write(fstv("wb"), fst(sndv("wb")), snd(sndv("wb")))),
             map_op(mv("f"), mv("xs")),
             map_op(abs("kv", pair(fstv("kv"), app(mv("f"), sndv("kv")))), mv("ys"))),
        {SideCondition::not_free("kv", mv("f"))}}}));

  // 12: commutes array reads with zip.
  rules.push_back(rule(
      12, "read-zip-commute",
      {{"a",
        fst(read(zip(mv("xs"), mv("ys")), mv("i"))),
        read(mv("xs"), mv("i")),
        {SideCondition::equal_length(mv("xs"), mv("ys")),
         SideCondition::not_stuck(mv("ys"))}},
       {"b",
        snd(read(zip(mv("xs"), mv("ys")), mv("i"))),
        read(mv("ys"), mv("i")),
        {SideCondition::equal_length(mv("xs"), mv("ys")),
         SideCondition::not_stuck(mv("xs"))}}}));

  // 13: commutes reads with map, positionally and by key.
  rules.push_back(rule(
      13, "read-map-commute",
      {{"a",
        read(map_op(mv("f"), mv("xs")), mv("i")),
        app(mv("f"), read(mv("xs"), mv("i"))),
        {}},
       {"b",
        read_at_key(map_op(abs("kv", pair(fstv("kv"), app(mv("f"), sndv("kv")))),
                           mv("xs")),
                    mv("k")),
        case_of(read_at_key(mv("xs"), mv("k")), abs("u", inl(unit())),
                abs("w", inr(app(mv("f"), vr("w"))))),
        {}}}));

  return rules;
}

}  // namespace

const std::vector<RewriteRule>& catalog() {
  static const std::vector<RewriteRule> rules = build_catalog();
  return rules;
}

const RewriteRule* find_rule(const std::string& ref, int* variant) {
  if (variant) *variant = 0;
  std::string base = ref;
  int vi = 0;
  if (!ref.empty() && (ref.back() == 'a' || ref.back() == 'b') &&
      ref.size() > 1 && std::isdigit(static_cast<unsigned char>(ref[ref.size() - 2]))) {
    vi = ref.back() == 'a' ? 0 : 1;
    base = ref.substr(0, ref.size() - 1);
  }
  for (const auto& r : catalog()) {
    if (r.id() == base || r.name == ref) {
      if (variant) *variant = vi;
      return &r;
    }
  }
  return nullptr;
}

std::string side_condition_to_string(const SideCondition& sc) {
  switch (sc.kind) {
    case SideCondition::Kind::EqualLength:
      return "equal-length(" + print_term(sc.a) + ", " + print_term(sc.b) + ")";
    case SideCondition::Kind::NotStuck:
      return "not-stuck(" + print_term(sc.a) + ")";
    case SideCondition::Kind::NotFree:
      return "not-free(" + sc.binder + ", " + print_term(sc.a) + ")";
  }
  return "?";
}

}  // namespace ffl
