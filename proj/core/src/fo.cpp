#include "topomodal/fo.hpp"

#include <cctype>

namespace topomodal {

namespace {

FoPtr make(FKind k, int a, int b, FoPtr lhs, FoPtr rhs) {
  auto f = std::make_shared<FoFormula>();
  f->kind = k;
  f->a = a;
  f->b = b;
  f->lhs = std::move(lhs);
  f->rhs = std::move(rhs);
  return f;
}

}  // namespace

namespace ff {
FoPtr top() { return make(FKind::Top, -1, -1, nullptr, nullptr); }
FoPtr bot() { return make(FKind::Bot, -1, -1, nullptr, nullptr); }
FoPtr eq_pt(int x, int y) { return make(FKind::EqPt, x, y, nullptr, nullptr); }
FoPtr eq_op(int u, int v) { return make(FKind::EqOp, u, v, nullptr, nullptr); }
FoPtr pred(int p, int x) { return make(FKind::Pred, p, x, nullptr, nullptr); }
FoPtr in(int x, int u) { return make(FKind::In, x, u, nullptr, nullptr); }
FoPtr negate(const FoPtr& f) { return make(FKind::Not, -1, -1, f, nullptr); }
FoPtr conj(const FoPtr& f, const FoPtr& g) { return make(FKind::And, -1, -1, f, g); }
FoPtr disj(const FoPtr& f, const FoPtr& g) { return make(FKind::Or, -1, -1, f, g); }
FoPtr implies(const FoPtr& f, const FoPtr& g) { return make(FKind::Implies, -1, -1, f, g); }
FoPtr iff(const FoPtr& f, const FoPtr& g) { return make(FKind::Iff, -1, -1, f, g); }
FoPtr exists_pt(int x, const FoPtr& f) { return make(FKind::ExistsPt, x, -1, f, nullptr); }
FoPtr forall_pt(int x, const FoPtr& f) { return make(FKind::ForallPt, x, -1, f, nullptr); }
FoPtr exists_op(int u, const FoPtr& f) { return make(FKind::ExistsOp, u, -1, f, nullptr); }
FoPtr forall_op(int u, const FoPtr& f) { return make(FKind::ForallOp, u, -1, f, nullptr); }
}  // namespace ff

bool structurally_equal(const FoPtr& a, const FoPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->a != b->a || a->b != b->b) return false;
  return structurally_equal(a->lhs, b->lhs) && structurally_equal(a->rhs, b->rhs);
}

namespace {

void collect(const FoPtr& f, FoSymbols& out, std::set<int>& bound_pt,
             std::set<int>& bound_op) {
  if (!f) return;
  switch (f->kind) {
    case FKind::EqPt:
      out.point_vars.insert(f->a);
      out.point_vars.insert(f->b);
      if (!bound_pt.count(f->a)) out.free_point_vars.insert(f->a);
      if (!bound_pt.count(f->b)) out.free_point_vars.insert(f->b);
      return;
    case FKind::EqOp:
      out.open_vars.insert(f->a);
      out.open_vars.insert(f->b);
      if (!bound_op.count(f->a)) out.free_open_vars.insert(f->a);
      if (!bound_op.count(f->b)) out.free_open_vars.insert(f->b);
      return;
    case FKind::Pred:
      out.preds.insert(f->a);
      out.point_vars.insert(f->b);
      if (!bound_pt.count(f->b)) out.free_point_vars.insert(f->b);
      return;
    case FKind::In:
      out.point_vars.insert(f->a);
      out.open_vars.insert(f->b);
      if (!bound_pt.count(f->a)) out.free_point_vars.insert(f->a);
      if (!bound_op.count(f->b)) out.free_open_vars.insert(f->b);
      return;
    case FKind::ExistsPt:
    case FKind::ForallPt: {
      out.point_vars.insert(f->a);
      bool was = bound_pt.count(f->a) > 0;
      bound_pt.insert(f->a);
      collect(f->lhs, out, bound_pt, bound_op);
      if (!was) bound_pt.erase(f->a);
      return;
    }
    case FKind::ExistsOp:
    case FKind::ForallOp: {
      out.open_vars.insert(f->a);
      bool was = bound_op.count(f->a) > 0;
      bound_op.insert(f->a);
      collect(f->lhs, out, bound_pt, bound_op);
      if (!was) bound_op.erase(f->a);
      return;
    }
    default:
      collect(f->lhs, out, bound_pt, bound_op);
      collect(f->rhs, out, bound_pt, bound_op);
  }
}

}  // namespace

FoSymbols fo_symbols(const FoPtr& f) {
  FoSymbols out;
  std::set<int> bp, bo;
  collect(f, out, bp, bo);
  return out;
}

bool is_fo_sentence(const FoPtr& f) {
  FoSymbols s = fo_symbols(f);
  return s.free_point_vars.empty() && s.free_open_vars.empty();
}

// ---------------------------------------------------------------------------
// Polarity

namespace {

void polarity(const FoPtr& f, int u, bool positive, bool& pos, bool& neg) {
  if (!f) return;
  switch (f->kind) {
    case FKind::EqOp:
      if (f->a == u || f->b == u) (positive ? pos : neg) = true;
      return;
    case FKind::In:
      if (f->b == u) (positive ? pos : neg) = true;
      return;
    case FKind::Not:
      polarity(f->lhs, u, !positive, pos, neg);
      return;
    case FKind::Implies:
      polarity(f->lhs, u, !positive, pos, neg);
      polarity(f->rhs, u, positive, pos, neg);
      return;
    case FKind::Iff:
      // both directions of an implication pair: every occurrence counts
      // with both signs
      if (occurs_open(f->lhs, u) || occurs_open(f->rhs, u)) pos = neg = true;
      return;
    case FKind::ExistsOp:
    case FKind::ForallOp:
      if (f->a == u) return;  // rebinding shadows
      polarity(f->lhs, u, positive, pos, neg);
      return;
    default:
      polarity(f->lhs, u, positive, pos, neg);
      polarity(f->rhs, u, positive, pos, neg);
  }
}

}  // namespace

bool occurs_open(const FoPtr& f, int u) {
  if (!f) return false;
  switch (f->kind) {
    case FKind::EqOp: return f->a == u || f->b == u;
    case FKind::In: return f->b == u;
    case FKind::ExistsOp:
    case FKind::ForallOp:
      if (f->a == u) return false;
      return occurs_open(f->lhs, u);
    default:
      return occurs_open(f->lhs, u) || occurs_open(f->rhs, u);
  }
}

bool positive_in(const FoPtr& f, int u) {
  bool pos = false, neg = false;
  polarity(f, u, true, pos, neg);
  return !neg;
}

bool negative_in(const FoPtr& f, int u) {
  bool pos = false, neg = false;
  polarity(f, u, true, pos, neg);
  return !pos;
}

// ---------------------------------------------------------------------------
// Guarded patterns and fragments

namespace {

// Implies(a, b) or its unfolding Not(And(a, Not(b))).
bool split_implication(const FoPtr& f, FoPtr& ante, FoPtr& cons) {
  if (f->kind == FKind::Implies) {
    ante = f->lhs;
    cons = f->rhs;
    return true;
  }
  if (f->kind == FKind::Not && f->lhs->kind == FKind::And &&
      f->lhs->rhs->kind == FKind::Not) {
    ante = f->lhs->lhs;
    cons = f->lhs->rhs->lhs;
    return true;
  }
  return false;
}

bool is_guard(const FoPtr& f, int u, int& subject) {
  if (f->kind == FKind::In && f->b == u) {
    subject = f->a;
    return true;
  }
  return false;
}

}  // namespace

std::optional<OpenQuantPattern> match_open_pattern(const FoPtr& f) {
  if (!f) return std::nullopt;
  if (f->kind == FKind::ExistsOp) {
    const int u = f->a;
    const FoPtr& body = f->lhs;
    int subject = -1;
    if (body->kind != FKind::And || !is_guard(body->lhs, u, subject))
      return std::nullopt;
    const FoPtr& inner = body->rhs;
    if (inner->kind != FKind::ForallPt) return std::nullopt;
    FoPtr ante, cons;
    int y_subject = -1;
    if (!split_implication(inner->lhs, ante, cons) || !is_guard(ante, u, y_subject) ||
        y_subject != inner->a)
      return std::nullopt;
    OpenQuantPattern p;
    p.is_interior = true;
    p.open_var = u;
    p.subject = subject;
    p.bound_pt = inner->a;
    p.body = cons;
    return p;
  }
  if (f->kind == FKind::ForallOp) {
    const int u = f->a;
    FoPtr ante, cons;
    int subject = -1;
    if (!split_implication(f->lhs, ante, cons) || !is_guard(ante, u, subject))
      return std::nullopt;
    if (cons->kind != FKind::ExistsPt) return std::nullopt;
    const FoPtr& inner = cons->lhs;
    int y_subject = -1;
    if (inner->kind != FKind::And || !is_guard(inner->lhs, u, y_subject) ||
        y_subject != cons->a)
      return std::nullopt;
    OpenQuantPattern p;
    p.is_interior = false;
    p.open_var = u;
    p.subject = subject;
    p.bound_pt = cons->a;
    p.body = inner->rhs;
    return p;
  }
  return std::nullopt;
}

bool lt_check(const FoPtr& f) {
  if (!f) return true;
  switch (f->kind) {
    case FKind::ExistsOp: {
      const int u = f->a;
      const FoPtr& body = f->lhs;
      int subject = -1;
      if (body->kind != FKind::And || !is_guard(body->lhs, u, subject)) return false;
      return negative_in(body->rhs, u) && lt_check(body->rhs);
    }
    case FKind::ForallOp: {
      const int u = f->a;
      FoPtr ante, cons;
      int subject = -1;
      if (!split_implication(f->lhs, ante, cons) || !is_guard(ante, u, subject))
        return false;
      return positive_in(cons, u) && lt_check(cons);
    }
    default:
      return lt_check(f->lhs) && lt_check(f->rhs);
  }
}

namespace {

bool li_rec(const FoPtr& f) {
  if (!f) return true;
  if (f->kind == FKind::ExistsOp || f->kind == FKind::ForallOp) {
    auto p = match_open_pattern(f);
    if (!p) return false;
    if (occurs_open(p->body, p->open_var)) return false;
    return li_rec(p->body);
  }
  return li_rec(f->lhs) && li_rec(f->rhs);
}

}  // namespace

bool li_check(const FoPtr& f) {
  return fo_symbols(f).free_open_vars.empty() && li_rec(f);
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct FoParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

  bool at_delim(std::size_t p) const {
    return p >= text.size() || text[p] == '(' || text[p] == ')' ||
           std::isspace(static_cast<unsigned char>(text[p]));
  }

  std::string token() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    if (text[pos] == '(' || text[pos] == ')') return std::string(1, text[pos++]);
    std::size_t start = pos;
    while (!at_delim(pos)) ++pos;
    return std::string(text.substr(start, pos - start));
  }

  std::string peek() {
    std::size_t save = pos;
    std::string t = token();
    pos = save;
    return t;
  }

  int indexed(const std::string& t, char head) {
    if (t.size() < 2 || t[0] != head) fail(std::string("expected ") + head + "<k>, got '" + t + "'");
    for (std::size_t i = 1; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i])))
        fail(std::string("expected ") + head + "<k>, got '" + t + "'");
    return std::stoi(t.substr(1));
  }

  int point_var() { return indexed(token(), 'x'); }
  int open_var() { return indexed(token(), 'U'); }
  int predicate() { return indexed(token(), 'p'); }

  void expect_close() {
    if (token() != ")") fail("expected ')'");
  }

  FoPtr parse() {
    std::string t = token();
    if (t == "top") return ff::top();
    if (t == "bot") return ff::bot();
    if (t != "(") fail("expected '(' or top/bot, got '" + t + "'");
    std::string op = token();
    FoPtr out;
    if (op == "=") {
      int x = point_var(), y = point_var();
      out = ff::eq_pt(x, y);
    } else if (op == "=o") {
      int u = open_var(), v = open_var();
      out = ff::eq_op(u, v);
    } else if (op == "P") {
      int p = predicate(), x = point_var();
      out = ff::pred(p, x);
    } else if (op == "in") {
      int x = point_var(), u = open_var();
      out = ff::in(x, u);
    } else if (op == "not") {
      out = ff::negate(parse());
    } else if (op == "and" || op == "or" || op == "implies" || op == "iff") {
      FoPtr a = parse(), b = parse();
      if (op == "and") out = ff::conj(a, b);
      else if (op == "or") out = ff::disj(a, b);
      else if (op == "implies") out = ff::implies(a, b);
      else out = ff::iff(a, b);
    } else if (op == "ex-pt" || op == "all-pt") {
      int x = point_var();
      FoPtr body = parse();
      out = (op == "ex-pt") ? ff::exists_pt(x, body) : ff::forall_pt(x, body);
    } else if (op == "ex-op" || op == "all-op") {
      int u = open_var();
      FoPtr body = parse();
      out = (op == "ex-op") ? ff::exists_op(u, body) : ff::forall_op(u, body);
    } else {
      fail("unknown operator '" + op + "'");
    }
    expect_close();
    return out;
  }
};

}  // namespace

FoPtr parse_fo(std::string_view text) {
  FoParser p{text};
  FoPtr f = p.parse();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return f;
}

// ---------------------------------------------------------------------------
// Printer

namespace {

void print_into(const FoPtr& f, std::string& out) {
  switch (f->kind) {
    case FKind::Top: out += "top"; return;
    case FKind::Bot: out += "bot"; return;
    case FKind::EqPt:
      out += "(= x" + std::to_string(f->a) + " x" + std::to_string(f->b) + ")";
      return;
    case FKind::EqOp:
      out += "(=o U" + std::to_string(f->a) + " U" + std::to_string(f->b) + ")";
      return;
    case FKind::Pred:
      out += "(P p" + std::to_string(f->a) + " x" + std::to_string(f->b) + ")";
      return;
    case FKind::In:
      out += "(in x" + std::to_string(f->a) + " U" + std::to_string(f->b) + ")";
      return;
    case FKind::Not:
      out += "(not ";
      print_into(f->lhs, out);
      out += ")";
      return;
    case FKind::And:
    case FKind::Or:
    case FKind::Implies:
    case FKind::Iff: {
      const char* op = f->kind == FKind::And      ? "and"
                       : f->kind == FKind::Or     ? "or"
                       : f->kind == FKind::Implies ? "implies"
                                                   : "iff";
      out += "(";
      out += op;
      out += " ";
      print_into(f->lhs, out);
      out += " ";
      print_into(f->rhs, out);
      out += ")";
      return;
    }
    case FKind::ExistsPt:
    case FKind::ForallPt:
      out += (f->kind == FKind::ExistsPt) ? "(ex-pt x" : "(all-pt x";
      out += std::to_string(f->a) + " ";
      print_into(f->lhs, out);
      out += ")";
      return;
    case FKind::ExistsOp:
    case FKind::ForallOp:
      out += (f->kind == FKind::ExistsOp) ? "(ex-op U" : "(all-op U";
      out += std::to_string(f->a) + " ";
      print_into(f->lhs, out);
      out += ")";
      return;
  }
}

}  // namespace

std::string print_fo(const FoPtr& f) {
  std::string out;
  print_into(f, out);
  return out;
}

}  // namespace topomodal
