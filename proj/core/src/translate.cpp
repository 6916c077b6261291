#include "topomodal/translate.hpp"

#include <algorithm>

namespace topomodal {

std::optional<int> nominal_of_var(int var) {
  if (var >= kNominalVarBase) return var - kNominalVarBase;
  return std::nullopt;
}

Assignment nominal_assignment(const Model& m) {
  Assignment g;
  for (const auto& [k, mask] : m.nominals())
    g.points[nominal_constant_var(k)] = set_to_points(mask)[0];
  return g;
}

namespace {

struct Translator {
  bool fresh;
  int pair_a;    // the two designated evaluation variables
  int pair_b;
  int next_pt;   // fresh mode counters
  int next_op;

  int other(int cur) {
    if (fresh) return next_pt++;
    return cur == pair_a ? pair_b : pair_a;
  }

  int open_var() { return fresh ? next_op++ : 0; }

  FoPtr term(int cur, const ModalPtr& f) {
    // nominal or variable as an equality atom at the evaluation point
    if (f->kind == MKind::Nominal) return ff::eq_pt(cur, nominal_constant_var(f->index));
    return ff::eq_pt(cur, f->index);
  }

  FoPtr go(const ModalPtr& f, int cur) {
    switch (f->kind) {
      case MKind::Top: return ff::top();
      case MKind::Bot: return ff::bot();
      case MKind::Prop: return ff::pred(f->index, cur);
      case MKind::Nominal:
      case MKind::Var: return term(cur, f);
      case MKind::Not: return ff::negate(go(f->lhs, cur));
      case MKind::And: return ff::conj(go(f->lhs, cur), go(f->rhs, cur));
      case MKind::Or: return ff::disj(go(f->lhs, cur), go(f->rhs, cur));
      case MKind::Implies: return ff::implies(go(f->lhs, cur), go(f->rhs, cur));
      case MKind::Iff: return ff::iff(go(f->lhs, cur), go(f->rhs, cur));
      case MKind::Box: {
        int u = open_var();
        int y = other(cur);
        return ff::exists_op(
            u, ff::conj(ff::in(cur, u),
                        ff::forall_pt(y, ff::implies(ff::in(y, u), go(f->lhs, y)))));
      }
      case MKind::Diamond: {
        int u = open_var();
        int y = other(cur);
        return ff::forall_op(
            u, ff::implies(ff::in(cur, u),
                           ff::exists_pt(y, ff::conj(ff::in(y, u), go(f->lhs, y)))));
      }
      case MKind::E: return ff::exists_pt(cur, go(f->lhs, cur));
      case MKind::A: return ff::forall_pt(cur, go(f->lhs, cur));
      case MKind::At: {
        int target = f->index_is_var ? f->index : nominal_constant_var(f->index);
        return ff::exists_pt(cur, ff::conj(ff::eq_pt(cur, target), go(f->lhs, cur)));
      }
      case MKind::Down:
        return ff::exists_pt(f->index, ff::conj(ff::eq_pt(f->index, cur), go(f->lhs, cur)));
      case MKind::D:
        throw ValidationError("the difference modality is outside the translated languages");
    }
    throw ValidationError("unreachable modal constructor");
  }
};

Translator make_translator(const ModalPtr& f, int x, bool fresh_vars) {
  ModalSymbols sym = modal_symbols(f);
  if (x < 0 || x >= kNominalVarBase)
    throw ValidationError("evaluation variable x" + std::to_string(x) +
                          " collides with the reserved constant range");
  if (sym.vars.count(x))
    throw ValidationError("evaluation variable x" + std::to_string(x) +
                          " occurs in the formula; pick another");
  int partner = 0;
  while (partner == x || sym.vars.count(partner)) ++partner;
  int hi = x;
  hi = std::max(hi, partner);
  for (int v : sym.vars) hi = std::max(hi, v);
  Translator t;
  t.fresh = fresh_vars;
  t.pair_a = x;
  t.pair_b = partner;
  t.next_pt = hi + 1;
  t.next_op = 0;
  return t;
}

}  // namespace

FoPtr st(const ModalPtr& f, int x, bool fresh_vars) {
  if (language_of(f) != Language::ML)
    throw ValidationError("standard translation covers the basic language; use st_ext");
  Translator t = make_translator(f, x, fresh_vars);
  return t.go(f, x);
}

FoPtr st_ext(const ModalPtr& f, int x, bool fresh_vars) {
  Language l = language_of(f);
  if (l == Language::MD)
    throw ValidationError("the difference modality is outside the translated languages");
  ModalSymbols sym = modal_symbols(f);
  if (!sym.free_vars.empty())
    throw ValidationError("extended translation needs a sentence; x" +
                          std::to_string(*sym.free_vars.begin()) + " is free");
  Translator t = make_translator(f, x, fresh_vars);
  return t.go(f, x);
}

// ---------------------------------------------------------------------------
// Hybrid translation of the interior/closure fragment

namespace {

ModalPtr modal_term_atom(int var) {
  if (auto k = nominal_of_var(var)) return mf::nominal(*k);
  return mf::var(var);
}

ModalPtr at_term(int var, const ModalPtr& body) {
  if (auto k = nominal_of_var(var)) return mf::at_nominal(*k, body);
  return mf::at_var(var, body);
}

int binder_var(int var) {
  if (nominal_of_var(var))
    throw ValidationError("cannot rebind reserved constant x" + std::to_string(var));
  return var;
}

ModalPtr ht_rec(const FoPtr& f) {
  if (auto p = match_open_pattern(f)) {
    ModalPtr body = mf::down(binder_var(p->bound_pt), ht_rec(p->body));
    return at_term(p->subject, p->is_interior ? mf::box(body) : mf::diamond(body));
  }
  switch (f->kind) {
    case FKind::Top: return mf::top();
    case FKind::Bot: return mf::bot();
    case FKind::EqPt: return at_term(f->a, modal_term_atom(f->b));
    case FKind::Pred: return at_term(f->b, mf::prop(f->a));
    case FKind::Not: return mf::negate(ht_rec(f->lhs));
    case FKind::And: return mf::conj(ht_rec(f->lhs), ht_rec(f->rhs));
    case FKind::Or: return mf::disj(ht_rec(f->lhs), ht_rec(f->rhs));
    case FKind::Implies: return mf::implies(ht_rec(f->lhs), ht_rec(f->rhs));
    case FKind::Iff: return mf::iff(ht_rec(f->lhs), ht_rec(f->rhs));
    case FKind::ExistsPt:
      return mf::e(mf::down(binder_var(f->a), ht_rec(f->lhs)));
    case FKind::ForallPt:
      return mf::negate(mf::e(mf::down(binder_var(f->a), mf::negate(ht_rec(f->lhs)))));
    default:
      throw ValidationError("open-sort atom outside the guarded patterns");
  }
}

}  // namespace

ModalPtr ht(const FoPtr& f, int x) {
  if (!li_check(f))
    throw ValidationError("formula is outside the interior/closure fragment");
  if (nominal_of_var(x))
    throw ValidationError("designated variable x" + std::to_string(x) +
                          " is in the reserved constant range");
  for (int v : fo_symbols(f).free_point_vars)
    if (v != x && !nominal_of_var(v))
      throw ValidationError("free variable x" + std::to_string(v) +
                            " is neither the designated variable nor a constant");
  return mf::down(x, ht_rec(f));
}

}  // namespace topomodal
