#include "topomodal/semantics.hpp"

#include <algorithm>

namespace topomodal {

Model::Model(Space space, std::map<int, PointSet> props,
             std::map<int, PointSet> nominals)
    : space_(std::move(space)), props_(std::move(props)), nominals_(std::move(nominals)) {
  for (const auto& [k, v] : props_) {
    if (k < 0)
      throw ValidationError("proposition index " + std::to_string(k) + " is negative");
    if (v & ~space_.points())
      throw ValidationError("valuation of p" + std::to_string(k) + " out of range");
  }
  for (const auto& [k, v] : nominals_) {
    if (k < 0)
      throw ValidationError("nominal index " + std::to_string(k) + " is negative");
    if (v & ~space_.points())
      throw ValidationError("valuation of i" + std::to_string(k) + " out of range");
    if (popcount(v) != 1)
      throw ValidationError("nominal i" + std::to_string(k) +
                            " must denote exactly one point, got " + set_to_string(v));
  }
}

PointSet Model::prop_value(int k) const {
  auto it = props_.find(k);
  if (it == props_.end())
    throw EvalError("proposition p" + std::to_string(k) + " is not valued");
  return it->second;
}

int Model::nominal_point(int k) const {
  auto it = nominals_.find(k);
  if (it == nominals_.end())
    throw EvalError("nominal i" + std::to_string(k) + " is not valued");
  return set_to_points(it->second)[0];
}

// ---------------------------------------------------------------------------
// Modal evaluation

namespace {

PointSet ts(const Model& m, const ModalPtr& f, std::map<int, int>& pts) {
  const PointSet full = m.space().points();
  switch (f->kind) {
    case MKind::Top: return full;
    case MKind::Bot: return 0;
    case MKind::Prop: return m.prop_value(f->index);
    case MKind::Nominal: return PointSet(1) << m.nominal_point(f->index);
    case MKind::Var: {
      auto it = pts.find(f->index);
      if (it == pts.end())
        throw EvalError("variable x" + std::to_string(f->index) + " is unassigned");
      return PointSet(1) << it->second;
    }
    case MKind::Not: return full & ~ts(m, f->lhs, pts);
    case MKind::And: return ts(m, f->lhs, pts) & ts(m, f->rhs, pts);
    case MKind::Or: return ts(m, f->lhs, pts) | ts(m, f->rhs, pts);
    case MKind::Implies:
      return (full & ~ts(m, f->lhs, pts)) | ts(m, f->rhs, pts);
    case MKind::Iff: {
      PointSet a = ts(m, f->lhs, pts), b = ts(m, f->rhs, pts);
      return full & ~(a ^ b);
    }
    case MKind::Box: return m.space().interior(ts(m, f->lhs, pts));
    case MKind::Diamond: return m.space().closure(ts(m, f->lhs, pts));
    case MKind::E: return ts(m, f->lhs, pts) != 0 ? full : 0;
    case MKind::A: return ts(m, f->lhs, pts) == full ? full : 0;
    case MKind::D: {
      // true at w iff the body holds somewhere else
      PointSet body = ts(m, f->lhs, pts);
      int size = popcount(body);
      if (size >= 2) return full;
      if (size == 1) return full & ~body;
      return 0;
    }
    case MKind::At: {
      int target;
      if (f->index_is_var) {
        auto it = pts.find(f->index);
        if (it == pts.end())
          throw EvalError("variable x" + std::to_string(f->index) + " is unassigned");
        target = it->second;
      } else {
        target = m.nominal_point(f->index);
      }
      return contains(ts(m, f->lhs, pts), target) ? full : 0;
    }
    case MKind::Down: {
      PointSet out = 0;
      for (int w = 0; w < m.space().point_count(); ++w) {
        auto prev = pts.find(f->index);
        std::optional<int> saved;
        if (prev != pts.end()) saved = prev->second;
        pts[f->index] = w;
        if (contains(ts(m, f->lhs, pts), w)) out |= PointSet(1) << w;
        if (saved) pts[f->index] = *saved;
        else pts.erase(f->index);
      }
      return out;
    }
  }
  return 0;
}

}  // namespace

PointSet truth_set(const Model& m, const ModalPtr& f, const Assignment& g) {
  std::map<int, int> pts = g.points;
  for (const auto& [v, w] : pts)
    if (w < 0 || w >= m.space().point_count())
      throw ValidationError("assignment binds x" + std::to_string(v) +
                            " to out-of-range point " + std::to_string(w));
  return ts(m, f, pts);
}

bool eval_modal(const Model& m, int point, const ModalPtr& f, const Assignment& g) {
  if (point < 0 || point >= m.space().point_count())
    throw ValidationError("evaluation point " + std::to_string(point) + " out of range");
  return contains(truth_set(m, f, g), point);
}

// ---------------------------------------------------------------------------
// First-order evaluation

namespace {

struct FoEval {
  const Model& m;
  const std::vector<PointSet>& scope;
  std::map<int, int> pts;
  std::map<int, PointSet> ops;

  int pt(int v) const {
    auto it = pts.find(v);
    if (it == pts.end())
      throw EvalError("point variable x" + std::to_string(v) + " is unassigned");
    return it->second;
  }

  PointSet op(int v) const {
    auto it = ops.find(v);
    if (it == ops.end())
      throw EvalError("open variable U" + std::to_string(v) + " is unassigned");
    return it->second;
  }

  bool eval(const FoPtr& f) {
    switch (f->kind) {
      case FKind::Top: return true;
      case FKind::Bot: return false;
      case FKind::EqPt: return pt(f->a) == pt(f->b);
      case FKind::EqOp: return op(f->a) == op(f->b);
      case FKind::Pred: return contains(m.prop_value(f->a), pt(f->b));
      case FKind::In: return contains(op(f->b), pt(f->a));
      case FKind::Not: return !eval(f->lhs);
      case FKind::And: return eval(f->lhs) && eval(f->rhs);
      case FKind::Or: return eval(f->lhs) || eval(f->rhs);
      case FKind::Implies: return !eval(f->lhs) || eval(f->rhs);
      case FKind::Iff: return eval(f->lhs) == eval(f->rhs);
      case FKind::ExistsPt:
      case FKind::ForallPt: {
        const bool existential = f->kind == FKind::ExistsPt;
        auto prev = pts.find(f->a);
        std::optional<int> saved;
        if (prev != pts.end()) saved = prev->second;
        bool result = !existential;
        for (int w = 0; w < m.space().point_count(); ++w) {
          pts[f->a] = w;
          bool v = eval(f->lhs);
          if (existential && v) { result = true; break; }
          if (!existential && !v) { result = false; break; }
        }
        if (saved) pts[f->a] = *saved;
        else pts.erase(f->a);
        return result;
      }
      case FKind::ExistsOp:
      case FKind::ForallOp: {
        const bool existential = f->kind == FKind::ExistsOp;
        auto prev = ops.find(f->a);
        std::optional<PointSet> saved;
        if (prev != ops.end()) saved = prev->second;
        bool result = !existential;
        for (PointSet o : scope) {
          ops[f->a] = o;
          bool v = eval(f->lhs);
          if (existential && v) { result = true; break; }
          if (!existential && !v) { result = false; break; }
        }
        if (saved) ops[f->a] = *saved;
        else ops.erase(f->a);
        return result;
      }
    }
    return false;
  }
};

}  // namespace

bool eval_fo(const Model& m, const FoPtr& f, const Assignment& g) {
  const std::vector<PointSet>* scope = &m.space().opens();
  if (g.basoid) {
    if (g.basoid->n != m.space().point_count())
      throw ValidationError("basoid scope is for a different point count");
    if (!is_base(g.basoid->n, g.basoid->sets))
      throw ValidationError("basoid scope is not a base");
    scope = &g.basoid->sets;
  }
  for (const auto& [v, w] : g.points)
    if (w < 0 || w >= m.space().point_count())
      throw ValidationError("assignment binds x" + std::to_string(v) +
                            " to out-of-range point " + std::to_string(w));
  for (const auto& [v, o] : g.opens)
    if (std::find(scope->begin(), scope->end(), o) == scope->end())
      throw ValidationError("assignment binds U" + std::to_string(v) + " to " +
                            set_to_string(o) + ", which is outside the active scope");
  FoEval ev{m, *scope, g.points, g.opens};
  return ev.eval(f);
}

// ---------------------------------------------------------------------------
// Sweeps

namespace {

// Odometer over one mask per letter; earlier letters are most significant.
// Returns false when the sweep wraps around.
bool advance_masks(std::vector<PointSet>& masks, PointSet limit) {
  for (int i = static_cast<int>(masks.size()); i-- > 0;) {
    if (masks[i] < limit) {
      ++masks[i];
      std::fill(masks.begin() + i + 1, masks.end(), 0);
      return true;
    }
  }
  return false;
}

bool advance_points(std::vector<int>& picks, int n) {
  for (int i = static_cast<int>(picks.size()); i-- > 0;) {
    if (picks[i] + 1 < n) {
      ++picks[i];
      std::fill(picks.begin() + i + 1, picks.end(), 0);
      return true;
    }
  }
  return false;
}

bool advance_indices(std::vector<std::size_t>& picks, std::size_t limit) {
  for (std::size_t i = picks.size(); i-- > 0;) {
    if (picks[i] + 1 < limit) {
      ++picks[i];
      std::fill(picks.begin() + i + 1, picks.end(), 0);
      return true;
    }
  }
  return false;
}

std::map<int, PointSet> zip_valuation(const std::set<int>& keys,
                                      const std::vector<PointSet>& masks) {
  std::map<int, PointSet> out;
  int i = 0;
  for (int k : keys) out[k] = masks[i++];
  return out;
}

}  // namespace

std::optional<Counterexample> validity_counterexample(const Space& s,
                                                      const ModalPtr& f,
                                                      int budget) {
  ModalSymbols sym = modal_symbols(f);
  if (!sym.free_vars.empty())
    throw ValidationError("validity is defined for sentences; x" +
                          std::to_string(*sym.free_vars.begin()) + " is free");
  const int n = s.point_count();
  const int letters = static_cast<int>(sym.props.size());
  if (n * letters > budget)
    throw GuardError("validity sweep budget exceeded: " + std::to_string(n) + " points * " +
                     std::to_string(letters) + " letters > " + std::to_string(budget));
  std::vector<PointSet> prop_masks(sym.props.size(), 0);
  std::vector<int> nom_picks(sym.nominals.size(), 0);
  do {
    std::fill(nom_picks.begin(), nom_picks.end(), 0);
    do {
      std::map<int, PointSet> noms;
      int i = 0;
      for (int k : sym.nominals) noms[k] = PointSet(1) << nom_picks[i++];
      Model m(s, zip_valuation(sym.props, prop_masks), noms);
      for (int w = 0; w < n; ++w) {
        if (!eval_modal(m, w, f)) {
          Counterexample ce;
          ce.props = m.props();
          ce.nominals = m.nominals();
          ce.point = w;
          return ce;
        }
      }
    } while (advance_points(nom_picks, n));
  } while (advance_masks(prop_masks, s.points()));
  return std::nullopt;
}

bool valid_on_space(const Space& s, const ModalPtr& f, int budget) {
  return !validity_counterexample(s, f, budget).has_value();
}

std::optional<SatWitness> satisfiable_on_size(const ModalPtr& f, int n, int budget) {
  ModalSymbols sym = modal_symbols(f);
  if (!sym.free_vars.empty())
    throw ValidationError("satisfiability sweeps need a sentence; x" +
                          std::to_string(*sym.free_vars.begin()) + " is free");
  const int letters = static_cast<int>(sym.props.size());
  if (n * letters > budget)
    throw GuardError("satisfiability sweep budget exceeded: " + std::to_string(n) +
                     " points * " + std::to_string(letters) + " letters > " +
                     std::to_string(budget));
  SpaceEnumerator spaces(n);
  while (auto s = spaces.next()) {
    std::vector<PointSet> prop_masks(sym.props.size(), 0);
    std::vector<int> nom_picks(sym.nominals.size(), 0);
    do {
      std::fill(nom_picks.begin(), nom_picks.end(), 0);
      do {
        std::map<int, PointSet> noms;
        int i = 0;
        for (int k : sym.nominals) noms[k] = PointSet(1) << nom_picks[i++];
        Model m(*s, zip_valuation(sym.props, prop_masks), noms);
        for (int w = 0; w < n; ++w) {
          if (eval_modal(m, w, f))
            return SatWitness{*s, m.props(), m.nominals(), w, {}, {}};
        }
      } while (advance_points(nom_picks, n));
    } while (advance_masks(prop_masks, s->points()));
  }
  return std::nullopt;
}

std::optional<SatWitness> satisfiable_on_size(const FoPtr& f, int n, int budget) {
  FoSymbols sym = fo_symbols(f);
  const int letters = static_cast<int>(sym.preds.size());
  if (n * letters > budget)
    throw GuardError("satisfiability sweep budget exceeded: " + std::to_string(n) +
                     " points * " + std::to_string(letters) + " letters > " +
                     std::to_string(budget));
  const std::vector<int> free_pts(sym.free_point_vars.begin(), sym.free_point_vars.end());
  const std::vector<int> free_ops(sym.free_open_vars.begin(), sym.free_open_vars.end());
  SpaceEnumerator spaces(n);
  while (auto s = spaces.next()) {
    std::vector<PointSet> prop_masks(sym.preds.size(), 0);
    do {
      Model m(*s, zip_valuation(sym.preds, prop_masks));
      std::vector<int> pt_picks(free_pts.size(), 0);
      do {
        std::vector<std::size_t> op_picks(free_ops.size(), 0);
        const auto& opens = s->opens();
        do {
          Assignment g;
          for (std::size_t i = 0; i < free_pts.size(); ++i) g.points[free_pts[i]] = pt_picks[i];
          for (std::size_t i = 0; i < free_ops.size(); ++i) g.opens[free_ops[i]] = opens[op_picks[i]];
          if (eval_fo(m, f, g))
            return SatWitness{*s, m.props(), {}, std::nullopt, g.points, g.opens};
        } while (advance_indices(op_picks, opens.size()));
      } while (advance_points(pt_picks, n));
    } while (advance_masks(prop_masks, s->points()));
  }
  return std::nullopt;
}

}  // namespace topomodal
