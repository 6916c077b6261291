#include "topomodal/generators.hpp"

#include <map>
#include <vector>

#include "topomodal/translate.hpp"

namespace topomodal {

int Rng::below(int n) {
  return static_cast<int>(std::uniform_int_distribution<unsigned>(0, n - 1)(engine_));
}

bool Rng::coin(double p) { return std::bernoulli_distribution(p)(engine_); }

std::uint64_t Rng::raw() { return engine_(); }

Space random_space(Rng& rng, int n) {
  Relation r;
  r.n = n;
  r.rows.assign(n, 0);
  // vary density per call so both near-discrete and near-trivial spaces show up
  double p = 0.1 + 0.6 * rng.below(1000) / 999.0;
  for (int i = 0; i < n; ++i) {
    r.rows[i] |= PointSet{1} << i;
    for (int j = 0; j < n; ++j)
      if (i != j && rng.coin(p)) r.rows[i] |= PointSet{1} << j;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (contains(r.rows[i], k)) r.rows[i] |= r.rows[k];
  return from_preorder(r);
}

Model random_model_on(Rng& rng, const Space& s, int props, int nominals) {
  std::map<int, PointSet> pv, nv;
  for (int k = 0; k < props; ++k)
    pv[k] = static_cast<PointSet>(rng.raw()) & full_set(s.point_count());
  for (int k = 0; k < nominals; ++k) nv[k] = PointSet{1} << rng.below(s.point_count());
  return Model(s, pv, nv);
}

Model random_model(Rng& rng, int n, int props, int nominals) {
  return random_model_on(rng, random_space(rng, n), props, nominals);
}

// ---------------------------------------------------------------------------
// Modal sentences

namespace {

struct ModalGen {
  Rng& rng;
  Language lang;
  int props;
  int nominals;
  int next_var = 0;
  std::vector<int> scope;  // down-bound variables currently visible

  bool hybrid() const {
    return lang == Language::HAt || lang == Language::HE || lang == Language::HED;
  }
  bool has_global() const { return lang == Language::ME || lang == Language::HE ||
                                   lang == Language::HED; }

  ModalPtr leaf() {
    for (;;) {
      switch (rng.below(8)) {
        case 0: return mf::top();
        case 1: return mf::bot();
        case 2:
          if (hybrid() && nominals > 0) return mf::nominal(rng.below(nominals));
          break;
        case 3:
          if (lang == Language::HED && !scope.empty())
            return mf::var(scope[rng.below(static_cast<int>(scope.size()))]);
          break;
        default:
          if (props > 0) return mf::prop(rng.below(props));
          break;
      }
    }
  }

  ModalPtr gen(int size) {
    if (size <= 0) return leaf();
    for (;;) {
      switch (rng.below(12)) {
        case 0: return mf::negate(gen(size - 1));
        case 1: return mf::box(gen(size - 1));
        case 2: return mf::diamond(gen(size - 1));
        case 3: {
          int l = rng.below(size);
          return mf::conj(gen(l), gen(size - 1 - l));
        }
        case 4: {
          int l = rng.below(size);
          return mf::disj(gen(l), gen(size - 1 - l));
        }
        case 5: {
          int l = rng.below(size);
          return mf::implies(gen(l), gen(size - 1 - l));
        }
        case 6: {
          int l = rng.below(size);
          return mf::iff(gen(l), gen(size - 1 - l));
        }
        case 7:
          if (has_global())
            return rng.coin() ? mf::e(gen(size - 1)) : mf::a(gen(size - 1));
          if (lang == Language::MD) return mf::d(gen(size - 1));
          break;
        case 8:
          if (hybrid() && nominals > 0)
            return mf::at_nominal(rng.below(nominals), gen(size - 1));
          break;
        case 9:
          if (lang == Language::HED && !scope.empty())
            return mf::at_var(scope[rng.below(static_cast<int>(scope.size()))],
                              gen(size - 1));
          break;
        case 10:
          if (lang == Language::HED) {
            int v = next_var++;
            scope.push_back(v);
            ModalPtr body = gen(size - 1);
            scope.pop_back();
            return mf::down(v, body);
          }
          break;
        default:
          return leaf();
      }
    }
  }
};

}  // namespace

ModalPtr random_modal_formula(Rng& rng, Language lang, int size, int props,
                              int nominals) {
  ModalGen g{rng, lang, props, nominals, 0, {}};
  return g.gen(size);
}

// ---------------------------------------------------------------------------
// Two-sorted formulas

namespace {

struct FoGen {
  Rng& rng;
  int preds;
  int point_vars;
  int open_vars;

  int pt() { return rng.below(point_vars); }
  int op() { return rng.below(open_vars); }

  FoPtr atom() {
    for (;;) {
      switch (rng.below(6)) {
        case 0: return ff::top();
        case 1: return ff::bot();
        case 2: return ff::eq_pt(pt(), pt());
        case 3: return ff::eq_op(op(), op());
        case 4: return ff::in(pt(), op());
        default:
          if (preds > 0) return ff::pred(rng.below(preds), pt());
          break;
      }
    }
  }

  FoPtr gen(int size) {
    if (size <= 0) return atom();
    switch (rng.below(9)) {
      case 0: return ff::negate(gen(size - 1));
      case 1: {
        int l = rng.below(size);
        return ff::conj(gen(l), gen(size - 1 - l));
      }
      case 2: {
        int l = rng.below(size);
        return ff::disj(gen(l), gen(size - 1 - l));
      }
      case 3: {
        int l = rng.below(size);
        return ff::implies(gen(l), gen(size - 1 - l));
      }
      case 4: {
        int l = rng.below(size);
        return ff::iff(gen(l), gen(size - 1 - l));
      }
      case 5: return ff::exists_pt(pt(), gen(size - 1));
      case 6: return ff::forall_pt(pt(), gen(size - 1));
      case 7: return ff::exists_op(op(), gen(size - 1));
      default: return ff::forall_op(op(), gen(size - 1));
    }
  }
};

// Fragment-shaped generator.  Point terms come from the visible scope
// (designated x0, enclosing binders, constants); open variables appear only
// as pattern guards, each freshly named, so the body condition U-not-in-body
// holds by construction.
struct LiGen {
  Rng& rng;
  int props;
  int nominals;
  int next_pt = 1;   // x0 is the designated free variable
  int next_op = 0;
  std::vector<int> scope{0};

  int term() {
    int pool = static_cast<int>(scope.size()) + nominals;
    int i = rng.below(pool);
    if (i < static_cast<int>(scope.size())) return scope[i];
    return kNominalVarBase + (i - static_cast<int>(scope.size()));
  }

  FoPtr atom() {
    if (props > 0 && rng.coin(0.6)) return ff::pred(rng.below(props), term());
    return ff::eq_pt(term(), term());
  }

  FoPtr gen(int size) {
    if (size <= 0) return atom();
    switch (rng.below(10)) {
      case 0: return ff::negate(gen(size - 1));
      case 1: {
        int l = rng.below(size);
        return ff::conj(gen(l), gen(size - 1 - l));
      }
      case 2: {
        int l = rng.below(size);
        return ff::disj(gen(l), gen(size - 1 - l));
      }
      case 3: {
        int l = rng.below(size);
        return ff::implies(gen(l), gen(size - 1 - l));
      }
      case 4: {
        int l = rng.below(size);
        return ff::iff(gen(l), gen(size - 1 - l));
      }
      case 5:
      case 6: {
        int v = next_pt++;
        scope.push_back(v);
        FoPtr body = gen(size - 1);
        scope.pop_back();
        return rng.coin() ? ff::exists_pt(v, body) : ff::forall_pt(v, body);
      }
      default: {
        int t = term();
        int u = next_op++;
        int y = next_pt++;
        scope.push_back(y);
        FoPtr body = gen(size - 1);
        scope.pop_back();
        if (rng.coin())
          return ff::exists_op(
              u, ff::conj(ff::in(t, u),
                          ff::forall_pt(y, ff::implies(ff::in(y, u), body))));
        return ff::forall_op(
            u, ff::implies(ff::in(t, u),
                           ff::exists_pt(y, ff::conj(ff::in(y, u), body))));
      }
    }
  }
};

}  // namespace

FoPtr random_fo_formula(Rng& rng, int size, int preds, int point_vars,
                        int open_vars) {
  FoGen g{rng, preds, point_vars, open_vars};
  return g.gen(size);
}

FoPtr random_li_formula(Rng& rng, int size, int props, int nominals) {
  LiGen g{rng, props, nominals, 1, 0, {0}};
  return g.gen(size);
}

}  // namespace topomodal
