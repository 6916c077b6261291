#include "topomodal/bisim.hpp"

#include <map>
#include <set>

#include "topomodal/errors.hpp"

namespace topomodal {

PairRelation PairRelation::empty(int n1, int n2) {
  return PairRelation{n1, n2, std::vector<PointSet>(n1, 0)};
}

PairRelation PairRelation::total(int n1, int n2) {
  return PairRelation{n1, n2, std::vector<PointSet>(n1, full_set(n2))};
}

PairRelation PairRelation::identity(int n) {
  PairRelation z = empty(n, n);
  for (int x = 0; x < n; ++x) z.add(x, x);
  return z;
}

bool PairRelation::is_empty() const {
  for (PointSet r : rows)
    if (r) return false;
  return true;
}

int PairRelation::pair_count() const {
  int c = 0;
  for (PointSet r : rows) c += popcount(r);
  return c;
}

std::vector<std::pair<int, int>> PairRelation::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n1; ++x)
    for (int y : set_to_points(rows[x])) out.emplace_back(x, y);
  return out;
}

namespace {

void check_dims(const Model& a, const Model& b, const PairRelation& z) {
  if (z.n1 != a.space().point_count() || z.n2 != b.space().point_count() ||
      static_cast<int>(z.rows.size()) != z.n1)
    throw ValidationError("relation shape does not match the two models");
  for (PointSet r : z.rows)
    if (r & ~full_set(z.n2))
      throw ValidationError("relation row mentions an out-of-range point");
}

// Pairwise agreement on every valued proposition letter; a letter valued in
// only one model reads as empty in the other.
struct AtomTable {
  std::vector<std::pair<PointSet, PointSet>> letters;

  AtomTable(const Model& a, const Model& b, bool with_nominals) {
    std::set<int> keys;
    for (const auto& [k, v] : a.props()) keys.insert(k);
    for (const auto& [k, v] : b.props()) keys.insert(k);
    for (int k : keys) {
      auto ita = a.props().find(k);
      auto itb = b.props().find(k);
      letters.emplace_back(ita == a.props().end() ? 0 : ita->second,
                           itb == b.props().end() ? 0 : itb->second);
    }
    if (with_nominals) {
      std::set<int> nkeys;
      for (const auto& [k, v] : a.nominals()) nkeys.insert(k);
      for (const auto& [k, v] : b.nominals()) nkeys.insert(k);
      for (int k : nkeys) {
        auto ita = a.nominals().find(k);
        auto itb = b.nominals().find(k);
        letters.emplace_back(ita == a.nominals().end() ? 0 : ita->second,
                             itb == b.nominals().end() ? 0 : itb->second);
      }
    }
  }

  bool ok(int x, int y) const {
    for (const auto& [va, vb] : letters)
      if (contains(va, x) != contains(vb, y)) return false;
    return true;
  }
};

PointSet image(const PairRelation& z, PointSet o) {
  PointSet out = 0;
  for (int x : set_to_points(o)) out |= z.rows[x];
  return out;
}

PointSet preimage(const PairRelation& z, PointSet o) {
  PointSet out = 0;
  for (int x = 0; x < z.n1; ++x)
    if (z.rows[x] & o) out |= PointSet{1} << x;
  return out;
}

}  // namespace

bool is_topo_bisimulation(const Model& a, const Model& b, const PairRelation& z) {
  check_dims(a, b, z);
  if (z.is_empty()) return false;
  AtomTable atoms(a, b, false);
  for (auto [x, y] : z.pairs())
    if (!atoms.ok(x, y)) return false;
  for (PointSet o : a.space().opens())
    if (!b.space().is_open(image(z, o))) return false;
  for (PointSet o : b.space().opens())
    if (!a.space().is_open(preimage(z, o))) return false;
  return true;
}

bool is_topo_bisimulation_pointwise(const Model& a, const Model& b,
                                    const PairRelation& z) {
  check_dims(a, b, z);
  if (z.is_empty()) return false;
  AtomTable atoms(a, b, false);
  for (auto [x, y] : z.pairs()) {
    if (!atoms.ok(x, y)) return false;
    for (PointSet o : a.space().opens()) {
      if (!contains(o, x)) continue;
      bool answered = false;
      for (PointSet o2 : b.space().opens()) {
        if (!contains(o2, y)) continue;
        // every point of o2 must be covered from o
        bool covered = true;
        for (int y2 : set_to_points(o2))
          if (!(preimage(z, PointSet{1} << y2) & o)) { covered = false; break; }
        if (covered) { answered = true; break; }
      }
      if (!answered) return false;
    }
    for (PointSet o2 : b.space().opens()) {
      if (!contains(o2, y)) continue;
      bool answered = false;
      for (PointSet o : a.space().opens()) {
        if (!contains(o, x)) continue;
        bool covered = true;
        for (int x2 : set_to_points(o))
          if (!(z.rows[x2] & o2)) { covered = false; break; }
        if (covered) { answered = true; break; }
      }
      if (!answered) return false;
    }
  }
  return true;
}

namespace {

// Shared refinement: successor[x] is the set whose every member must be
// matched across the relation.  For topologies these are minimal
// neighborhoods, for preorders the successor sets; the two coincide on
// finite spaces, which is exactly what the cross-check exercises.
PairRelation refine(const std::vector<PointSet>& succ1,
                    const std::vector<PointSet>& succ2, PairRelation z) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < z.n1; ++x) {
      for (int y : set_to_points(z.rows[x])) {
        bool ok = true;
        // zig: everything near y is reached from near x
        for (int y2 : set_to_points(succ2[y])) {
          bool hit = false;
          for (int x2 : set_to_points(succ1[x]))
            if (z.at(x2, y2)) { hit = true; break; }
          if (!hit) { ok = false; break; }
        }
        // zag: everything near x reaches near y
        if (ok) {
          for (int x2 : set_to_points(succ1[x])) {
            if (!(z.rows[x2] & succ2[y])) { ok = false; break; }
          }
        }
        if (!ok) {
          z.remove(x, y);
          changed = true;
        }
      }
    }
  }
  return z;
}

PairRelation atom_consistent_start(const Model& a, const Model& b) {
  const int n1 = a.space().point_count(), n2 = b.space().point_count();
  AtomTable atoms(a, b, false);
  PairRelation z = PairRelation::empty(n1, n2);
  for (int x = 0; x < n1; ++x)
    for (int y = 0; y < n2; ++y)
      if (atoms.ok(x, y)) z.add(x, y);
  return z;
}

}  // namespace

PairRelation greatest_topo_bisimulation(const Model& a, const Model& b) {
  std::vector<PointSet> u1, u2;
  for (int x = 0; x < a.space().point_count(); ++x)
    u1.push_back(a.space().minimal_neighborhood(x));
  for (int y = 0; y < b.space().point_count(); ++y)
    u2.push_back(b.space().minimal_neighborhood(y));
  return refine(u1, u2, atom_consistent_start(a, b));
}

PairRelation greatest_kripke_bisimulation(const Model& a, const Model& b) {
  Relation r1 = specialization_preorder(a.space());
  Relation r2 = specialization_preorder(b.space());
  return refine(r1.rows, r2.rows, atom_consistent_start(a, b));
}

bool modally_equivalent(const Model& a, int w, const Model& b, int w2) {
  if (w < 0 || w >= a.space().point_count() || w2 < 0 ||
      w2 >= b.space().point_count())
    throw ValidationError("evaluation point out of range");
  return greatest_topo_bisimulation(a, b).at(w, w2);
}

// ---------------------------------------------------------------------------
// Bounded formula search

std::optional<ModalPtr> distinguishing_formula(const Model& a, int w,
                                               const Model& b, int w2,
                                               int depth) {
  const int n1 = a.space().point_count(), n2 = b.space().point_count();
  if (w < 0 || w >= n1 || w2 < 0 || w2 >= n2)
    throw ValidationError("evaluation point out of range");
  if (n1 + n2 > 10)
    throw GuardError("formula search covers at most 10 points in total, got " +
                     std::to_string(n1 + n2));

  const PointSet full1 = full_set(n1), full2 = full_set(n2);
  using Key = std::uint64_t;
  auto key = [n1](PointSet s1, PointSet s2) {
    return static_cast<Key>(s1) | (static_cast<Key>(s2) << n1);
  };

  std::map<Key, ModalPtr> seen;
  ModalPtr found;  // set once a separating truth-set pair appears
  auto add = [&](PointSet s1, PointSet s2, ModalPtr f) {
    if (found) return;
    auto [it, fresh] = seen.emplace(key(s1, s2), std::move(f));
    if (!fresh) return;
    if (contains(s1, w) != contains(s2, w2))
      found = contains(s1, w) ? it->second : mf::negate(it->second);
  };

  add(full1, full2, mf::top());
  for (const auto& [k, va] : a.props()) {
    auto itb = b.props().find(k);
    if (itb != b.props().end()) add(va, itb->second, mf::prop(k));
  }

  auto boolean_closure = [&] {
    bool grew = true;
    while (grew && !found) {
      grew = false;
      std::vector<std::pair<Key, ModalPtr>> snap(seen.begin(), seen.end());
      const std::size_t before = seen.size();
      for (const auto& [k1, f1] : snap) {
        PointSet a1 = k1 & full1, b1 = (k1 >> n1) & full2;
        add(full1 & ~a1, full2 & ~b1, mf::negate(f1));
        if (found) return;
        for (const auto& [k2, f2] : snap) {
          PointSet a2 = k2 & full1, b2 = (k2 >> n1) & full2;
          add(a1 & a2, b1 & b2, mf::conj(f1, f2));
          if (found) return;
        }
      }
      grew = seen.size() > before;
    }
  };

  boolean_closure();
  for (int d = 0; d < depth && !found; ++d) {
    std::vector<std::pair<Key, ModalPtr>> snap(seen.begin(), seen.end());
    for (const auto& [k1, f1] : snap) {
      add(a.space().interior(k1 & full1),
          b.space().interior((k1 >> n1) & full2), mf::box(f1));
      if (found) break;
    }
    if (!found) boolean_closure();
  }
  if (found) return found;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Potential homeomorphisms

bool PartialBijection::extends(const PartialBijection& f) const {
  for (std::size_t x = 0; x < to.size(); ++x)
    if (f.to[x] >= 0 && to[x] != f.to[x]) return false;
  return true;
}

std::vector<std::pair<int, int>> PartialBijection::graph() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t x = 0; x < to.size(); ++x)
    if (to[x] >= 0) out.emplace_back(static_cast<int>(x), to[x]);
  return out;
}

namespace {

void enumerate_partial(const AtomTable& atoms, int n1, int n2, int x,
                       PointSet used, PartialBijection& cur,
                       std::vector<PartialBijection>& out) {
  if (x == n1) {
    out.push_back(cur);
    return;
  }
  cur.to[x] = -1;
  enumerate_partial(atoms, n1, n2, x + 1, used, cur, out);
  for (int y = 0; y < n2; ++y) {
    if (contains(used, y) || !atoms.ok(x, y)) continue;
    cur.to[x] = y;
    enumerate_partial(atoms, n1, n2, x + 1, used | (PointSet{1} << y), cur, out);
  }
  cur.to[x] = -1;
}

}  // namespace

std::vector<PartialBijection> potential_homeomorphism_family(const Model& a,
                                                             const Model& b,
                                                             int guard_points) {
  const int n1 = a.space().point_count(), n2 = b.space().point_count();
  if (n1 > guard_points || n2 > guard_points)
    throw GuardError("potential homeomorphism search covers at most " +
                     std::to_string(guard_points) + " points per side");

  AtomTable atoms(a, b, true);
  std::vector<PartialBijection> all;
  PartialBijection seed{std::vector<int>(n1, -1)};
  enumerate_partial(atoms, n1, n2, 0, 0, seed, all);

  const int count = static_cast<int>(all.size());
  std::vector<std::vector<int>> extensions(count);
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j)
      if (all[j].extends(all[i])) extensions[i].push_back(j);

  std::vector<PointSet> u1, u2;
  for (int x = 0; x < n1; ++x) u1.push_back(a.space().minimal_neighborhood(x));
  for (int y = 0; y < n2; ++y) u2.push_back(b.space().minimal_neighborhood(y));

  std::vector<char> alive(count, 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < count; ++i) {
      if (!alive[i]) continue;
      const PartialBijection& f = all[i];
      bool ok = true;

      // extension clause: every point lands in some live extension
      for (int x = 0; x < n1 && ok; ++x) {
        bool hit = false;
        for (int j : extensions[i])
          if (alive[j] && all[j].defined(x)) { hit = true; break; }
        ok = hit;
      }
      for (int y = 0; y < n2 && ok; ++y) {
        bool hit = false;
        for (int j : extensions[i]) {
          if (!alive[j]) continue;
          for (int x = 0; x < n1; ++x)
            if (all[j].to[x] == y) { hit = true; break; }
          if (hit) break;
        }
        ok = hit;
      }

      // neighborhood clause, reduced to minimal neighborhoods
      for (int m = 0; m < n1 && ok; ++m) {
        int n = f.to[m];
        if (n < 0) continue;
        for (int n_prime : set_to_points(u2[n])) {
          bool hit = false;
          for (int j : extensions[i]) {
            if (!alive[j]) continue;
            for (int m_prime : set_to_points(u1[m]))
              if (all[j].to[m_prime] == n_prime) { hit = true; break; }
            if (hit) break;
          }
          if (!hit) { ok = false; break; }
        }
        for (int m_prime : set_to_points(u1[m])) {
          if (!ok) break;
          bool hit = false;
          for (int j : extensions[i]) {
            if (!alive[j]) continue;
            int y = all[j].to[m_prime];
            if (y >= 0 && contains(u2[n], y)) { hit = true; break; }
          }
          if (!hit) ok = false;
        }
      }

      if (!ok) {
        alive[i] = 0;
        changed = true;
      }
    }
  }

  std::vector<PartialBijection> family;
  for (int i = 0; i < count; ++i)
    if (alive[i]) family.push_back(all[i]);
  return family;
}

bool potential_homeomorphism_exists(const Model& a, const Model& b,
                                    int guard_points) {
  return !potential_homeomorphism_family(a, b, guard_points).empty();
}

}  // namespace topomodal
