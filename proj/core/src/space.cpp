#include "topomodal/space.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace topomodal {

int popcount(PointSet s) { return std::popcount(s); }

std::vector<int> set_to_points(PointSet s) {
  std::vector<int> out;
  for (int i = 0; i < kMaxPoints; ++i)
    if (contains(s, i)) out.push_back(i);
  return out;
}

std::string set_to_string(PointSet s) {
  std::string out = "[";
  bool first = true;
  for (int i : set_to_points(s)) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "]";
}

PointSet points_to_set(const std::vector<int>& points, int n) {
  PointSet s = 0;
  for (int p : points) {
    if (p < 0 || p >= n)
      throw ValidationError("point index " + std::to_string(p) +
                            " out of range for " + std::to_string(n) + " points");
    if (contains(s, p))
      throw ValidationError("duplicate point index " + std::to_string(p));
    s |= PointSet(1) << p;
  }
  return s;
}

Space::Space(int n, std::vector<PointSet> opens) : n_(n), opens_(std::move(opens)) {
  if (n_ < 1 || n_ > kMaxPoints)
    throw ValidationError("point count must be between 1 and " +
                          std::to_string(kMaxPoints) + ", got " + std::to_string(n_));
  for (PointSet o : opens_)
    if (o & ~full_set(n_))
      throw ValidationError("open " + set_to_string(o) +
                            " mentions points outside 0.." + std::to_string(n_ - 1));
  std::sort(opens_.begin(), opens_.end());
  opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
  if (opens_.empty() || opens_.front() != 0)
    throw ValidationError("opens must contain the empty set");
  if (opens_.back() != full_set(n_))
    throw ValidationError("opens must contain the full set " + set_to_string(full_set(n_)));
  // Report the first violated closure condition in a fixed scan order:
  // pairs in ascending mask order, intersection before union.
  for (std::size_t i = 0; i < opens_.size(); ++i) {
    for (std::size_t j = i + 1; j < opens_.size(); ++j) {
      PointSet meet = opens_[i] & opens_[j];
      PointSet join = opens_[i] | opens_[j];
      if (!std::binary_search(opens_.begin(), opens_.end(), meet))
        throw ValidationError("opens not closed under intersection: " +
                              set_to_string(opens_[i]) + " and " + set_to_string(opens_[j]) +
                              " but not " + set_to_string(meet));
      if (!std::binary_search(opens_.begin(), opens_.end(), join))
        throw ValidationError("opens not closed under union: " +
                              set_to_string(opens_[i]) + " and " + set_to_string(opens_[j]) +
                              " but not " + set_to_string(join));
    }
  }
}

bool Space::is_open(PointSet a) const {
  return std::binary_search(opens_.begin(), opens_.end(), a);
}

bool Space::is_closed(PointSet a) const { return is_open(points() & ~a); }

PointSet Space::interior(PointSet a) const {
  if (a & ~points())
    throw ValidationError("subset " + set_to_string(a) + " out of range");
  PointSet out = 0;
  for (PointSet o : opens_)
    if ((o & ~a) == 0) out |= o;
  return out;
}

PointSet Space::closure(PointSet a) const {
  return points() & ~interior(points() & ~a);
}

PointSet Space::minimal_neighborhood(int x) const {
  if (x < 0 || x >= n_)
    throw ValidationError("point " + std::to_string(x) + " out of range");
  PointSet out = points();
  for (PointSet o : opens_)
    if (contains(o, x)) out &= o;
  return out;
}

bool is_base(int n, const std::vector<PointSet>& sets) {
  if (n < 1 || n > kMaxPoints) return false;
  PointSet cover = 0;
  bool has_empty = false;
  for (PointSet s : sets) {
    if (s & ~full_set(n)) return false;
    if (s == 0) has_empty = true;
    cover |= s;
  }
  if (!has_empty || cover != full_set(n)) return false;
  for (PointSet a : sets) {
    for (PointSet b : sets) {
      PointSet meet = a & b;
      for (int x = 0; x < n; ++x) {
        if (!contains(meet, x)) continue;
        bool witness = false;
        for (PointSet c : sets) {
          if (contains(c, x) && (c & ~meet) == 0) {
            witness = true;
            break;
          }
        }
        if (!witness) return false;
      }
    }
  }
  return true;
}

Space generate_topology(const Base& base) {
  if (!is_base(base.n, base.sets))
    throw ValidationError("not a base: needs the empty set, a cover, and "
                          "witnesses inside pairwise intersections");
  // Finite case: closing under binary unions reaches all unions.
  std::vector<PointSet> opens = base.sets;
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<PointSet> fresh;
    for (PointSet a : opens) {
      for (PointSet b : opens) {
        PointSet u = a | b;
        if (!std::binary_search(opens.begin(), opens.end(), u)) fresh.push_back(u);
      }
    }
    if (!fresh.empty()) {
      grew = true;
      opens.insert(opens.end(), fresh.begin(), fresh.end());
      std::sort(opens.begin(), opens.end());
      opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
    }
  }
  return Space(base.n, std::move(opens));
}

Base minimal_neighborhood_base(const Space& s) {
  Base b;
  b.n = s.point_count();
  b.sets.push_back(0);
  for (int x = 0; x < s.point_count(); ++x)
    b.sets.push_back(s.minimal_neighborhood(x));
  std::sort(b.sets.begin(), b.sets.end());
  b.sets.erase(std::unique(b.sets.begin(), b.sets.end()), b.sets.end());
  return b;
}

bool Relation::is_reflexive() const {
  for (int x = 0; x < n; ++x)
    if (!contains(x, x)) return false;
  return true;
}

bool Relation::is_transitive() const {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (contains(x, y) && (rows[y] & ~rows[x]) != 0) return false;
  return true;
}

std::vector<std::pair<int, int>> Relation::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (contains(x, y)) out.emplace_back(x, y);
  return out;
}

Relation Relation::from_pairs(int n, const std::vector<std::pair<int, int>>& ps) {
  Relation r;
  r.n = n;
  r.rows.assign(n, 0);
  for (auto [x, y] : ps) {
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw ValidationError("relation pair (" + std::to_string(x) + "," +
                            std::to_string(y) + ") out of range");
    r.rows[x] |= PointSet(1) << y;
  }
  return r;
}

Relation specialization_preorder(const Space& s) {
  Relation r;
  r.n = s.point_count();
  r.rows.assign(r.n, 0);
  for (int y = 0; y < r.n; ++y) {
    PointSet cl = s.closure(PointSet(1) << y);
    for (int x = 0; x < r.n; ++x)
      if (contains(cl, x)) r.rows[x] |= PointSet(1) << y;
  }
  return r;
}

Space from_preorder(const Relation& r) {
  if (r.n < 1 || r.n > kMaxPoints)
    throw ValidationError("preorder size out of range");
  if (!r.is_reflexive()) throw ValidationError("relation is not reflexive");
  if (!r.is_transitive()) throw ValidationError("relation is not transitive");
  std::vector<PointSet> opens;
  for (PointSet o = 0; o <= full_set(r.n); ++o) {
    bool up_set = true;
    for (int x = 0; x < r.n && up_set; ++x)
      if (contains(o, x) && (r.rows[x] & ~o) != 0) up_set = false;
    if (up_set) opens.push_back(o);
  }
  return Space(r.n, std::move(opens));
}

Space sum(const std::vector<Space>& spaces) {
  if (spaces.empty()) throw ValidationError("sum of an empty list of spaces");
  int total = 0;
  for (const Space& s : spaces) total += s.point_count();
  if (total > kMaxPoints)
    throw ValidationError("sum would have " + std::to_string(total) + " points, cap is " +
                          std::to_string(kMaxPoints));
  // A set is open iff its trace on each summand is open, so the opens are
  // exactly the unions of one shifted open per summand.
  std::vector<PointSet> opens{0};
  int offset = 0;
  for (const Space& s : spaces) {
    std::vector<PointSet> next;
    next.reserve(opens.size() * s.opens().size());
    for (PointSet prefix : opens)
      for (PointSet o : s.opens()) next.push_back(prefix | (o << offset));
    opens = std::move(next);
    offset += s.point_count();
  }
  return Space(total, std::move(opens));
}

Space open_subspace(const Space& s, PointSet o) {
  if (!s.is_open(o))
    throw ValidationError("subset " + set_to_string(o) + " is not open");
  if (o == 0) throw ValidationError("subspace on the empty set");
  std::vector<int> rank(s.point_count(), -1);
  int next = 0;
  for (int x = 0; x < s.point_count(); ++x)
    if (contains(o, x)) rank[x] = next++;
  std::vector<PointSet> opens;
  for (PointSet a : s.opens()) {
    if (a & ~o) continue;
    PointSet relabelled = 0;
    for (int x : set_to_points(a)) relabelled |= PointSet(1) << rank[x];
    opens.push_back(relabelled);
  }
  return Space(next, std::move(opens));
}

PointMap::PointMap(Space source_, Space target_, std::vector<int> map_)
    : source(std::move(source_)), target(std::move(target_)), map(std::move(map_)) {
  if (static_cast<int>(map.size()) != source.point_count())
    throw ValidationError("point map must assign every source point");
  for (int v : map)
    if (v < 0 || v >= target.point_count())
      throw ValidationError("point map value " + std::to_string(v) + " out of range");
}

PointSet PointMap::image(PointSet a) const {
  PointSet out = 0;
  for (int x : set_to_points(a)) out |= PointSet(1) << map[x];
  return out;
}

PointSet PointMap::preimage(PointSet b) const {
  PointSet out = 0;
  for (int x = 0; x < source.point_count(); ++x)
    if (contains(b, map[x])) out |= PointSet(1) << x;
  return out;
}

bool PointMap::is_surjective() const {
  return image(source.points()) == target.points();
}

bool PointMap::is_injective() const {
  return popcount(image(source.points())) == source.point_count();
}

bool is_interior_map(const PointMap& m) {
  for (PointSet o : m.source.opens())
    if (!m.target.is_open(m.image(o))) return false;
  for (PointSet o : m.target.opens())
    if (!m.source.is_open(m.preimage(o))) return false;
  return true;
}

bool is_homeomorphic(const Space& a, const Space& b, int guard_n) {
  if (a.point_count() != b.point_count() ||
      a.opens().size() != b.opens().size())
    return false;
  if (a.point_count() > guard_n)
    throw GuardError("homeomorphism search guarded at " + std::to_string(guard_n) +
                     " points, got " + std::to_string(a.point_count()));
  std::vector<int> perm(a.point_count());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    PointMap m(a, b, perm);
    if (is_interior_map(m)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::pair<Space, PointMap> alexandroff_extension(const Space& s) {
  const int n = s.point_count();
  // Every ultrafilter over a finite powerset is principal, so there is one
  // per point: u_a = { A : a in A }.  Stored as membership flags indexed by
  // subset mask and ordered canonically by that characteristic sequence
  // read from the largest subset down.
  const std::uint32_t subset_count = PointSet(1) << n;
  auto principal = [&](int a) {
    std::vector<std::uint8_t> u(subset_count);
    for (std::uint32_t m = 0; m < subset_count; ++m) u[m] = contains(m, a);
    return u;
  };
  std::vector<std::vector<std::uint8_t>> ultra;
  for (int a = 0; a < n; ++a) ultra.push_back(principal(a));
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    for (std::uint32_t m = subset_count; m-- > 0;)
      if (ultra[a][m] != ultra[b][m]) return ultra[a][m] < ultra[b][m];
    return false;
  });
  std::vector<int> pi(n);  // point -> index of its principal ultrafilter
  for (int idx = 0; idx < n; ++idx) pi[order[idx]] = idx;
  // Open filters of a finite space are the principal filters of non-empty
  // opens; the filter of O picks out exactly the ultrafilters containing O.
  Base base;
  base.n = n;
  base.sets.push_back(0);
  for (PointSet o : s.opens()) {
    if (o == 0) continue;
    PointSet star = 0;
    for (int a = 0; a < n; ++a)
      if (ultra[a][o]) star |= PointSet(1) << pi[a];
    base.sets.push_back(star);
  }
  Space ext = generate_topology(base);
  return {ext, PointMap(s, ext, pi)};
}

bool is_u_morphic_image(const Space& x, const Space& y, int source_cap,
                        int target_cap) {
  if (x.point_count() > source_cap || y.point_count() > target_cap)
    throw GuardError("u-morphic image search guarded at source " +
                     std::to_string(source_cap) + " / target " +
                     std::to_string(target_cap) + " points");
  auto [ystar, pi] = alexandroff_extension(y);
  const int sn = x.point_count();
  const int tn = ystar.point_count();
  std::vector<int> f(sn, 0);
  while (true) {
    PointMap m(x, ystar, f);
    if (m.is_surjective() && is_interior_map(m)) {
      bool singleton_fibers = true;
      for (int a = 0; a < y.point_count() && singleton_fibers; ++a)
        if (popcount(m.preimage(PointSet(1) << pi.map[a])) != 1)
          singleton_fibers = false;
      if (singleton_fibers) return true;
    }
    int i = 0;
    for (; i < sn; ++i) {
      if (++f[i] < tn) break;
      f[i] = 0;
    }
    if (i == sn) break;
  }
  return false;
}

SpaceEnumerator::SpaceEnumerator(int n) : n_(n), candidate_(0) {
  if (n < 1 || n > 5)
    throw GuardError("space enumeration guarded at 5 points, got " + std::to_string(n));
  limit_ = std::uint64_t(1) << (n * (n - 1));
}

std::optional<Space> SpaceEnumerator::next() {
  while (candidate_ < limit_) {
    std::uint64_t bits = candidate_++;
    Relation r;
    r.n = n_;
    r.rows.assign(n_, 0);
    int bit = 0;
    for (int a = 0; a < n_; ++a) {
      r.rows[a] |= PointSet(1) << a;
      for (int b = 0; b < n_; ++b) {
        if (a == b) continue;
        if ((bits >> bit) & 1) r.rows[a] |= PointSet(1) << b;
        ++bit;
      }
    }
    if (r.is_transitive()) return from_preorder(r);
  }
  return std::nullopt;
}

std::vector<Space> all_spaces(int n) {
  std::vector<Space> out;
  SpaceEnumerator e(n);
  while (auto s = e.next()) out.push_back(*s);
  return out;
}

std::vector<Space> all_spaces_by_family_filter(int n) {
  if (n < 1 || n > 4)
    throw GuardError("family-filter enumeration guarded at 4 points, got " +
                     std::to_string(n));
  // Deliberately re-checks the topology conditions inline so this path
  // shares nothing with the Space constructor or the preorder enumerator.
  const PointSet full = full_set(n);
  std::vector<PointSet> middle;
  for (PointSet m = 1; m < full; ++m) middle.push_back(m);
  std::vector<Space> out;
  for (std::uint32_t pick = 0; pick < (std::uint32_t(1) << middle.size()); ++pick) {
    std::vector<PointSet> family{0, full};
    for (std::size_t i = 0; i < middle.size(); ++i)
      if ((pick >> i) & 1) family.push_back(middle[i]);
    bool ok = true;
    for (std::size_t i = 0; i < family.size() && ok; ++i) {
      for (std::size_t j = 0; j < family.size() && ok; ++j) {
        PointSet meet = family[i] & family[j];
        PointSet join = family[i] | family[j];
        bool meet_in = false, join_in = false;
        for (PointSet g : family) {
          meet_in |= (g == meet);
          join_in |= (g == join);
        }
        ok = meet_in && join_in;
      }
    }
    if (ok) out.emplace_back(n, family);
  }
  return out;
}

}  // namespace topomodal
