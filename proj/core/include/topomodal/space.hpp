#ifndef TOPOMODAL_SPACE_HPP
#define TOPOMODAL_SPACE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "topomodal/errors.hpp"

namespace topomodal {

// Subsets of a point set {0,...,n-1} are bitmasks; bit i = point i.
using PointSet = std::uint32_t;

// Hard representation cap for PointSet masks.  Individual operations have
// much tighter guards of their own.
inline constexpr int kMaxPoints = 20;

inline PointSet full_set(int n) { return (n == 0) ? 0u : (~0u >> (32 - n)); }
inline bool contains(PointSet s, int x) { return (s >> x) & 1u; }
int popcount(PointSet s);

// Sorted list of members of `s`.
std::vector<int> set_to_points(PointSet s);
// "[0,2]" style rendering, matching the JSON serialization of subsets.
std::string set_to_string(PointSet s);
// Inverse of set_to_points; throws ValidationError on out-of-range or
// duplicate entries.
PointSet points_to_set(const std::vector<int>& points, int n);

// A finite topological space on points 0..n-1.  The family of opens always
// contains the empty set and the full set and is closed under binary union
// and intersection; the constructor rejects anything else.  Opens are kept
// sorted by mask value, so spaces compare canonically with ==.
class Space {
 public:
  Space(int n, std::vector<PointSet> opens);

  int point_count() const { return n_; }
  PointSet points() const { return full_set(n_); }
  const std::vector<PointSet>& opens() const { return opens_; }

  bool is_open(PointSet a) const;
  bool is_closed(PointSet a) const;

  // Largest open subset of a / least closed superset of a.
  PointSet interior(PointSet a) const;
  PointSet closure(PointSet a) const;

  // Least open set containing x; exists because the space is finite.
  PointSet minimal_neighborhood(int x) const;

  bool operator==(const Space& other) const = default;

 private:
  int n_;
  std::vector<PointSet> opens_;
};

// A base for a topology: contains the empty set, covers the points, and
// every point in an intersection of two members lies in a member inside
// that intersection.
struct Base {
  int n = 0;
  std::vector<PointSet> sets;
};

bool is_base(int n, const std::vector<PointSet>& sets);

// The topology generated by a base: closure of the base under unions.
// Throws ValidationError if is_base fails.
Space generate_topology(const Base& base);

// The base of minimal neighborhoods {U_x : x in X} plus the empty set.
// Generates the original topology back.
Base minimal_neighborhood_base(const Space& s);

// Binary relation on {0..n-1} stored as successor rows:
// rows[x] = { y : x R y }.
struct Relation {
  int n = 0;
  std::vector<PointSet> rows;

  bool contains(int x, int y) const { return topomodal::contains(rows[x], y); }
  bool is_reflexive() const;
  bool is_transitive() const;
  std::vector<std::pair<int, int>> pairs() const;  // sorted lexicographically

  static Relation from_pairs(int n, const std::vector<std::pair<int, int>>& ps);
  bool operator==(const Relation& other) const = default;
};

// Specialization preorder: x <= y iff x lies in the closure of {y},
// equivalently every open containing x contains y.
Relation specialization_preorder(const Space& s);

// The Alexandroff space of a preorder: opens are exactly the R-up-sets.
// Throws ValidationError if r is not reflexive and transitive.
Space from_preorder(const Relation& r);

// Disjoint union: points of the i-th summand are shifted past the earlier
// ones; a set is open iff its trace on every summand is open there.
// Throws on an empty list of summands.
Space sum(const std::vector<Space>& spaces);

// Subspace on a non-empty open o: opens are the opens contained in o,
// points relabelled by their rank within o.
Space open_subspace(const Space& s, PointSet o);

// A point map between fixed spaces; `map[x]` is the image of x.
struct PointMap {
  PointMap(Space source, Space target, std::vector<int> map);

  Space source;
  Space target;
  std::vector<int> map;

  PointSet image(PointSet a) const;
  PointSet preimage(PointSet b) const;
  bool is_surjective() const;
  bool is_injective() const;
};

// Interior map: forward images of opens are open and preimages of opens
// are open (open + continuous).
bool is_interior_map(const PointMap& m);

// Exhaustive search for a bijective interior map.  Guarded: throws
// GuardError when either space has more than guard_n points.
bool is_homeomorphic(const Space& a, const Space& b, int guard_n = 8);

// The extension of s whose points are the ultrafilters of the powerset of
// s (all principal at this scale, one per point); opens are generated by
// the sets {u : F in u} for F an open filter.  Returns the new space and
// the map sending each point to its principal ultrafilter.  The result is
// homeomorphic to s via that map.
std::pair<Space, PointMap> alexandroff_extension(const Space& s);

// Whether y arises from x as the image of a surjective interior map onto
// the extension of y that is injective on principal ultrafilters.  Brute
// force over all maps; throws GuardError beyond the caps.
bool is_u_morphic_image(const Space& x, const Space& y, int source_cap = 5,
                        int target_cap = 4);

// Streams every topology on n labelled points exactly once by enumerating
// reflexive-transitive relations in lexicographic order and converting
// through from_preorder.  Guarded at n <= 5.
class SpaceEnumerator {
 public:
  explicit SpaceEnumerator(int n);
  std::optional<Space> next();

 private:
  int n_;
  std::uint64_t candidate_;
  std::uint64_t limit_;
};

// Eager form of the enumerator.
std::vector<Space> all_spaces(int n);

// Independent counting path used to cross-check the enumerator: filters
// every family of subsets containing {} and X by the Space invariants.
// Exponential in 2^n, guarded at n <= 4.
std::vector<Space> all_spaces_by_family_filter(int n);

}  // namespace topomodal

#endif
