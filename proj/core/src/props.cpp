#include "topomodal/props.hpp"

#include <map>

#include "topomodal/catalog.hpp"
#include "topomodal/errors.hpp"
#include "topomodal/semantics.hpp"

namespace topomodal {

namespace {

bool separates_t1(const Space& s, int x, int y) {
  for (PointSet o : s.opens())
    if (contains(o, x) && !contains(o, y)) return true;
  return false;
}

bool is_t0(const Space& s) {
  const int n = s.point_count();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (!separates_t1(s, x, y) && !separates_t1(s, y, x)) return false;
  return true;
}

bool is_t1(const Space& s) {
  const int n = s.point_count();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && !separates_t1(s, x, y)) return false;
  return true;
}

bool is_t2(const Space& s) {
  const int n = s.point_count();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      bool separated = false;
      for (PointSet u : s.opens()) {
        if (!contains(u, x)) continue;
        for (PointSet v : s.opens())
          if (contains(v, y) && (u & v) == 0) {
            separated = true;
            break;
          }
        if (separated) break;
      }
      if (!separated) return false;
    }
  return true;
}

bool is_regular(const Space& s) {
  const int n = s.point_count();
  for (int x = 0; x < n; ++x)
    for (PointSet u : s.opens()) {
      if (!contains(u, x)) continue;
      bool shrunk = false;
      for (PointSet v : s.opens())
        if (contains(v, x) && (s.closure(v) & ~u) == 0) {
          shrunk = true;
          break;
        }
      if (!shrunk) return false;
    }
  return true;
}

bool is_discrete(const Space& s) {
  for (int x = 0; x < s.point_count(); ++x)
    if (!s.is_open(PointSet{1} << x)) return false;
  return true;
}

bool is_connected(const Space& s) {
  const PointSet full = s.points();
  for (PointSet o : s.opens())
    if (o != 0 && o != full && s.is_closed(o)) return false;
  return true;
}

bool is_dense_in_itself(const Space& s) {
  for (int x = 0; x < s.point_count(); ++x)
    if (s.minimal_neighborhood(x) == (PointSet{1} << x)) return false;
  return true;
}

bool is_resolvable(const Space& s) {
  // Disjoint dense A, B exist iff some A has a dense complement: closure
  // is monotone, so B dense forces the complement of A dense.
  const PointSet full = s.points();
  for (PointSet a = 1; a < full; ++a)
    if (is_dense(s, a) && is_dense(s, full & ~a)) return true;
  return false;
}

// Resolvability of the subspace on nonempty `a` under the relative
// topology {O cap a}.  The relative closure of b within a is closure(b)
// cap a, so b is dense in the subspace iff a lies inside closure(b).
bool subspace_resolvable(const Space& s, PointSet a) {
  for (PointSet b = a; b != 0; b = (b - 1) & a) {
    const PointSet rest = a & ~b;
    if (rest == 0) continue;
    if ((a & ~s.closure(b)) == 0 && (a & ~s.closure(rest)) == 0) return true;
  }
  return false;
}

bool is_hi(const Space& s) {
  const PointSet full = s.points();
  for (PointSet a = 1; a <= full; ++a)
    if (subspace_resolvable(s, a)) return false;
  return true;
}

}  // namespace

std::vector<std::string> property_tags() {
  return {"alexandroff",     "compact",   "connected",    "dense_in_itself",
          "disconnected",    "discrete",  "hi",           "irresolvable",
          "regular",         "resolvable", "t0",          "t1",
          "t2"};
}

bool check_property(const Space& s, const std::string& tag) {
  if (tag == "t0") return is_t0(s);
  if (tag == "t1") return is_t1(s);
  if (tag == "t2") return is_t2(s);
  if (tag == "regular") return is_regular(s);
  if (tag == "discrete") return is_discrete(s);
  if (tag == "alexandroff") return true;  // every finite space
  if (tag == "compact") return true;      // every finite space
  if (tag == "connected") return is_connected(s);
  if (tag == "disconnected") return !is_connected(s);
  if (tag == "dense_in_itself") return is_dense_in_itself(s);
  if (tag == "resolvable") return is_resolvable(s);
  if (tag == "irresolvable") return !is_resolvable(s);
  if (tag == "hi") return is_hi(s);
  throw ValidationError("unknown property tag '" + tag + "'");
}

bool is_dense(const Space& s, PointSet a) {
  if ((a & ~s.points()) != 0)
    throw ValidationError("subset " + set_to_string(a) +
                          " has points outside the space");
  return s.closure(a) == s.points();
}

bool lt_property_agreement(const Space& s, const std::string& tag) {
  static const std::map<std::string, std::string> sentence_of{
      {"t0", "lt-t0"},
      {"t1", "lt-t1"},
      {"t2", "lt-t2"},
      {"regular", "lt-regular"},
      {"discrete", "lt-discrete"},
      {"alexandroff", "lt-alexandroff"},
      {"dense_in_itself", "lt-dii"},
  };
  auto it = sentence_of.find(tag);
  if (it == sentence_of.end())
    throw ValidationError("no open-guarded sentence for property tag '" + tag +
                          "'");
  const Model m(s, {});
  return eval_fo(m, named_fo_formula(it->second)) == check_property(s, tag);
}

}  // namespace topomodal
