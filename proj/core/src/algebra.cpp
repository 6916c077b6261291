#include "topomodal/algebra.hpp"

#include <map>

#include "topomodal/errors.hpp"

namespace topomodal {

InteriorAlgebra::InteriorAlgebra(int atoms, std::vector<PointSet> box)
    : atoms_(atoms), box_(std::move(box)) {
  if (atoms < 1) throw ValidationError("an algebra needs at least one atom");
  if (atoms > kMaxPoints)
    throw ValidationError("atom count " + std::to_string(atoms) +
                          " exceeds the representation cap of " +
                          std::to_string(kMaxPoints));
  const std::size_t carrier = std::size_t{1} << atoms;
  if (box_.size() != carrier)
    throw ValidationError("box table has " + std::to_string(box_.size()) +
                          " entries, carrier has " + std::to_string(carrier));
  for (std::size_t a = 0; a < carrier; ++a)
    if ((box_[a] & ~top()) != 0)
      throw ValidationError("box of " + set_to_string(PointSet(a)) +
                            " leaves the carrier");
}

PointSet InteriorAlgebra::box(PointSet a) const {
  if ((a & ~top()) != 0)
    throw ValidationError("element " + set_to_string(a) +
                          " is outside the carrier");
  return box_[a];
}

PointSet InteriorAlgebra::diamond(PointSet a) const {
  return top() & ~box(top() & ~a);
}

std::optional<AxiomViolation> check_interior_algebra(const InteriorAlgebra& b) {
  const PointSet t = b.top();
  if (b.box(t) != t) return AxiomViolation{"i1", t, 0};
  for (PointSet x = 0; x <= t; ++x)
    for (PointSet y = 0; y <= t; ++y)
      if (b.box(x & y) != (b.box(x) & b.box(y)))
        return AxiomViolation{"i2", x, y};
  for (PointSet x = 0; x <= t; ++x)
    if ((b.box(x) & ~x) != 0) return AxiomViolation{"i3", x, 0};
  for (PointSet x = 0; x <= t; ++x)
    if (b.box(b.box(x)) != b.box(x)) return AxiomViolation{"i4", x, 0};
  return std::nullopt;
}

InteriorAlgebra complex_algebra(const Space& s) {
  const std::size_t carrier = std::size_t{1} << s.point_count();
  std::vector<PointSet> box(carrier);
  for (std::size_t a = 0; a < carrier; ++a)
    box[a] = s.interior(PointSet(a));
  return InteriorAlgebra(s.point_count(), std::move(box));
}

Space dual_space(const InteriorAlgebra& b) {
  if (auto bad = check_interior_algebra(b))
    throw ValidationError("not an interior algebra: axiom " + bad->axiom +
                          " fails at " + set_to_string(bad->a));
  // The extent of the principal open filter of a box-fixed element c is
  // {atoms below c}, i.e. the mask c itself, and the axioms make the fixed
  // elements a topology already, so no generation step is needed.
  std::vector<PointSet> opens;
  for (PointSet a = 0; a <= b.top(); ++a)
    if (b.box(a) == a) opens.push_back(a);
  return Space(b.atom_count(), std::move(opens));
}

namespace {

PointSet evaluate(const InteriorAlgebra& b, const ModalPtr& f,
                  const std::map<int, PointSet>& asg) {
  switch (f->kind) {
    case MKind::Top: return b.top();
    case MKind::Bot: return 0;
    case MKind::Prop: return asg.at(f->index);
    case MKind::Not: return b.top() & ~evaluate(b, f->lhs, asg);
    case MKind::And: return evaluate(b, f->lhs, asg) & evaluate(b, f->rhs, asg);
    case MKind::Or: return evaluate(b, f->lhs, asg) | evaluate(b, f->rhs, asg);
    case MKind::Implies:
      return (b.top() & ~evaluate(b, f->lhs, asg)) | evaluate(b, f->rhs, asg);
    case MKind::Iff:
      return b.top() & ~(evaluate(b, f->lhs, asg) ^ evaluate(b, f->rhs, asg));
    case MKind::Box: return b.box(evaluate(b, f->lhs, asg));
    case MKind::Diamond: return b.diamond(evaluate(b, f->lhs, asg));
    default:
      throw ValidationError("constructor outside the basic modal language");
  }
}

}  // namespace

bool equation_valid(const InteriorAlgebra& b, const ModalPtr& f, int budget) {
  if (language_of(f) != Language::ML)
    throw ValidationError(
        "equations are evaluated for the basic modal language only, got " +
        language_name(language_of(f)));
  const auto symbols = modal_symbols(f);
  const std::vector<int> letters(symbols.props.begin(), symbols.props.end());
  const int cost = b.atom_count() * int(letters.size());
  if (cost > budget)
    throw GuardError("assignment sweep needs " + std::to_string(cost) +
                     " bits, budget is " + std::to_string(budget));
  std::map<int, PointSet> asg;
  for (int p : letters) asg[p] = 0;
  for (;;) {
    if (evaluate(b, f, asg) != b.top()) return false;
    // Odometer over carrier elements, earliest letter most significant.
    int i = int(letters.size()) - 1;
    for (; i >= 0; --i) {
      PointSet& v = asg[letters[i]];
      if (v < b.top()) {
        ++v;
        break;
      }
      v = 0;
    }
    if (i < 0) return true;
  }
}

AlgebraHom hom_dual(const PointMap& f) {
  if (!is_interior_map(f))
    throw ValidationError("the dual map is defined for interior maps only");
  AlgebraHom h{complex_algebra(f.target), complex_algebra(f.source), {}, false,
               false};
  const PointSet t = h.domain.top();
  h.map.resize(std::size_t(t) + 1);
  for (PointSet a = 0; a <= t; ++a) h.map[a] = f.preimage(a);

  const PointSet s = h.codomain.top();
  bool ok = h.map[0] == 0 && h.map[t] == s;
  for (PointSet a = 0; ok && a <= t; ++a) {
    if (h.map[t & ~a] != (s & ~h.map[a])) ok = false;
    for (PointSet c = 0; ok && c <= t; ++c)
      if (h.map[a & c] != (h.map[a] & h.map[c]) ||
          h.map[a | c] != (h.map[a] | h.map[c]))
        ok = false;
  }
  h.boolean_hom = ok;

  h.commutes_with_box = true;
  for (PointSet a = 0; a <= t; ++a)
    if (h.map[h.domain.box(a)] != h.codomain.box(h.map[a])) {
      h.commutes_with_box = false;
      break;
    }
  return h;
}

}  // namespace topomodal
