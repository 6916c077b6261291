#include "topomodal/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "topomodal/errors.hpp"

namespace topomodal {

namespace {

struct Entry {
  const char* name;
  const char* text;  // null for programmatically built formulas
  const char* what;
};

constexpr std::array<Entry, 8> kModal{{
    {"connectedness", "A([]p0 | []~p0) -> A p0 | A ~p0",
     "valid on a space iff it is connected"},
    {"dii-d", "p0 -> <>D p0",
     "valid on a space iff it is dense-in-itself (difference modality)"},
    {"dii-nom", "<>~i0",
     "valid on a space iff it is dense-in-itself (one nominal)"},
    {"grz", "[]([](p0 -> []p0) -> p0) -> []p0",
     "the Grzegorczyk axiom; valid on a space iff it is hereditarily "
     "irresolvable"},
    {"t0-at", "@i0 <>i1 & @i1 <>i0 -> @i0 i1",
     "valid on a space iff it is T0 (satisfaction operators)"},
    {"t0-d", "(p0 & ~D p0) & D(p1 & ~D p1) -> []~p1 | D(p1 & []~p0)",
     "valid on a space iff it is T0 (difference modality)"},
    {"t1-d", "(p0 & ~D p0) -> (p0 <-> <>p0) & ~D ~(p0 <-> <>p0)",
     "valid on a space iff it is T1 (difference modality)"},
    {"t1-nom", "<>i0 -> i0",
     "valid on a space iff it is T1 (one nominal)"},
}};

constexpr std::array<Entry, 10> kFo{{
    {"chi-n", nullptr,
     "order sentence with no finite models: total antisymmetric "
     "specialization order, least element, immediate successors, least "
     "neighborhoods, interval-shaped proper opens"},
    {"lt-alexandroff",
     "(all-pt x0 (ex-op U0 (and (in x0 U0) (all-op U1 (implies (in x0 U1) "
     "(all-pt x1 (implies (in x1 U0) (in x1 U1))))))))",
     "every point has a least neighborhood; true on every finite space"},
    {"lt-dii",
     "(all-pt x0 (all-op U0 (implies (in x0 U0) (ex-pt x1 (and (not (= x1 "
     "x0)) (in x1 U0))))))",
     "true on a space iff it is dense-in-itself"},
    {"lt-discrete",
     "(all-pt x0 (ex-op U0 (and (in x0 U0) (all-pt x1 (implies (in x1 U0) "
     "(= x1 x0))))))",
     "true on a space iff it is discrete"},
    {"lt-regular",
     "(all-pt x0 (all-op U0 (implies (in x0 U0) (ex-op U1 (and (in x0 U1) "
     "(all-pt x1 (or (in x1 U0) (ex-op U2 (and (in x1 U2) (all-pt x2 "
     "(implies (in x2 U2) (not (in x2 U1)))))))))))))",
     "true on a space iff it is regular"},
    {"lt-t0",
     "(all-pt x0 (all-pt x1 (implies (not (= x0 x1)) (or (ex-op U0 (and (in "
     "x0 U0) (not (in x1 U0)))) (ex-op U1 (and (in x1 U1) (not (in x0 "
     "U1))))))))",
     "true on a space iff it is T0"},
    {"lt-t1",
     "(all-pt x0 (all-pt x1 (implies (not (= x0 x1)) (ex-op U0 (and (in x0 "
     "U0) (not (in x1 U0)))))))",
     "true on a space iff it is T1"},
    {"lt-t2",
     "(all-pt x0 (all-pt x1 (implies (not (= x0 x1)) (ex-op U0 (and (in x0 "
     "U0) (ex-op U1 (and (in x1 U1) (all-pt x2 (or (not (in x2 U0)) (not "
     "(in x2 U1)))))))))))",
     "true on a space iff it is T2"},
    {"non-lt-witness",
     "(ex-op U0 (and (in x0 U0) (ex-pt x1 (and (not (= x1 x0)) (in x1 "
     "U0)))))",
     "open formula rejected by lt_check; its truth value over a base can "
     "differ from its truth value over the generated topology"},
    {"spec-order",
     "(all-op U0 (implies (in x0 U0) (in x1 U0)))",
     "free x0, x1: every open containing x0 contains x1, i.e. x0 lies "
     "below x1 in the specialization order (x0 in the closure of {x1})"},
}};

std::string lowered(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

const Entry* find(const std::string& name, const Entry* first, const Entry* last) {
  const std::string key = lowered(name);
  for (const Entry* e = first; e != last; ++e)
    if (key == e->name) return e;
  return nullptr;
}

// x <= y in the specialization order, via opens.  Binds U1 only, so it can
// sit under a quantifier over U0 without capture.
FoPtr leq(int x, int y) {
  return ff::forall_op(1, ff::implies(ff::in(x, 1), ff::in(y, 1)));
}

FoPtr lt(int x, int y) { return ff::conj(leq(x, y), ff::negate(ff::eq_pt(x, y))); }

// Conjunction of: antisymmetry, totality, a least element, an immediate
// successor above every point, a least neighborhood at every point, and
// every proper nonempty open being a union of an initial and a final
// interval with excluded endpoints.  Any model's specialization order
// would be a linear order where each point has a strict successor, which
// no finite space admits.
FoPtr build_chi_n() {
  using namespace ff;
  FoPtr antisym = forall_pt(
      0, forall_pt(1, implies(conj(leq(0, 1), leq(1, 0)), eq_pt(0, 1))));
  FoPtr total = forall_pt(0, forall_pt(1, disj(leq(0, 1), leq(1, 0))));
  FoPtr least = exists_pt(0, forall_pt(1, leq(0, 1)));
  FoPtr successor = forall_pt(
      0, exists_pt(1, conj(lt(0, 1),
                           forall_pt(2, implies(lt(0, 2), leq(1, 2))))));
  FoPtr least_nbhd = forall_pt(
      0, exists_op(0, conj(in(0, 0),
                           forall_op(1, implies(in(0, 1),
                                                forall_pt(1, implies(in(1, 0),
                                                                     in(1, 1))))))));
  FoPtr boundary =
      conj(conj(negate(in(1, 0)), negate(in(2, 0))),
           forall_pt(3, implies(disj(lt(3, 1), lt(2, 3)), in(3, 0))));
  FoPtr opens_are_intervals = forall_op(
      0, implies(conj(exists_pt(0, negate(in(0, 0))), exists_pt(0, in(0, 0))),
                 exists_pt(1, exists_pt(2, boundary))));
  return conj(conj(conj(conj(conj(antisym, total), least), successor),
                   least_nbhd),
              opens_are_intervals);
}

}  // namespace

std::vector<std::string> modal_catalog_names() {
  std::vector<std::string> out;
  for (const auto& e : kModal) out.push_back(e.name);
  return out;
}

std::vector<std::string> fo_catalog_names() {
  std::vector<std::string> out;
  for (const auto& e : kFo) out.push_back(e.name);
  return out;
}

ModalPtr named_modal_formula(const std::string& name) {
  const Entry* e = find(name, kModal.begin(), kModal.end());
  if (!e)
    throw ValidationError("unknown modal catalog name '" + name + "'");
  return parse_modal(e->text);
}

FoPtr named_fo_formula(const std::string& name) {
  const Entry* e = find(name, kFo.begin(), kFo.end());
  if (!e)
    throw ValidationError("unknown first-order catalog name '" + name + "'");
  if (!e->text) return build_chi_n();
  return parse_fo(e->text);
}

std::string catalog_description(const std::string& name) {
  if (const Entry* e = find(name, kModal.begin(), kModal.end())) return e->what;
  if (const Entry* e = find(name, kFo.begin(), kFo.end())) return e->what;
  throw ValidationError("unknown catalog name '" + name + "'");
}

ModalPtr modal_formula_or_name(const std::string& text) {
  if (find(text, kModal.begin(), kModal.end())) return named_modal_formula(text);
  return parse_modal(text);
}

FoPtr fo_formula_or_name(const std::string& text) {
  if (find(text, kFo.begin(), kFo.end())) return named_fo_formula(text);
  return parse_fo(text);
}

}  // namespace topomodal
