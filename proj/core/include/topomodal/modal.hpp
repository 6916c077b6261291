#ifndef TOPOMODAL_MODAL_HPP
#define TOPOMODAL_MODAL_HPP

#include <memory>
#include <set>
#include <string>
#include <string_view>

#include "topomodal/errors.hpp"

namespace topomodal {

// Constructors of the modal languages.  Everything the surface syntax can
// say is kept primitive (Diamond, Or, Implies, Iff, A are not desugared)
// so parse/print round-trips are structural identities.
enum class MKind {
  Top, Bot,
  Prop,      // p<index>
  Nominal,   // i<index>, denotes a singleton
  Var,       // x<index>, bound by Down
  Not, And, Or, Implies, Iff,
  Box, Diamond,
  E, A,      // somewhere / everywhere
  D,         // somewhere else
  At,        // @t phi, t a nominal or a variable
  Down,      // !x<k>. phi, binds x<k> to the evaluation point
};

struct ModalFormula;
using ModalPtr = std::shared_ptr<const ModalFormula>;

struct ModalFormula {
  MKind kind;
  int index = -1;            // Prop/Nominal/Var index; At target; Down variable
  bool index_is_var = false; // At only: target is a variable, not a nominal
  ModalPtr lhs, rhs;
};

bool structurally_equal(const ModalPtr& a, const ModalPtr& b);

// Builders.
namespace mf {
ModalPtr top();
ModalPtr bot();
ModalPtr prop(int k);
ModalPtr nominal(int k);
ModalPtr var(int k);
ModalPtr negate(const ModalPtr& a);
ModalPtr conj(const ModalPtr& a, const ModalPtr& b);
ModalPtr disj(const ModalPtr& a, const ModalPtr& b);
ModalPtr implies(const ModalPtr& a, const ModalPtr& b);
ModalPtr iff(const ModalPtr& a, const ModalPtr& b);
ModalPtr box(const ModalPtr& a);
ModalPtr diamond(const ModalPtr& a);
ModalPtr e(const ModalPtr& a);
ModalPtr a(const ModalPtr& x);
ModalPtr d(const ModalPtr& x);
ModalPtr at_nominal(int k, const ModalPtr& body);
ModalPtr at_var(int k, const ModalPtr& body);
ModalPtr down(int k, const ModalPtr& body);
}  // namespace mf

// The language family, ordered by constructor inclusion:
// ML < ME < HE < HED, ML < HAt < HE, ML < MD.  MD is incomparable with the
// rest above ML.
enum class Language { ML, ME, MD, HAt, HE, HED };

std::string language_name(Language l);

// Smallest language of the family whose constructors cover the formula.
// Throws ValidationError when none does (D mixed with E or hybrid syntax).
Language language_of(const ModalPtr& f);

struct ModalSymbols {
  std::set<int> props;
  std::set<int> nominals;
  std::set<int> vars;       // all variable indices, bound or free
  std::set<int> free_vars;  // not under a matching Down
};
ModalSymbols modal_symbols(const ModalPtr& f);

// Sentence: no free variables.
bool is_modal_sentence(const ModalPtr& f);

// Concrete syntax.  Atoms T, F, p<k>, i<k>, x<k>; prefix ~ [] <> E A D
// @i<k> @x<k> !x<k>. ; infix & | -> <-> with precedence
// prefix > & > | > -> > <->; -> and <-> associate to the right.
ModalPtr parse_modal(std::string_view text);
std::string print_modal(const ModalPtr& f);

}  // namespace topomodal

#endif
