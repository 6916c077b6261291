#include "topomodal/modal.hpp"

#include <cctype>
#include <optional>

namespace topomodal {

namespace {

ModalPtr make(MKind k, int index, bool index_is_var, ModalPtr lhs, ModalPtr rhs) {
  auto f = std::make_shared<ModalFormula>();
  f->kind = k;
  f->index = index;
  f->index_is_var = index_is_var;
  f->lhs = std::move(lhs);
  f->rhs = std::move(rhs);
  return f;
}

}  // namespace

namespace mf {
ModalPtr top() { return make(MKind::Top, -1, false, nullptr, nullptr); }
ModalPtr bot() { return make(MKind::Bot, -1, false, nullptr, nullptr); }
ModalPtr prop(int k) { return make(MKind::Prop, k, false, nullptr, nullptr); }
ModalPtr nominal(int k) { return make(MKind::Nominal, k, false, nullptr, nullptr); }
ModalPtr var(int k) { return make(MKind::Var, k, false, nullptr, nullptr); }
ModalPtr negate(const ModalPtr& a) { return make(MKind::Not, -1, false, a, nullptr); }
ModalPtr conj(const ModalPtr& a, const ModalPtr& b) { return make(MKind::And, -1, false, a, b); }
ModalPtr disj(const ModalPtr& a, const ModalPtr& b) { return make(MKind::Or, -1, false, a, b); }
ModalPtr implies(const ModalPtr& a, const ModalPtr& b) { return make(MKind::Implies, -1, false, a, b); }
ModalPtr iff(const ModalPtr& a, const ModalPtr& b) { return make(MKind::Iff, -1, false, a, b); }
ModalPtr box(const ModalPtr& a) { return make(MKind::Box, -1, false, a, nullptr); }
ModalPtr diamond(const ModalPtr& a) { return make(MKind::Diamond, -1, false, a, nullptr); }
ModalPtr e(const ModalPtr& a) { return make(MKind::E, -1, false, a, nullptr); }
ModalPtr a(const ModalPtr& x) { return make(MKind::A, -1, false, x, nullptr); }
ModalPtr d(const ModalPtr& x) { return make(MKind::D, -1, false, x, nullptr); }
ModalPtr at_nominal(int k, const ModalPtr& body) { return make(MKind::At, k, false, body, nullptr); }
ModalPtr at_var(int k, const ModalPtr& body) { return make(MKind::At, k, true, body, nullptr); }
ModalPtr down(int k, const ModalPtr& body) { return make(MKind::Down, k, false, body, nullptr); }
}  // namespace mf

bool structurally_equal(const ModalPtr& a, const ModalPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->index != b->index || a->index_is_var != b->index_is_var)
    return false;
  return structurally_equal(a->lhs, b->lhs) && structurally_equal(a->rhs, b->rhs);
}

std::string language_name(Language l) {
  switch (l) {
    case Language::ML: return "ML";
    case Language::ME: return "M(E)";
    case Language::MD: return "M(D)";
    case Language::HAt: return "H(@)";
    case Language::HE: return "H(E)";
    case Language::HED: return "H(E,down)";
  }
  return "?";
}

namespace {

struct LanguageFlags {
  bool has_e = false;
  bool has_d = false;
  bool has_hybrid = false;  // nominals or @
  bool has_var = false;     // variables or binders
};

void scan(const ModalPtr& f, LanguageFlags& out) {
  if (!f) return;
  switch (f->kind) {
    case MKind::E:
    case MKind::A: out.has_e = true; break;
    case MKind::D: out.has_d = true; break;
    case MKind::Nominal: out.has_hybrid = true; break;
    case MKind::At:
      out.has_hybrid = true;
      if (f->index_is_var) out.has_var = true;
      break;
    case MKind::Var:
    case MKind::Down: out.has_var = true; break;
    default: break;
  }
  scan(f->lhs, out);
  scan(f->rhs, out);
}

}  // namespace

Language language_of(const ModalPtr& f) {
  LanguageFlags fl;
  scan(f, fl);
  if (fl.has_d && (fl.has_e || fl.has_hybrid || fl.has_var))
    throw ValidationError("no language in the family combines D with global or hybrid syntax");
  if (fl.has_d) return Language::MD;
  if (fl.has_var) return Language::HED;
  if (fl.has_hybrid) return fl.has_e ? Language::HE : Language::HAt;
  if (fl.has_e) return Language::ME;
  return Language::ML;
}

namespace {

void collect_symbols(const ModalPtr& f, ModalSymbols& out, std::set<int>& bound) {
  if (!f) return;
  switch (f->kind) {
    case MKind::Prop: out.props.insert(f->index); return;
    case MKind::Nominal: out.nominals.insert(f->index); return;
    case MKind::Var:
      out.vars.insert(f->index);
      if (!bound.count(f->index)) out.free_vars.insert(f->index);
      return;
    case MKind::At:
      if (f->index_is_var) {
        out.vars.insert(f->index);
        if (!bound.count(f->index)) out.free_vars.insert(f->index);
      } else {
        out.nominals.insert(f->index);
      }
      collect_symbols(f->lhs, out, bound);
      return;
    case MKind::Down: {
      out.vars.insert(f->index);
      bool was_bound = bound.count(f->index) > 0;
      bound.insert(f->index);
      collect_symbols(f->lhs, out, bound);
      if (!was_bound) bound.erase(f->index);
      return;
    }
    default:
      collect_symbols(f->lhs, out, bound);
      collect_symbols(f->rhs, out, bound);
  }
}

}  // namespace

ModalSymbols modal_symbols(const ModalPtr& f) {
  ModalSymbols out;
  std::set<int> bound;
  collect_symbols(f, out, bound);
  return out;
}

bool is_modal_sentence(const ModalPtr& f) {
  return modal_symbols(f).free_vars.empty();
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct ModalParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(std::string_view tok) {
    skip_ws();
    if (text.substr(pos, tok.size()) == tok) {
      pos += tok.size();
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

  // Reads a letter word plus an optional index: T, F, E, A, D, p0, i1, x2.
  struct Word {
    char head = 0;
    int index = -1;
  };

  std::optional<Word> peek_word() {
    skip_ws();
    if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos])))
      return std::nullopt;
    std::size_t p = pos;
    std::string letters;
    while (p < text.size() && std::isalpha(static_cast<unsigned char>(text[p])))
      letters += text[p++];
    if (letters.size() != 1) fail("unknown word '" + letters + "'");
    Word w;
    w.head = letters[0];
    std::size_t digits = p;
    while (digits < text.size() && std::isdigit(static_cast<unsigned char>(text[digits])))
      ++digits;
    if (digits > p) w.index = std::stoi(std::string(text.substr(p, digits - p)));
    return w;
  }

  Word take_word() {
    auto w = peek_word();
    if (!w) fail("expected a name");
    std::size_t p = pos;
    while (p < text.size() && std::isalpha(static_cast<unsigned char>(text[p]))) ++p;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
    pos = p;
    return *w;
  }

  int take_indexed(char head) {
    skip_ws();
    auto w = peek_word();
    if (!w || w->head != head || w->index < 0)
      fail(std::string("expected ") + head + "<k>");
    take_word();
    return w->index;
  }

  ModalPtr parse_formula() { return parse_iff(); }

  ModalPtr parse_iff() {
    ModalPtr lhs = parse_implies();
    if (eat("<->")) return mf::iff(lhs, parse_iff());
    return lhs;
  }

  ModalPtr parse_implies() {
    ModalPtr lhs = parse_or();
    skip_ws();
    // careful: "->" but not "<->" (handled above before we get here)
    if (text.substr(pos, 2) == "->") {
      pos += 2;
      return mf::implies(lhs, parse_implies());
    }
    return lhs;
  }

  ModalPtr parse_or() {
    ModalPtr lhs = parse_and();
    while (true) {
      skip_ws();
      if (text.substr(pos, 1) == "|" ) {
        pos += 1;
        lhs = mf::disj(lhs, parse_and());
      } else {
        return lhs;
      }
    }
  }

  ModalPtr parse_and() {
    ModalPtr lhs = parse_prefix();
    while (eat("&")) lhs = mf::conj(lhs, parse_prefix());
    return lhs;
  }

  ModalPtr parse_prefix() {
    skip_ws();
    if (eat("~")) return mf::negate(parse_prefix());
    if (eat("[]")) return mf::box(parse_prefix());
    if (eat("<>")) return mf::diamond(parse_prefix());
    if (eat("@")) {
      auto w = peek_word();
      if (!w || (w->head != 'i' && w->head != 'x') || w->index < 0)
        fail("expected i<k> or x<k> after @");
      take_word();
      ModalPtr body = parse_prefix();
      return w->head == 'i' ? mf::at_nominal(w->index, body) : mf::at_var(w->index, body);
    }
    if (eat("!")) {
      int v = take_indexed('x');
      if (!eat(".")) fail("expected '.' after binder variable");
      return mf::down(v, parse_prefix());
    }
    if (auto w = peek_word(); w && (w->head == 'E' || w->head == 'A' || w->head == 'D') &&
                              w->index < 0) {
      take_word();
      ModalPtr body = parse_prefix();
      if (w->head == 'E') return mf::e(body);
      if (w->head == 'A') return mf::a(body);
      return mf::d(body);
    }
    return parse_atom();
  }

  ModalPtr parse_atom() {
    skip_ws();
    if (eat("(")) {
      ModalPtr f = parse_formula();
      if (!eat(")")) fail("expected ')'");
      return f;
    }
    auto w = peek_word();
    if (!w) fail("expected a formula");
    take_word();
    if (w->index < 0) {
      if (w->head == 'T') return mf::top();
      if (w->head == 'F') return mf::bot();
      fail(std::string("unexpected '") + w->head + "'");
    }
    if (w->head == 'p') return mf::prop(w->index);
    if (w->head == 'i') return mf::nominal(w->index);
    if (w->head == 'x') return mf::var(w->index);
    fail(std::string("unexpected '") + w->head + std::to_string(w->index) + "'");
  }
};

}  // namespace

ModalPtr parse_modal(std::string_view text) {
  ModalParser p{text};
  ModalPtr f = p.parse_formula();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return f;
}

// ---------------------------------------------------------------------------
// Printer

namespace {

// Precedence levels: <-> 1, -> 2, | 3, & 4, prefix 5, atoms 6.
int level_of(const ModalPtr& f) {
  switch (f->kind) {
    case MKind::Iff: return 1;
    case MKind::Implies: return 2;
    case MKind::Or: return 3;
    case MKind::And: return 4;
    case MKind::Not:
    case MKind::Box:
    case MKind::Diamond:
    case MKind::E:
    case MKind::A:
    case MKind::D:
    case MKind::At:
    case MKind::Down: return 5;
    default: return 6;
  }
}

void print_into(const ModalPtr& f, int min_level, std::string& out) {
  int lvl = level_of(f);
  bool parens = lvl < min_level;
  if (parens) out += "(";
  switch (f->kind) {
    case MKind::Top: out += "T"; break;
    case MKind::Bot: out += "F"; break;
    case MKind::Prop: out += "p" + std::to_string(f->index); break;
    case MKind::Nominal: out += "i" + std::to_string(f->index); break;
    case MKind::Var: out += "x" + std::to_string(f->index); break;
    case MKind::Not:
      out += "~";
      print_into(f->lhs, 5, out);
      break;
    case MKind::Box:
      out += "[]";
      print_into(f->lhs, 5, out);
      break;
    case MKind::Diamond:
      out += "<>";
      print_into(f->lhs, 5, out);
      break;
    case MKind::E:
      out += "E ";
      print_into(f->lhs, 5, out);
      break;
    case MKind::A:
      out += "A ";
      print_into(f->lhs, 5, out);
      break;
    case MKind::D:
      out += "D ";
      print_into(f->lhs, 5, out);
      break;
    case MKind::At:
      out += "@";
      out += (f->index_is_var ? "x" : "i") + std::to_string(f->index);
      out += " ";
      print_into(f->lhs, 5, out);
      break;
    case MKind::Down:
      out += "!x" + std::to_string(f->index) + ".";
      print_into(f->lhs, 5, out);
      break;
    case MKind::And:
      print_into(f->lhs, 4, out);
      out += " & ";
      print_into(f->rhs, 5, out);
      break;
    case MKind::Or:
      print_into(f->lhs, 3, out);
      out += " | ";
      print_into(f->rhs, 4, out);
      break;
    case MKind::Implies:
      print_into(f->lhs, 3, out);
      out += " -> ";
      print_into(f->rhs, 2, out);
      break;
    case MKind::Iff:
      print_into(f->lhs, 2, out);
      out += " <-> ";
      print_into(f->rhs, 1, out);
      break;
  }
  if (parens) out += ")";
}

}  // namespace

std::string print_modal(const ModalPtr& f) {
  std::string out;
  print_into(f, 0, out);
  return out;
}

}  // namespace topomodal
