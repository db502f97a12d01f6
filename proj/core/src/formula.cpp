#include "llg/formula.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace llg {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

std::uint64_t str_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

Formula Formula::make(Tag t, const Formula* a, const Formula* b,
                      std::string name, bool positive) {
  auto n = std::make_shared<Node>();
  n->tag = t;
  n->name = std::move(name);
  n->positive = positive;
  std::uint64_t h = mix(0x51ede852, static_cast<std::uint64_t>(t));
  if (a) {
    n->a = a->node_;
    h = mix(h, a->hash());
    n->depth = std::max(n->depth, a->depth() + 1);
    n->size += a->size();
  }
  if (b) {
    n->b = b->node_;
    h = mix(h, b->hash());
    n->depth = std::max(n->depth, b->depth() + 1);
    n->size += b->size();
  }
  if (t == Tag::Atom) {
    h = mix(h, str_hash(n->name));
    h = mix(h, positive ? 7 : 13);
  }
  n->hash = h;
  return Formula(std::move(n));
}

Formula Formula::zero() { return make(Tag::Zero, nullptr, nullptr); }
Formula Formula::one() { return make(Tag::One, nullptr, nullptr); }
Formula Formula::top() { return make(Tag::Top, nullptr, nullptr); }
Formula Formula::bot() { return make(Tag::Bot, nullptr, nullptr); }
Formula Formula::tensor(Formula a, Formula b) { return make(Tag::Tensor, &a, &b); }
Formula Formula::par(Formula a, Formula b) { return make(Tag::Par, &a, &b); }
Formula Formula::plus(Formula a, Formula b) { return make(Tag::Plus, &a, &b); }
Formula Formula::with(Formula a, Formula b) { return make(Tag::With, &a, &b); }
Formula Formula::of_course(Formula a) { return make(Tag::OfCourse, &a, nullptr); }
Formula Formula::why_not(Formula a) { return make(Tag::WhyNot, &a, nullptr); }
Formula Formula::atom(std::string name, bool positive) {
  return make(Tag::Atom, nullptr, nullptr, std::move(name), positive);
}

Formula Formula::left() const { return Formula(node_->a); }
Formula Formula::right() const { return Formula(node_->b); }
Formula Formula::child() const { return Formula(node_->a); }
const std::string& Formula::atom_name() const { return node_->name; }
bool Formula::atom_positive() const { return node_->positive; }

bool Formula::operator==(const Formula& o) const {
  if (node_ == o.node_) return true;
  if (node_->hash != o.node_->hash || node_->tag != o.node_->tag) return false;
  switch (node_->tag) {
    case Tag::Zero:
    case Tag::One:
    case Tag::Top:
    case Tag::Bot:
      return true;
    case Tag::Atom:
      return node_->name == o.node_->name && node_->positive == o.node_->positive;
    case Tag::OfCourse:
    case Tag::WhyNot:
      return left() == o.left();
    default:
      return left() == o.left() && right() == o.right();
  }
}

Polarity polarity(const Formula& a) {
  switch (a.tag()) {
    case Tag::Zero:
    case Tag::One:
    case Tag::Tensor:
    case Tag::Plus:
    case Tag::WhyNot:
      return Polarity::Positive;
    case Tag::Atom:
      return a.atom_positive() ? Polarity::Positive : Polarity::Negative;
    default:
      return Polarity::Negative;
  }
}

bool positive(const Formula& a) { return polarity(a) == Polarity::Positive; }

Formula dual(const Formula& a) {
  switch (a.tag()) {
    case Tag::Zero: return Formula::top();
    case Tag::Top: return Formula::zero();
    case Tag::One: return Formula::bot();
    case Tag::Bot: return Formula::one();
    case Tag::Tensor: return Formula::par(dual(a.left()), dual(a.right()));
    case Tag::Par: return Formula::tensor(dual(a.left()), dual(a.right()));
    case Tag::Plus: return Formula::with(dual(a.left()), dual(a.right()));
    case Tag::With: return Formula::plus(dual(a.left()), dual(a.right()));
    case Tag::OfCourse: return Formula::why_not(dual(a.child()));
    case Tag::WhyNot: return Formula::of_course(dual(a.child()));
    case Tag::Atom: return Formula::atom(a.atom_name(), !a.atom_positive());
  }
  throw Error("unreachable formula tag");
}

Formula power(const Formula& a, int n, PowerMode mode) {
  if (n < 0) throw Error("power: negative exponent");
  if (n == 0) return mode == PowerMode::Tensor ? Formula::one() : Formula::bot();
  Formula acc = a;
  for (int i = 1; i < n; ++i)
    acc = mode == PowerMode::Tensor ? Formula::tensor(acc, a) : Formula::par(acc, a);
  return acc;
}

Formula duplicator(const Formula& a) {
  Formula bang = Formula::of_course(a);
  return Formula::of_course(
      Formula::par(Formula::why_not(dual(a)), Formula::tensor(bang, bang)));
}

bool duplicator_body(const Formula& d, Formula* body) {
  if (!d.is(Tag::OfCourse)) return false;
  const Formula& p = d.child();
  if (!p.is(Tag::Par) || !p.left().is(Tag::WhyNot) || !p.right().is(Tag::Tensor))
    return false;
  const Formula& t = p.right();
  if (!t.left().is(Tag::OfCourse) || !t.right().is(Tag::OfCourse)) return false;
  const Formula& a = t.left().child();
  if (t.right().child() != a) return false;
  if (p.left().child() != dual(a)) return false;
  if (body) *body = a;
  return true;
}

Formula substitute(const Formula& a, const std::string& name, const Formula& b) {
  switch (a.tag()) {
    case Tag::Atom:
      if (a.atom_name() == name) return a.atom_positive() ? b : dual(b);
      return a;
    case Tag::OfCourse:
      return Formula::of_course(substitute(a.child(), name, b));
    case Tag::WhyNot:
      return Formula::why_not(substitute(a.child(), name, b));
    case Tag::Tensor:
      return Formula::tensor(substitute(a.left(), name, b), substitute(a.right(), name, b));
    case Tag::Par:
      return Formula::par(substitute(a.left(), name, b), substitute(a.right(), name, b));
    case Tag::Plus:
      return Formula::plus(substitute(a.left(), name, b), substitute(a.right(), name, b));
    case Tag::With:
      return Formula::with(substitute(a.left(), name, b), substitute(a.right(), name, b));
    default:
      return a;
  }
}

bool atom_free(const Formula& a) {
  switch (a.tag()) {
    case Tag::Atom: return false;
    case Tag::OfCourse:
    case Tag::WhyNot: return atom_free(a.child());
    case Tag::Tensor:
    case Tag::Par:
    case Tag::Plus:
    case Tag::With: return atom_free(a.left()) && atom_free(a.right());
    default: return true;
  }
}

namespace {

// Binding strength; larger binds tighter. Atoms/units/postfix are atomic.
int level(const Formula& a) {
  switch (a.tag()) {
    case Tag::Tensor: return 50;
    case Tag::With: return 40;
    case Tag::Plus: return 30;
    case Tag::Par: return 20;
    case Tag::OfCourse:
    case Tag::WhyNot: return 80;
    default: return 100;
  }
}

const char* op_text(Tag t) {
  switch (t) {
    case Tag::Tensor: return " * ";
    case Tag::With: return " & ";
    case Tag::Plus: return " + ";
    case Tag::Par: return " @ ";
    default: return "";
  }
}

void print(const Formula& a, std::string& out) {
  switch (a.tag()) {
    case Tag::Zero: out += '0'; return;
    case Tag::One: out += '1'; return;
    case Tag::Top: out += 'T'; return;
    case Tag::Bot: out += 'B'; return;
    case Tag::Atom:
      out += a.atom_name();
      if (!a.atom_positive()) out += '^';
      return;
    case Tag::OfCourse:
    case Tag::WhyNot: {
      out += a.is(Tag::OfCourse) ? '!' : '?';
      bool paren = level(a.child()) < level(a);
      if (paren) out += '(';
      print(a.child(), out);
      if (paren) out += ')';
      return;
    }
    default: {
      int lv = level(a);
      bool lparen = level(a.left()) < lv;
      if (lparen) out += '(';
      print(a.left(), out);
      if (lparen) out += ')';
      out += op_text(a.tag());
      bool rparen = level(a.right()) <= lv;
      if (rparen) out += '(';
      print(a.right(), out);
      if (rparen) out += ')';
      return;
    }
  }
}

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  bool eat_lolli() {
    skip_ws();
    if (pos + 1 < text.size() && text[pos] == '-' && text[pos + 1] == 'o') {
      pos += 2;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

  Formula parse() {
    Formula f = lolli();
    skip_ws();
    if (pos != text.size()) fail("trailing input");
    return f;
  }

  Formula lolli() {
    Formula acc = par();
    while (eat_lolli()) acc = Formula::par(dual(acc), par());
    return acc;
  }

  Formula par() {
    Formula acc = plus();
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == '@') {
        ++pos;
        acc = Formula::par(acc, plus());
      } else {
        return acc;
      }
    }
  }

  Formula plus() {
    Formula acc = with();
    while (eat('+')) acc = Formula::plus(acc, with());
    return acc;
  }

  Formula with() {
    Formula acc = tens();
    while (eat('&')) acc = Formula::with(acc, tens());
    return acc;
  }

  Formula tens() {
    Formula acc = prefix();
    while (eat('*')) acc = Formula::tensor(acc, prefix());
    return acc;
  }

  Formula prefix() {
    skip_ws();
    if (pos < text.size() && (text[pos] == '!' || text[pos] == '?')) {
      char c = text[pos++];
      Formula inner = prefix();
      return c == '!' ? Formula::of_course(inner) : Formula::why_not(inner);
    }
    return postfix();
  }

  Formula postfix() {
    Formula acc = primary();
    while (eat('^')) acc = dual(acc);
    return acc;
  }

  Formula primary() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      Formula f = lolli();
      if (!eat(')')) fail("expected ')'");
      return f;
    }
    if (c == '0') { ++pos; return Formula::zero(); }
    if (c == '1') { ++pos; return Formula::one(); }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) ||
              text[pos] == '_' || text[pos] == '\''))
        ++pos;
      std::string name(text.substr(start, pos - start));
      if (name == "T") return Formula::top();
      if (name == "B") return Formula::bot();
      return Formula::atom(std::move(name));
    }
    fail("unexpected character");
  }
};

}  // namespace

std::string to_string(const Formula& a) {
  std::string out;
  print(a, out);
  return out;
}

Formula parse_formula(std::string_view text) {
  Parser p{text};
  return p.parse();
}

std::string to_string(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += to_string(s[i]);
  }
  return out;
}

Sequent parse_sequent(std::string_view text) {
  Sequent out;
  std::size_t depth = 0, start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      auto part = text.substr(start, i - start);
      bool blank = true;
      for (char c : part)
        if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
      if (!blank) out.push_back(parse_formula(part));
      start = i + 1;
    } else if (text[i] == '(') {
      ++depth;
    } else if (text[i] == ')') {
      if (depth == 0) throw ParseError("unbalanced ')'", i);
      --depth;
    }
  }
  return out;
}

bool atom_free(const Sequent& s) {
  return std::all_of(s.begin(), s.end(), [](const Formula& f) { return atom_free(f); });
}

bool multiset_equal(const Sequent& a, const Sequent& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::string> xs, ys;
  for (const auto& f : a) xs.push_back(to_string(f));
  for (const auto& f : b) ys.push_back(to_string(f));
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  return xs == ys;
}

Sequent erased_at(const Sequent& s, std::size_t i) {
  Sequent out = s;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
  return out;
}

Sequent inserted_at(const Sequent& s, std::size_t i, const Formula& f) {
  Sequent out = s;
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(i), f);
  return out;
}

Sequent replaced_at(const Sequent& s, std::size_t i, const Formula& f) {
  Sequent out = s;
  out[i] = f;
  return out;
}

}  // namespace llg
