#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "llg/errors.hpp"

namespace llg {

enum class Tag : std::uint8_t {
  Zero,
  One,
  Top,
  Bot,
  Tensor,
  Par,
  Plus,
  With,
  OfCourse,
  WhyNot,
  Atom,
};

enum class Polarity : std::uint8_t { Positive, Negative };

// Immutable formula tree. Values share structure; equality is structural.
// Atoms carry an explicit sign so duality is a total syntactic involution.
class Formula {
 public:
  static Formula zero();
  static Formula one();
  static Formula top();
  static Formula bot();
  static Formula tensor(Formula a, Formula b);
  static Formula par(Formula a, Formula b);
  static Formula plus(Formula a, Formula b);
  static Formula with(Formula a, Formula b);
  static Formula of_course(Formula a);
  static Formula why_not(Formula a);
  static Formula atom(std::string name, bool positive = true);

  Tag tag() const { return node_->tag; }
  bool is(Tag t) const { return node_->tag == t; }

  // Binary connectives.
  Formula left() const;
  Formula right() const;
  // Unary connectives (! and ?).
  Formula child() const;
  // Atoms.
  const std::string& atom_name() const;
  bool atom_positive() const;

  bool operator==(const Formula& o) const;
  bool operator!=(const Formula& o) const { return !(*this == o); }

  std::uint64_t hash() const { return node_->hash; }
  int depth() const { return node_->depth; }  // leaf = 0
  int size() const { return node_->size; }    // number of nodes

 private:
  struct Node {
    Tag tag;
    std::shared_ptr<const Node> a, b;
    std::string name;
    bool positive = true;
    std::uint64_t hash = 0;
    int depth = 0;
    int size = 1;
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Tag t, const Formula* a, const Formula* b,
                      std::string name = {}, bool positive = true);

  std::shared_ptr<const Node> node_;
};

Polarity polarity(const Formula& a);
bool positive(const Formula& a);

// Connective-wise De Morgan dual; an involution.
Formula dual(const Formula& a);

enum class PowerMode { Tensor, Par };

// n-fold connective power, left-nested: 0 -> unit, 1 -> a, n -> (pow(n-1) op a).
Formula power(const Formula& a, int n, PowerMode mode);

// !(?dual(a) par (!a tensor !a)), i.e. !(!a -o !a tensor !a).
Formula duplicator(const Formula& a);

// Recovers `a` from duplicator(a); returns false if the shape does not match.
bool duplicator_body(const Formula& d, Formula* body);

// Replaces Atom(name,+) by b and Atom(name,-) by dual(b), in one pass.
Formula substitute(const Formula& a, const std::string& name, const Formula& b);

bool atom_free(const Formula& a);

// Canonical ASCII rendering; parse(to_string(a)) == a.
std::string to_string(const Formula& a);

// ASCII grammar: units 0 1 T B; binary * (tensor), @ (par), + (plus),
// & (with); prefix ! ?; postfix ^ (dual); infix -o (desugared on the spot);
// atoms are identifiers. Tightest first: ^, !/?, *, &, +, @, -o; binaries
// left-associative.
Formula parse_formula(std::string_view text);

using Sequent = std::vector<Formula>;

std::string to_string(const Sequent& s);
// Comma-separated formulas.
Sequent parse_sequent(std::string_view text);

bool atom_free(const Sequent& s);
bool multiset_equal(const Sequent& a, const Sequent& b);
Sequent erased_at(const Sequent& s, std::size_t i);
Sequent inserted_at(const Sequent& s, std::size_t i, const Formula& f);
Sequent replaced_at(const Sequent& s, std::size_t i, const Formula& f);

}  // namespace llg
