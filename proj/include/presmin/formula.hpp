#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "presmin/upset.hpp"

namespace presmin {

/// The linear term c·x + k.
struct Term {
  Integer coefficient = 0;
  Integer constant = 0;

  static Term variable() { return {1, 0}; }
  static Term literal(Integer k) { return {0, k}; }

  friend bool operator==(const Term&, const Term&) = default;
};

struct Less {
  Term lhs, rhs;
  friend bool operator==(const Less&, const Less&) = default;
};

struct Equal {
  Term lhs, rhs;
  friend bool operator==(const Equal&, const Equal&) = default;
};

/// term ≡ residue (mod modulus), modulus >= 1, residue reduced.
struct Congruent {
  Term term;
  Natural modulus = 1;
  Natural residue = 0;
  friend bool operator==(const Congruent&, const Congruent&) = default;
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Not {
  FormulaPtr operand;
};
struct And {
  std::vector<FormulaPtr> operands;
};
struct Or {
  std::vector<FormulaPtr> operands;
};
struct Implies {
  FormulaPtr premise, conclusion;
};

/// Quantifier-free formula in the single free variable x. Nodes are
/// immutable and may be shared between trees.
class Formula {
 public:
  using Node = std::variant<Less, Equal, Congruent, Not, And, Or, Implies>;

  explicit Formula(Node node) : node_(std::move(node)) {}

  const Node& node() const { return node_; }

  template <typename T>
  const T* as() const {
    return std::get_if<T>(&node_);
  }

 private:
  Node node_;
};

FormulaPtr make_less(Term lhs, Term rhs);
FormulaPtr make_equal(Term lhs, Term rhs);
/// Reduces the residue; throws DomainError for modulus 0.
FormulaPtr make_congruent(Term term, Natural modulus, Integer residue);
FormulaPtr make_not(FormulaPtr f);
FormulaPtr make_and(std::vector<FormulaPtr> fs);
FormulaPtr make_or(std::vector<FormulaPtr> fs);
FormulaPtr make_implies(FormulaPtr premise, FormulaPtr conclusion);

/// Structural equality of trees.
bool structurally_equal(const Formula& a, const Formula& b);

/// Parses the ASCII surface syntax (with ≡ ≤ ≥ ≠ ∧ ∨ ¬ accepted as
/// synonyms). Throws ParseError with the byte offset of the problem.
FormulaPtr parse_formula(std::string_view text);

/// Prints in the surface syntax; parse_formula(print(f)) is structurally
/// equal to f.
std::string print(const Formula& f);

/// Truth value of the formula at a single point.
bool holds(const Formula& f, Natural x);

/// The exact set of naturals satisfying the formula, canonical.
UPSet eval(const Formula& f);

/// Quantifier-free formula defining `s`: one equality per exceptional point
/// and one bounded congruence per residue, using the canonical threshold and
/// period.
FormulaPtr synthesize(const UPSet& s);

}  // namespace presmin
