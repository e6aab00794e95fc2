#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qcw/pointclass.hpp"

namespace qcw {

enum class AtomKind { Clopen, Open, Closed, StableExists, Opaque };

struct Atom {
  std::string name;
  AtomKind kind = AtomKind::Clopen;
  Pointclass opaque_class;  // only read when kind == Opaque
  std::vector<std::string> variables;

  /// CLOPEN -> Delta0_1, OPEN -> Sigma0_1, CLOSED -> Pi0_1,
  /// STABLE_EXISTS -> Sigma0_1 (stable existence is ranked as open), OPAQUE(g) -> g.
  [[nodiscard]] Pointclass base_class() const;

  friend bool operator==(const Atom&, const Atom&);
};

enum class Quantifier { ForallCountable, ExistsCountable, ExistsCompact, ExistsPolish };

/// Immutable formula tree. Copies share structure.
class Formula {
 public:
  enum class Tag { Atom, Not, And, Or, Quantified };

  static Formula make_atom(Atom a);
  static Formula negation(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);
  static Formula quantified(Quantifier q, std::string variable, Formula body);

  [[nodiscard]] Tag tag() const { return node_->tag; }
  [[nodiscard]] const Atom& atom() const;
  [[nodiscard]] Quantifier quantifier() const;
  [[nodiscard]] const std::string& variable() const;
  /// Not: child(0). And/Or: child(0), child(1). Quantified: child(0) is the body.
  [[nodiscard]] const Formula& child(std::size_t i) const { return node_->children.at(i); }
  [[nodiscard]] std::size_t child_count() const { return node_->children.size(); }

  /// NOT occurs only directly above atoms.
  [[nodiscard]] bool is_negation_normal() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Tag tag;
    Atom atom;
    Quantifier quantifier = Quantifier::ForallCountable;
    std::string variable;
    std::vector<Formula> children;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

class FormulaError : public std::runtime_error {
 public:
  enum class Code { Syntax, UnboundVariable, DuplicateBinder };
  FormulaError(Code code, int line, int column, const std::string& what);
  [[nodiscard]] Code code() const { return code_; }
  [[nodiscard]] int line() const { return line_; }
  [[nodiscard]] int column() const { return column_; }

 private:
  Code code_;
  int line_;
  int column_;
};

/// Raised by push_negations for a negated compact or Polish projection.
class NegationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Grammar:
///   formula := quant | disj
///   quant   := ("A"|"E"|"Ec"|"Ep") ident "." formula
///   disj    := conj ("|" conj)*
///   conj    := neg ("&" neg)*
///   neg     := "not" neg | "(" formula ")" | atom
///   atom    := kind "(" ident ("," ident)* ")"
///   kind    := clopen | open | closed | stex | borel@<pointclass>
/// `#` starts a comment running to end of line. Chains of & and | associate left.
Formula parse_formula(std::string_view text);

/// Canonical concrete syntax with minimal parentheses; parse_formula inverts it.
std::string to_string(const Formula& f);

Formula push_negations(const Formula& f);

struct RankOptions {
  int max_level = kDefaultMaxLevel;
};

struct RankResult {
  Pointclass pointclass;
  std::vector<std::string> warnings;
};

/// Bottom-up upper bound for the complexity of the set a formula defines.
/// Requires negation-normal input (std::invalid_argument otherwise).
RankResult rank(const Formula& f, const RankOptions& options = {});

/// parse -> push_negations -> rank.
RankResult analyze(std::string_view text, const RankOptions& options = {});

struct CatalogueEntry {
  std::string name;
  std::string description;
  std::string formula;  // concrete syntax
  Pointclass expected;
  bool exact = false;
};

const std::vector<CatalogueEntry>& catalogue();

struct CatalogueCheck {
  const CatalogueEntry* entry = nullptr;
  Pointclass computed;
  bool passed = false;
  std::vector<std::string> warnings;
};

/// Runs every catalogue entry: computed <= expected, and equality when exact.
std::vector<CatalogueCheck> check_catalogue(const RankOptions& options = {});

}  // namespace qcw
