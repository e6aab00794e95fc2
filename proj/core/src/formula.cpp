#include "qcw/formula.hpp"

namespace qcw {

Pointclass Atom::base_class() const {
  switch (kind) {
    case AtomKind::Clopen: return Pointclass::delta0(1);
    case AtomKind::Open: return Pointclass::sigma0(1);
    case AtomKind::Closed: return Pointclass::pi0(1);
    case AtomKind::StableExists: return Pointclass::sigma0(1);
    case AtomKind::Opaque: return opaque_class;
  }
  return opaque_class;
}

bool operator==(const Atom& a, const Atom& b) {
  if (a.name != b.name || a.kind != b.kind || a.variables != b.variables) return false;
  return a.kind != AtomKind::Opaque || a.opaque_class == b.opaque_class;
}

FormulaError::FormulaError(Code code, int line, int column, const std::string& what)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      code_(code),
      line_(line),
      column_(column) {}

Formula Formula::make_atom(Atom a) {
  auto n = std::make_shared<Node>(Node{Tag::Atom, std::move(a), {}, {}, {}});
  return Formula(std::move(n));
}

Formula Formula::negation(Formula f) {
  auto n = std::make_shared<Node>(Node{Tag::Not, {}, {}, {}, {std::move(f)}});
  return Formula(std::move(n));
}

Formula Formula::conjunction(Formula a, Formula b) {
  auto n = std::make_shared<Node>(Node{Tag::And, {}, {}, {}, {std::move(a), std::move(b)}});
  return Formula(std::move(n));
}

Formula Formula::disjunction(Formula a, Formula b) {
  auto n = std::make_shared<Node>(Node{Tag::Or, {}, {}, {}, {std::move(a), std::move(b)}});
  return Formula(std::move(n));
}

Formula Formula::quantified(Quantifier q, std::string variable, Formula body) {
  auto n = std::make_shared<Node>(
      Node{Tag::Quantified, {}, q, std::move(variable), {std::move(body)}});
  return Formula(std::move(n));
}

const Atom& Formula::atom() const {
  if (tag() != Tag::Atom) throw std::logic_error("Formula::atom on a non-atom");
  return node_->atom;
}

Quantifier Formula::quantifier() const {
  if (tag() != Tag::Quantified) throw std::logic_error("Formula::quantifier on a non-quantifier");
  return node_->quantifier;
}

const std::string& Formula::variable() const {
  if (tag() != Tag::Quantified) throw std::logic_error("Formula::variable on a non-quantifier");
  return node_->variable;
}

bool Formula::is_negation_normal() const {
  switch (tag()) {
    case Tag::Atom: return true;
    case Tag::Not: return child(0).tag() == Tag::Atom;
    case Tag::And:
    case Tag::Or: return child(0).is_negation_normal() && child(1).is_negation_normal();
    case Tag::Quantified: return child(0).is_negation_normal();
  }
  return false;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.tag() != b.tag()) return false;
  switch (a.tag()) {
    case Formula::Tag::Atom:
      return a.atom() == b.atom();
    case Formula::Tag::Quantified:
      if (a.quantifier() != b.quantifier() || a.variable() != b.variable()) return false;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < a.child_count(); ++i)
    if (!(a.child(i) == b.child(i))) return false;
  return true;
}

namespace {

std::string kind_keyword(const Atom& a) {
  switch (a.kind) {
    case AtomKind::Clopen: return "clopen";
    case AtomKind::Open: return "open";
    case AtomKind::Closed: return "closed";
    case AtomKind::StableExists: return "stex";
    case AtomKind::Opaque: return "borel@" + to_string(a.opaque_class);
  }
  return "?";
}

const char* quantifier_keyword(Quantifier q) {
  switch (q) {
    case Quantifier::ForallCountable: return "A";
    case Quantifier::ExistsCountable: return "E";
    case Quantifier::ExistsCompact: return "Ec";
    case Quantifier::ExistsPolish: return "Ep";
  }
  return "?";
}

// Precedence levels: 0 formula (quantifiers allowed), 1 disjunction, 2 conjunction, 3 negation operand.
void print(const Formula& f, int context, std::string& out) {
  using Tag = Formula::Tag;
  switch (f.tag()) {
    case Tag::Atom: {
      const Atom& a = f.atom();
      out += kind_keyword(a);
      out += '(';
      out += a.name;
      for (const auto& v : a.variables) {
        out += ", ";
        out += v;
      }
      out += ')';
      return;
    }
    case Tag::Not:
      out += "not ";
      print(f.child(0), 3, out);
      return;
    case Tag::Quantified: {
      const bool wrap = context > 0;
      if (wrap) out += '(';
      out += quantifier_keyword(f.quantifier());
      out += ' ';
      out += f.variable();
      out += ". ";
      print(f.child(0), 0, out);
      if (wrap) out += ')';
      return;
    }
    case Tag::Or:
    case Tag::And: {
      const bool is_or = f.tag() == Tag::Or;
      const int mine = is_or ? 1 : 2;
      const bool wrap = context > mine;
      if (wrap) out += '(';
      // left-associative chains: the left operand may be the same operator unparenthesised
      print(f.child(0), mine, out);
      out += is_or ? " | " : " & ";
      print(f.child(1), mine + 1, out);
      if (wrap) out += ')';
      return;
    }
  }
}

Formula negate_into(const Formula& f);

Formula push(const Formula& f) {
  using Tag = Formula::Tag;
  switch (f.tag()) {
    case Tag::Atom: return f;
    case Tag::Not: return negate_into(f.child(0));
    case Tag::And: return Formula::conjunction(push(f.child(0)), push(f.child(1)));
    case Tag::Or: return Formula::disjunction(push(f.child(0)), push(f.child(1)));
    case Tag::Quantified: return Formula::quantified(f.quantifier(), f.variable(), push(f.child(0)));
  }
  return f;
}

// Negation-normal form of NOT f.
Formula negate_into(const Formula& f) {
  using Tag = Formula::Tag;
  switch (f.tag()) {
    case Tag::Atom: return Formula::negation(f);
    case Tag::Not: return push(f.child(0));
    case Tag::And: return Formula::disjunction(negate_into(f.child(0)), negate_into(f.child(1)));
    case Tag::Or: return Formula::conjunction(negate_into(f.child(0)), negate_into(f.child(1)));
    case Tag::Quantified:
      switch (f.quantifier()) {
        case Quantifier::ForallCountable:
          return Formula::quantified(Quantifier::ExistsCountable, f.variable(),
                                     negate_into(f.child(0)));
        case Quantifier::ExistsCountable:
          return Formula::quantified(Quantifier::ForallCountable, f.variable(),
                                     negate_into(f.child(0)));
        case Quantifier::ExistsCompact:
          throw NegationError("negated compact projection over '" + f.variable() +
                              "' has no dual rule");
        case Quantifier::ExistsPolish:
          throw NegationError("negated Polish projection over '" + f.variable() +
                              "' has no dual rule");
      }
  }
  return f;
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print(f, 0, out);
  return out;
}

Formula push_negations(const Formula& f) { return push(f); }

}  // namespace qcw
