#include "qcw/formula.hpp"

namespace qcw {

namespace {

Pointclass compact_projection(const Pointclass& g, const std::string& var,
                              std::vector<std::string>& warnings) {
  // Projection along a compact factor keeps closed sets closed and sends
  // finite unions of (closed n open) sets to F_sigma sets.
  if (leq(g, Pointclass::pi0(1))) {
    Pointclass out = Pointclass::pi0(1);
    out.saturated = g.saturated;
    return out;
  }
  if (leq(g, Pointclass::locally_closed())) {
    Pointclass out = Pointclass::sigma0(2);
    out.saturated = g.saturated;
    return out;
  }
  if (g.kind == PointclassKind::Pi11)
    throw std::domain_error("compact projection of a Pi1_1 set over '" + var +
                            "' leaves the supported lattice");
  warnings.push_back("Ec " + var + ": body is " + to_string(g) +
                     ", only closed or locally closed bodies project within the Borel "
                     "hierarchy; using Sigma1_1");
  Pointclass out = Pointclass::sigma11();
  out.saturated = g.saturated;
  return out;
}

Pointclass polish_projection(const Pointclass& g, const std::string& var) {
  if (g.kind == PointclassKind::Pi11)
    throw std::domain_error("Polish projection of a Pi1_1 set over '" + var +
                            "' leaves the supported lattice");
  Pointclass out = Pointclass::sigma11();
  out.saturated = g.saturated;
  return out;
}

Pointclass rank_of(const Formula& f, const RankOptions& opt, std::vector<std::string>& warnings) {
  using Tag = Formula::Tag;
  switch (f.tag()) {
    case Tag::Atom:
      return f.atom().base_class();
    case Tag::Not:
      return complement(f.child(0).atom().base_class());
    case Tag::And:
    case Tag::Or:
      return binary_meet_join(rank_of(f.child(0), opt, warnings),
                              rank_of(f.child(1), opt, warnings),
                              f.tag() == Tag::And ? Connective::And : Connective::Or,
                              opt.max_level);
    case Tag::Quantified: {
      const Pointclass body = rank_of(f.child(0), opt, warnings);
      switch (f.quantifier()) {
        case Quantifier::ForallCountable: return countable_intersection(body, opt.max_level);
        case Quantifier::ExistsCountable: return countable_union(body, opt.max_level);
        case Quantifier::ExistsCompact: return compact_projection(body, f.variable(), warnings);
        case Quantifier::ExistsPolish: return polish_projection(body, f.variable());
      }
    }
  }
  throw std::logic_error("rank: unreachable");
}

}  // namespace

RankResult rank(const Formula& f, const RankOptions& options) {
  if (!f.is_negation_normal())
    throw std::invalid_argument("rank requires a negation-normal formula");
  RankResult r;
  r.pointclass = rank_of(f, options, r.warnings);
  if (r.pointclass.saturated)
    r.warnings.push_back("level cap " + std::to_string(options.max_level) +
                         " reached; result is clamped and no longer an upper bound");
  return r;
}

RankResult analyze(std::string_view text, const RankOptions& options) {
  return rank(push_negations(parse_formula(text)), options);
}

}  // namespace qcw
