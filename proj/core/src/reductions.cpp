#include "qcw/reductions.hpp"

#include <algorithm>
#include <cctype>

namespace qcw {

const std::vector<ReductionFamily>& all_families() {
  static const std::vector<ReductionFamily> v{ReductionFamily::GroupFin,   ReductionFamily::AbelianFin,
                                              ReductionFamily::RingFin,    ReductionFamily::LatticeFin,
                                              ReductionFamily::AbTorsion,  ReductionFamily::AbDivisible};
  return v;
}

const FamilyInfo& family_info(ReductionFamily f) {
  static const std::vector<FamilyInfo> table{
      {ReductionFamily::GroupFin, "GROUP_FIN", "finite group", Pointclass::sigma0(2), true},
      {ReductionFamily::AbelianFin, "ABELIAN_FIN", "finite abelian group", Pointclass::sigma0(2), true},
      {ReductionFamily::RingFin, "RING_FIN", "finite ring", Pointclass::sigma0(2), true},
      {ReductionFamily::LatticeFin, "LATTICE_FIN", "finite lattice", Pointclass::sigma0(2), true},
      {ReductionFamily::AbTorsion, "AB_TORSION", "torsion abelian group", Pointclass::pi0(2), false},
      {ReductionFamily::AbDivisible, "AB_DIVISIBLE", "divisible abelian group", Pointclass::pi0(2), false},
  };
  return table.at(static_cast<std::size_t>(f));
}

std::optional<ReductionFamily> parse_family(std::string_view name) {
  std::string norm;
  for (char c : name) norm += c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (auto f : all_families())
    if (family_info(f).name == norm) return f;
  return std::nullopt;
}

LatticeTerm LatticeTerm::top() { return LatticeTerm(std::make_shared<const Node>(Node{Op::Top, 0, {}})); }

LatticeTerm LatticeTerm::generator(std::size_t index) {
  return LatticeTerm(std::make_shared<const Node>(Node{Op::Generator, index, {}}));
}

LatticeTerm LatticeTerm::join(LatticeTerm a, LatticeTerm b) {
  return LatticeTerm(std::make_shared<const Node>(Node{Op::Join, 0, {std::move(a), std::move(b)}}));
}

LatticeTerm LatticeTerm::meet(LatticeTerm a, LatticeTerm b) {
  return LatticeTerm(std::make_shared<const Node>(Node{Op::Meet, 0, {std::move(a), std::move(b)}}));
}

namespace {

bool is_abelian_family(ReductionFamily f) {
  return f == ReductionFamily::AbelianFin || f == ReductionFamily::AbTorsion ||
         f == ReductionFamily::AbDivisible;
}

// Relation vectors of the family with support inside [0, stage).
AbelianPresentation abelian_truncation(ReductionFamily f, const UPSequence& alpha, std::size_t s) {
  AbelianPresentation p(s, {});
  auto unit = [s](std::size_t i) {
    IntVector v(s, Integer(0));
    v[i] = 1;
    return v;
  };
  for (std::size_t n = 0; n < s; ++n) {
    const bool one = alpha.at(n);
    const bool next = n + 1 < s;
    switch (f) {
      case ReductionFamily::AbelianFin: {
        IntVector v = unit(n);
        v[n] = 2;
        p.add_relation(std::move(v));
        if (!one && next) {
          IntVector w = unit(n);
          w[n + 1] = -1;
          p.add_relation(std::move(w));
        }
        break;
      }
      case ReductionFamily::AbTorsion:
        if (one) {
          p.add_relation(unit(n));
        } else if (next) {
          IntVector v = unit(n);
          v[n] = 2;
          v[n + 1] = -1;
          p.add_relation(std::move(v));
        }
        break;
      case ReductionFamily::AbDivisible:
        if (next) {
          IntVector v = unit(n);
          Integer d = 1;
          if (one) mpz_fac_ui(d.get_mpz_t(), n + 2);
          v[n + 1] = -d;
          p.add_relation(std::move(v));
        }
        break;
      default:
        break;
    }
  }
  return p;
}

std::size_t max_index_plus_one(const LatticeTerm& t) {
  switch (t.op()) {
    case LatticeTerm::Op::Top:
      return 0;
    case LatticeTerm::Op::Generator:
      return t.index() + 1;
    default:
      return std::max(max_index_plus_one(t.left()), max_index_plus_one(t.right()));
  }
}

const char* witness_kind(ReductionFamily f) {
  switch (f) {
    case ReductionFamily::GroupFin:
      return "a group word";
    case ReductionFamily::RingFin:
      return "a ring polynomial";
    case ReductionFamily::LatticeFin:
      return "a lattice equation";
    default:
      return "an integer vector";
  }
}

std::size_t expected_alternative(ReductionFamily f) {
  switch (f) {
    case ReductionFamily::GroupFin:
      return 1;
    case ReductionFamily::RingFin:
      return 2;
    case ReductionFamily::LatticeFin:
      return 3;
    default:
      return 0;
  }
}

void check_shape(ReductionFamily f, const Witness& w) {
  if (w.index() != expected_alternative(f))
    throw ReductionError(family_info(f).name + " expects " + witness_kind(f) + " as witness");
}

// Square-zero extension F_2 + V: a in F_2, v a finite set of basis indices.
struct RingElement {
  bool a = false;
  std::set<std::size_t> v;
};

void add_into(RingElement& x, const RingElement& y) {
  x.a ^= y.a;
  for (auto i : y.v)
    if (!x.v.erase(i)) x.v.insert(i);
}

RingElement multiply(const RingElement& x, const RingElement& y) {
  RingElement out;
  out.a = x.a && y.a;
  if (x.a) add_into(out, RingElement{false, y.v});
  if (y.a) add_into(out, RingElement{false, x.v});
  return out;
}

}  // namespace

std::size_t locality_radius(ReductionFamily family, const Witness& w) {
  check_shape(family, w);
  return std::visit(
      [](const auto& x) -> std::size_t {
        using T = std::decay_t<decltype(x)>;
        std::size_t m = 0;
        if constexpr (std::is_same_v<T, IntVector>) {
          for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] != 0) m = i + 1;
        } else if constexpr (std::is_same_v<T, GroupWord>) {
          for (const auto& [g, e] : x.letters)
            if (e != 0) m = std::max(m, g + 1);
        } else if constexpr (std::is_same_v<T, RingPolynomial>) {
          for (const auto& [mono, c] : x.terms)
            if (c != 0)
              for (auto i : mono) m = std::max(m, i + 1);
        } else {
          m = std::max(max_index_plus_one(x.lhs), max_index_plus_one(x.rhs));
        }
        return m;
      },
      w);
}

TruncatedCode::TruncatedCode(ReductionFamily family, UPSequence alpha, std::size_t stage)
    : family_(family), alpha_(std::move(alpha)), stage_(stage) {
  if (stage_ == 0) throw ReductionError("stage must be >= 1");
  if (is_abelian_family(family_)) presentation_ = abelian_truncation(family_, alpha_, stage_);
}

TruncatedCode truncated_code(ReductionFamily family, const UPSequence& alpha, std::size_t stage) {
  return TruncatedCode(family, alpha, stage);
}

const AbelianPresentation& TruncatedCode::presentation() const {
  if (!presentation_) throw ReductionError(family_info(family_).name + " has no abelian presentation");
  return *presentation_;
}

std::set<std::size_t> TruncatedCode::image() const {
  std::set<std::size_t> out;
  for (std::size_t n = 0; n < stage_; ++n) out.insert(k_alpha(alpha_, n));
  return out;
}

bool TruncatedCode::contains(const Witness& w) const {
  check_shape(family_, w);
  if (locality_radius(family_, w) > stage_)
    throw ReductionError("witness uses generators beyond stage " + std::to_string(stage_));

  switch (family_) {
    case ReductionFamily::GroupFin: {
      // image in V = sum of Z/2 e_k; x_n -> e_{k(n)}
      std::map<std::size_t, long> parity;
      for (const auto& [g, e] : std::get<GroupWord>(w).letters) parity[k_alpha(alpha_, g)] += e;
      return std::all_of(parity.begin(), parity.end(), [](const auto& kv) { return kv.second % 2 == 0; });
    }
    case ReductionFamily::RingFin: {
      RingElement total;
      for (const auto& [mono, c] : std::get<RingPolynomial>(w).terms) {
        if (mono.size() > 2) throw ReductionError("ring witnesses are limited to degree <= 2");
        if (!mpz_odd_p(c.get_mpz_t())) continue;
        RingElement m{true, {}};
        for (auto i : mono) m = multiply(m, RingElement{false, {k_alpha(alpha_, i)}});
        add_into(total, m);
      }
      return !total.a && total.v.empty();
    }
    case ReductionFamily::LatticeFin: {
      const std::set<std::size_t> top = image();
      auto eval = [&](const auto& self, const LatticeTerm& t) -> std::set<std::size_t> {
        switch (t.op()) {
          case LatticeTerm::Op::Top:
            return top;
          case LatticeTerm::Op::Generator:
            return {k_alpha(alpha_, t.index())};
          case LatticeTerm::Op::Join: {
            auto a = self(self, t.left());
            auto b = self(self, t.right());
            a.insert(b.begin(), b.end());
            return a;
          }
          case LatticeTerm::Op::Meet: {
            auto a = self(self, t.left());
            auto b = self(self, t.right());
            std::set<std::size_t> c;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(c, c.end()));
            return c;
          }
        }
        return {};
      };
      const auto& eq = std::get<LatticeEquation>(w);
      return eval(eval, eq.lhs) == eval(eval, eq.rhs);
    }
    default: {
      IntVector v = std::get<IntVector>(w);
      v.resize(stage_, Integer(0));
      return member(*presentation_, v);
    }
  }
}

std::optional<Integer> TruncatedCode::quotient_order() const {
  if (presentation_) return invariants(*presentation_).order();
  Integer two_power;
  std::size_t bits = image().size();
  if (family_ == ReductionFamily::RingFin) ++bits;
  // the generated sublattice of subsets of a one-point image is just {top}
  if (family_ == ReductionFamily::LatticeFin && bits == 1) return Integer(1);
  mpz_ui_pow_ui(two_power.get_mpz_t(), 2, bits);
  return two_power;
}

bool classify(ReductionFamily family, const UPSequence& alpha) {
  return family_info(family).reduces_from_fin ? alpha.in_fin() : alpha.in_p_infinity();
}

}  // namespace qcw
