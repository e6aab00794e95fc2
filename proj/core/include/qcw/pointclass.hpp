#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace qcw {

/// Default cap on Borel levels. Nothing in the catalogue needs more than 4.
inline constexpr int kDefaultMaxLevel = 8;

enum class PointclassKind { Delta0, Sigma0, Pi0, LocallyClosed, Sigma11, Pi11 };

enum class Connective { And, Or };

/// An element of the Borel/projective lattice.
///
/// `level` is meaningful only for the three Borel kinds. LocallyClosed stands
/// for finite Boolean combinations of open and closed sets (every such set is
/// a finite union of sets C n U); it sits above the level-1 classes and below
/// Delta0_2 and is closed under complement, finite meets and finite joins.
///
/// `saturated` records that an operation wanted to go above the level cap and
/// was clamped. It is sticky through further operations and does not take part
/// in equality.
struct Pointclass {
  PointclassKind kind = PointclassKind::Delta0;
  int level = 1;
  bool saturated = false;

  static Pointclass delta0(int n) { return {PointclassKind::Delta0, n}; }
  static Pointclass sigma0(int n) { return {PointclassKind::Sigma0, n}; }
  static Pointclass pi0(int n) { return {PointclassKind::Pi0, n}; }
  static Pointclass locally_closed() { return {PointclassKind::LocallyClosed, 0}; }
  static Pointclass sigma11() { return {PointclassKind::Sigma11, 0}; }
  static Pointclass pi11() { return {PointclassKind::Pi11, 0}; }

  [[nodiscard]] bool is_borel() const {
    return kind != PointclassKind::Sigma11 && kind != PointclassKind::Pi11;
  }
  [[nodiscard]] bool is_projective() const { return !is_borel(); }

  friend bool operator==(const Pointclass& a, const Pointclass& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
      case PointclassKind::Delta0:
      case PointclassKind::Sigma0:
      case PointclassKind::Pi0:
        return a.level == b.level;
      default:
        return true;
    }
  }
};

Pointclass complement(const Pointclass& g);
Pointclass countable_union(const Pointclass& g, int max_level = kDefaultMaxLevel);
Pointclass countable_intersection(const Pointclass& g, int max_level = kDefaultMaxLevel);

/// Least class containing both arguments. All classes of the lattice are
/// closed under finite meets and joins, so the connective never changes the
/// answer; it is kept in the signature because callers think in terms of it.
/// Throws std::domain_error for Sigma1_1 against Pi1_1 (no common bound here).
Pointclass binary_meet_join(const Pointclass& a, const Pointclass& b, Connective c,
                            int max_level = kDefaultMaxLevel);

/// Hierarchy inclusion: every set in `a` belongs to `b`.
bool leq(const Pointclass& a, const Pointclass& b);

/// "Sigma0_n", "Pi0_n", "Delta0_n", "LocClosed", "Sigma1_1", "Pi1_1".
std::string to_string(const Pointclass& g);
std::optional<Pointclass> parse_pointclass(std::string_view text);

}  // namespace qcw
