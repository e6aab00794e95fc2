#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcw/int_matrix.hpp"

namespace qcw {

/// U * A * V == S with U, V unimodular and S diagonal, S[i,i] | S[i+1,i+1],
/// nonnegative diagonal, zeros last.
struct SmithForm {
  IntMatrix u;
  IntMatrix s;
  IntMatrix v;
};

/// Pivot: smallest nonzero absolute value in the active block, ties broken
/// row-major. The result is checked exactly (product, unimodularity,
/// divisibility) before returning; a failed check throws std::logic_error.
SmithForm smith_normal_form(const IntMatrix& a);

/// The exact postcondition of smith_normal_form. Exposed for tests.
bool verify_smith_form(const IntMatrix& a, const SmithForm& f);

/// Z^n / <relations>.
struct AbelianPresentation {
  std::size_t generator_count = 0;
  std::vector<IntVector> relations;

  AbelianPresentation() = default;
  AbelianPresentation(std::size_t n, std::vector<IntVector> rels);

  [[nodiscard]] IntMatrix relation_matrix() const;
  void add_relation(IntVector r);
};

struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors, each >= 2, d_i | d_{i+1}

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;

  [[nodiscard]] bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  [[nodiscard]] bool is_finite() const { return free_rank == 0; }
  /// Group order; nullopt when infinite.
  [[nodiscard]] std::optional<Integer> order() const;
};

/// "Z^r x Z/d1 x ... x Z/dk", "Z" for r = 1, "0" for the trivial group.
std::string to_string(const AbelianInvariants& inv);

AbelianInvariants invariants(const AbelianPresentation& p);

/// Whether v lies in the subgroup generated by the relations.
bool member(const AbelianPresentation& p, const IntVector& v);

/// Least n >= 1 with n*v in the relation subgroup; nullopt for infinite order.
std::optional<Integer> element_order(const AbelianPresentation& p, const IntVector& v);

/// Whether the image of v is divisible by m in the quotient, i.e. v in m*Z^n + H.
bool divisible_by(const AbelianPresentation& p, const IntVector& v, const Integer& m);

}  // namespace qcw
