#include "qcw/formula.hpp"

namespace qcw {

namespace {

using P = Pointclass;

std::vector<CatalogueEntry> build() {
  // Formulas are kept in canonical printed form so that print(parse(text)) == text.
  return {
      {"ring_commutative", "countable ring is commutative",
       "A a. A b. clopen(comm, a, b)", P::pi0(1), false},
      {"group_abelian", "countable group is abelian",
       "A a. A b. clopen(commutator_in_N, a, b)", P::pi0(1), false},
      {"banach_commutative", "Banach quotient is commutative",
       "A u. A v. closed(commutator_norm_zero, u, v)", P::pi0(2), false},
      {"banach_uniform", "Banach quotient is a uniform algebra",
       "A u. closed(square_norm_identity, u)", P::pi0(2), false},
      {"group_finite", "countable group is finite",
       "E t. A g. clopen(covered_by_transversal, g, t)", P::sigma0(2), true},
      {"ab_finite", "countable abelian group is finite",
       "E t. A x. clopen(covered_by_transversal, x, t)", P::sigma0(2), true},
      {"ab_torsion", "countable abelian group is torsion",
       "A x. E n. clopen(multiple_in_H, x, n)", P::pi0(2), true},
      {"ab_divisible", "countable abelian group is divisible",
       "A a. A n. E b. clopen(nb_minus_a_in_H, a, n, b)", P::pi0(2), true},
      {"group_periodic", "countable group is periodic",
       "A g. E n. clopen(power_in_N, g, n)", P::pi0(2), false},
      {"group_simple", "countable group is simple",
       "A g. A i. (clopen(in_N, g) | (E w. clopen(generator_in_normal_closure, g, i, w)))",
       P::pi0(2), false},
      {"group_locally_finite", "countable group is locally finite",
       "A s. E t. A g. clopen(transversal_covers_subgroup, s, t, g)", P::pi0(3), false},
      {"ab_ulm_zero", "first Ulm subgroup vanishes",
       "A x. (clopen(in_H, x) | (E n. A y. not clopen(ny_minus_x_in_H, x, n, y)))", P::pi0(3),
       false},
      {"ab_slender", "countable abelian group is slender (torsion-free and first Ulm subgroup zero)",
       "(A x. A n. (not clopen(multiple_in_H, x, n) | clopen(in_H, x))) & (A z. (clopen(in_H, z) | "
       "(E m. A y. not clopen(ny_minus_x_in_H, z, m, y))))",
       P::pi0(3), false},
      {"group_sofic", "countable group is sofic",
       "A s. A k. E d. E sigma. clopen(sofic_approximation, s, k, d, sigma)", P::pi0(2), false},
      {"ring_dedekind_finite", "countable ring is Dedekind finite",
       "A u. A v. (not clopen(uv_is_one, u, v) | clopen(vu_is_one, u, v))", P::pi0(1), false},
      {"tsr_le_n", "topological stable rank at most n",
       "A a. A m. E b. E v. open(within, a, b, m) & open(right_inverse, b, v)", P::pi0(3), false},
      {"cstar_simple", "C*-quotient is simple",
       "A c. A t. A n. (open(small, c, t) | (E m. E xy. open(full_ideal_witness, c, n, m, xy)))",
       P::pi0(2), false},
      {"stably_finite", "quotient is stably finite",
       "not (E n. E v. open(isometry_defect_small, n, v) & open(unitary_defect_large, n, v))",
       P::pi0(1), false},
      {"tracial_state", "quotient admits a tracial state",
       "Ec tau. A a. closed(trace_bounded_by_quotient_norm, tau, a)", P::pi0(1), false},
      {"af", "quotient is AF",
       "A x. A n. E t. E u. closed(matrix_unit_relations, t, u) & open(approximates, x, n, t, u)",
       P::pi0(3), false},
      {"quasidiagonal", "quotient is quasidiagonal",
       "A x. A n. E m. Ec phi. closed(descends, phi) & open(almost_multiplicative_isometric, x, n, m, phi)",
       P::pi0(3), false},
      {"mf", "quotient is MF",
       "A x. A n. E m. Ec phi. closed(descends, phi) & open(microstate_approximation, x, n, m, phi)",
       P::pi0(3), false},
      {"nucdim_le_n", "nuclear dimension at most n",
       "A x. A m. E f. Ec psi. closed(descends_cpc, f, psi) & open(order_zero_approximation, x, m, f, psi)",
       P::pi0(3), false},
      {"uniformly_purely_infinite", "quotient is uniformly purely infinite",
       "(E a. E m. A l. closed(far_from_scalar, a, m, l)) & (E N. A a. (open(norm_far_from_one, a, N) | "
       "(E b. E c. open(bounded, b, N) & open(bounded, c, N) & open(factors_unit, a, b, c))))",
       P::sigma0(3), false},
      {"banach_dedekind_finite", "Banach quotient is Dedekind finite",
       "not (E k. E n. E u. E v. closed(norm_bounded, u, k) & closed(norm_bounded, v, k) & "
       "open(uv_near_one, u, v, k, n) & open(vu_far_from_one, u, v, n))",
       P::pi0(2), false},
      {"uniformly_open_multiplication", "multiplication is uniformly open",
       "Ep delta. borel@Pi0_3(almost_open_with_modulus, delta)", P::sigma11(), false},
      {"d_absorbing", "quotient is D-absorbing",
       "Ep w. borel@Delta0_2(intertwining_isomorphism, w)", P::sigma11(), false},
      {"separable_dual", "C(F) has separable dual (F countable)",
       "borel@Pi1_1(closed_set_countable)", P::pi11(), true},
      {"superatomic", "Boolean algebra is superatomic",
       "borel@Pi1_1(stone_space_countable)", P::pi11(), true},
  };
}

}  // namespace

const std::vector<CatalogueEntry>& catalogue() {
  static const std::vector<CatalogueEntry> entries = build();
  return entries;
}

std::vector<CatalogueCheck> check_catalogue(const RankOptions& options) {
  std::vector<CatalogueCheck> out;
  for (const auto& e : catalogue()) {
    CatalogueCheck c;
    c.entry = &e;
    RankResult r = analyze(e.formula, options);
    c.computed = r.pointclass;
    c.warnings = std::move(r.warnings);
    c.passed = leq(c.computed, e.expected) && (!e.exact || c.computed == e.expected) &&
               !c.computed.saturated;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace qcw
