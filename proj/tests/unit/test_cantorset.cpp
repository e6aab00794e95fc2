#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"
#include "qcw/cantorset.hpp"

using namespace qcw;
using oracle::Rng;
using oracle::uniform;

namespace {

RawAutomaton raw_of(const std::string& text) {
  std::istringstream in(text);
  return read_automaton(in);
}

RegularClosedSet set_of(const std::string& text) { return RegularClosedSet::prune(raw_of(text)); }

StepFunction step_of(const std::string& text) {
  std::istringstream in(text);
  return read_step_function(in);
}

const std::string kConvergent = "2 0\n0 0 0\n0 1 1\n1 0 1\n";
// 0^a 1 0^b 1 0^inf, 0^a 1 0^inf, 0^inf
const std::string kRankThree = "3 0\n0 0 0\n0 1 1\n1 0 1\n1 1 2\n2 0 2\n";
// a convergent sequence behind each first bit
const std::string kTwoCopies = "3 0\n0 0 1\n0 1 1\n1 0 1\n1 1 2\n2 0 2\n";

}  // namespace

TEST(Prune, FullSpaceAndSingleLoop) {
  const auto full = set_of("1 0\n0 0 0\n0 1 0\n");
  EXPECT_EQ(full, RegularClosedSet::full_space());
  EXPECT_EQ(full.state_count(), 1u);
  const auto zero = set_of("1 0\n0 0 0\n");
  EXPECT_EQ(zero, RegularClosedSet::eventually_periodic_point("", "0"));
  EXPECT_EQ(zero.run("000"), std::optional<std::size_t>(0));
  EXPECT_FALSE(zero.run("01"));
}

TEST(Prune, UnreachableCycleIsEmpty) {
  EXPECT_THROW(set_of("3 0\n0 0 1\n2 0 2\n"), EmptySetError);
  EXPECT_THROW(set_of("2 1\n0 0 0\n"), EmptySetError);
}

TEST(Prune, RemovesDeadStatesAndRenumbers) {
  // 3 --0--> 1 --0--> 0 (1-loop, 0 --0--> dead 4), 3 --1--> 2 (1-loop)
  const auto f = set_of("5 3\n3 1 2\n3 0 1\n1 0 0\n2 1 2\n0 1 0\n0 0 4\n");
  EXPECT_EQ(to_string(f), to_string(set_of("4 0\n0 0 1\n0 1 2\n1 0 3\n2 1 2\n3 1 3\n")));
}

TEST(Prune, CanonicalAutomataAreFixedPoints) {
  for (const auto& raw : oracle::canonical_pruned_automata(3)) {
    const auto f = RegularClosedSet::prune(raw);
    EXPECT_EQ(f.state_count(), raw.state_count);
    EXPECT_EQ(f.to_raw().next, raw.next);
  }
}

TEST(Automaton, ReaderErrors) {
  for (const char* bad : {"", "2", "2 5\n", "2 0\n0 0 3\n", "2 0\n0 2 1\n", "2 0\n0 0 1\n0 0 0\n", "2 0\n0 0\n",
                          "2 0\nx 0 1\n"}) {
    std::istringstream in(bad);
    EXPECT_THROW(read_automaton(in), std::invalid_argument) << bad;
  }
  EXPECT_NO_THROW(raw_of("# comment\n2 0 # header\n0 0 1 # edge\n1 1 1\n"));
}

TEST(Points, EventuallyPeriodic) {
  const auto p = RegularClosedSet::eventually_periodic_point("10", "01");
  EXPECT_TRUE(p.run("1001010101"));
  EXPECT_FALSE(p.run("11"));
  EXPECT_THROW(RegularClosedSet::eventually_periodic_point("1", ""), std::invalid_argument);
  EXPECT_THROW(RegularClosedSet::eventually_periodic_point("2", "0"), std::invalid_argument);
}

TEST(Derivative, Examples) {
  EXPECT_EQ(cb_derivative(RegularClosedSet::full_space()), RegularClosedSet::full_space());
  EXPECT_FALSE(cb_derivative(RegularClosedSet::eventually_periodic_point("", "0")).has_value());
  EXPECT_EQ(cb_derivative(set_of(kConvergent)), RegularClosedSet::eventually_periodic_point("", "0"));
}

TEST(Derivative, SingleBranchStates) {
  const auto f = set_of(kConvergent);
  EXPECT_EQ(single_branch_states(f), (std::vector<bool>{false, true}));
  EXPECT_EQ(single_branch_states(RegularClosedSet::full_space()), (std::vector<bool>{false}));
}

TEST(CBRank, Examples) {
  auto full = cb_rank_and_kernel(RegularClosedSet::full_space());
  EXPECT_EQ(full.rank, 0u);
  EXPECT_EQ(full.kernel, RegularClosedSet::full_space());
  auto point = cb_rank_and_kernel(RegularClosedSet::eventually_periodic_point("", "0"));
  EXPECT_EQ(point.rank, 1u);
  EXPECT_FALSE(point.kernel.has_value());
  EXPECT_EQ(cb_rank_and_kernel(set_of(kConvergent)).rank, 2u);
  EXPECT_EQ(cb_rank_and_kernel(set_of(kTwoCopies)).rank, 2u);
  EXPECT_FALSE(cb_rank_and_kernel(set_of(kTwoCopies)).kernel.has_value());
  EXPECT_EQ(cb_rank_and_kernel(set_of(kRankThree)).rank, 3u);
  // a point next to a perfect set
  const auto mixed = set_of("3 0\n0 0 1\n0 1 2\n1 0 1\n2 0 2\n2 1 2\n");
  const auto m = cb_rank_and_kernel(mixed);
  EXPECT_EQ(m.rank, 1u);
  ASSERT_TRUE(m.kernel.has_value());
  EXPECT_TRUE(m.kernel->run("1"));
  EXPECT_FALSE(m.kernel->run("0"));
}

TEST(Countable, Examples) {
  EXPECT_FALSE(is_countable(RegularClosedSet::full_space()));
  EXPECT_TRUE(is_countable(RegularClosedSet::eventually_periodic_point("", "0")));
  EXPECT_TRUE(is_countable(set_of(kConvergent)));
  EXPECT_TRUE(is_countable(set_of(kRankThree)));
  EXPECT_FALSE(is_superatomic(RegularClosedSet::full_space()));
  EXPECT_TRUE(is_superatomic(RegularClosedSet::eventually_periodic_point("", "0")));
  EXPECT_TRUE(dual_separable(set_of(kConvergent)));
  EXPECT_FALSE(dual_separable(set_of("3 0\n0 0 1\n0 1 2\n1 0 1\n2 0 2\n2 1 2\n")));
}

TEST(Countable, AgreesWithSCCOracleAndKernel) {
  for (const auto& raw : oracle::canonical_pruned_automata(4)) {
    const auto f = RegularClosedSet::prune(raw);
    const bool c = is_countable(f);
    ASSERT_EQ(c, !oracle::scc_uncountable(f)) << to_string(f);
    ASSERT_EQ(c, !cb_rank_and_kernel(f).kernel.has_value());
    ASSERT_EQ(c, is_superatomic(f));
    ASSERT_EQ(c, dual_separable(f));
  }
}

TEST(Derivative, AgreesWithTreeOracle) {
  for (const auto& raw : oracle::canonical_pruned_automata(4)) {
    const auto f = RegularClosedSet::prune(raw);
    const oracle::TreeOracle t(f, 12);
    const auto diff = t.compare(cb_derivative(f), single_branch_states(f));
    ASSERT_FALSE(diff.has_value()) << *diff << "\n" << to_string(f);
  }
}

TEST(Derivative, TreeOracleWordLevel) {
  const auto f = set_of(kConvergent);
  const oracle::TreeOracle t(f, 6);
  EXPECT_FALSE(t.single_branch(""));
  EXPECT_FALSE(t.single_branch("000"));
  EXPECT_TRUE(t.single_branch("001"));
  EXPECT_TRUE(t.in_derivative_prefixes("0000"));
  EXPECT_FALSE(t.in_derivative_prefixes("01"));
  EXPECT_FALSE(t.in_derivative_prefixes("11"));
}

TEST(Derivative, SubsetOfInputAndKernelIsPerfect) {
  Rng rng(51);
  for (int i = 0; i < 300; ++i) {
    const auto f = RegularClosedSet::prune(
        oracle::random_pruned_automaton(rng, static_cast<std::size_t>(uniform(rng, 1, 8))));
    if (auto d = cb_derivative(f)) EXPECT_TRUE(is_subset(*d, f));
    const auto cb = cb_rank_and_kernel(f);
    if (cb.kernel) {
      EXPECT_TRUE(is_subset(*cb.kernel, f));
      for (bool b : single_branch_states(*cb.kernel)) EXPECT_FALSE(b);
      EXPECT_EQ(cb_derivative(*cb.kernel), cb.kernel);
    }
  }
}

TEST(Subset, Examples) {
  const auto full = RegularClosedSet::full_space();
  const auto conv = set_of(kConvergent);
  const auto zero = RegularClosedSet::eventually_periodic_point("", "0");
  EXPECT_TRUE(is_subset(zero, conv));
  EXPECT_TRUE(is_subset(conv, full));
  EXPECT_FALSE(is_subset(full, conv));
  EXPECT_FALSE(is_subset(RegularClosedSet::eventually_periodic_point("", "1"), conv));
  EXPECT_TRUE(is_subset(conv, conv));
}

TEST(Wijsman, Examples) {
  const auto ind = StepFunction::indicator("1");
  EXPECT_EQ(wijsman_dist(ind, RegularClosedSet::eventually_periodic_point("", "0")), 0);
  EXPECT_EQ(wijsman_dist(ind, RegularClosedSet::full_space()), 1);
  const auto f = step_of("2\n00 1/2\n01 2\n10 0\n11 3\n");
  // branches avoiding the prefix 11
  const auto avoid = set_of("3 0\n0 0 1\n0 1 2\n1 0 1\n1 1 1\n2 0 1\n");
  EXPECT_EQ(wijsman_dist(f, avoid), 2);
  EXPECT_EQ(wijsman_dist(step_of("1\n0 -5/2\n1 1\n"), RegularClosedSet::full_space()), mpq_class(5, 2));
  EXPECT_EQ(wijsman_dist(step_of("1\n0 0.75\n1 -0.5\n"), RegularClosedSet::full_space()), mpq_class(3, 4));
}

TEST(Wijsman, StepFunctionReaderErrors) {
  for (const char* bad : {"", "1\n0 1\n", "1\n0 1\n0 2\n1 1\n", "1\n0 1\n2 1\n", "1\n0 x\n1 1\n", "25\n",
                          "1\n0 1\n1 1/0\n"}) {
    std::istringstream in(bad);
    EXPECT_THROW(read_step_function(in), std::invalid_argument) << bad;
  }
  EXPECT_THROW(StepFunction::indicator("12"), std::invalid_argument);
}

TEST(Wijsman, HitDetection) {
  Rng rng(52);
  for (int i = 0; i < 300; ++i) {
    const auto raw = oracle::random_raw_automaton(rng, static_cast<std::size_t>(uniform(rng, 1, 6)));
    std::string u;
    for (long k = uniform(rng, 0, 5); k > 0; --k) u += uniform(rng, 0, 1) ? '1' : '0';
    const bool hit = oracle::raw_meets_cylinder(raw, u);
    try {
      const auto f = RegularClosedSet::prune(raw);
      EXPECT_EQ(wijsman_dist(StepFunction::indicator(u), f), hit ? 1 : 0) << u;
    } catch (const EmptySetError&) {
      EXPECT_FALSE(hit);
    }
  }
}

TEST(Wijsman, MonotoneInF) {
  Rng rng(53);
  int pairs = 0;
  for (int i = 0; i < 2000 && pairs < 200; ++i) {
    const auto f = RegularClosedSet::prune(oracle::random_pruned_automaton(rng, static_cast<std::size_t>(uniform(rng, 1, 4))));
    const auto g = RegularClosedSet::prune(oracle::random_pruned_automaton(rng, static_cast<std::size_t>(uniform(rng, 1, 4))));
    if (!is_subset(f, g)) continue;
    ++pairs;
    std::ostringstream text;
    const long k = uniform(rng, 0, 4);
    text << k << "\n";
    for (long w = 0; w < (1L << k); ++w) {
      std::string bits;
      for (long b = k - 1; b >= 0; --b) bits += (w >> b & 1) ? '1' : '0';
      text << bits << " " << uniform(rng, -9, 9) << "/" << uniform(rng, 1, 4) << "\n";
    }
    const auto s = step_of(text.str());
    EXPECT_LE(wijsman_dist(s, f), wijsman_dist(s, g));
  }
  EXPECT_GT(pairs, 20);
}
