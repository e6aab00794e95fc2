#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "qcw/pointclass.hpp"

using namespace qcw;

namespace {

std::vector<Pointclass> all_classes(int top = 5) {
  std::vector<Pointclass> out{Pointclass::locally_closed(), Pointclass::sigma11(), Pointclass::pi11()};
  for (int n = 1; n <= top; ++n) {
    out.push_back(Pointclass::delta0(n));
    out.push_back(Pointclass::sigma0(n));
    out.push_back(Pointclass::pi0(n));
  }
  return out;
}

bool incompatible(const Pointclass& a, const Pointclass& b) {
  return a.is_projective() && b.is_projective() && !(a == b);
}

}  // namespace

TEST(Pointclass, ComplementExamples) {
  EXPECT_EQ(complement(Pointclass::sigma0(2)), Pointclass::pi0(2));
  EXPECT_EQ(complement(Pointclass::delta0(1)), Pointclass::delta0(1));
  EXPECT_EQ(complement(Pointclass::sigma11()), Pointclass::pi11());
  EXPECT_EQ(complement(Pointclass::locally_closed()), Pointclass::locally_closed());
}

TEST(Pointclass, CountableUnionExamples) {
  EXPECT_EQ(countable_union(Pointclass::pi0(1)), Pointclass::sigma0(2));
  EXPECT_EQ(countable_union(Pointclass::sigma0(3)), Pointclass::sigma0(3));
  EXPECT_EQ(countable_union(Pointclass::locally_closed()), Pointclass::sigma0(2));
}

TEST(Pointclass, CountableIntersectionExamples) {
  EXPECT_EQ(countable_intersection(Pointclass::sigma0(1)), Pointclass::pi0(2));
  EXPECT_EQ(countable_intersection(Pointclass::pi0(2)), Pointclass::pi0(2));
  EXPECT_EQ(countable_intersection(Pointclass::delta0(1)), Pointclass::pi0(1));
}

TEST(Pointclass, MeetJoinExamples) {
  EXPECT_EQ(binary_meet_join(Pointclass::pi0(1), Pointclass::sigma0(1), Connective::And),
            Pointclass::locally_closed());
  EXPECT_EQ(binary_meet_join(Pointclass::sigma0(2), Pointclass::sigma0(2), Connective::Or),
            Pointclass::sigma0(2));
  EXPECT_EQ(binary_meet_join(Pointclass::sigma0(2), Pointclass::pi0(2), Connective::And),
            Pointclass::delta0(3));
  EXPECT_EQ(binary_meet_join(Pointclass::pi0(3), Pointclass::sigma11(), Connective::Or), Pointclass::sigma11());
  EXPECT_THROW(binary_meet_join(Pointclass::sigma11(), Pointclass::pi11(), Connective::Or), std::domain_error);
}

TEST(Pointclass, LeqExamples) {
  EXPECT_TRUE(leq(Pointclass::pi0(1), Pointclass::pi0(2)));
  EXPECT_TRUE(leq(Pointclass::sigma0(2), Pointclass::sigma0(2)));
  EXPECT_FALSE(leq(Pointclass::sigma0(2), Pointclass::pi0(2)));
  EXPECT_TRUE(leq(Pointclass::pi0(1), Pointclass::locally_closed()));
  EXPECT_TRUE(leq(Pointclass::locally_closed(), Pointclass::delta0(2)));
  EXPECT_FALSE(leq(Pointclass::delta0(2), Pointclass::locally_closed()));
  EXPECT_TRUE(leq(Pointclass::pi0(7), Pointclass::pi11()));
  EXPECT_FALSE(leq(Pointclass::sigma11(), Pointclass::pi11()));
}

TEST(Pointclass, ComplementIsInvolution) {
  for (const auto& g : all_classes()) EXPECT_EQ(complement(complement(g)), g) << to_string(g);
}

TEST(Pointclass, IntersectionIsDualToUnion) {
  for (const auto& g : all_classes())
    EXPECT_EQ(countable_intersection(g), complement(countable_union(complement(g)))) << to_string(g);
}

TEST(Pointclass, UnionIsIdempotent) {
  for (const auto& g : all_classes())
    EXPECT_EQ(countable_union(countable_union(g)), countable_union(g)) << to_string(g);
}

TEST(Pointclass, LeqIsPartialOrder) {
  const auto cs = all_classes();
  for (const auto& a : cs) {
    EXPECT_TRUE(leq(a, a));
    for (const auto& b : cs) {
      if (leq(a, b) && leq(b, a)) EXPECT_EQ(a, b);
      for (const auto& c : cs)
        if (leq(a, b) && leq(b, c)) EXPECT_TRUE(leq(a, c)) << to_string(a) << to_string(b) << to_string(c);
    }
  }
}

TEST(Pointclass, ComplementAndUnionAreMonotone) {
  const auto cs = all_classes();
  for (const auto& a : cs)
    for (const auto& b : cs)
      if (leq(a, b)) {
        EXPECT_TRUE(leq(complement(a), complement(b)));
        EXPECT_TRUE(leq(countable_union(a), countable_union(b)));
      }
}

TEST(Pointclass, MeetJoinIsLeastUpperBound) {
  const auto cs = all_classes(4);
  for (const auto& a : cs)
    for (const auto& b : cs) {
      if (incompatible(a, b)) continue;
      const auto j = binary_meet_join(a, b, Connective::Or);
      EXPECT_EQ(j, binary_meet_join(a, b, Connective::And));
      EXPECT_TRUE(leq(a, j) && leq(b, j));
      for (const auto& c : all_classes(6))
        if (leq(a, c) && leq(b, c)) EXPECT_TRUE(leq(j, c)) << to_string(a) << " " << to_string(b);
    }
}

TEST(Pointclass, MeetJoinIsMonotone) {
  const auto cs = all_classes(4);
  for (const auto& a : cs)
    for (const auto& a2 : cs) {
      if (!leq(a, a2)) continue;
      for (const auto& b : cs)
        for (const auto& b2 : cs) {
          if (!leq(b, b2) || incompatible(a2, b2)) continue;
          EXPECT_TRUE(leq(binary_meet_join(a, b, Connective::And), binary_meet_join(a2, b2, Connective::And)));
        }
    }
}

TEST(Pointclass, LevelCapSaturates) {
  const auto g = countable_union(Pointclass::pi0(8));
  EXPECT_EQ(g, Pointclass::sigma0(8));
  EXPECT_TRUE(g.saturated);
  EXPECT_TRUE(complement(g).saturated);
  EXPECT_FALSE(countable_union(Pointclass::pi0(2)).saturated);
  const auto h = countable_intersection(Pointclass::sigma0(3), 3);
  EXPECT_EQ(h, Pointclass::pi0(3));
  EXPECT_TRUE(h.saturated);
}

TEST(Pointclass, StringRoundTrip) {
  for (const auto& g : all_classes()) {
    auto p = parse_pointclass(to_string(g));
    ASSERT_TRUE(p.has_value()) << to_string(g);
    EXPECT_EQ(*p, g);
  }
  EXPECT_FALSE(parse_pointclass("Sigma0_0"));
  EXPECT_FALSE(parse_pointclass("Pi0_"));
  EXPECT_FALSE(parse_pointclass("Pi0_2x"));
  EXPECT_FALSE(parse_pointclass("pi0_2"));
}
