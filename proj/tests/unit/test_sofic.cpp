#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"
#include "qcw/sofic.hpp"

using namespace qcw;
using oracle::Rng;
using oracle::uniform;

namespace {

PartialTable table_of(const std::string& text) {
  std::istringstream in(text);
  return read_partial_table(in);
}

SoficMap regular_map(std::size_t n) {
  SoficMap s;
  s.degree = n;
  for (std::size_t i = 0; i < n; ++i) {
    Permutation p(n);
    for (std::size_t j = 0; j < n; ++j) p[j] = (i + j) % n;
    s.sigma[i == 0 ? "1" : "g" + std::to_string(i)] = p;
  }
  return s;
}

Permutation random_permutation(Rng& rng, std::size_t d) {
  Permutation p = identity_permutation(d);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

std::size_t fixed_points(const Permutation& p) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < p.size(); ++i) n += p[i] == i;
  return n;
}

}  // namespace

TEST(Permutations, Basics) {
  EXPECT_TRUE(is_permutation({2, 0, 1}));
  EXPECT_FALSE(is_permutation({0, 0, 1}));
  EXPECT_FALSE(is_permutation({0, 3, 1}));
  EXPECT_EQ(compose({1, 2, 0}, {1, 0, 2}), (Permutation{2, 1, 0}));
  EXPECT_EQ(identity_permutation(3), (Permutation{0, 1, 2}));
}

TEST(Permutations, Hamming) {
  EXPECT_EQ(hamming({1, 0, 2}, {1, 0, 2}), 0);
  EXPECT_EQ(hamming(identity_permutation(4), {1, 2, 3, 0}), 1);
  EXPECT_EQ(hamming({0, 1}, {1, 0}), 1);
  EXPECT_EQ(hamming({0, 1, 2}, {1, 0, 2}), mpq_class(2, 3));
  EXPECT_THROW(hamming({0}, {0, 1}), DimensionError);
}

TEST(PartialTable, IdentityAndInverseLaws) {
  PartialTable t;
  EXPECT_EQ(t.size(), 1u);
  EXPECT_EQ(t.name(0), "1");
  const auto x = t.add_symbol("x");
  EXPECT_EQ(t.add_symbol("x"), x);
  EXPECT_TRUE(t.products().count({0, x, x}));
  EXPECT_TRUE(t.products().count({x, 0, x}));
  t.add_inverse(x, x);
  EXPECT_TRUE(t.products().count({x, x, 0}));
  EXPECT_EQ(t.inverse(x), x);
  EXPECT_THROW(t.add_distinction(x, x), TableError);
  EXPECT_THROW(t.add_product(7, 0, 0), TableError);
  const auto y = t.add_symbol("y");
  t.add_product(0, x, y);
  EXPECT_THROW(t.add_distinction(x, y), TableError);
  t.add_distinction(y, 0);
  EXPECT_TRUE(t.distinctions().count({0, y}));
}

TEST(PartialTable, Reader) {
  const auto t = table_of("# Z/2\nsym x\ninv x x\nmul x x 1\nneq x 1\n");
  EXPECT_EQ(t.size(), 2u);
  EXPECT_EQ(t.find("x"), std::optional<std::size_t>(1));
  for (const char* bad : {"sym x\n", "sym x\ninv x y\n", "sym x\ninv x x\nfoo x\n", "sym x\ninv x\n",
                          "sym x\ninv x x\nneq x x\n"}) {
    EXPECT_THROW(table_of(bad), TableError) << bad;
  }
}

TEST(PartialTable, CyclicGroupTable) {
  const auto t = cyclic_group_table(4);
  EXPECT_EQ(t.size(), 4u);
  EXPECT_EQ(t.name(3), "g3");
  EXPECT_EQ(t.products().size(), 16u);
  EXPECT_EQ(t.distinctions().size(), 6u);
  EXPECT_THROW(cyclic_group_table(0), std::invalid_argument);
}

TEST(SoficMap, ReaderAndPrinter) {
  std::istringstream in("2\n1 0 1\nx 1 0\n");
  const auto s = read_sofic_map(in);
  EXPECT_EQ(s.degree, 2u);
  EXPECT_EQ(s.sigma.at("x"), (Permutation{1, 0}));
  std::istringstream again(to_string(s));
  EXPECT_EQ(read_sofic_map(again).sigma, s.sigma);
  for (const char* bad : {"", "0\n", "2\nx 0 0\n", "2\nx 0\n", "2\nx 1 0\nx 0 1\n", "-1\n", "2\nx 0 2\n"}) {
    std::istringstream b(bad);
    EXPECT_THROW(read_sofic_map(b), std::invalid_argument) << bad;
  }
}

TEST(Verify, ZTwoExamples) {
  const auto t = table_of("sym x\ninv x x\nmul x x 1\nneq x 1\n");
  const mpq_class eps(1, 4);
  SoficMap s{2, {{"1", {0, 1}}, {"x", {1, 0}}}};
  EXPECT_TRUE(verify(t, s, eps).ok);

  SoficMap bad_id{2, {{"1", {1, 0}}, {"x", {1, 0}}}};
  const auto r1 = verify(t, bad_id, eps);
  EXPECT_FALSE(r1.ok);
  ASSERT_TRUE(r1.violation.has_value());
  EXPECT_EQ(r1.violation->clause, SoficClause::Identity);

  SoficMap flat{2, {{"1", {0, 1}}, {"x", {0, 1}}}};
  const auto r3 = verify(t, flat, eps);
  EXPECT_FALSE(r3.ok);
  EXPECT_EQ(r3.violation->clause, SoficClause::Distinction);
  EXPECT_EQ(r3.violation->distance, 0);
  EXPECT_EQ(r3.violation->symbols, (std::vector<std::string>{"1", "x"}));
}

TEST(Verify, CoverageErrors) {
  const auto t = table_of("sym x\ninv x x\n");
  EXPECT_THROW(verify(t, SoficMap{2, {{"1", {0, 1}}}}, mpq_class(1, 4)), CoverageError);
  EXPECT_THROW(verify(t, SoficMap{2, {{"1", {0, 1}}, {"x", {0}}}}, mpq_class(1, 4)), CoverageError);
}

TEST(Verify, RegularRepresentationsAtEveryEpsilon) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto t = cyclic_group_table(n);
    for (int k = 1; k <= 12; ++k) EXPECT_TRUE(verify(t, regular_map(n), mpq_class(k, 12)).ok) << n << " " << k;
  }
}

TEST(Verify, MonotoneInEpsilon) {
  Rng rng(71);
  int positives = 0;
  for (int i = 0; i < 300; ++i) {
    const auto n = static_cast<std::size_t>(uniform(rng, 2, 4));
    PartialTable t = cyclic_group_table(n);
    const auto d = static_cast<std::size_t>(uniform(rng, 1, 5));
    SoficMap s;
    s.degree = d;
    const Permutation gen = random_permutation(rng, d);
    Permutation acc = identity_permutation(d);
    for (std::size_t k = 0; k < n; ++k) {
      // mostly powers of one permutation, sometimes perturbed
      s.sigma[t.name(k)] = uniform(rng, 0, 4) ? acc : random_permutation(rng, d);
      acc = compose(gen, acc);
    }
    std::vector<bool> answers;
    for (int k = 0; k <= 12; ++k) answers.push_back(verify(t, s, mpq_class(k, 12)).ok);
    for (int k = 1; k <= 12; ++k)
      if (answers[static_cast<std::size_t>(k - 1)]) EXPECT_TRUE(answers[static_cast<std::size_t>(k)]);
    positives += answers.back();
  }
  EXPECT_GT(positives, 0);
}

TEST(Verify, IrrelevantSymbolsDoNotMatter) {
  Rng rng(72);
  for (int i = 0; i < 100; ++i) {
    const auto n = static_cast<std::size_t>(uniform(rng, 2, 4));
    PartialTable t = cyclic_group_table(n);
    SoficMap s = regular_map(n);
    if (uniform(rng, 0, 1)) s.sigma["g1"] = random_permutation(rng, n);
    const mpq_class eps(uniform(rng, 1, 12), 12);
    const bool before = verify(t, s, eps).ok;
    // only the automatic identity laws mention zz, and any permutation satisfies them
    t.add_symbol("zz");
    s.sigma["zz"] = random_permutation(rng, n);
    EXPECT_EQ(verify(t, s, eps).ok, before);
  }
}

TEST(Search, FindsRegularRepresentations) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto t = cyclic_group_table(n);
    const auto found = search(t, mpq_class(1, 4), n);
    ASSERT_TRUE(found.has_value()) << n;
    EXPECT_EQ(found->degree, n);
    EXPECT_TRUE(verify(t, *found, mpq_class(1, 4)).ok);
    if (n > 1) EXPECT_FALSE(search(t, mpq_class(1, 4), n - 1).has_value());
    for (std::size_t k = 1; k < n; ++k) EXPECT_EQ(fixed_points(found->sigma.at(t.name(k))), 0u);
  }
}

TEST(Search, ContradictionIsNotFound) {
  const auto t = table_of("sym x\nsym y\ninv x x\ninv y y\nmul x x 1\nmul x x y\nneq y 1\n");
  EXPECT_FALSE(search(t, mpq_class(1, 4), 4).has_value());
}

TEST(Search, TrivialTable) {
  const auto found = search(PartialTable(), mpq_class(1, 4), 3);
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(found->degree, 1u);
  EXPECT_THROW(search(PartialTable(), mpq_class(1, 4), 0), std::invalid_argument);
}

TEST(Search, LeastMapIsLexicographicallyFirst) {
  const auto t = cyclic_group_table(3);
  const auto found = search(t, mpq_class(1, 4), 3);
  ASSERT_TRUE(found.has_value());
  // the first fixed-point-free 3-cycle in lexicographic order is 1 2 0
  EXPECT_EQ(found->sigma.at("g1"), (Permutation{1, 2, 0}));
  EXPECT_EQ(found->sigma.at("g2"), (Permutation{2, 0, 1}));
}
