#include "qcw/grothendieck.hpp"

#include <charconv>

namespace qcw {

void MonoidData::validate() const {
  auto check = [this](std::size_t i) {
    if (i >= index_bound)
      throw DimensionError("monoid index " + std::to_string(i) + " out of range [0," +
                           std::to_string(index_bound) + ")");
  };
  for (auto z : zero_set) check(z);
  for (const auto& [m, n] : eq_set) {
    check(m);
    check(n);
  }
  for (const auto& t : add_set)
    for (auto i : t) check(i);
}

AbelianPresentation groth_presentation(const MonoidData& m) {
  m.validate();
  const std::size_t n = m.index_bound;
  AbelianPresentation p(n, {});
  auto zero = [n] { return IntVector(n, Integer(0)); };
  for (auto z : m.zero_set) {
    IntVector v = zero();
    v[z] = 1;
    p.add_relation(std::move(v));
  }
  for (const auto& [a, b] : m.eq_set) {
    IntVector v = zero();
    v[a] += 1;
    v[b] -= 1;
    p.add_relation(std::move(v));
  }
  for (const auto& [a, b, c] : m.add_set) {
    IntVector v = zero();
    v[a] += 1;
    v[b] += 1;
    v[c] -= 1;
    p.add_relation(std::move(v));
  }
  return p;
}

FDAlgebra::FDAlgebra(std::vector<std::size_t> dims) : block_dims(std::move(dims)) {
  if (block_dims.empty()) throw std::invalid_argument("algebra needs at least one block");
  for (auto d : block_dims)
    if (d == 0) throw std::invalid_argument("block dimensions must be >= 1");
}

FDAlgebra FDAlgebra::parse(std::string_view literal) {
  std::vector<std::size_t> dims;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = literal.find(',', pos);
    const std::string_view part = literal.substr(pos, comma == std::string_view::npos ? literal.npos : comma - pos);
    std::size_t d = 0;
    auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), d);
    if (part.empty() || ec != std::errc() || end != part.data() + part.size())
      throw std::invalid_argument("bad block dimension list '" + std::string(literal) + "'");
    dims.push_back(d);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return FDAlgebra(std::move(dims));
}

std::vector<RankTuple> rank_tuples(const FDAlgebra& b, std::size_t r) {
  std::vector<RankTuple> out;
  RankTuple t(b.blocks(), 0);
  while (true) {
    out.push_back(t);
    std::size_t i = t.size();
    while (i > 0 && t[i - 1] == r) t[--i] = 0;
    if (i == 0) break;
    ++t[i - 1];
  }
  return out;
}

MonoidData fd_algebra_V(const FDAlgebra& b, std::size_t rank_bound) {
  if (rank_bound == 0) throw PreconditionError("rank bound must be >= 1");
  const auto tuples = rank_tuples(b, rank_bound);
  const std::size_t base = rank_bound + 1;
  auto index_of = [&](const RankTuple& t) {
    std::size_t idx = 0;
    for (auto x : t) idx = idx * base + x;
    return idx;
  };
  MonoidData m;
  m.index_bound = tuples.size();
  m.zero_set.insert(index_of(RankTuple(b.blocks(), 0)));
  for (std::size_t i = 0; i < tuples.size(); ++i) m.eq_set.insert({i, i});
  for (std::size_t i = 0; i < tuples.size(); ++i)
    for (std::size_t j = 0; j < tuples.size(); ++j) {
      RankTuple s(b.blocks());
      bool fits = true;
      for (std::size_t c = 0; c < s.size(); ++c) {
        s[c] = tuples[i][c] + tuples[j][c];
        fits = fits && s[c] <= rank_bound;
      }
      if (fits) m.add_set.insert({i, j, index_of(s)});
    }
  return m;
}

AbelianInvariants k0(const FDAlgebra& b, std::size_t rank_bound) {
  if (rank_bound < b.blocks())
    throw PreconditionError("rank bound " + std::to_string(rank_bound) + " is below the block count " +
                            std::to_string(b.blocks()));
  return invariants(groth_presentation(fd_algebra_V(b, rank_bound)));
}

bool mvn_equivalent(const FDAlgebra& b, const RankTuple& p, const RankTuple& q) {
  if (p.size() != b.blocks() || q.size() != b.blocks())
    throw DimensionError("rank tuples must have length " + std::to_string(b.blocks()));
  for (std::size_t j = 0; j < b.blocks(); ++j)
    if (p[j] > b.block_dims[j] || q[j] > b.block_dims[j])
      throw std::invalid_argument("rank exceeds block dimension " + std::to_string(b.block_dims[j]));
  return p == q;
}

}  // namespace qcw
