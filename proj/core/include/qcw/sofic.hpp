#pragma once

#include <gmpxx.h>

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcw {

/// One-line notation: p[i] is the image of i.
using Permutation = std::vector<std::size_t>;

bool is_permutation(const Permutation& p);
Permutation identity_permutation(std::size_t d);
/// (p * q)(i) = p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);

/// |{i : p(i) != q(i)}| / d. Throws DimensionError on a degree mismatch.
mpq_class hamming(const Permutation& p, const Permutation& q);

class TableError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Confirmed facts about a group on a finite symbol set. Symbol 0 is the
/// identity "1". Identity laws 1u = u1 = u and inverse laws u u^-1 = u^-1 u = 1
/// are added automatically.
class PartialTable {
 public:
  PartialTable();

  std::size_t add_symbol(const std::string& name);  // idempotent
  [[nodiscard]] std::optional<std::size_t> find(const std::string& name) const;
  [[nodiscard]] const std::string& name(std::size_t i) const { return symbols_.at(i); }
  [[nodiscard]] std::size_t size() const { return symbols_.size(); }

  void add_inverse(std::size_t a, std::size_t b);
  /// uv = w
  void add_product(std::size_t u, std::size_t v, std::size_t w);
  /// u != v; rejects u == v and pairs directly identified by an identity law.
  void add_distinction(std::size_t u, std::size_t v);

  [[nodiscard]] const std::set<std::array<std::size_t, 3>>& products() const { return products_; }
  [[nodiscard]] const std::set<std::pair<std::size_t, std::size_t>>& distinctions() const { return distinctions_; }
  [[nodiscard]] std::optional<std::size_t> inverse(std::size_t a) const;

 private:
  void check(std::size_t i) const;
  std::vector<std::string> symbols_;
  std::map<std::string, std::size_t> index_;
  std::map<std::size_t, std::size_t> inverse_;
  std::set<std::array<std::size_t, 3>> products_;
  std::set<std::pair<std::size_t, std::size_t>> distinctions_;
};

/// Lines "sym a", "inv a b", "mul a b c", "neq a b"; '#' starts a comment.
/// Every symbol must end up with an inverse.
PartialTable read_partial_table(std::istream& in);

/// Regular-representation style table of Z/n: symbols 1, g1, ..., g{n-1}
/// with the full multiplication table and all distinctions.
PartialTable cyclic_group_table(std::size_t n);

struct SoficMap {
  std::size_t degree = 0;
  std::map<std::string, Permutation> sigma;
};

/// Line 1 "d", then lines "name p0 p1 ... p{d-1}".
SoficMap read_sofic_map(std::istream& in);
std::string to_string(const SoficMap& s);

enum class SoficClause { Identity, Product, Distinction };
std::string to_string(SoficClause c);

struct SoficViolation {
  SoficClause clause;
  std::vector<std::string> symbols;
  mpq_class distance;
};

struct VerifyResult {
  bool ok = true;
  std::optional<SoficViolation> violation;  // first violated clause
};

class CoverageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Checks sigma(1) = id, d_H(s(u)s(v), s(w)) < eps on products and
/// d_H(s(u), s(v)) > 1 - eps on distinctions, in that order.
VerifyResult verify(const PartialTable& t, const SoficMap& s, const mpq_class& eps);

/// Least verifying map by degree, then by the symbols' permutations in
/// lexicographic order; nullopt when none exists with degree <= d_max.
std::optional<SoficMap> search(const PartialTable& t, const mpq_class& eps, std::size_t d_max);

}  // namespace qcw
