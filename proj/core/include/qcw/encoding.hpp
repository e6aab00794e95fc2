#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcw {

/// Partial table of one basic operation: argument tuple -> result.
struct OpTable {
  std::string name;
  std::size_t arity = 0;
  std::map<std::vector<std::size_t>, std::size_t> entries;

  friend bool operator==(const OpTable&, const OpTable&) = default;
};

class CongruenceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct MissingEntry {
  std::string op;
  std::vector<std::size_t> args;
};

/// The finite stage is too small: some representative tuple has no table entry.
class PartialDataError : public std::runtime_error {
 public:
  PartialDataError(std::string what, std::vector<MissingEntry> missing)
      : std::runtime_error(std::move(what)), missing_(std::move(missing)) {}
  [[nodiscard]] const std::vector<MissingEntry>& missing() const { return missing_; }

 private:
  std::vector<MissingEntry> missing_;
};

/// Equivalence relation on [0, m) given as a partition, with partial operation
/// tables. Construction checks that the classes partition [0, m), that table
/// entries stay in range, and that congruent defined arguments give congruent
/// results; violations throw CongruenceError.
class FiniteCongruence {
 public:
  FiniteCongruence(std::size_t domain_size, const std::vector<std::vector<std::size_t>>& classes,
                   std::vector<OpTable> ops = {});

  static FiniteCongruence identity(std::size_t domain_size, std::vector<OpTable> ops = {});

  [[nodiscard]] std::size_t domain_size() const { return class_of_.size(); }
  [[nodiscard]] std::size_t class_count() const { return reps_.size(); }
  [[nodiscard]] const std::vector<OpTable>& ops() const { return ops_; }
  [[nodiscard]] bool congruent(std::size_t a, std::size_t b) const { return class_of_.at(a) == class_of_.at(b); }

  /// Increasing least elements of the classes.
  [[nodiscard]] const std::vector<std::size_t>& min_representatives() const { return reps_; }
  /// q(a): index of the class of a in min_representatives order.
  [[nodiscard]] std::size_t q(std::size_t a) const { return class_of_.at(a); }
  [[nodiscard]] std::size_t rho(std::size_t k) const { return reps_.at(k); }

 private:
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> reps_;
  std::vector<OpTable> ops_;
};

/// Whole-text input: lines "a b c ..." are classes, lines "name a b -> c"
/// (or with the arrow sign U+2192) are table entries; '#' starts a comment.
/// The domain is [0, 1 + largest element in a class line).
FiniteCongruence read_congruence(std::istream& in);

std::vector<std::size_t> min_representatives(const FiniteCongruence& c);

struct RhoQ {
  std::vector<std::size_t> rho;  // class index -> representative
  std::vector<std::size_t> q;    // element -> class index
};
RhoQ rho_q(const FiniteCongruence& c);

/// Total tables on class indices: f(k_1..k_n) = q(f(rho(k_1)..rho(k_n))).
/// Throws PartialDataError listing every missing representative tuple.
std::vector<OpTable> quotient_tables(const FiniteCongruence& c);

}  // namespace qcw
