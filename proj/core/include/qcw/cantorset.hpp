#pragma once

#include <gmpxx.h>

#include <array>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qcw {

class EmptySetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Deterministic binary automaton as read from input; not necessarily pruned.
struct RawAutomaton {
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::size_t state_count = 0;
  std::size_t initial = 0;
  std::vector<std::array<std::size_t, 2>> next;  // kNone = no transition

  explicit RawAutomaton(std::size_t states = 0, std::size_t init = 0)
      : state_count(states), initial(init), next(states, {kNone, kNone}) {}

  /// Throws std::invalid_argument on out-of-range indices or a conflicting
  /// second transition for the same (state, bit).
  void add(std::size_t from, int bit, std::size_t to);
};

/// Line 1 "states initial", then lines "state bit target"; '#' starts a comment.
RawAutomaton read_automaton(std::istream& in);

/// Nonempty closed subset of Cantor space: the infinite branch labels of a
/// pruned deterministic automaton. States are numbered breadth-first from the
/// initial state 0, trying bit 0 before bit 1, so structurally equal automata
/// compare equal.
class RegularClosedSet {
 public:
  /// Removes unreachable states and states without an infinite path. Throws
  /// EmptySetError when nothing survives.
  static RegularClosedSet prune(const RawAutomaton& raw);

  static RegularClosedSet full_space();
  /// The single point u v^inf (v nonempty).
  static RegularClosedSet eventually_periodic_point(std::string_view u, std::string_view v);

  [[nodiscard]] std::size_t state_count() const { return next_.size(); }
  [[nodiscard]] std::optional<std::size_t> next(std::size_t q, int bit) const;
  [[nodiscard]] std::size_t out_degree(std::size_t q) const;
  /// State reached after reading the prefix, if the prefix extends to a branch.
  [[nodiscard]] std::optional<std::size_t> run(std::string_view bits) const;
  [[nodiscard]] RawAutomaton to_raw() const;

  friend bool operator==(const RegularClosedSet&, const RegularClosedSet&) = default;

 private:
  explicit RegularClosedSet(std::vector<std::array<std::size_t, 2>> next) : next_(std::move(next)) {}
  std::vector<std::array<std::size_t, 2>> next_;
};

std::string to_string(const RegularClosedSet& f);

/// States whose subtree carries exactly one infinite branch.
std::vector<bool> single_branch_states(const RegularClosedSet& f);

/// Topological derivative; nullopt when every point is isolated (empty result).
std::optional<RegularClosedSet> cb_derivative(const RegularClosedSet& f);

struct CBAnalysis {
  std::size_t rank = 0;  // number of derivative steps that changed the set
  std::optional<RegularClosedSet> kernel;
};

CBAnalysis cb_rank_and_kernel(const RegularClosedSet& f);

bool is_countable(const RegularClosedSet& f);
bool is_superatomic(const RegularClosedSet& f);
bool dual_separable(const RegularClosedSet& f);

/// F subset of G, via the product automaton.
bool is_subset(const RegularClosedSet& f, const RegularClosedSet& g);

/// Step function constant on depth-k cylinders; values indexed by the prefix
/// read as a binary number, first bit most significant.
struct StepFunction {
  std::size_t depth = 0;
  std::vector<mpq_class> values;

  /// Indicator of the cylinder [prefix], as a step function of depth |prefix|.
  static StepFunction indicator(std::string_view prefix);
  [[nodiscard]] const mpq_class& at(std::string_view bits) const;
};

/// Line 1 "k", then one line "bits value" per length-k string (value "a", "a/b"
/// or a decimal); every string exactly once.
StepFunction read_step_function(std::istream& in);

/// sup over F of |f| = max |value(w)| over depth-k prefixes w of branches of F.
mpq_class wijsman_dist(const StepFunction& f, const RegularClosedSet& F);

}  // namespace qcw
