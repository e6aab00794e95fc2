#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "qcw/abelian.hpp"
#include "qcw/pointclass.hpp"

namespace qcw {

/// Ultimately periodic bit sequence prefix . period^inf.
class UPSequence {
 public:
  UPSequence(std::string prefix, std::string period);

  /// "prefix;period" over {0,1}, e.g. "101;0". The prefix may be empty.
  static UPSequence parse(std::string_view literal);

  [[nodiscard]] bool at(std::size_t n) const;
  [[nodiscard]] const std::string& prefix() const { return prefix_; }
  [[nodiscard]] const std::string& period() const { return period_; }

  /// Eventually zero: the period has no 1.
  [[nodiscard]] bool in_fin() const { return period_ones_ == 0; }
  /// Infinitely many ones: the period has a 1.
  [[nodiscard]] bool in_p_infinity() const { return period_ones_ != 0; }

  [[nodiscard]] std::string to_string() const { return prefix_ + ";" + period_; }

 private:
  friend std::size_t k_alpha(const UPSequence& alpha, std::size_t n);
  std::string prefix_;
  std::string period_;
  std::size_t prefix_ones_ = 0;
  std::size_t period_ones_ = 0;
};

/// Number of ones among alpha(0), ..., alpha(n-1).
std::size_t k_alpha(const UPSequence& alpha, std::size_t n);

enum class ReductionFamily { GroupFin, AbelianFin, RingFin, LatticeFin, AbTorsion, AbDivisible };

struct FamilyInfo {
  ReductionFamily family;
  std::string name;           // CLI spelling
  std::string property;       // property of the coded object
  Pointclass property_class;  // class the property is complete for
  bool reduces_from_fin;      // Fin (true) or P_inf (false)
};

const FamilyInfo& family_info(ReductionFamily f);
const std::vector<ReductionFamily>& all_families();
std::optional<ReductionFamily> parse_family(std::string_view name);

/// Word in x_0, x_1, ...: (generator index, exponent) letters.
struct GroupWord {
  std::vector<std::pair<std::size_t, long>> letters;
};

/// Integer polynomial of total degree <= 2 in X_0, X_1, ...; a monomial is its
/// sorted list of variable indices (empty = constant term).
struct RingPolynomial {
  std::map<std::vector<std::size_t>, Integer> terms;
};

/// Lattice term over the designated top generator and y_0, y_1, ...
class LatticeTerm {
 public:
  enum class Op { Top, Generator, Join, Meet };

  static LatticeTerm top();
  static LatticeTerm generator(std::size_t index);
  static LatticeTerm join(LatticeTerm a, LatticeTerm b);
  static LatticeTerm meet(LatticeTerm a, LatticeTerm b);

  [[nodiscard]] Op op() const { return node_->op; }
  [[nodiscard]] std::size_t index() const { return node_->index; }
  [[nodiscard]] const LatticeTerm& left() const { return node_->children.at(0); }
  [[nodiscard]] const LatticeTerm& right() const { return node_->children.at(1); }

 private:
  struct Node {
    Op op;
    std::size_t index = 0;
    std::vector<LatticeTerm> children;
  };
  explicit LatticeTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Pair of lattice terms; a member of the kernel congruence iff both sides agree.
struct LatticeEquation {
  LatticeTerm lhs;
  LatticeTerm rhs;
};

/// Abelian families take coefficient vectors on e_0, e_1, ...
using Witness = std::variant<IntVector, GroupWord, RingPolynomial, LatticeEquation>;

/// 1 + the largest generator index occurring in the witness (0 if none).
std::size_t locality_radius(ReductionFamily family, const Witness& w);

class ReductionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite stage of a coded kernel. Generators are e_0..e_{stage-1}
/// (x_i, X_i, y_i for the non-abelian families); the abelian families keep
/// exactly those relation vectors whose support lies in [0, stage). The code
/// depends only on alpha(0), ..., alpha(stage-1).
class TruncatedCode {
 public:
  TruncatedCode(ReductionFamily family, UPSequence alpha, std::size_t stage);

  [[nodiscard]] ReductionFamily family() const { return family_; }
  [[nodiscard]] std::size_t stage() const { return stage_; }
  [[nodiscard]] const UPSequence& alpha() const { return alpha_; }

  /// Abelian families only.
  [[nodiscard]] const AbelianPresentation& presentation() const;
  [[nodiscard]] bool is_abelian() const { return presentation_.has_value(); }

  /// Whether the witness lies in the coded kernel at this stage. Throws
  /// ReductionError for a witness of the wrong shape or beyond the stage.
  [[nodiscard]] bool contains(const Witness& w) const;

  /// Size of the truncated quotient object; nullopt when infinite.
  [[nodiscard]] std::optional<Integer> quotient_order() const;

  /// The set {k_alpha(n) : n < stage}.
  [[nodiscard]] std::set<std::size_t> image() const;

 private:
  ReductionFamily family_;
  UPSequence alpha_;
  std::size_t stage_;
  std::optional<AbelianPresentation> presentation_;
};

TruncatedCode truncated_code(ReductionFamily family, const UPSequence& alpha, std::size_t stage);

/// Exact truth value of the target property for the limit object.
bool classify(ReductionFamily family, const UPSequence& alpha);

}  // namespace qcw
