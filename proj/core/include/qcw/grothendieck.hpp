#pragma once

#include <array>
#include <complex>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcw/abelian.hpp"
#include "qcw/errors.hpp"

namespace qcw {

/// Countable monoid data on indices [0, index_bound): index i names nu(i).
struct MonoidData {
  std::size_t index_bound = 0;
  std::set<std::size_t> zero_set;
  std::set<std::pair<std::size_t, std::size_t>> eq_set;
  std::set<std::array<std::size_t, 3>> add_set;  // (m, n, k): nu(m) + nu(n) = nu(k)

  /// Throws DimensionError when an index is >= index_bound.
  void validate() const;
};

/// Relations e_n (n in Z), e_m - e_n ((m,n) in E), e_m + e_n - e_k ((m,n,k) in A),
/// in that order.
AbelianPresentation groth_presentation(const MonoidData& m);

/// Direct sum of full matrix algebras M_{d_1} + ... + M_{d_l}.
struct FDAlgebra {
  std::vector<std::size_t> block_dims;

  explicit FDAlgebra(std::vector<std::size_t> dims);
  /// Comma-separated dims, e.g. "2,5".
  static FDAlgebra parse(std::string_view literal);

  [[nodiscard]] std::size_t blocks() const { return block_dims.size(); }
};

using RankTuple = std::vector<std::size_t>;

/// All tuples in [0, r]^l in lexicographic order; position = monoid index.
std::vector<RankTuple> rank_tuples(const FDAlgebra& b, std::size_t r);

MonoidData fd_algebra_V(const FDAlgebra& b, std::size_t rank_bound);

/// invariants(groth_presentation(fd_algebra_V(b, r))). Requires r >= l.
AbelianInvariants k0(const FDAlgebra& b, std::size_t rank_bound);

/// Projections in b with these block ranks are Murray-von Neumann equivalent.
bool mvn_equivalent(const FDAlgebra& b, const RankTuple& p, const RankTuple& q);

using Complex = std::complex<double>;

/// Dense square-or-rectangular complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static ComplexMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] ComplexMatrix adjoint() const;

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Largest singular value.
double operator_norm(const ComplexMatrix& a);
bool is_hermitian(const ComplexMatrix& a, double tol = 1e-12);
/// ||x^2 - x|| in operator norm.
double idempotence_defect(const ComplexMatrix& x);

inline constexpr double kEta0 = 0.125;
inline constexpr double kBandTolerance = 1e-9;

/// Eigenvalue found in or within kBandTolerance of (1/4, 3/4).
class SpectralGapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// chi(x) with chi = 0 on [0,1/4], 1 on [3/4, inf). Throws DimensionError for
/// a non-square matrix, PreconditionError when x is not Hermitian or the
/// defect is >= eta0, SpectralGapError when the spectrum meets the band.
ComplexMatrix correct_projection(const ComplexMatrix& x, double eta0 = kEta0);

/// "rows cols" then entries "a", "bi", "a+bi", "a-bi" (also "i", "-i").
ComplexMatrix read_complex_matrix(std::istream& in);
Complex parse_complex(std::string_view token);
std::string to_string(const ComplexMatrix& m);

}  // namespace qcw
