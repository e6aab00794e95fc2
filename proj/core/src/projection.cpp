#include <Eigen/Dense>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <sstream>

#include "qcw/grothendieck.hpp"

namespace qcw {

namespace {

using EigenMatrix = Eigen::MatrixXcd;

EigenMatrix to_eigen(const ComplexMatrix& a) {
  EigenMatrix m(static_cast<Eigen::Index>(a.rows()), static_cast<Eigen::Index>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = a(r, c);
  return m;
}

ComplexMatrix from_eigen(const EigenMatrix& m) {
  ComplexMatrix a(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  return a;
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix shapes differ");
}

double parse_real(std::string_view s, std::string_view whole) {
  const std::string buf(s);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size() || !std::isfinite(v))
    throw std::invalid_argument("not a complex number: '" + std::string(whole) + "'");
  return v;
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shapes do not match");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
  return out;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  ComplexMatrix out = a;
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  ComplexMatrix out = a;
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
  ComplexMatrix out = a;
  for (auto& z : out.data_) z *= s;
  return out;
}

double operator_norm(const ComplexMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  Eigen::JacobiSVD<EigenMatrix> svd(to_eigen(a));
  return svd.singularValues()(0);
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = r; c < a.cols(); ++c)
      if (std::abs(a(r, c) - std::conj(a(c, r))) > tol) return false;
  return true;
}

double idempotence_defect(const ComplexMatrix& x) { return operator_norm(x * x - x); }

ComplexMatrix correct_projection(const ComplexMatrix& x, double eta0) {
  if (x.rows() != x.cols()) throw DimensionError("correct_projection needs a square matrix");
  if (!is_hermitian(x)) throw PreconditionError("matrix is not Hermitian");
  const double defect = idempotence_defect(x);
  if (!(defect < eta0)) {
    std::ostringstream os;
    os << "defect ||x^2 - x|| = " << defect << " is not below " << eta0;
    throw PreconditionError(os.str());
  }
  if (x.rows() == 0) return x;
  Eigen::SelfAdjointEigenSolver<EigenMatrix> es(to_eigen(x));
  if (es.info() != Eigen::Success) throw SpectralGapError("eigendecomposition failed");
  const auto& lambda = es.eigenvalues();
  Eigen::VectorXcd chi(lambda.size());
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    const double t = lambda(i);
    if (t > 0.25 - kBandTolerance && t < 0.75 + kBandTolerance) {
      std::ostringstream os;
      os << "eigenvalue " << t << " lies in the forbidden band (1/4, 3/4)";
      throw SpectralGapError(os.str());
    }
    chi(i) = t >= 0.75 ? 1.0 : 0.0;
  }
  const EigenMatrix& u = es.eigenvectors();
  EigenMatrix out = u * chi.asDiagonal() * u.adjoint();
  return from_eigen(out);
}

Complex parse_complex(std::string_view token) {
  if (token.empty()) throw std::invalid_argument("empty complex number");
  if (token.back() != 'i') return {parse_real(token, token), 0.0};
  const std::string_view body = token.substr(0, token.size() - 1);
  // split at the last sign that is not leading and not an exponent sign
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string_view re = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
  std::string_view im = split == std::string_view::npos ? body : body.substr(split);
  double imag = 0.0;
  if (im.empty() || im == "+")
    imag = 1.0;
  else if (im == "-")
    imag = -1.0;
  else
    imag = parse_real(im.front() == '+' ? im.substr(1) : im, token);
  return {re.empty() ? 0.0 : parse_real(re, token), imag};
}

ComplexMatrix read_complex_matrix(std::istream& in) {
  long long rows = -1;
  long long cols = -1;
  if (!(in >> rows >> cols) || rows < 0 || cols < 0)
    throw std::invalid_argument("matrix header must be 'rows cols'");
  ComplexMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      std::string tok;
      if (!(in >> tok)) throw std::invalid_argument("matrix has fewer than rows*cols entries");
      m(r, c) = parse_complex(tok);
    }
  std::string extra;
  if (in >> extra) throw std::invalid_argument("trailing data after matrix: '" + extra + "'");
  return m;
}

std::string to_string(const ComplexMatrix& m) {
  std::ostringstream os;
  os.precision(12);
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Complex z = m(r, c);
      // drop rounding noise so exact projections print cleanly
      const double re = std::abs(z.real()) < 1e-14 ? 0.0 : z.real();
      const double im = std::abs(z.imag()) < 1e-14 ? 0.0 : z.imag();
      if (c) os << ' ';
      os << re;
      if (im != 0.0) os << (im > 0 ? "+" : "") << im << 'i';
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace qcw
