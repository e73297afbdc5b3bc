#ifndef CODEWIG_SPECTRA_HPP
#define CODEWIG_SPECTRA_HPP

#include <Eigen/Core>
#include <Eigen/Jacobi>
#include <algorithm>
#include <concepts>
#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "codewig/errors.hpp"
#include "codewig/laws.hpp"
#include "codewig/signal.hpp"

namespace codewig {

/// Square matrix equal to its conjugate transpose within kSymmetryTolerance (scaled by the
/// largest entry magnitude when that exceeds 1).
template <typename Scalar>
class HermitianMatrix {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  static constexpr double kSymmetryTolerance = 1e-12;

  explicit HermitianMatrix(Matrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) throw ContractViolation("Hermitian matrix must be square");
    const double scale = std::max(1.0, entries_.cwiseAbs().maxCoeff());
    const double asymmetry = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    if (!(asymmetry <= kSymmetryTolerance * scale)) {
      throw ContractViolation("matrix is not Hermitian (max |H - H*| = " + std::to_string(asymmetry) + ")");
    }
  }

  const Matrix& matrix() const { return entries_; }
  Eigen::Index size() const { return entries_.rows(); }
  Scalar operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }
  double trace() const { return std::real(entries_.trace()); }
  double frobenius_norm_squared() const { return entries_.squaredNorm(); }

 private:
  Matrix entries_;
};

/// (1/n) Phi Phi*, mirrored from the upper triangle so the result is exactly Hermitian.
template <typename Scalar>
HermitianMatrix<Scalar> gram(const SignalMatrix<Scalar>& phi) {
  using Matrix = typename HermitianMatrix<Scalar>::Matrix;
  Matrix g = (phi.entries * phi.entries.adjoint()) / static_cast<double>(phi.cols());
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    g(i, i) = Scalar(std::real(g(i, i)));
    for (Eigen::Index j = i + 1; j < g.cols(); ++j) g(j, i) = Eigen::numext::conj(g(i, j));
  }
  return HermitianMatrix<Scalar>(std::move(g));
}

/// sqrt(n/p) (G - I). Requires a unit diagonal within 1e-12 (distinct-codeword Gram).
template <typename Scalar>
HermitianMatrix<Scalar> center_scale(const HermitianMatrix<Scalar>& g, Eigen::Index n, Eigen::Index p) {
  if (g.size() != p) throw ContractViolation("Gram size does not match p");
  for (Eigen::Index i = 0; i < p; ++i) {
    if (std::abs(g(i, i) - Scalar(1)) > 1e-12) throw ContractViolation("Gram matrix does not have a unit diagonal");
  }
  typename HermitianMatrix<Scalar>::Matrix out = g.matrix() * std::sqrt(static_cast<double>(n) / p);
  out.diagonal().setZero();
  return HermitianMatrix<Scalar>(std::move(out));
}

inline constexpr int kJacobiMaxSweeps = 64;
inline constexpr double kJacobiTolerance = 1e-12;

/// Eigenvalues by cyclic Jacobi rotations, ascending. Sweeps stop once the off-diagonal
/// Frobenius norm is below kJacobiTolerance * ||H||_F; ConvergenceError after kJacobiMaxSweeps.
template <typename Scalar>
Eigen::VectorXd eig_hermitian(const HermitianMatrix<Scalar>& h) {
  auto a = h.matrix();
  const Eigen::Index p = a.rows();
  const double threshold = kJacobiTolerance * a.norm();
  const auto off_norm = [&] {
    double s = 0.0;
    for (Eigen::Index j = 0; j < p; ++j)
      for (Eigen::Index i = 0; i < p; ++i)
        if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
  };

  int sweep = 0;
  while (off_norm() > threshold) {
    if (sweep++ == kJacobiMaxSweeps) {
      throw ConvergenceError("Jacobi eigenvalue iteration did not converge in " + std::to_string(kJacobiMaxSweeps) +
                             " sweeps");
    }
    for (Eigen::Index i = 0; i < p; ++i) {
      for (Eigen::Index j = i + 1; j < p; ++j) {
        if (a(i, j) == Scalar(0)) continue;
        Eigen::JacobiRotation<Scalar> rot;
        rot.makeJacobi(a, i, j);
        a.applyOnTheLeft(i, j, rot.adjoint());
        a.applyOnTheRight(i, j, rot);
        a(i, j) = a(j, i) = Scalar(0);
        a(i, i) = Scalar(std::real(a(i, i)));
        a(j, j) = Scalar(std::real(a(j, j)));
      }
    }
  }
  Eigen::VectorXd eigs = a.diagonal().real();
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

/// Fraction of eigenvalues <= x. `eigs` sorted ascending.
inline double esd(const Eigen::VectorXd& eigs, double x) {
  if (eigs.size() == 0) return 0.0;
  const auto count = std::upper_bound(eigs.begin(), eigs.end(), x) - eigs.begin();
  return static_cast<double>(count) / static_cast<double>(eigs.size());
}

/// sup_x |ESD(x) - F(x)|, evaluated exactly at the jumps of the ESD. Tied eigenvalues form a
/// single jump; the left limit of F is taken one ulp below each jump, so F may itself be a
/// step function.
template <typename Cdf>
  requires std::invocable<Cdf, double>
double ks_statistic(const Eigen::VectorXd& eigs, Cdf&& cdf) {
  const auto p = eigs.size();
  double sup = 0.0;
  for (Eigen::Index i = 0; i < p;) {
    Eigen::Index j = i;
    while (j + 1 < p && eigs(j + 1) == eigs(i)) ++j;
    const double below = static_cast<double>(i) / p;
    const double at = static_cast<double>(j + 1) / p;
    const double f_left = cdf(std::nextafter(eigs(i), -std::numeric_limits<double>::infinity()));
    const double f_at = cdf(eigs(i));
    sup = std::max({sup, std::abs(below - f_left), std::abs(at - f_at)});
    i = j + 1;
  }
  return sup;
}

inline double ks_statistic(const Eigen::VectorXd& eigs, const LawSpec& law) {
  return ks_statistic(eigs, [&](double x) { return law.cdf(x); });
}

/// A_l = (1/p) sum_j lambda_j^l for l = 1..l_max; element l-1 holds A_l.
inline std::vector<double> trace_moments(const Eigen::VectorXd& eigs, unsigned l_max) {
  if (l_max < 1) throw ParameterError("l_max must be >= 1");
  std::vector<double> out(l_max, 0.0);
  for (Eigen::Index j = 0; j < eigs.size(); ++j) {
    double power = 1.0;
    for (unsigned l = 0; l < l_max; ++l) {
      power *= eigs(j);
      out[l] += power;
    }
  }
  for (auto& m : out) m /= static_cast<double>(eigs.size());
  return out;
}

/// Residuals of the invariance identities sum(lambda) = Tr H and sum(lambda^2) = ||H||_F^2,
/// each relative to max(1, |reference|).
struct DecompositionCheck {
  double trace_residual = 0.0;
  double frobenius_residual = 0.0;
  double eigenvalue_sum = 0.0;
};

template <typename Scalar>
DecompositionCheck check_decomposition(const HermitianMatrix<Scalar>& h, const Eigen::VectorXd& eigs) {
  DecompositionCheck check;
  check.eigenvalue_sum = eigs.sum();
  const double tr = h.trace();
  const double fro2 = h.frobenius_norm_squared();
  check.trace_residual = std::abs(check.eigenvalue_sum - tr) / std::max(1.0, std::abs(tr));
  check.frobenius_residual = std::abs(eigs.squaredNorm() - fro2) / std::max(1.0, fro2);
  return check;
}

struct SpectralMetadata {
  std::string code_label;
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  SamplingMode mode = SamplingMode::distinct;
};

struct SpectralSummary {
  Eigen::VectorXd eigenvalues;
  double ks_to_law = 0.0;
  std::vector<std::pair<unsigned, double>> moments;
  LawSpec law = LawSpec::semicircle();
  SpectralMetadata metadata;
  DecompositionCheck check;
};

/// Eigenvalues of h, KS distance to `law`, moments up to l_max and identity residuals.
template <typename Scalar>
SpectralSummary summarize(const HermitianMatrix<Scalar>& h, const LawSpec& law, unsigned l_max,
                          SpectralMetadata metadata) {
  SpectralSummary s;
  s.eigenvalues = eig_hermitian(h);
  s.ks_to_law = ks_statistic(s.eigenvalues, law);
  const auto moments = trace_moments(s.eigenvalues, l_max);
  for (unsigned l = 1; l <= l_max; ++l) s.moments.emplace_back(l, moments[l - 1]);
  s.law = law;
  s.metadata = std::move(metadata);
  s.check = check_decomposition(h, s.eigenvalues);
  return s;
}

/// Header "lambda", then one value per line with 17 significant digits.
void write_eigenvalue_csv(std::ostream& out, const Eigen::VectorXd& eigs);

}  // namespace codewig

#endif  // CODEWIG_SPECTRA_HPP
