#ifndef CODEWIG_LAWS_HPP
#define CODEWIG_LAWS_HPP

#include <functional>
#include <string>
#include <utility>

namespace codewig {

/// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance `tol`.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol);

double binomial_coefficient(unsigned n, unsigned k);
/// C_k = binom(2k, k) / (k + 1)
double catalan_number(unsigned k);

/// Semicircle density (1/2pi) sqrt(4 - x^2) on [-2, 2].
double sc_pdf(double x);
/// Closed form 1/2 + x sqrt(4 - x^2) / (4 pi) + asin(x / 2) / pi on [-2, 2].
double sc_cdf(double x);
/// 0 for odd l, Catalan(l / 2) for even l. l >= 1.
double sc_moment(unsigned l);

/// Support [a, b] = [(1 - sqrt y)^2, (1 + sqrt y)^2]. 0 < y < 1.
std::pair<double, double> mp_support(double y);
/// Marchenko-Pastur density sqrt((b - x)(x - a)) / (2 pi x y) on [a, b].
double mp_pdf(double x, double y);
/// CDF by quadrature. The interval is split at its midpoint and integrated in u with
/// x = a + u^2 (left half) or x = b - u^2 (right half), which removes the edge square roots.
double mp_cdf(double x, double y);
/// sum_{j=0}^{l-1} y^j / (j + 1) binom(l, j) binom(l - 1, j). l >= 1.
double mp_moment(unsigned l, double y);

enum class LawKind { semicircle, marchenko_pastur };

/// Reference law: semicircle, or Marchenko-Pastur with aspect ratio y in (0, 1).
class LawSpec {
 public:
  static LawSpec semicircle() { return LawSpec(LawKind::semicircle, 0.0); }
  /// Throws ParameterError unless 0 < y < 1.
  static LawSpec marchenko_pastur(double y);

  LawKind kind() const { return kind_; }
  double y() const { return y_; }
  std::string name() const;

  std::pair<double, double> support() const;
  double pdf(double x) const;
  double cdf(double x) const;
  double moment(unsigned l) const;

 private:
  LawSpec(LawKind kind, double y) : kind_(kind), y_(y) {}

  LawKind kind_;
  double y_;
};

}  // namespace codewig

#endif  // CODEWIG_LAWS_HPP
