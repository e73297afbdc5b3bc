#include "codewig/laws.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "codewig/errors.hpp"

namespace codewig {

namespace {

constexpr double kMpCdfTolerance = 1e-10;

struct SimpsonPanel {
  double a, fa, m, fm, b, fb, whole;
};

double simpson(double a, double fa, double fm, double b, double fb) { return (b - a) / 6.0 * (fa + 4.0 * fm + fb); }

double refine(const std::function<double(double)>& f, const SimpsonPanel& p, double tol, int depth) {
  const double lm = 0.5 * (p.a + p.m);
  const double rm = 0.5 * (p.m + p.b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(p.a, p.fa, flm, p.m, p.fm);
  const double right = simpson(p.m, p.fm, frm, p.b, p.fb);
  const double delta = left + right - p.whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return refine(f, {p.a, p.fa, lm, flm, p.m, p.fm, left}, 0.5 * tol, depth - 1) +
         refine(f, {p.m, p.fm, rm, frm, p.b, p.fb, right}, 0.5 * tol, depth - 1);
}

void require_aspect_ratio(double y) {
  if (!(y > 0.0 && y < 1.0)) throw ParameterError("Marchenko-Pastur aspect ratio must lie in (0, 1)");
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  return refine(f, {a, fa, m, fm, b, fb, simpson(a, fa, fm, b, fb)}, tol, 48);
}

double binomial_coefficient(unsigned n, unsigned k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

double catalan_number(unsigned k) { return binomial_coefficient(2 * k, k) / (k + 1); }

double sc_pdf(double x) {
  if (x <= -2.0 || x >= 2.0) return 0.0;
  return std::sqrt(4.0 - x * x) / (2.0 * std::numbers::pi);
}

double sc_cdf(double x) {
  if (x <= -2.0) return 0.0;
  if (x >= 2.0) return 1.0;
  return 0.5 + x * std::sqrt(4.0 - x * x) / (4.0 * std::numbers::pi) + std::asin(0.5 * x) / std::numbers::pi;
}

double sc_moment(unsigned l) {
  if (l < 1) throw ParameterError("moment order must be >= 1");
  if (l % 2 == 1) return 0.0;
  return 2.0 / (l + 2.0) * binomial_coefficient(l, l / 2);
}

std::pair<double, double> mp_support(double y) {
  require_aspect_ratio(y);
  const double r = std::sqrt(y);
  return {(1.0 - r) * (1.0 - r), (1.0 + r) * (1.0 + r)};
}

double mp_pdf(double x, double y) {
  const auto [a, b] = mp_support(y);
  if (x <= a || x >= b) return 0.0;
  return std::sqrt((b - x) * (x - a)) / (2.0 * std::numbers::pi * x * y);
}

double mp_cdf(double x, double y) {
  const auto [a, b] = mp_support(y);
  if (x <= a) return 0.0;
  if (x >= b) return 1.0;
  const double mid = 0.5 * (a + b);
  const double tol = 0.25 * kMpCdfTolerance;
  // d/du F(a + u^2) = 2u pdf(a + u^2), and likewise from the right edge.
  const auto from_left = [&](double u) { return 2.0 * u * mp_pdf(a + u * u, y); };
  const auto from_right = [&](double u) { return 2.0 * u * mp_pdf(b - u * u, y); };
  if (x <= mid) return adaptive_simpson(from_left, 0.0, std::sqrt(x - a), tol);
  const double left_half = adaptive_simpson(from_left, 0.0, std::sqrt(mid - a), tol);
  return std::min(1.0, left_half + adaptive_simpson(from_right, std::sqrt(b - x), std::sqrt(b - mid), tol));
}

double mp_moment(unsigned l, double y) {
  require_aspect_ratio(y);
  if (l < 1) throw ParameterError("moment order must be >= 1");
  double sum = 0.0;
  for (unsigned j = 0; j < l; ++j) {
    sum += std::pow(y, j) / (j + 1.0) * binomial_coefficient(l, j) * binomial_coefficient(l - 1, j);
  }
  return sum;
}

LawSpec LawSpec::marchenko_pastur(double y) {
  require_aspect_ratio(y);
  return LawSpec(LawKind::marchenko_pastur, y);
}

std::string LawSpec::name() const {
  return kind_ == LawKind::semicircle ? "SC" : "MP(" + std::to_string(y_) + ")";
}

std::pair<double, double> LawSpec::support() const {
  return kind_ == LawKind::semicircle ? std::pair{-2.0, 2.0} : mp_support(y_);
}

double LawSpec::pdf(double x) const { return kind_ == LawKind::semicircle ? sc_pdf(x) : mp_pdf(x, y_); }

double LawSpec::cdf(double x) const { return kind_ == LawKind::semicircle ? sc_cdf(x) : mp_cdf(x, y_); }

double LawSpec::moment(unsigned l) const { return kind_ == LawKind::semicircle ? sc_moment(l) : mp_moment(l, y_); }

}  // namespace codewig
