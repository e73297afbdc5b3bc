#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "codewig/errors.hpp"
#include "codewig/laws.hpp"

using namespace codewig;

namespace {

// tanh-sinh copes with the square-root edges of both densities.
template <typename F>
double oracle_integral(F f, double a, double b) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  return integrator.integrate(f, a, b);
}

}  // namespace

TEST_CASE("densities integrate to one") {
  CHECK(std::abs(oracle_integral(sc_pdf, -2.0, 2.0) - 1.0) < 1e-8);
  for (double y : {0.1, 0.25, 0.5, 0.9}) {
    const auto [a, b] = mp_support(y);
    CHECK(std::abs(oracle_integral([y](double x) { return mp_pdf(x, y); }, a, b) - 1.0) < 1e-8);
    CHECK(std::abs(mp_cdf(b, y) - 1.0) < 1e-8);
    CHECK(mp_cdf(a, y) == 0.0);
  }
}

TEST_CASE("moments match quadrature") {
  for (unsigned l = 1; l <= 6; ++l) {
    const double sc = oracle_integral([l](double x) { return std::pow(x, l) * sc_pdf(x); }, -2.0, 2.0);
    CHECK(std::abs(sc_moment(l) - sc) < 1e-6);
    for (double y : {0.2, 0.5, 0.8}) {
      const auto [a, b] = mp_support(y);
      const double mp = oracle_integral([l, y](double x) { return std::pow(x, l) * mp_pdf(x, y); }, a, b);
      CHECK(std::abs(mp_moment(l, y) - mp) < 1e-6);
    }
  }
  CHECK(sc_moment(8) == 14.0);
  CHECK(mp_moment(1, 0.3) == doctest::Approx(1.0));
  CHECK(mp_moment(2, 0.3) == doctest::Approx(1.3));
}

TEST_CASE("semicircle CDF") {
  CHECK(sc_cdf(0.0) == 0.5);
  CHECK(sc_cdf(-2.0) == 0.0);
  CHECK(sc_cdf(2.0) == 1.0);
  CHECK(sc_cdf(-5.0) == 0.0);
  CHECK(sc_cdf(7.0) == 1.0);
  for (double x : {-1.7, -0.3, 0.4, 1.9}) {
    const double ref = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(sc_pdf, -2.0, x, 15, 1e-13);
    CHECK(std::abs(sc_cdf(x) - ref) < 1e-9);
    CHECK(sc_cdf(-x) == doctest::Approx(1.0 - sc_cdf(x)).epsilon(1e-14));
  }
}

TEST_CASE("Marchenko-Pastur CDF against an independent integral") {
  for (double y : {0.1, 0.5, 0.9}) {
    const auto [a, b] = mp_support(y);
    double previous = 0.0;
    for (int i = 1; i < 20; ++i) {
      const double x = a + (b - a) * i / 20.0;
      const double ref = oracle_integral([y](double t) { return mp_pdf(t, y); }, a, x);
      CHECK(std::abs(mp_cdf(x, y) - ref) < 1e-8);
      CHECK(mp_cdf(x, y) >= previous);
      previous = mp_cdf(x, y);
    }
  }
}

TEST_CASE("Catalan and binomial values") {
  const std::vector<double> catalan{1, 1, 2, 5, 14, 42, 132, 429};
  for (unsigned k = 0; k < catalan.size(); ++k) CHECK(catalan_number(k) == catalan[k]);
  CHECK(binomial_coefficient(10, 5) == 252.0);
  CHECK(binomial_coefficient(3, 5) == 0.0);
}

TEST_CASE("adaptive Simpson") {
  CHECK(adaptive_simpson([](double x) { return std::exp(x); }, 0.0, 1.0, 1e-12) ==
        doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-11));
}

TEST_CASE("law objects") {
  const auto sc = LawSpec::semicircle();
  CHECK(sc.name() == "SC");
  CHECK(sc.support() == std::pair<double, double>{-2.0, 2.0});
  const auto mp = LawSpec::marchenko_pastur(0.5);
  CHECK(mp.support().first == doctest::Approx(std::pow(1 - std::sqrt(0.5), 2)));
  CHECK(mp.moment(3) == doctest::Approx(mp_moment(3, 0.5)));
  CHECK(mp.pdf(10.0) == 0.0);
  CHECK_THROWS_AS(LawSpec::marchenko_pastur(1.0), ParameterError);
  CHECK_THROWS_AS(LawSpec::marchenko_pastur(0.0), ParameterError);
  CHECK_THROWS_AS(sc_moment(0), ParameterError);
}
