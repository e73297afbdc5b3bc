#ifndef CODEWIG_EXPERIMENTS_HPP
#define CODEWIG_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "codewig/laws.hpp"
#include "codewig/linear_code.hpp"
#include "codewig/signal.hpp"
#include "codewig/spectra.hpp"

namespace codewig {

/// gold m | rm1 m | even n | file path
struct CodeSelector {
  std::string kind;
  unsigned m = 0;
  unsigned n = 0;
  std::string file;
};

LinearCode make_code(const CodeSelector& selector);

/// Fully resolved settings of one CLI run; embedded verbatim in every JSON output.
struct ExperimentConfig {
  std::string command;
  CodeSelector code;
  std::optional<std::int64_t> p;
  std::optional<double> y;
  LawKind law = LawKind::semicircle;
  SamplingMode mode = SamplingMode::distinct;
  std::uint64_t seed = 1;
  unsigned repeats = 10;
  unsigned bins = 40;
  unsigned l_max = 4;
  unsigned dual_bound = 5;
  std::string out_dir;
  std::vector<std::string> warnings;
};

/// Bars with density normalization (total area 1).
struct Histogram {
  std::vector<double> left;
  std::vector<double> right;
  std::vector<double> density;
};

Histogram make_histogram(const Eigen::VectorXd& values, unsigned bins, double lo, double hi);

/// Histogram range covering both the eigenvalues and the support of the law.
Histogram histogram_for(const Eigen::VectorXd& eigs, const LawSpec& law, unsigned bins);

struct RepeatSpectrum {
  unsigned repeat = 0;
  SpectralSummary summary;
  Histogram histogram;
};

struct SpectrumRun {
  std::string code_label;
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  LawSpec law = LawSpec::semicircle();
  SamplingMode mode = SamplingMode::distinct;
  std::vector<RepeatSpectrum> repeats{};
  double median_ks = 0.0;
  double max_trace_residual = 0.0;
  double max_frobenius_residual = 0.0;
  double max_abs_eigenvalue = 0.0;
};

double median(std::vector<double> values);
/// Mean summed in ascending order.
double sorted_mean(std::vector<double> values);
/// Unbiased sample variance (divides by count - 1), accumulated in ascending order.
double sample_variance(std::vector<double> values);

/// Spectra of sqrt(n/p)(G - I) against the semicircle; repeat r samples with stream r.
SpectrumRun run_semicircle(const LinearCode& code, std::int64_t p, std::uint64_t seed, unsigned repeats,
                           unsigned l_max, unsigned bins = 40);

/// Rows for a Marchenko-Pastur run: p = round(y n), which must satisfy 2 <= p < n.
std::int64_t mp_rows(const LinearCode& code, double y);

/// Spectra of the uncentered Gram matrix G against MP(p/n) with p = mp_rows(code, y).
SpectrumRun run_marchenko_pastur(const LinearCode& code, double y, SamplingMode mode, std::uint64_t seed,
                                 unsigned repeats, unsigned l_max, unsigned bins = 40);

inline constexpr double kMomentGateMultiplier = 3.0;

struct MomentRow {
  unsigned l = 0;
  double mean = 0.0;
  double variance = 0.0;
  double sc_moment = 0.0;
  double error_scale = 0.0;  // c^l/p + n/N + p/n (even l) or c^l/sqrt(p) + sqrt(p/n) (odd l)
  double deviation = 0.0;    // |mean - sc_moment|
  bool within_gate = false;  // deviation <= kMomentGateMultiplier * error_scale
};

struct MomentRun {
  std::string code_label;
  std::uint64_t n = 0;
  std::uint64_t N = 0;
  std::uint64_t p = 0;
  unsigned repeats = 0;
  double coherence_constant = 0.0;
  double multiplier = kMomentGateMultiplier;
  std::vector<MomentRow> rows;
  std::vector<std::vector<double>> samples;  // samples[r][l-1] = A_{l,I} of repeat r
  double max_trace_residual = 0.0;
  double max_frobenius_residual = 0.0;
  double max_centered_eigenvalue_sum = 0.0;
};

/// Error scale of the moment estimate at order l for coherence constant c.
double moment_error_scale(unsigned l, double c, double n, double N, double p);

/// Mean and variance of A_{l,I} over distinct-mode repeats; l_max <= 12, repeats >= 2.
MomentRun run_moments(const LinearCode& code, std::int64_t p, std::uint64_t seed, unsigned repeats, unsigned l_max,
                      double coherence_constant);

}  // namespace codewig

#endif  // CODEWIG_EXPERIMENTS_HPP
