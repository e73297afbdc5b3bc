#include "codewig/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <thread>

#include "codewig/errors.hpp"

namespace codewig {

namespace {

// Runs task(i) for i in [0, count) on up to hardware_concurrency threads.
template <typename Task>
void parallel_for(unsigned count, Task&& task) {
  const unsigned workers = std::max(1u, std::min(count, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (unsigned i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<unsigned> next{0};
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (unsigned i = next++; i < count; i = next++) {
        try {
          task(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

SpectralMetadata metadata_for(const LinearCode& code, std::int64_t p, std::uint64_t seed, unsigned repeat,
                              SamplingMode mode) {
  return {code.label(), static_cast<std::uint64_t>(code.length()), static_cast<std::uint64_t>(p), seed, repeat, mode};
}

template <typename Scalar>
RepeatSpectrum semicircle_repeat(const LinearCode& code, std::int64_t p, std::uint64_t seed, unsigned repeat,
                                 unsigned l_max, unsigned bins) {
  const auto phi = sample_codewords<Scalar>(code, p, SamplingMode::distinct, seed, repeat);
  const auto centered = center_scale(gram(phi), code.length(), p);
  const auto law = LawSpec::semicircle();
  RepeatSpectrum out;
  out.repeat = repeat;
  out.summary = summarize(centered, law, l_max, metadata_for(code, p, seed, repeat, SamplingMode::distinct));
  out.histogram = histogram_for(out.summary.eigenvalues, law, bins);
  return out;
}

template <typename Scalar>
RepeatSpectrum mp_repeat(const LinearCode& code, std::int64_t p, SamplingMode mode, std::uint64_t seed,
                         unsigned repeat, unsigned l_max, unsigned bins) {
  const auto phi = sample_codewords<Scalar>(code, p, mode, seed, repeat);
  const auto law = LawSpec::marchenko_pastur(static_cast<double>(p) / static_cast<double>(code.length()));
  RepeatSpectrum out;
  out.repeat = repeat;
  out.summary = summarize(gram(phi), law, l_max, metadata_for(code, p, seed, repeat, mode));
  out.histogram = histogram_for(out.summary.eigenvalues, law, bins);
  return out;
}

void finish(SpectrumRun& run) {
  std::vector<double> ks;
  for (const auto& r : run.repeats) {
    ks.push_back(r.summary.ks_to_law);
    run.max_trace_residual = std::max(run.max_trace_residual, r.summary.check.trace_residual);
    run.max_frobenius_residual = std::max(run.max_frobenius_residual, r.summary.check.frobenius_residual);
    if (r.summary.eigenvalues.size() > 0) {
      run.max_abs_eigenvalue = std::max(run.max_abs_eigenvalue, r.summary.eigenvalues.cwiseAbs().maxCoeff());
    }
  }
  run.median_ks = median(ks);
}

void require_repeats(unsigned repeats) {
  if (repeats < 1) throw ParameterError("repeats must be >= 1");
}

}  // namespace

LinearCode make_code(const CodeSelector& selector) {
  if (selector.kind == "gold") return make_gold(selector.m);
  if (selector.kind == "rm1") return make_rm1(selector.m);
  if (selector.kind == "even") return make_even_weight(selector.n);
  if (selector.kind == "file") return read_generator_file(selector.file);
  throw ParameterError("unknown code '" + selector.kind + "' (expected gold, rm1, even or file)");
}

Histogram make_histogram(const Eigen::VectorXd& values, unsigned bins, double lo, double hi) {
  if (bins < 1) throw ParameterError("need at least one histogram bin");
  if (!(hi > lo)) throw ParameterError("histogram range is empty");
  Histogram h;
  const double width = (hi - lo) / bins;
  std::vector<std::uint64_t> counts(bins, 0);
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    auto b = static_cast<long>(std::floor((values(i) - lo) / width));
    b = std::clamp(b, 0L, static_cast<long>(bins) - 1);
    ++counts[static_cast<std::size_t>(b)];
  }
  for (unsigned b = 0; b < bins; ++b) {
    h.left.push_back(lo + b * width);
    h.right.push_back(b + 1 == bins ? hi : lo + (b + 1) * width);
    h.density.push_back(values.size() ? counts[b] / (static_cast<double>(values.size()) * width) : 0.0);
  }
  return h;
}

Histogram histogram_for(const Eigen::VectorXd& eigs, const LawSpec& law, unsigned bins) {
  auto [lo, hi] = law.support();
  if (eigs.size() > 0) {
    lo = std::min(lo, eigs.minCoeff());
    hi = std::max(hi, eigs.maxCoeff());
  }
  return make_histogram(eigs, bins, lo, hi);
}

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const auto mid = values.size() / 2;
  return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

double sorted_mean(std::vector<double> values) {
  if (values.empty()) return 0.0;
  // summing in sorted order keeps the result independent of repeat completion order
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

double sample_variance(std::vector<double> values) {
  if (values.size() < 2) return 0.0;
  std::sort(values.begin(), values.end());
  const double mean = sorted_mean(values);
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return ss / static_cast<double>(values.size() - 1);
}

SpectrumRun run_semicircle(const LinearCode& code, std::int64_t p, std::uint64_t seed, unsigned repeats,
                           unsigned l_max, unsigned bins) {
  require_repeats(repeats);
  if (p < 1 || static_cast<std::uint64_t>(p) > code.codeword_count()) {
    throw ParameterError("distinct sampling needs 1 <= p <= N");
  }
  SpectrumRun run{.code_label = code.label(),
                  .n = static_cast<std::uint64_t>(code.length()),
                  .p = static_cast<std::uint64_t>(p)};
  run.repeats.resize(repeats);
  parallel_for(repeats, [&](unsigned r) {
    run.repeats[r] = code.q() == 2 ? semicircle_repeat<double>(code, p, seed, r, l_max, bins)
                                   : semicircle_repeat<std::complex<double>>(code, p, seed, r, l_max, bins);
  });
  finish(run);
  return run;
}

std::int64_t mp_rows(const LinearCode& code, double y) {
  if (!(y > 0.0 && y < 1.0)) throw ParameterError("y must lie in (0, 1)");
  const auto p = static_cast<std::int64_t>(std::llround(y * static_cast<double>(code.length())));
  if (p < 2 || p >= code.length()) throw ParameterError("round(y n) must satisfy 2 <= p < n");
  return p;
}

SpectrumRun run_marchenko_pastur(const LinearCode& code, double y, SamplingMode mode, std::uint64_t seed,
                                 unsigned repeats, unsigned l_max, unsigned bins) {
  require_repeats(repeats);
  const auto p = mp_rows(code, y);
  SpectrumRun run{.code_label = code.label(),
                  .n = static_cast<std::uint64_t>(code.length()),
                  .p = static_cast<std::uint64_t>(p),
                  .law = LawSpec::marchenko_pastur(static_cast<double>(p) / static_cast<double>(code.length())),
                  .mode = mode};
  run.repeats.resize(repeats);
  parallel_for(repeats, [&](unsigned r) {
    run.repeats[r] = code.q() == 2 ? mp_repeat<double>(code, p, mode, seed, r, l_max, bins)
                                   : mp_repeat<std::complex<double>>(code, p, mode, seed, r, l_max, bins);
  });
  finish(run);
  return run;
}

double moment_error_scale(unsigned l, double c, double n, double N, double p) {
  if (l % 2 == 1) return std::pow(c, l) / std::sqrt(p) + std::sqrt(p / n);
  return std::pow(c, l) / p + n / N + p / n;
}

MomentRun run_moments(const LinearCode& code, std::int64_t p, std::uint64_t seed, unsigned repeats, unsigned l_max,
                      double coherence_constant) {
  if (repeats < 2) throw ParameterError("moment statistics need repeats >= 2");
  if (l_max < 1 || l_max > 12) throw ParameterError("l_max must satisfy 1 <= l_max <= 12");
  const auto spectra = run_semicircle(code, p, seed, repeats, l_max, 1);

  MomentRun run;
  run.code_label = code.label();
  run.n = static_cast<std::uint64_t>(code.length());
  run.N = code.codeword_count();
  run.p = static_cast<std::uint64_t>(p);
  run.repeats = repeats;
  run.coherence_constant = coherence_constant;
  run.max_trace_residual = spectra.max_trace_residual;
  run.max_frobenius_residual = spectra.max_frobenius_residual;
  for (const auto& r : spectra.repeats) {
    std::vector<double> row;
    for (const auto& [l, value] : r.summary.moments) row.push_back(value);
    run.samples.push_back(std::move(row));
    run.max_centered_eigenvalue_sum =
        std::max(run.max_centered_eigenvalue_sum, std::abs(r.summary.check.eigenvalue_sum));
  }
  for (unsigned l = 1; l <= l_max; ++l) {
    std::vector<double> values;
    for (const auto& s : run.samples) values.push_back(s[l - 1]);
    MomentRow row;
    row.l = l;
    row.mean = sorted_mean(values);
    row.variance = sample_variance(values);
    row.sc_moment = sc_moment(l);
    row.error_scale = moment_error_scale(l, coherence_constant, static_cast<double>(run.n),
                                         static_cast<double>(run.N), static_cast<double>(run.p));
    row.deviation = std::abs(row.mean - row.sc_moment);
    row.within_gate = row.deviation <= kMomentGateMultiplier * row.error_scale;
    run.rows.push_back(row);
  }
  return run;
}

}  // namespace codewig
