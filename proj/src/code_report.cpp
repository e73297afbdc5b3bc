#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "codewig/linear_code.hpp"
#include "codewig/rng.hpp"

namespace codewig {

namespace {

// Tracks the weight set and the largest character-sum magnitude of visited codewords.
class CodewordAudit {
 public:
  explicit CodewordAudit(const LinearCode& code) : n_(code.length()), q_(code.q()), roots_(q_) {
    for (std::uint32_t s = 0; s < q_; ++s) roots_[s] = std::polar(1.0, 2.0 * std::numbers::pi * s / q_);
  }

  void visit_binary(unsigned weight) {
    weights.insert(weight);
    ++examined;
  }

  void visit(const SymbolVector& word) {
    weights.insert(hamming_weight(word));
    ++examined;
    if (q_ == 2) return;
    std::vector<std::int64_t> counts(q_, 0);
    for (Eigen::Index t = 0; t < word.size(); ++t) ++counts[word(t)];
    std::complex<double> sum = 0.0;
    for (std::uint32_t s = 0; s < q_; ++s) sum += static_cast<double>(counts[s]) * roots_[s];
    max_character_sum = std::max(max_character_sum, std::abs(sum));
  }

  std::set<unsigned> weights;
  double max_character_sum = 0.0;
  std::uint64_t examined = 0;

 private:
  Eigen::Index n_;
  std::uint32_t q_;
  std::vector<std::complex<double>> roots_;
};

void enumerate_binary(const LinearCode& code, CodewordAudit& audit) {
  const auto n = static_cast<std::size_t>(code.length());
  const std::size_t words = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(code.dimension(), std::vector<std::uint64_t>(words, 0));
  for (Eigen::Index i = 0; i < code.dimension(); ++i) {
    for (std::size_t t = 0; t < n; ++t) {
      if (code.generator()(i, t)) rows[i][t / 64] |= std::uint64_t{1} << (t % 64);
    }
  }
  // Gray-code order: step j flips message bit ctz(j).
  std::vector<std::uint64_t> current(words, 0);
  for (std::uint64_t j = 1; j < code.codeword_count(); ++j) {
    const auto& row = rows[std::countr_zero(j)];
    unsigned weight = 0;
    for (std::size_t w = 0; w < words; ++w) {
      current[w] ^= row[w];
      weight += static_cast<unsigned>(std::popcount(current[w]));
    }
    audit.visit_binary(weight);
  }
}

void enumerate_generic(const LinearCode& code, CodewordAudit& audit) {
  const auto k = code.dimension();
  const std::int32_t q = static_cast<std::int32_t>(code.q());
  SymbolVector digits = SymbolVector::Zero(k);
  SymbolVector word = SymbolVector::Zero(code.length());
  // Mixed-radix increment; adding row i once more when its digit wraps keeps word = digits * G.
  for (std::uint64_t j = 1; j < code.codeword_count(); ++j) {
    for (Eigen::Index i = 0; i < k; ++i) {
      word = (word + code.generator().row(i).transpose()).unaryExpr([q](std::int32_t v) { return v % q; });
      if (++digits(i) < q) break;
      digits(i) = 0;
    }
    audit.visit(word);
  }
}

}  // namespace

std::set<unsigned> structural_weight_set(const LinearCode& code) {
  const unsigned m = code.family_parameter();
  switch (code.family()) {
    case CodeFamily::gold: {
      const unsigned half = 1u << (m - 1);
      const unsigned offset = 1u << ((m - 1) / 2);
      return {half - offset, half, half + offset};
    }
    case CodeFamily::reed_muller1:
      return {1u << (m - 1), 1u << m};
    case CodeFamily::even_weight: {
      std::set<unsigned> out;
      for (unsigned w = 2; w <= m; w += 2) out.insert(w);
      return out;
    }
    case CodeFamily::custom:
      break;
  }
  return {};
}

CodeReport code_report(const LinearCode& code, std::uint64_t exhaustive_limit, unsigned dual_bound) {
  CodeReport report;
  report.n = static_cast<std::uint64_t>(code.length());
  report.k = static_cast<std::uint64_t>(code.dimension());
  report.N = code.codeword_count();
  report.q = code.q();
  report.ratio_N_over_n = static_cast<double>(report.N) / static_cast<double>(report.n);
  report.dual_distance_status = dual_distance_status(code, dual_bound);

  CodewordAudit audit(code);
  if (report.N <= exhaustive_limit) {
    if (code.q() == 2) {
      enumerate_binary(code, audit);
    } else {
      enumerate_generic(code, audit);
    }
    report.certified = true;
    report.weight_source = "exhaustive";
  } else {
    Xorshift64Star rng(kReportSampleSeed, 0);
    for (std::uint64_t i = 0; i < kReportSampleSize; ++i) {
      audit.visit(code.codeword(1 + rng.below(report.N - 1)));
    }
    report.weight_source = "sample";
    if (const auto known = structural_weight_set(code); !known.empty()) {
      audit.weights.insert(known.begin(), known.end());
      report.weight_source = "sample+structure";
    }
  }
  report.codewords_examined = audit.examined;
  report.weight_set = audit.weights;

  if (code.q() == 2) {
    // <eps(c), eps(c')> = n - 2 wt(c + c')
    for (auto w : report.weight_set) {
      report.coherence = std::max(report.coherence, std::abs(static_cast<double>(report.n) - 2.0 * w));
    }
  } else {
    report.coherence = audit.max_character_sum;
  }
  report.coherence_constant = report.coherence / std::sqrt(static_cast<double>(report.n));
  return report;
}

}  // namespace codewig
