#include "codewig/signal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>
#include <unordered_set>

#include "codewig/format.hpp"
#include "codewig/rng.hpp"

namespace codewig {

std::string to_string(SamplingMode mode) {
  return mode == SamplingMode::distinct ? "distinct" : "with_replacement";
}

SamplingMode parse_sampling_mode(const std::string& text) {
  if (text == "distinct") return SamplingMode::distinct;
  if (text == "with_replacement" || text == "with-replacement") return SamplingMode::with_replacement;
  throw ParameterError("unknown sampling mode '" + text + "'");
}

Eigen::VectorXcd char_map(const SymbolVector& word, std::uint32_t q) {
  Eigen::VectorXcd out(word.size());
  for (Eigen::Index t = 0; t < word.size(); ++t) {
    if (q == 2) {
      out(t) = word(t) % 2 == 0 ? 1.0 : -1.0;
    } else {
      out(t) = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(word(t) % q) / q);
    }
  }
  return out;
}

Eigen::VectorXd char_map_real(const SymbolVector& word, std::uint32_t q) {
  if (q != 2) throw ParameterError("real character map is only defined for q = 2");
  return word.unaryExpr([](std::int32_t v) { return v % 2 == 0 ? 1.0 : -1.0; });
}

std::vector<std::uint64_t> sample_message_indices(std::uint64_t N, Eigen::Index p, SamplingMode mode,
                                                  std::uint64_t seed, std::uint64_t stream) {
  if (p < 1) throw ParameterError("need at least one row (p >= 1)");
  const auto count = static_cast<std::uint64_t>(p);
  Xorshift64Star rng(seed, stream);
  std::vector<std::uint64_t> out;
  out.reserve(count);
  if (mode == SamplingMode::with_replacement) {
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(rng.below(N));
    return out;
  }
  if (count > N) {
    throw ParameterError("cannot draw p = " + std::to_string(count) + " distinct codewords from N = " +
                         std::to_string(N));
  }
  if (count <= N / 2) {
    std::unordered_set<std::uint64_t> seen;
    while (out.size() < count) {
      const auto index = rng.below(N);
      if (seen.insert(index).second) out.push_back(index);
    }
    return out;
  }
  std::vector<std::uint64_t> all(N);
  std::iota(all.begin(), all.end(), std::uint64_t{0});
  for (std::uint64_t i = 0; i < count; ++i) std::swap(all[i], all[i + rng.below(N - i)]);
  all.resize(count);
  return all;
}

template <typename Scalar>
void write_signal_csv(std::ostream& out, const SignalMatrix<Scalar>& phi) {
  for (Eigen::Index r = 0; r < phi.rows(); ++r) {
    for (Eigen::Index c = 0; c < phi.cols(); ++c) {
      if (c) out << ',';
      if constexpr (is_complex<Scalar>::value) {
        out << format_complex(phi.entries(r, c));
      } else {
        out << format_double(phi.entries(r, c));
      }
    }
    out << '\n';
  }
}

template void write_signal_csv(std::ostream&, const SignalMatrix<double>&);
template void write_signal_csv(std::ostream&, const SignalMatrix<std::complex<double>>&);

}  // namespace codewig
