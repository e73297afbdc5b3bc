#ifndef CODEWIG_SIGNAL_HPP
#define CODEWIG_SIGNAL_HPP

#include <Eigen/Core>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <type_traits>
#include <vector>

#include "codewig/errors.hpp"
#include "codewig/linear_code.hpp"

namespace codewig {

enum class SamplingMode { distinct, with_replacement };

std::string to_string(SamplingMode mode);
SamplingMode parse_sampling_mode(const std::string& text);

template <typename T>
struct is_complex : std::false_type {};
template <typename T>
struct is_complex<std::complex<T>> : std::true_type {};

/// Additive character exp(2 pi i x / q), applied component-wise. Binary words map to +1/-1.
Eigen::VectorXcd char_map(const SymbolVector& word, std::uint32_t q);

/// Real-valued character map; only defined for q = 2.
Eigen::VectorXd char_map_real(const SymbolVector& word, std::uint32_t q);

/// Message indices in [0, N) for p rows. Distinct mode rejects repeats when p <= N/2 and
/// otherwise runs a partial Fisher-Yates shuffle over all N indices.
std::vector<std::uint64_t> sample_message_indices(std::uint64_t N, Eigen::Index p, SamplingMode mode,
                                                  std::uint64_t seed, std::uint64_t stream);

/// The p x n matrix Phi(s) whose rows are eps(c) for sampled codewords c.
template <typename Scalar>
struct SignalMatrix {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  Matrix entries;
  std::vector<std::uint64_t> message_indices;
  std::uint64_t source_seed = 0;
  std::uint64_t stream_index = 0;
  SamplingMode mode = SamplingMode::distinct;

  Eigen::Index rows() const { return entries.rows(); }
  Eigen::Index cols() const { return entries.cols(); }
};

/// Phi from explicit message indices. Scalar = double requires a binary code.
template <typename Scalar>
SignalMatrix<Scalar> signal_from_messages(const LinearCode& code, const std::vector<std::uint64_t>& messages) {
  if constexpr (!is_complex<Scalar>::value) {
    if (code.q() != 2) throw ParameterError("real signal matrices require a binary code");
  }
  SignalMatrix<Scalar> out;
  out.message_indices = messages;
  out.entries.resize(static_cast<Eigen::Index>(messages.size()), code.length());
  for (Eigen::Index r = 0; r < out.entries.rows(); ++r) {
    const auto word = code.codeword(messages[r]);
    if constexpr (is_complex<Scalar>::value) {
      out.entries.row(r) = char_map(word, code.q()).transpose().template cast<Scalar>();
    } else {
      out.entries.row(r) = char_map_real(word, code.q()).transpose().template cast<Scalar>();
    }
  }
  return out;
}

/// Seeded sampling of p codewords. Throws ParameterError if p < 1 or, in distinct mode, p > N.
template <typename Scalar>
SignalMatrix<Scalar> sample_codewords(const LinearCode& code, Eigen::Index p, SamplingMode mode, std::uint64_t seed,
                                      std::uint64_t stream = 0) {
  auto out = signal_from_messages<Scalar>(code, sample_message_indices(code.codeword_count(), p, mode, seed, stream));
  out.source_seed = seed;
  out.stream_index = stream;
  out.mode = mode;
  return out;
}

/// CSV, one row per line; entries as "re" for real matrices and "re+imj" for complex ones.
template <typename Scalar>
void write_signal_csv(std::ostream& out, const SignalMatrix<Scalar>& phi);

}  // namespace codewig

#endif  // CODEWIG_SIGNAL_HPP
