#ifndef CODEWIG_LINEAR_CODE_HPP
#define CODEWIG_LINEAR_CODE_HPP

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>

#include "codewig/finite_field.hpp"

namespace codewig {

/// Words and generator matrices hold symbols of F_q as reduced integers.
using SymbolMatrix = Eigen::Matrix<std::int32_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using SymbolVector = Eigen::Matrix<std::int32_t, Eigen::Dynamic, 1>;

enum class CodeFamily { gold, reed_muller1, even_weight, custom };

/// A linear [n, k]_q code given by a full-rank k x n generator matrix (rows are basis codewords).
class LinearCode {
 public:
  LinearCode(std::uint32_t q, SymbolMatrix generator, std::string label,
             CodeFamily family = CodeFamily::custom, unsigned family_parameter = 0);

  std::uint32_t q() const { return field_.order(); }
  const PrimeField& field() const { return field_; }
  Eigen::Index length() const { return generator_.cols(); }
  Eigen::Index dimension() const { return generator_.rows(); }
  /// N = q^k.
  std::uint64_t codeword_count() const { return codeword_count_; }
  const SymbolMatrix& generator() const { return generator_; }
  const std::string& label() const { return label_; }
  CodeFamily family() const { return family_; }
  unsigned family_parameter() const { return family_parameter_; }

  /// Message with base-q digits of `index` (digit i multiplies generator row i).
  SymbolVector message(std::uint64_t index) const;
  /// Codeword for message number `index` in [0, N).
  SymbolVector codeword(std::uint64_t index) const;

 private:
  PrimeField field_;
  SymbolMatrix generator_;
  std::string label_;
  CodeFamily family_;
  unsigned family_parameter_;
  std::uint64_t codeword_count_;
};

/// Binary Gold code of length 2^m - 1 and dimension 2m, decimation 3. m odd, m >= 5.
LinearCode make_gold(unsigned m);
/// First-order Reed-Muller code RM(1, m): [2^m, m + 1]. m >= 3.
LinearCode make_rm1(unsigned m);
/// Binary [n, n-1] even-weight code; its dual is the repetition code. n >= 3.
LinearCode make_even_weight(unsigned n);

/// message * generator over F_q.
SymbolVector encode(const LinearCode& code, const SymbolVector& message);

/// Rank of a matrix over F_q by Gaussian elimination.
Eigen::Index rank_mod(const SymbolMatrix& matrix, const PrimeField& field);

unsigned hamming_weight(const SymbolVector& word);

/// Either the exact dual distance or a certified lower bound on it.
struct DualDistanceStatus {
  unsigned value = 0;
  bool exact = false;
  std::string note;

  /// "=d" or "≥d".
  std::string to_string() const;
};

/// Dual distance = smallest number of linearly dependent generator columns.
/// Dependent sets of size <= bound are searched; without one the result is "≥ bound+1".
/// A size whose search would exceed the brute-force budget also ends the search with a
/// lower bound.
DualDistanceStatus dual_distance_status(const LinearCode& code, unsigned bound);

struct CodeReport {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t N = 0;
  std::uint32_t q = 2;
  DualDistanceStatus dual_distance_status;
  std::set<unsigned> weight_set;  // nonzero codewords only
  double coherence = 0.0;         // max |<eps(c), eps(c')>| over c != c'
  double coherence_constant = 0.0;
  double ratio_N_over_n = 0.0;
  bool certified = false;  // every codeword was enumerated
  std::uint64_t codewords_examined = 0;
  std::string weight_source;  // "exhaustive", "sample", or "sample+structure"
};

inline constexpr std::uint64_t kDefaultExhaustiveLimit = std::uint64_t{1} << 20;
/// Nonzero codewords drawn for a non-exhaustive report (seed kReportSampleSeed, stream 0).
inline constexpr std::uint64_t kReportSampleSize = 4096;
inline constexpr std::uint64_t kReportSampleSeed = 0x5eed0c0de5ULL;

/// Weight set and coherence of the code. Since <eps(c), eps(c')> depends only on c - c',
/// the pairwise maximum equals the maximum of |sum_t exp(2 pi i c_t / q)| over nonzero c.
CodeReport code_report(const LinearCode& code, std::uint64_t exhaustive_limit = kDefaultExhaustiveLimit,
                       unsigned dual_bound = 5);

/// Weights every nonzero codeword must have, when the family determines them.
std::set<unsigned> structural_weight_set(const LinearCode& code);

/// Plain-text generator format: "q n k" then k rows of n symbols.
LinearCode read_generator(std::istream& in, const std::string& label);
LinearCode read_generator_file(const std::string& path);
void write_generator(std::ostream& out, const LinearCode& code);

}  // namespace codewig

#endif  // CODEWIG_LINEAR_CODE_HPP
