#include "codewig/linear_code.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

#include "codewig/errors.hpp"

namespace codewig {

LinearCode::LinearCode(std::uint32_t q, SymbolMatrix generator, std::string label, CodeFamily family,
                       unsigned family_parameter)
    : field_(q),
      generator_(std::move(generator)),
      label_(std::move(label)),
      family_(family),
      family_parameter_(family_parameter),
      codeword_count_(1) {
  const auto k = generator_.rows();
  const auto n = generator_.cols();
  if (k < 1 || n < 1 || k > n) {
    throw ParameterError("generator must be k x n with 1 <= k <= n");
  }
  if ((generator_.array() < 0).any() || (generator_.array() >= static_cast<std::int32_t>(q)).any()) {
    throw ParameterError("generator entries must lie in [0, q-1]");
  }
  if (rank_mod(generator_, field_) != k) {
    throw ParameterError("generator rows are linearly dependent over F_" + std::to_string(q));
  }
  for (Eigen::Index i = 0; i < k; ++i) {
    if (codeword_count_ > (std::uint64_t{1} << 62) / q) {
      throw ParameterError("code has more than 2^62 codewords");
    }
    codeword_count_ *= q;
  }
}

SymbolVector LinearCode::message(std::uint64_t index) const {
  if (index >= codeword_count_) throw ParameterError("message index out of range");
  SymbolVector digits(dimension());
  for (Eigen::Index i = 0; i < dimension(); ++i) {
    digits(i) = static_cast<std::int32_t>(index % q());
    index /= q();
  }
  return digits;
}

SymbolVector LinearCode::codeword(std::uint64_t index) const { return encode(*this, message(index)); }

SymbolVector encode(const LinearCode& code, const SymbolVector& message) {
  if (message.size() != code.dimension()) {
    throw ParameterError("message length " + std::to_string(message.size()) + " != dimension " +
                         std::to_string(code.dimension()));
  }
  const auto& g = code.generator();
  const std::int64_t q = code.q();
  SymbolVector word(code.length());
  for (Eigen::Index t = 0; t < code.length(); ++t) {
    std::int64_t acc = 0;
    for (Eigen::Index i = 0; i < code.dimension(); ++i) {
      acc = (acc + std::int64_t{message(i)} * g(i, t)) % q;
    }
    word(t) = static_cast<std::int32_t>((acc + q) % q);
  }
  return word;
}

Eigen::Index rank_mod(const SymbolMatrix& matrix, const PrimeField& field) {
  SymbolMatrix a = matrix.unaryExpr([&](std::int32_t v) { return static_cast<std::int32_t>(field.reduce(v)); });
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < a.cols() && rank < a.rows(); ++col) {
    Eigen::Index pivot = rank;
    while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    a.row(pivot).swap(a.row(rank));
    const auto inv = field.inv(static_cast<std::uint32_t>(a(rank, col)));
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      a(rank, j) = static_cast<std::int32_t>(field.mul(static_cast<std::uint32_t>(a(rank, j)), inv));
    }
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r == rank || a(r, col) == 0) continue;
      const auto factor = static_cast<std::uint32_t>(a(r, col));
      for (Eigen::Index j = 0; j < a.cols(); ++j) {
        a(r, j) = static_cast<std::int32_t>(
            field.sub(static_cast<std::uint32_t>(a(r, j)), field.mul(factor, static_cast<std::uint32_t>(a(rank, j)))));
      }
    }
    ++rank;
  }
  return rank;
}

unsigned hamming_weight(const SymbolVector& word) { return static_cast<unsigned>((word.array() != 0).count()); }

LinearCode make_gold(unsigned m) {
  if (m < 5 || m % 2 == 0) throw ParameterError("Gold codes need odd m >= 5, got " + std::to_string(m));
  const auto field = BinaryExtensionField::with_default_modulus(m);
  const std::uint64_t n = field.size() - 1;
  // trace_of_power[e] = Tr(alpha^e)
  std::vector<std::int32_t> trace_of_power(n);
  auto power = field.one();
  for (std::uint64_t e = 0; e < n; ++e) {
    trace_of_power[e] = static_cast<std::int32_t>(trace(power).value);
    power = power * field.primitive();
  }
  SymbolMatrix g(2 * m, n);
  for (unsigned i = 0; i < m; ++i) {
    for (std::uint64_t t = 0; t < n; ++t) {
      g(i, t) = trace_of_power[(i + t) % n];
      g(m + i, t) = trace_of_power[(i + 3 * t) % n];
    }
  }
  return LinearCode(2, std::move(g), "gold(m=" + std::to_string(m) + ")", CodeFamily::gold, m);
}

LinearCode make_rm1(unsigned m) {
  if (m < 3 || m > 20) throw ParameterError("RM(1,m) needs 3 <= m <= 20, got " + std::to_string(m));
  const std::uint64_t n = std::uint64_t{1} << m;
  SymbolMatrix g(m + 1, n);
  g.row(0).setOnes();
  for (unsigned j = 0; j < m; ++j) {
    for (std::uint64_t t = 0; t < n; ++t) g(j + 1, t) = static_cast<std::int32_t>((t >> j) & 1);
  }
  return LinearCode(2, std::move(g), "rm1(m=" + std::to_string(m) + ")", CodeFamily::reed_muller1, m);
}

LinearCode make_even_weight(unsigned n) {
  if (n < 3) throw ParameterError("even-weight code needs n >= 3, got " + std::to_string(n));
  SymbolMatrix g = SymbolMatrix::Zero(n - 1, n);
  for (unsigned i = 0; i + 1 < n; ++i) {
    g(i, i) = 1;
    g(i, n - 1) = 1;
  }
  return LinearCode(2, std::move(g), "even(n=" + std::to_string(n) + ")", CodeFamily::even_weight, n);
}

LinearCode read_generator(std::istream& in, const std::string& label) {
  long long q = 0, n = 0, k = 0;
  if (!(in >> q >> n >> k)) throw ParameterError("generator file: expected header \"q n k\"");
  if (q < 2 || n < 1 || k < 1 || k > n || q >= (1LL << 31)) {
    throw ParameterError("generator file: invalid header values");
  }
  SymbolMatrix g(k, n);
  for (long long i = 0; i < k; ++i) {
    for (long long j = 0; j < n; ++j) {
      long long v = 0;
      if (!(in >> v)) throw ParameterError("generator file: expected " + std::to_string(k * n) + " symbols");
      if (v < 0 || v >= q) throw ParameterError("generator file: symbol out of range [0, q-1]");
      g(i, j) = static_cast<std::int32_t>(v);
    }
  }
  std::string extra;
  if (in >> extra) throw ParameterError("generator file: trailing data after k rows");
  return LinearCode(static_cast<std::uint32_t>(q), std::move(g), label);
}

LinearCode read_generator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open generator file " + path);
  return read_generator(in, "file(" + path + ")");
}

void write_generator(std::ostream& out, const LinearCode& code) {
  out << code.q() << ' ' << code.length() << ' ' << code.dimension() << '\n';
  for (Eigen::Index i = 0; i < code.dimension(); ++i) {
    for (Eigen::Index j = 0; j < code.length(); ++j) out << (j ? " " : "") << code.generator()(i, j);
    out << '\n';
  }
}

}  // namespace codewig
