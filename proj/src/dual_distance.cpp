#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>
#include <vector>

#include "codewig/errors.hpp"
#include "codewig/linear_code.hpp"

namespace codewig {

namespace {

// Largest number of s-subsets (binary XOR test) or triples visited by one search step.
constexpr double kBinarySubsetBudget = 1e8;
// Largest number of s-subsets whose rank is computed for q > 2.
constexpr double kRankSubsetBudget = 1e7;
constexpr Eigen::Index kGenericMaxLength = 64;

double binomial(double n, unsigned s) {
  double r = 1.0;
  for (unsigned i = 0; i < s; ++i) r = r * (n - i) / (i + 1);
  return r;
}

DualDistanceStatus exact(unsigned d) { return {d, true, {}}; }
DualDistanceStatus at_least(unsigned d, std::string note = {}) { return {d, false, std::move(note)}; }

std::string budget_note(unsigned s) {
  return "dependent sets of size " + std::to_string(s) + " not searched (brute-force budget)";
}

// Calls visit(indices) for every s-subset of [0, n) in lexicographic order; stops when visit returns true.
template <typename Visit>
bool for_each_subset(unsigned n, unsigned s, Visit&& visit) {
  if (s > n) return false;
  std::vector<unsigned> idx(s);
  std::iota(idx.begin(), idx.end(), 0u);
  for (;;) {
    if (visit(idx)) return true;
    int i = static_cast<int>(s) - 1;
    while (i >= 0 && idx[i] == n - s + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (unsigned j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Columns fit in one word; linear dependence of a column set means its XOR is zero.
DualDistanceStatus binary_status(const LinearCode& code, unsigned bound) {
  const auto n = static_cast<unsigned>(code.length());
  std::vector<std::uint64_t> cols(n, 0);
  for (unsigned t = 0; t < n; ++t) {
    for (Eigen::Index i = 0; i < code.dimension(); ++i) {
      if (code.generator()(i, t)) cols[t] |= std::uint64_t{1} << i;
    }
  }

  if (std::find(cols.begin(), cols.end(), 0) != cols.end()) return exact(1);

  std::vector<std::uint64_t> sorted = cols;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return exact(2);
  if (bound < 3 || n < 3) return at_least(3);

  // Size 3: a pair sum equal to a third column. Without zero or repeated columns the
  // third column is necessarily distinct from the pair.
  const std::unordered_set<std::uint64_t> column_set(cols.begin(), cols.end());
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = i + 1; j < n; ++j) {
      if (column_set.count(cols[i] ^ cols[j])) return exact(3);
    }
  }
  if (bound < 4 || n < 4) return at_least(4);

  // Size 4: two pairs with equal sums. Overlapping pairs would force a repeated column,
  // so any collision is between disjoint pairs.
  std::vector<std::uint64_t> pair_sums;
  pair_sums.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = i + 1; j < n; ++j) pair_sums.push_back(cols[i] ^ cols[j]);
  }
  std::sort(pair_sums.begin(), pair_sums.end());
  if (std::adjacent_find(pair_sums.begin(), pair_sums.end()) != pair_sums.end()) return exact(4);
  if (bound < 5 || n < 5) return at_least(5);

  // Size 5: a triple sum equal to a pair sum. With no dependency of size <= 4 an overlap
  // between the triple and the pair is impossible.
  if (binomial(n, 3) > kBinarySubsetBudget) return at_least(5, budget_note(5));
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = i + 1; j < n; ++j) {
      const auto ij = cols[i] ^ cols[j];
      for (unsigned l = j + 1; l < n; ++l) {
        if (std::binary_search(pair_sums.begin(), pair_sums.end(), ij ^ cols[l])) return exact(5);
      }
    }
  }

  for (unsigned s = 6; s <= bound; ++s) {
    if (s > n) return at_least(s, "no dependent column set exists (trivial dual code)");
    if (binomial(n, s) > kBinarySubsetBudget) return at_least(s, budget_note(s));
    const bool found = for_each_subset(n, s, [&](const std::vector<unsigned>& idx) {
      std::uint64_t acc = 0;
      for (auto t : idx) acc ^= cols[t];
      return acc == 0;
    });
    if (found) return exact(s);
  }
  return at_least(bound + 1);
}

DualDistanceStatus generic_status(const LinearCode& code, unsigned bound) {
  const auto n = static_cast<unsigned>(code.length());
  if (code.length() > kGenericMaxLength) {
    throw ResourceError("dual distance for q > 2 (or k > 64) is limited to n <= 64");
  }
  for (unsigned s = 1; s <= bound; ++s) {
    if (s > n) return at_least(s, "no dependent column set exists (trivial dual code)");
    if (binomial(n, s) > kRankSubsetBudget) return at_least(s, budget_note(s));
    SymbolMatrix sub(code.dimension(), s);
    const bool found = for_each_subset(n, s, [&](const std::vector<unsigned>& idx) {
      for (unsigned j = 0; j < s; ++j) sub.col(j) = code.generator().col(idx[j]);
      return rank_mod(sub, code.field()) < static_cast<Eigen::Index>(s);
    });
    if (found) return exact(s);
  }
  return at_least(bound + 1);
}

}  // namespace

std::string DualDistanceStatus::to_string() const { return (exact ? "=" : "≥") + std::to_string(value); }

DualDistanceStatus dual_distance_status(const LinearCode& code, unsigned bound) {
  if (bound < 2) throw ParameterError("dual distance bound must be >= 2");
  auto status = (code.q() == 2 && code.dimension() <= 64) ? binary_status(code, bound) : generic_status(code, bound);
  if (!status.exact && code.family() == CodeFamily::gold && status.value == 5) {
    status.note += std::string(status.note.empty() ? "" : "; ") + "=5 known analytically for Gold";
  }
  return status;
}

}  // namespace codewig
