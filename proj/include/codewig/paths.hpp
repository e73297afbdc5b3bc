#ifndef CODEWIG_PATHS_HPP
#define CODEWIG_PATHS_HPP

#include <complex>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "codewig/linear_code.hpp"

namespace codewig {

/// Relabels a sequence so labels appear in first-use order 1, 2, 3, ...
std::vector<int> canonical_labels(std::span<const int> labels);

/// A closed map gamma: [0..l] -> labels with gamma(0) = gamma(l), stored as the canonical
/// representative of its orbit under relabeling.
class ClosedPath {
 public:
  /// Throws ParameterError unless l >= 1, all labels are positive and gamma(0) = gamma(l).
  explicit ClosedPath(std::vector<int> labels);

  const std::vector<int>& labels() const { return labels_; }
  unsigned length() const { return static_cast<unsigned>(labels_.size() - 1); }
  unsigned vertex_count() const { return vertex_count_; }
  /// gamma(j) != gamma(j+1) for all j.
  bool is_simple() const;
  std::string to_string() const;

  friend bool operator==(const ClosedPath&, const ClosedPath&) = default;
  friend auto operator<=>(const ClosedPath& a, const ClosedPath& b) { return a.labels_ <=> b.labels_; }

 private:
  std::vector<int> labels_;
  unsigned vertex_count_;
};

/// Two closed paths on a shared label space, canonical under simultaneous relabeling.
class PathPair {
 public:
  PathPair(std::vector<int> first, std::vector<int> second);

  const std::vector<int>& first() const { return first_; }
  const std::vector<int>& second() const { return second_; }
  unsigned length_first() const { return static_cast<unsigned>(first_.size() - 1); }
  unsigned length_second() const { return static_cast<unsigned>(second_.size() - 1); }
  /// #(V1 u V2)
  unsigned union_count() const { return union_count_; }
  /// #(V1 n V2)
  unsigned meet_count() const { return meet_count_; }
  std::string to_string() const;

 private:
  std::vector<int> first_;
  std::vector<int> second_;
  unsigned union_count_;
  unsigned meet_count_;
};

/// One representative per relabeling orbit of closed paths of length l (1 <= l <= 10);
/// `simple` keeps only paths with no repeated consecutive label.
std::vector<ClosedPath> enumerate_closed_classes(unsigned l, bool simple);

/// Canonical pairs (gamma1, gamma2) of closed paths of length l, one per joint orbit.
std::vector<PathPair> enumerate_pair_classes(unsigned l, bool simple);

/// True iff the walk traverses each edge of a tree exactly once in each direction: the steps
/// cancel completely under repeated removal of immediate reversals (self-loops never cancel)
/// and v = 1 + l/2.
bool is_double_tree(const ClosedPath& path);

/// Double-tree classes of length l, generated from the Dyck words of semilength l/2.
std::vector<ClosedPath> double_tree_classes(unsigned l);

/// Number of double-tree classes for even l <= 10 (Dyck-word construction).
std::uint64_t count_double_tree_classes(unsigned l);

/// Linear system over the generator columns indexed by path positions. Equation e reads
/// sum_var coefficients[e][var] * g_{t_var} = 0 over F_q.
struct VertexSystem {
  enum class Group { vertex, shared, first_only, second_only };

  unsigned variable_count = 0;
  std::vector<std::vector<int>> coefficients;
  std::vector<int> vertex;    // label owning each equation
  std::vector<Group> groups;  // shared/first_only/second_only are groups (A)/(B)/(C) for pairs

  /// Copy without equation `index`.
  VertexSystem without_equation(std::size_t index) const;
};

/// For each vertex a: sum_{u in I_a} (g_{t_u} - g_{t_{u-1}}) = 0 with u in [1..l], t_l = t_0.
VertexSystem vertex_system(const ClosedPath& path);

/// Equations (A)-(C) over t_0..t_{l1-1}, w_0..w_{l2-1}; gamma2 contributes with opposite sign.
VertexSystem pair_system(const PathPair& pair);

/// Brute-force limits. Exceeding one raises ResourceError.
inline constexpr double kSolutionBudget = 1e8;    // n^(variables)
inline constexpr double kExpectationBudget = 1e9;  // N^v * l * n
inline constexpr std::uint64_t kMaxCodewordTable = 8192;

/// Number of tuples in [1..n]^variables solving the system, by depth-first search with
/// early rejection of completed equations.
std::uint64_t count_solutions(const LinearCode& code, const VertexSystem& system);

/// W_gamma: solutions of vertex_system(path).
std::uint64_t count_W(const LinearCode& code, const ClosedPath& path);

/// W_{gamma1,gamma2}: solutions of pair_system(pair).
std::uint64_t count_W_pair(const LinearCode& code, const PathPair& pair);

enum class MapSpace { all_maps, injective };

/// Exact average of prod_j <s(gamma(j)), s(gamma(j+1))> over maps s: V_gamma -> eps(C)
/// (all maps, or injective maps only).
std::complex<double> expect_omega(const LinearCode& code, const ClosedPath& path, MapSpace space);

struct ClassAuditRecord {
  ClosedPath path;
  bool simple = false;
  bool double_tree = false;
  std::uint64_t W = 0;
  double n_power = 0.0;  // n^(l - v + 1)
  std::optional<std::complex<double>> expectation_all{};
  std::optional<std::complex<double>> expectation_injective{};
  bool redundancy_holds = true;  // dropping any one equation keeps W
};

struct PairAuditRecord {
  PathPair pair;
  std::uint64_t W_pair = 0;
  std::uint64_t W_first = 0;
  std::uint64_t W_second = 0;
  long double difference = 0;  // W_pair - W_first * W_second
  bool redundancy_holds = true;
};

struct PathsAudit {
  unsigned l = 0;
  std::string code_label;
  std::uint64_t n = 0;
  std::uint64_t N = 0;
  std::vector<ClassAuditRecord> classes;
  std::vector<PairAuditRecord> pairs;
  std::string pair_audit_status;  // "complete" or the reason it was skipped

  std::optional<std::uint64_t> double_tree_count;   // Dyck construction, even l only
  std::optional<std::uint64_t> double_tree_count_by_enumeration;
  std::optional<double> catalan;

  bool catalan_identity = true;
  bool double_tree_count_exact = true;
  double nondouble_tree_max_ratio = 0.0;  // max W / n^(l - v) over non-double-tree classes
  bool character_sum_identity = true;
  bool single_meet_pair_difference_zero = true;
  bool redundant_equation = true;
  bool canonical_idempotent = true;
};

struct PathsAuditOptions {
  bool expectations = true;     // skipped per class when over budget
  bool pairs = true;            // only when n^(2l) fits the solution budget
  bool simple_only = false;     // restrict classes to simple paths
  std::uint64_t relabel_seed = 1;
};

/// Runs every per-class check at length l. Throws ResourceError naming the class when
/// W itself cannot be counted within budget.
PathsAudit audit_paths(const LinearCode& code, unsigned l, const PathsAuditOptions& options = {});

}  // namespace codewig

#endif  // CODEWIG_PATHS_HPP
