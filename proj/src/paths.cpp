#include "codewig/paths.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "codewig/errors.hpp"
#include "codewig/laws.hpp"
#include "codewig/rng.hpp"
#include "codewig/signal.hpp"

namespace codewig {

namespace {

std::string labels_to_string(const std::vector<int>& labels) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? "," : "") << labels[i];
  out << ')';
  return out.str();
}

void require_closed(const std::vector<int>& labels) {
  if (labels.size() < 2) throw ParameterError("a closed path needs length >= 1");
  if (labels.front() != labels.back()) throw ParameterError("path is not closed: gamma(0) != gamma(l)");
  if (std::any_of(labels.begin(), labels.end(), [](int v) { return v < 1; })) {
    throw ParameterError("path labels must be positive");
  }
}

unsigned distinct_count(const std::vector<int>& labels) {
  return static_cast<unsigned>(std::set<int>(labels.begin(), labels.end()).size());
}

void require_length(unsigned l) {
  if (l < 1 || l > 10) throw ParameterError("path length must satisfy 1 <= l <= 10, got " + std::to_string(l));
}

double power(double base, unsigned exponent) { return std::pow(base, static_cast<double>(exponent)); }

}  // namespace

std::vector<int> canonical_labels(std::span<const int> labels) {
  std::map<int, int> relabel;
  std::vector<int> out;
  out.reserve(labels.size());
  for (int v : labels) {
    const auto [it, inserted] = relabel.try_emplace(v, static_cast<int>(relabel.size()) + 1);
    out.push_back(it->second);
  }
  return out;
}

ClosedPath::ClosedPath(std::vector<int> labels) {
  require_closed(labels);
  labels_ = canonical_labels(labels);
  vertex_count_ = static_cast<unsigned>(*std::max_element(labels_.begin(), labels_.end()));
}

bool ClosedPath::is_simple() const {
  for (std::size_t j = 0; j + 1 < labels_.size(); ++j) {
    if (labels_[j] == labels_[j + 1]) return false;
  }
  return true;
}

std::string ClosedPath::to_string() const { return labels_to_string(labels_); }

PathPair::PathPair(std::vector<int> first, std::vector<int> second) {
  require_closed(first);
  require_closed(second);
  std::vector<int> joined = first;
  joined.insert(joined.end(), second.begin(), second.end());
  joined = canonical_labels(joined);
  first_.assign(joined.begin(), joined.begin() + static_cast<std::ptrdiff_t>(first.size()));
  second_.assign(joined.begin() + static_cast<std::ptrdiff_t>(first.size()), joined.end());
  union_count_ = static_cast<unsigned>(*std::max_element(joined.begin(), joined.end()));
  meet_count_ = distinct_count(first_) + distinct_count(second_) - union_count_;
}

std::string PathPair::to_string() const { return labels_to_string(first_) + "|" + labels_to_string(second_); }

std::vector<ClosedPath> enumerate_closed_classes(unsigned l, bool simple) {
  require_length(l);
  std::vector<ClosedPath> out;
  std::vector<int> seq{1};
  // Restricted growth strings gamma(0..l-1) with gamma(0) = 1; gamma(l) = 1 closes the path.
  std::function<void(int)> extend = [&](int max_label) {
    if (seq.size() == l) {
      if (simple && seq.back() == 1) return;
      seq.push_back(1);
      out.emplace_back(seq);
      seq.pop_back();
      return;
    }
    for (int next = 1; next <= max_label + 1; ++next) {
      if (simple && next == seq.back()) continue;
      seq.push_back(next);
      extend(std::max(max_label, next));
      seq.pop_back();
    }
  };
  extend(1);
  return out;
}

std::vector<PathPair> enumerate_pair_classes(unsigned l, bool simple) {
  std::vector<PathPair> out;
  for (const auto& first : enumerate_closed_classes(l, simple)) {
    std::vector<int> seq;
    std::function<void(int)> extend = [&](int max_label) {
      if (seq.size() == l) {
        if (simple && seq.back() == seq.front()) return;
        auto closed = seq;
        closed.push_back(seq.front());
        out.emplace_back(first.labels(), std::move(closed));
        return;
      }
      for (int next = 1; next <= max_label + 1; ++next) {
        if (simple && !seq.empty() && next == seq.back()) continue;
        seq.push_back(next);
        extend(std::max(max_label, next));
        seq.pop_back();
      }
    };
    extend(static_cast<int>(first.vertex_count()));
  }
  return out;
}

bool is_double_tree(const ClosedPath& path) {
  const unsigned l = path.length();
  if (l % 2 != 0 || path.vertex_count() != 1 + l / 2) return false;
  const auto& g = path.labels();
  std::vector<std::pair<int, int>> stack;
  for (unsigned j = 0; j < l; ++j) {
    const int from = g[j];
    const int to = g[j + 1];
    if (from == to) return false;
    if (!stack.empty() && stack.back() == std::pair{to, from}) {
      stack.pop_back();
    } else {
      stack.emplace_back(from, to);
    }
  }
  return stack.empty();
}

std::vector<ClosedPath> double_tree_classes(unsigned l) {
  if (l % 2 != 0 || l < 2) throw ParameterError("double trees need an even length >= 2");
  require_length(l);
  std::set<ClosedPath> found;
  // Depth-first walk of the plane tree encoded by each Dyck word: an up step visits a new
  // child, a down step returns to the parent.
  std::vector<int> walk{1};
  std::vector<int> ancestors{1};
  int next_label = 2;
  std::function<void(unsigned, unsigned)> extend = [&](unsigned ups, unsigned downs) {
    if (downs == l / 2) {
      found.emplace(walk);
      return;
    }
    if (ups < l / 2) {
      const int child = next_label++;
      ancestors.push_back(child);
      walk.push_back(child);
      extend(ups + 1, downs);
      walk.pop_back();
      ancestors.pop_back();
      --next_label;
    }
    if (downs < ups) {
      const int child = ancestors.back();
      ancestors.pop_back();
      walk.push_back(ancestors.back());
      extend(ups, downs + 1);
      walk.pop_back();
      ancestors.push_back(child);
    }
  };
  extend(0, 0);
  return {found.begin(), found.end()};
}

std::uint64_t count_double_tree_classes(unsigned l) {
  if (l % 2 != 0) throw ParameterError("double-tree classes exist only for even l, got " + std::to_string(l));
  return double_tree_classes(l).size();
}

VertexSystem VertexSystem::without_equation(std::size_t index) const {
  if (index >= coefficients.size()) throw ParameterError("equation index out of range");
  VertexSystem out = *this;
  out.coefficients.erase(out.coefficients.begin() + static_cast<std::ptrdiff_t>(index));
  out.vertex.erase(out.vertex.begin() + static_cast<std::ptrdiff_t>(index));
  out.groups.erase(out.groups.begin() + static_cast<std::ptrdiff_t>(index));
  return out;
}

namespace {

// Adds the edge terms of `labels` for vertex a: +g_{t_u} - g_{t_{u-1}} for u in I_a (u in [1..l]),
// scaled by `sign`, on variables offset..offset+l-1.
void add_vertex_terms(std::vector<int>& coefs, const std::vector<int>& labels, int a, unsigned offset, int sign) {
  const auto l = static_cast<unsigned>(labels.size() - 1);
  for (unsigned u = 1; u <= l; ++u) {
    if (labels[u] != a) continue;
    coefs[offset + u % l] += sign;
    coefs[offset + u - 1] -= sign;
  }
}

}  // namespace

VertexSystem vertex_system(const ClosedPath& path) {
  VertexSystem system;
  system.variable_count = path.length();
  for (int a = 1; a <= static_cast<int>(path.vertex_count()); ++a) {
    std::vector<int> coefs(system.variable_count, 0);
    add_vertex_terms(coefs, path.labels(), a, 0, +1);
    system.coefficients.push_back(std::move(coefs));
    system.vertex.push_back(a);
    system.groups.push_back(VertexSystem::Group::vertex);
  }
  return system;
}

VertexSystem pair_system(const PathPair& pair) {
  VertexSystem system;
  const unsigned l1 = pair.length_first();
  system.variable_count = l1 + pair.length_second();
  const std::set<int> v1(pair.first().begin(), pair.first().end());
  const std::set<int> v2(pair.second().begin(), pair.second().end());
  using Group = VertexSystem::Group;
  for (Group group : {Group::shared, Group::first_only, Group::second_only}) {
    for (int a = 1; a <= static_cast<int>(pair.union_count()); ++a) {
      const bool in1 = v1.count(a) > 0;
      const bool in2 = v2.count(a) > 0;
      const Group g = in1 && in2 ? Group::shared : (in1 ? Group::first_only : Group::second_only);
      if (g != group) continue;
      std::vector<int> coefs(system.variable_count, 0);
      if (in1) add_vertex_terms(coefs, pair.first(), a, 0, +1);
      if (in2) add_vertex_terms(coefs, pair.second(), a, l1, -1);
      system.coefficients.push_back(std::move(coefs));
      system.vertex.push_back(a);
      system.groups.push_back(g);
    }
  }
  return system;
}

namespace {

// Equations reduced mod q with all-zero rows removed; variables absent from every equation
// are free and contribute a factor n each.
struct ReducedSystem {
  std::vector<unsigned> active;                              // variables in search order
  std::vector<std::vector<std::pair<int, std::uint32_t>>> touch;  // per depth: (equation, coef)
  std::vector<std::vector<int>> completes;                   // per depth: equations fully assigned
  std::size_t equation_count = 0;
  unsigned free_count = 0;
};

ReducedSystem reduce(const VertexSystem& system, const PrimeField& field) {
  ReducedSystem r;
  std::vector<std::vector<std::uint32_t>> eqs;
  for (const auto& row : system.coefficients) {
    std::vector<std::uint32_t> reduced(row.size());
    bool nonzero = false;
    for (std::size_t v = 0; v < row.size(); ++v) {
      reduced[v] = field.reduce(row[v]);
      nonzero |= reduced[v] != 0;
    }
    if (nonzero) eqs.push_back(std::move(reduced));
  }
  r.equation_count = eqs.size();
  for (unsigned v = 0; v < system.variable_count; ++v) {
    const bool used = std::any_of(eqs.begin(), eqs.end(), [v](const auto& e) { return e[v] != 0; });
    if (used) {
      r.active.push_back(v);
    } else {
      ++r.free_count;
    }
  }
  r.touch.resize(r.active.size());
  r.completes.resize(r.active.size());
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    std::size_t last = 0;
    for (std::size_t d = 0; d < r.active.size(); ++d) {
      if (const auto c = eqs[e][r.active[d]]; c != 0) {
        r.touch[d].emplace_back(static_cast<int>(e), c);
        last = d;
      }
    }
    r.completes[last].push_back(static_cast<int>(e));
  }
  return r;
}

std::uint64_t count_binary(const LinearCode& code, const ReducedSystem& r) {
  const auto n = static_cast<unsigned>(code.length());
  std::vector<std::uint64_t> cols(n, 0);
  for (unsigned t = 0; t < n; ++t) {
    for (Eigen::Index i = 0; i < code.dimension(); ++i) {
      if (code.generator()(i, t)) cols[t] |= std::uint64_t{1} << i;
    }
  }
  std::vector<std::uint64_t> acc(r.equation_count, 0);
  std::function<std::uint64_t(std::size_t)> search = [&](std::size_t d) -> std::uint64_t {
    if (d == r.active.size()) return 1;
    std::uint64_t total = 0;
    for (unsigned t = 0; t < n; ++t) {
      for (const auto& [e, c] : r.touch[d]) acc[e] ^= cols[t];
      const bool ok = std::all_of(r.completes[d].begin(), r.completes[d].end(), [&](int e) { return acc[e] == 0; });
      if (ok) total += search(d + 1);
      for (const auto& [e, c] : r.touch[d]) acc[e] ^= cols[t];
    }
    return total;
  };
  return search(0);
}

std::uint64_t count_generic(const LinearCode& code, const ReducedSystem& r) {
  const auto n = static_cast<unsigned>(code.length());
  const auto k = static_cast<std::size_t>(code.dimension());
  const auto& field = code.field();
  std::vector<std::uint32_t> cols(n * k);
  for (unsigned t = 0; t < n; ++t) {
    for (std::size_t i = 0; i < k; ++i) cols[t * k + i] = static_cast<std::uint32_t>(code.generator()(i, t));
  }
  std::vector<std::uint32_t> acc(r.equation_count * k, 0);
  const auto apply = [&](std::size_t d, unsigned t, bool undo) {
    for (const auto& [e, c] : r.touch[d]) {
      const std::uint32_t scale = undo ? field.neg(c) : c;
      for (std::size_t i = 0; i < k; ++i) {
        acc[e * k + i] = field.add(acc[e * k + i], field.mul(scale, cols[t * k + i]));
      }
    }
  };
  std::function<std::uint64_t(std::size_t)> search = [&](std::size_t d) -> std::uint64_t {
    if (d == r.active.size()) return 1;
    std::uint64_t total = 0;
    for (unsigned t = 0; t < n; ++t) {
      apply(d, t, false);
      const bool ok = std::all_of(r.completes[d].begin(), r.completes[d].end(), [&](int e) {
        return std::all_of(acc.begin() + e * k, acc.begin() + (e + 1) * k, [](std::uint32_t v) { return v == 0; });
      });
      if (ok) total += search(d + 1);
      apply(d, t, true);
    }
    return total;
  };
  return search(0);
}

}  // namespace

std::uint64_t count_solutions(const LinearCode& code, const VertexSystem& system) {
  const double n = static_cast<double>(code.length());
  if (power(n, system.variable_count) > kSolutionBudget) {
    throw ResourceError("brute-force budget exceeded: n^" + std::to_string(system.variable_count) + " > 1e8");
  }
  const auto r = reduce(system, code.field());
  const std::uint64_t searched =
      (code.q() == 2 && code.dimension() <= 64) ? count_binary(code, r) : count_generic(code, r);
  std::uint64_t free_factor = 1;
  for (unsigned i = 0; i < r.free_count; ++i) free_factor *= static_cast<std::uint64_t>(code.length());
  return searched * free_factor;
}

std::uint64_t count_W(const LinearCode& code, const ClosedPath& path) {
  try {
    return count_solutions(code, vertex_system(path));
  } catch (const ResourceError& e) {
    throw ResourceError(std::string(e.what()) + " for class " + path.to_string());
  }
}

std::uint64_t count_W_pair(const LinearCode& code, const PathPair& pair) {
  try {
    return count_solutions(code, pair_system(pair));
  } catch (const ResourceError& e) {
    throw ResourceError(std::string(e.what()) + " for pair " + pair.to_string());
  }
}

namespace {

bool expectation_within_budget(const LinearCode& code, const ClosedPath& path) {
  const double N = static_cast<double>(code.codeword_count());
  return code.codeword_count() <= kMaxCodewordTable &&
         power(N, path.vertex_count()) * path.length() * static_cast<double>(code.length()) <= kExpectationBudget;
}

}  // namespace

std::complex<double> expect_omega(const LinearCode& code, const ClosedPath& path, MapSpace space) {
  if (!expectation_within_budget(code, path)) {
    throw ResourceError("expectation budget exceeded (N^v * l * n > 1e9 or N > 8192) for class " + path.to_string());
  }
  const auto N = static_cast<std::size_t>(code.codeword_count());
  const unsigned v = path.vertex_count();
  if (space == MapSpace::injective && v > N) {
    throw ParameterError("no injective maps: v = " + std::to_string(v) + " > N");
  }
  const bool binary = code.q() == 2;
  // inner[a * N + b] = <eps(c_a), eps(c_b)> = sum_t eps(c_a)_t conj(eps(c_b)_t)
  Eigen::MatrixXcd images(N, code.length());
  for (std::size_t a = 0; a < N; ++a) images.row(a) = char_map(code.codeword(a), code.q()).transpose();
  const Eigen::MatrixXcd inner = images * images.adjoint();
  std::vector<long long> inner_int;
  if (binary) {
    inner_int.resize(N * N);
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b) inner_int[a * N + b] = std::llround(inner(a, b).real());
  }

  const auto& g = path.labels();
  const unsigned l = path.length();
  std::vector<std::size_t> s(v, 0);
  std::vector<char> used(N, 0);
  __int128 exact_sum = 0;
  std::complex<double> sum = 0.0;
  std::uint64_t maps = 0;
  std::function<void(unsigned)> assign = [&](unsigned vertex) {
    if (vertex == v) {
      ++maps;
      if (binary) {
        __int128 prod = 1;
        for (unsigned j = 0; j < l; ++j) prod *= inner_int[s[g[j] - 1] * N + s[g[j + 1] - 1]];
        exact_sum += prod;
      } else {
        std::complex<double> prod = 1.0;
        for (unsigned j = 0; j < l; ++j) prod *= inner(s[g[j] - 1], s[g[j + 1] - 1]);
        sum += prod;
      }
      return;
    }
    for (std::size_t c = 0; c < N; ++c) {
      if (space == MapSpace::injective && used[c]) continue;
      s[vertex] = c;
      used[c] = 1;
      assign(vertex + 1);
      used[c] = 0;
    }
  };
  assign(0);
  if (binary) return {static_cast<double>(static_cast<long double>(exact_sum) / maps), 0.0};
  return sum / static_cast<double>(maps);
}

PathsAudit audit_paths(const LinearCode& code, unsigned l, const PathsAuditOptions& options) {
  require_length(l);
  PathsAudit audit;
  audit.l = l;
  audit.code_label = code.label();
  audit.n = static_cast<std::uint64_t>(code.length());
  audit.N = code.codeword_count();
  const double n = static_cast<double>(audit.n);
  Xorshift64Star rng(options.relabel_seed);

  for (const auto& path : enumerate_closed_classes(l, options.simple_only)) {
    ClassAuditRecord rec{.path = path};
    rec.simple = path.is_simple();
    rec.double_tree = is_double_tree(path);
    rec.W = count_W(code, path);
    const unsigned v = path.vertex_count();
    rec.n_power = power(n, l - v + 1);

    const auto system = vertex_system(path);
    for (std::size_t e = 0; e < system.coefficients.size(); ++e) {
      rec.redundancy_holds &= count_solutions(code, system.without_equation(e)) == rec.W;
    }
    audit.redundant_equation &= rec.redundancy_holds;

    if (options.expectations && expectation_within_budget(code, path)) {
      rec.expectation_all = expect_omega(code, path, MapSpace::all_maps);
      if (v <= audit.N) rec.expectation_injective = expect_omega(code, path, MapSpace::injective);
      const auto e = *rec.expectation_all;
      const bool identity = std::abs(e.real() - static_cast<double>(rec.W)) < 1e-6 &&
                            std::abs(e.imag()) <= 1e-9 * std::max(1.0, std::abs(e));
      audit.character_sum_identity &= identity;
    }

    if (rec.double_tree) {
      audit.double_tree_count_exact &= static_cast<double>(rec.W) == rec.n_power;
    } else {
      audit.nondouble_tree_max_ratio =
          std::max(audit.nondouble_tree_max_ratio, static_cast<double>(rec.W) / power(n, l - v));
    }

    const auto& labels = path.labels();
    audit.canonical_idempotent &= canonical_labels(labels) == labels;
    for (int trial = 0; trial < 8; ++trial) {
      // Random injective relabeling into [1..v+3].
      std::vector<int> image(v + 3);
      std::iota(image.begin(), image.end(), 1);
      for (std::size_t i = image.size() - 1; i > 0; --i) std::swap(image[i], image[rng.below(i + 1)]);
      std::vector<int> moved;
      for (int a : labels) moved.push_back(image[a - 1]);
      audit.canonical_idempotent &= ClosedPath(moved) == path;
    }
    audit.classes.push_back(std::move(rec));
  }

  if (l % 2 == 0) {
    audit.double_tree_count = count_double_tree_classes(l);
    std::uint64_t by_enumeration = 0;
    for (const auto& path : enumerate_closed_classes(l, true)) by_enumeration += is_double_tree(path) ? 1 : 0;
    audit.double_tree_count_by_enumeration = by_enumeration;
    audit.catalan = catalan_number(l / 2);
    audit.catalan_identity = static_cast<double>(*audit.double_tree_count) == *audit.catalan &&
                             by_enumeration == *audit.double_tree_count;
  }

  if (!options.pairs) {
    audit.pair_audit_status = "skipped: disabled";
  } else if (power(n, 2 * l) > kSolutionBudget) {
    audit.pair_audit_status = "skipped: n^(2l) exceeds brute-force budget 1e8";
  } else {
    std::map<std::vector<int>, std::uint64_t> single;
    const auto w_of = [&](const std::vector<int>& labels) {
      ClosedPath path(labels);
      auto it = single.find(path.labels());
      if (it == single.end()) it = single.emplace(path.labels(), count_W(code, path)).first;
      return it->second;
    };
    for (const auto& pair : enumerate_pair_classes(l, true)) {
      PairAuditRecord rec{.pair = pair};
      rec.W_pair = count_W_pair(code, pair);
      rec.W_first = w_of(pair.first());
      rec.W_second = w_of(pair.second());
      rec.difference = static_cast<long double>(rec.W_pair) -
                       static_cast<long double>(rec.W_first) * static_cast<long double>(rec.W_second);
      if (pair.meet_count() <= 1) {
        audit.single_meet_pair_difference_zero &= rec.difference == 0;
        const auto system = pair_system(pair);
        for (std::size_t e = 0; e < system.coefficients.size(); ++e) {
          rec.redundancy_holds &= count_solutions(code, system.without_equation(e)) == rec.W_pair;
        }
        audit.redundant_equation &= rec.redundancy_holds;
      }
      audit.pairs.push_back(std::move(rec));
    }
    audit.pair_audit_status = "complete";
  }
  return audit;
}

}  // namespace codewig
