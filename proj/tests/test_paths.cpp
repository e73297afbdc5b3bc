#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

#include "codewig/errors.hpp"
#include "codewig/laws.hpp"
#include "codewig/paths.hpp"
#include "codewig/rng.hpp"

using namespace codewig;

namespace {

// Direct count over [1..n]^l: for every vertex a, sum over u in [1..l] with gamma(u) = a of
// g_{t_u} - g_{t_{u-1}} (t_l = t_0) must vanish.
std::uint64_t naive_W(const LinearCode& code, const ClosedPath& path) {
  const auto& g = code.generator();
  const unsigned l = path.length();
  const auto n = static_cast<unsigned>(code.length());
  const auto q = static_cast<std::int64_t>(code.q());
  std::uint64_t total = 1;
  for (unsigned i = 0; i < l; ++i) total *= n;
  std::uint64_t count = 0;
  std::vector<unsigned> t(l);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t r = idx;
    for (unsigned i = 0; i < l; ++i, r /= n) t[i] = static_cast<unsigned>(r % n);
    bool ok = true;
    for (unsigned a = 1; a <= path.vertex_count() && ok; ++a) {
      for (Eigen::Index row = 0; row < g.rows() && ok; ++row) {
        std::int64_t s = 0;
        for (unsigned u = 1; u <= l; ++u) {
          if (path.labels()[u] != static_cast<int>(a)) continue;
          s += g(row, t[u % l]) - g(row, t[u - 1]);
        }
        ok = ((s % q) + q) % q == 0;
      }
    }
    count += ok ? 1 : 0;
  }
  return count;
}

// Every sequence over [1..l] of length l, closed up and reduced to first-use order by hand.
std::set<std::vector<int>> brute_force_classes(unsigned l, bool simple) {
  std::set<std::vector<int>> out;
  std::uint64_t total = 1;
  for (unsigned i = 0; i < l; ++i) total *= l;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<int> seq(l + 1);
    std::uint64_t r = idx;
    for (unsigned i = 0; i < l; ++i, r /= l) seq[i] = static_cast<int>(r % l) + 1;
    seq[l] = seq[0];
    bool is_simple = true;
    for (unsigned i = 0; i < l; ++i) is_simple &= seq[i] != seq[i + 1];
    if (simple && !is_simple) continue;
    std::map<int, int> relabel;
    for (auto& s : seq) {
      auto it = relabel.find(s);
      if (it == relabel.end()) it = relabel.emplace(s, static_cast<int>(relabel.size()) + 1).first;
      s = it->second;
    }
    out.insert(seq);
  }
  return out;
}

}  // namespace

TEST_CASE("closed path basics") {
  const ClosedPath p({3, 7, 3, 9, 3});
  CHECK(p.labels() == std::vector<int>{1, 2, 1, 3, 1});
  CHECK(p.length() == 4);
  CHECK(p.vertex_count() == 3);
  CHECK(p.is_simple());
  CHECK_FALSE(ClosedPath({1, 1, 2, 1}).is_simple());
  CHECK(p.to_string() == "(1,2,1,3,1)");
  CHECK_THROWS_AS(ClosedPath({1, 2}), ParameterError);
  CHECK_THROWS_AS(ClosedPath({1}), ParameterError);
  CHECK_THROWS_AS(ClosedPath({0, 1, 0}), ParameterError);
}

TEST_CASE("class enumeration matches brute-force orbit enumeration") {
  for (unsigned l = 1; l <= 6; ++l) {
    for (bool simple : {false, true}) {
      std::set<std::vector<int>> ours;
      for (const auto& c : enumerate_closed_classes(l, simple)) ours.insert(c.labels());
      CHECK(ours == brute_force_classes(l, simple));
    }
  }
  const auto two = enumerate_closed_classes(2, true);
  REQUIRE(two.size() == 1);
  CHECK(two[0].labels() == std::vector<int>{1, 2, 1});
  CHECK(enumerate_closed_classes(2, false).size() == 2);
  CHECK_THROWS_AS(enumerate_closed_classes(0, true), ParameterError);
  CHECK_THROWS_AS(enumerate_closed_classes(11, true), ParameterError);
}

TEST_CASE("fewer than v^l classes have v vertices") {
  for (unsigned l = 2; l <= 7; ++l) {
    std::map<unsigned, std::uint64_t> per_v;
    for (const auto& c : enumerate_closed_classes(l, true)) ++per_v[c.vertex_count()];
    for (const auto& [v, count] : per_v) CHECK(static_cast<double>(count) < std::pow(v, l));
  }
}

TEST_CASE("canonical form is idempotent and invariant under 10^4 relabelings") {
  Xorshift64Star rng(2024, 0);
  const auto classes = enumerate_closed_classes(6, false);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto& c = classes[rng.below(classes.size())];
    CHECK(canonical_labels(c.labels()) == c.labels());
    std::vector<int> image(40);
    std::iota(image.begin(), image.end(), 1);
    for (std::size_t i = image.size() - 1; i > 0; --i) std::swap(image[i], image[rng.below(i + 1)]);
    std::vector<int> moved;
    for (int a : c.labels()) moved.push_back(image[a - 1]);
    REQUIRE(ClosedPath(moved) == c);
  }
}

TEST_CASE("double tree detection") {
  CHECK(is_double_tree(ClosedPath({1, 2, 1})));
  CHECK_FALSE(is_double_tree(ClosedPath({1, 2, 3, 1})));
  CHECK(is_double_tree(ClosedPath({1, 2, 1, 3, 1})));
  CHECK(is_double_tree(ClosedPath({1, 2, 3, 2, 1})));
  CHECK_FALSE(is_double_tree(ClosedPath({1, 2, 1, 2, 1})));  // one edge walked four times
  CHECK_FALSE(is_double_tree(ClosedPath({1, 1, 1})));
  std::vector<std::vector<int>> at4;
  for (const auto& c : enumerate_closed_classes(4, true))
    if (is_double_tree(c)) at4.push_back(c.labels());
  CHECK(at4 == std::vector<std::vector<int>>{{1, 2, 1, 3, 1}, {1, 2, 3, 2, 1}});
}

TEST_CASE("double tree classes are counted by Catalan numbers") {
  for (unsigned l = 2; l <= 10; l += 2) {
    const auto count = count_double_tree_classes(l);
    CHECK(static_cast<double>(count) == catalan_number(l / 2));
    std::uint64_t by_enumeration = 0;
    for (const auto& c : enumerate_closed_classes(l, true)) by_enumeration += is_double_tree(c) ? 1 : 0;
    CHECK(by_enumeration == count);
    for (const auto& c : double_tree_classes(l)) CHECK(is_double_tree(c));
  }
  CHECK_THROWS_AS(count_double_tree_classes(5), ParameterError);
}

TEST_CASE("vertex equations sum to zero") {
  for (const auto& c : enumerate_closed_classes(5, false)) {
    const auto system = vertex_system(c);
    std::vector<int> total(system.variable_count, 0);
    for (const auto& eq : system.coefficients)
      for (unsigned v = 0; v < system.variable_count; ++v) total[v] += eq[v];
    CHECK(std::all_of(total.begin(), total.end(), [](int x) { return x == 0; }));
  }
}

TEST_CASE("solution counts agree with the naive count") {
  const auto code = make_even_weight(5);
  for (unsigned l = 1; l <= 5; ++l)
    for (const auto& c : enumerate_closed_classes(l, false)) CHECK(count_W(code, c) == naive_W(code, c));

  SymbolMatrix g(2, 4);
  g << 1, 0, 1, 2, 0, 1, 1, 1;
  const LinearCode ternary(3, g, "ternary");
  for (unsigned l = 2; l <= 4; ++l)
    for (const auto& c : enumerate_closed_classes(l, false)) CHECK(count_W(ternary, c) == naive_W(ternary, c));
}

TEST_CASE("spot values of W") {
  const auto code = make_even_weight(5);
  CHECK(count_W(code, ClosedPath({1, 2, 1})) == 5);
  CHECK(count_W(code, ClosedPath({1, 2, 3, 1})) <= 5);
  for (unsigned l : {2u, 4u, 6u})
    for (const auto& c : double_tree_classes(l)) CHECK(count_W(code, c) == std::uint64_t(std::pow(5, l / 2)));
}

TEST_CASE("pairs") {
  const PathPair pair({1, 2, 1}, {2, 3, 2});
  CHECK(pair.meet_count() == 1);
  CHECK(pair.union_count() == 3);
  CHECK(pair.first() == std::vector<int>{1, 2, 1});
  const PathPair relabeled({5, 9, 5}, {9, 4, 9});
  CHECK(relabeled.first() == pair.first());
  CHECK(relabeled.second() == pair.second());

  const auto code = make_even_weight(5);
  for (const auto& pp : enumerate_pair_classes(2, true)) {
    CHECK(pp.union_count() + pp.meet_count() ==
          ClosedPath(pp.first()).vertex_count() + ClosedPath(pp.second()).vertex_count());
    if (pp.meet_count() <= 1) {
      CHECK(count_W_pair(code, pp) == count_W(code, ClosedPath(pp.first())) * count_W(code, ClosedPath(pp.second())));
    }
    const auto system = pair_system(pp);
    for (std::size_t e = 0; e < system.coefficients.size(); ++e) {
      CHECK(count_solutions(code, system.without_equation(e)) == count_W_pair(code, pp));
    }
  }
}

TEST_CASE("character sum identity") {
  for (unsigned n : {5u, 7u}) {
    const auto code = make_even_weight(n);
    for (unsigned l = 1; l <= 4; ++l) {
      for (const auto& c : enumerate_closed_classes(l, true)) {
        const auto e = expect_omega(code, c, MapSpace::all_maps);
        CHECK(std::abs(e.real() - static_cast<double>(count_W(code, c))) < 1e-6);
        CHECK(std::abs(e.imag()) <= 1e-9 * std::max(1.0, std::abs(e)));
      }
    }
  }
  const auto e = expect_omega(make_even_weight(5), ClosedPath({1, 1, 1}), MapSpace::all_maps);
  CHECK(e.real() == doctest::Approx(25.0));
}

TEST_CASE("injective maps approach all maps as the code grows") {
  std::map<unsigned, double> worst_gap;
  for (unsigned n : {5u, 7u}) {
    const auto code = make_even_weight(n);
    const double N = static_cast<double>(code.codeword_count());
    for (const auto& c : double_tree_classes(4)) {
      const auto gap = std::abs(expect_omega(code, c, MapSpace::injective) - expect_omega(code, c, MapSpace::all_maps));
      // observed constant in front of n^(l - v + 2) / N is about 1.8 at both sizes
      CHECK(gap <= 2.0 * std::pow(n, 4 - c.vertex_count() + 2) / N);
      worst_gap[n] = std::max(worst_gap[n], gap);
    }
  }
  CHECK(worst_gap[7] < worst_gap[5]);
}

TEST_CASE("ternary character sums") {
  SymbolMatrix g(2, 4);
  g << 1, 0, 1, 2, 0, 1, 1, 1;
  const LinearCode ternary(3, g, "ternary");
  for (const auto& c : enumerate_closed_classes(3, true)) {
    const auto e = expect_omega(ternary, c, MapSpace::all_maps);
    CHECK(std::abs(e.real() - static_cast<double>(count_W(ternary, c))) < 1e-6);
    CHECK(std::abs(e.imag()) < 1e-9 * std::max(1.0, std::abs(e)));
  }
}

TEST_CASE("budgets raise resource errors naming the class") {
  const auto code = make_gold(7);
  try {
    count_W(code, ClosedPath({1, 2, 1, 3, 1, 4, 1}));
    FAIL("expected a resource error");
  } catch (const ResourceError& e) {
    CHECK(std::string(e.what()).find("(1,2,1,3,1,4,1)") != std::string::npos);
  }
  CHECK_THROWS_AS(expect_omega(code, ClosedPath({1, 2, 3, 1}), MapSpace::all_maps), ResourceError);
}

TEST_CASE("audit on even(5) at l = 4") {
  const auto audit = audit_paths(make_even_weight(5), 4);
  CHECK(audit.catalan_identity);
  CHECK(audit.double_tree_count_exact);
  CHECK(audit.character_sum_identity);
  CHECK(audit.single_meet_pair_difference_zero);
  CHECK(audit.redundant_equation);
  CHECK(audit.canonical_idempotent);
  CHECK(audit.pair_audit_status == "complete");
  for (const auto& rec : audit.classes)
    if (rec.double_tree) CHECK(rec.W == 25);
}
