// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Every stochastic criterion uses the same fixed seed, chosen before any run.
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

#include "codewig/experiments.hpp"
#include "codewig/laws.hpp"
#include "codewig/paths.hpp"

using namespace codewig;

namespace {

constexpr std::uint64_t kSuiteSeed = 1;

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Residuals of every decomposition computed along the way, checked at the end.
struct DecompositionLedger {
  double trace = 0.0;
  double frobenius = 0.0;
  double centered_sum_over_p = 0.0;
  std::uint64_t count = 0;

  void add(const SpectrumRun& run, bool centered) {
    for (const auto& r : run.repeats) {
      trace = std::max(trace, r.summary.check.trace_residual);
      frobenius = std::max(frobenius, r.summary.check.frobenius_residual);
      if (centered) {
        centered_sum_over_p =
            std::max(centered_sum_over_p, std::abs(r.summary.check.eigenvalue_sum) / static_cast<double>(run.p));
      }
      ++count;
    }
  }
  void add(const MomentRun& run) {
    trace = std::max(trace, run.max_trace_residual);
    frobenius = std::max(frobenius, run.max_frobenius_residual);
    centered_sum_over_p = std::max(centered_sum_over_p, run.max_centered_eigenvalue_sum / static_cast<double>(run.p));
    count += run.repeats;
  }
};

DecompositionLedger ledger;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

Outcome gold_structure() {
  std::ostringstream d;
  bool ok = true;
  const auto g5 = code_report(make_gold(5));
  ok &= g5.n == 31 && g5.k == 10 && g5.weight_set == std::set<unsigned>{12, 16, 20} &&
        g5.dual_distance_status.to_string() == "=5";
  const auto g7 = code_report(make_gold(7));
  const auto s7 = g7.dual_distance_status.to_string();
  ok &= g7.n == 127 && g7.k == 14 && g7.weight_set == std::set<unsigned>{56, 64, 72} && (s7 == "=5" || s7 == "≥5");
  d << "gold(5) d⊥ " << g5.dual_distance_status.to_string() << ", gold(7) d⊥ " << s7;
  return {ok, d.str()};
}

Outcome catalan_identity() {
  std::ostringstream d;
  bool ok = true;
  for (unsigned l = 2; l <= 10; l += 2) {
    const auto count = count_double_tree_classes(l);
    std::uint64_t by_enumeration = 0;
    for (const auto& c : enumerate_closed_classes(l, true)) by_enumeration += is_double_tree(c) ? 1 : 0;
    ok &= static_cast<double>(count) == catalan_number(l / 2) && by_enumeration == count;
    d << (l > 2 ? ", " : "") << count;
  }
  return {ok, "counts " + d.str()};
}

Outcome double_tree_exact() {
  bool ok = true;
  unsigned checked = 0;
  for (unsigned n : {5u, 7u}) {
    const auto code = make_even_weight(n);
    for (unsigned l : {2u, 4u, 6u}) {
      for (const auto& c : double_tree_classes(l)) {
        ok &= count_W(code, c) == static_cast<std::uint64_t>(std::pow(n, l - c.vertex_count() + 1));
        ++checked;
      }
    }
  }
  return {ok, std::to_string(checked) + " double-tree classes"};
}

Outcome pair_product() {
  bool ok = true;
  unsigned checked = 0;
  const auto code = make_even_weight(5);
  std::map<std::vector<int>, std::uint64_t> single;
  const auto w = [&](const std::vector<int>& labels) {
    const ClosedPath path(labels);
    auto it = single.find(path.labels());
    if (it == single.end()) it = single.emplace(path.labels(), count_W(code, path)).first;
    return it->second;
  };
  for (unsigned l : {2u, 4u}) {
    for (const auto& pair : enumerate_pair_classes(l, true)) {
      if (pair.meet_count() > 1) continue;
      ok &= count_W_pair(code, pair) == w(pair.first()) * w(pair.second());
      ++checked;
    }
  }
  return {ok, std::to_string(checked) + " pairs with at most one shared vertex"};
}

Outcome character_sums() {
  bool ok = true;
  unsigned checked = 0;
  const auto code = make_even_weight(5);
  for (unsigned l = 1; l <= 4; ++l) {
    for (const auto& c : enumerate_closed_classes(l, true)) {
      const auto e = expect_omega(code, c, MapSpace::all_maps);
      ok &= std::abs(e.real() - static_cast<double>(count_W(code, c))) < 1e-6 &&
            std::abs(e.imag()) < 1e-9 * std::max(1.0, std::abs(e));
      ++checked;
    }
  }
  return {ok, std::to_string(checked) + " simple classes"};
}

std::vector<double> ladder_ks;

Outcome semicircle_trend() {
  const std::vector<std::pair<unsigned, std::int64_t>> ladder{{5, 8}, {7, 20}, {9, 35}, {11, 50}};
  std::ostringstream d;
  for (const auto& [m, p] : ladder) {
    const auto run = run_semicircle(make_gold(m), p, kSuiteSeed, 10, 4);
    ledger.add(run, true);
    ladder_ks.push_back(run.median_ks);
    d << (m > 5 ? " -> " : "median KS ") << fmt(run.median_ks);
  }
  bool ok = ladder_ks.back() < 0.15;
  for (std::size_t i = 1; i < ladder_ks.size(); ++i) ok &= ladder_ks[i] < ladder_ks[i - 1];
  d << " (gate 0.15)";
  return {ok, d.str()};
}

Outcome moment_convergence() {
  const auto code = make_gold(11);
  const double c = code_report(code).coherence_constant;
  const auto run = run_moments(code, 50, kSuiteSeed, 32, 4, c);
  ledger.add(run);
  std::ostringstream d;
  bool ok = true;
  for (unsigned l : {2u, 3u, 4u}) {
    const auto& row = run.rows[l - 1];
    ok &= row.within_gate;
    d << (l > 2 ? ", " : "") << "A" << l << " dev " << fmt(row.deviation) << " <= " << fmt(3 * row.error_scale);
  }
  return {ok, d.str()};
}

Outcome variance_decay() {
  const auto small = run_moments(make_gold(5), 8, kSuiteSeed, 32, 2, 1.0);
  const auto large = run_moments(make_gold(9), 8, kSuiteSeed, 32, 2, 1.0);
  ledger.add(small);
  ledger.add(large);
  const double v5 = small.rows[1].variance;
  const double v9 = large.rows[1].variance;
  return {v9 < v5, "var A2 gold(5) " + fmt(v5) + ", gold(9) " + fmt(v9)};
}

Outcome mp_contrast() {
  const auto rm = run_marchenko_pastur(make_rm1(5), 0.5, SamplingMode::with_replacement, kSuiteSeed, 10, 4);
  const auto gold = run_marchenko_pastur(make_gold(5), 0.5, SamplingMode::with_replacement, kSuiteSeed, 10, 4);
  ledger.add(rm, false);
  ledger.add(gold, false);
  return {rm.median_ks > gold.median_ks, "median KS rm1(5) " + fmt(rm.median_ks) + ", gold(5) " + fmt(gold.median_ks)};
}

Outcome laws() {
  boost::math::quadrature::tanh_sinh<double> quad;
  double worst_mass = std::abs(quad.integrate(sc_pdf, -2.0, 2.0) - 1.0);
  double worst_moment = 0.0;
  for (double y : {0.25, 0.5, 0.75}) {
    const auto [a, b] = mp_support(y);
    worst_mass = std::max(worst_mass, std::abs(quad.integrate([y](double x) { return mp_pdf(x, y); }, a, b) - 1.0));
    for (unsigned l = 1; l <= 6; ++l) {
      const double ref = quad.integrate([l, y](double x) { return std::pow(x, l) * mp_pdf(x, y); }, a, b);
      worst_moment = std::max(worst_moment, std::abs(mp_moment(l, y) - ref));
    }
  }
  for (unsigned l = 1; l <= 6; ++l) {
    const double ref = quad.integrate([l](double x) { return std::pow(x, l) * sc_pdf(x); }, -2.0, 2.0);
    worst_moment = std::max(worst_moment, std::abs(sc_moment(l) - ref));
  }
  const bool ok = worst_mass < 1e-8 && worst_moment < 1e-6 && sc_cdf(0.0) == 0.5;
  return {ok, "mass err " + fmt(worst_mass) + ", moment err " + fmt(worst_moment)};
}

Outcome plumbing() {
  const bool ok = ledger.count > 0 && ledger.trace < 1e-9 && ledger.frobenius < 1e-9 && ledger.centered_sum_over_p < 1e-9;
  return {ok, std::to_string(ledger.count) + " decompositions, max residuals " + fmt(ledger.trace) + " / " +
                  fmt(ledger.frobenius) + ", centered sum/p " + fmt(ledger.centered_sum_over_p)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  // plumbing is evaluated last because it inspects the decompositions of the others
  const std::vector<Criterion> criteria{
      {1, "gold structure", gold_structure},
      {2, "catalan identity", catalan_identity},
      {3, "double-tree W exact", double_tree_exact},
      {4, "pair product identity", pair_product},
      {5, "character-sum identity", character_sums},
      {7, "semicircle convergence trend", semicircle_trend},
      {8, "moment convergence", moment_convergence},
      {9, "variance decay", variance_decay},
      {10, "MP contrast", mp_contrast},
      {11, "laws", laws},
      {6, "spectral plumbing identities", plumbing},
  };
  std::map<int, std::string> lines;
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += outcome.pass ? 0 : 1;
    char head[128];
    std::snprintf(head, sizeof head, "%s %2d %-30s %7.2fs  ", outcome.pass ? "PASS" : "FAIL", c.id, c.name, seconds);
    lines[c.id] = head + outcome.detail;
  }
  for (const auto& [id, line] : lines) std::puts(line.c_str());
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
