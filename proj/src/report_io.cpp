#include "codewig/report_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "codewig/errors.hpp"
#include "codewig/format.hpp"

namespace codewig {

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

Json to_json(const CodeSelector& selector) {
  Json j;
  j["kind"] = selector.kind;
  if (selector.kind == "gold" || selector.kind == "rm1") j["m"] = selector.m;
  if (selector.kind == "even") j["n"] = selector.n;
  if (selector.kind == "file") j["file"] = selector.file;
  return j;
}

Json to_json(const ExperimentConfig& config) {
  Json j;
  j["command"] = config.command;
  j["code"] = to_json(config.code);
  j["p"] = config.p ? Json(*config.p) : Json(nullptr);
  j["y"] = config.y ? Json(*config.y) : Json(nullptr);
  j["law"] = config.law == LawKind::semicircle ? "sc" : "mp";
  j["mode"] = to_string(config.mode);
  j["seed"] = config.seed;
  j["repeats"] = config.repeats;
  j["bins"] = config.bins;
  j["lmax"] = config.l_max;
  j["dual_bound"] = config.dual_bound;
  j["out"] = config.out_dir;
  j["warnings"] = config.warnings;
  return j;
}

Json to_json(const CodeReport& report) {
  Json j;
  j["n"] = report.n;
  j["k"] = report.k;
  j["N"] = report.N;
  j["q"] = report.q;
  j["dual_distance_status"] = report.dual_distance_status.to_string();
  j["dual_distance_note"] = report.dual_distance_status.note;
  j["weight_set"] = report.weight_set;
  j["coherence"] = report.coherence;
  j["coherence_constant"] = report.coherence_constant;
  j["ratio_N_over_n"] = report.ratio_N_over_n;
  j["certified"] = report.certified;
  j["codewords_examined"] = report.codewords_examined;
  j["weight_source"] = report.weight_source;
  return j;
}

namespace {

Json complex_json(const std::optional<std::complex<double>>& value) {
  if (!value) return nullptr;
  return Json{{"re", value->real()}, {"im", value->imag()}};
}

}  // namespace

Json to_json(const PathsAudit& audit) {
  Json j;
  j["l"] = audit.l;
  j["code"] = audit.code_label;
  j["n"] = audit.n;
  j["N"] = audit.N;
  Json checks;
  checks["catalan_identity"] = audit.catalan_identity;
  checks["double_tree_count_exact"] = audit.double_tree_count_exact;
  checks["character_sum_identity"] = audit.character_sum_identity;
  checks["single_meet_pair_difference_zero"] = audit.single_meet_pair_difference_zero;
  checks["redundant_equation"] = audit.redundant_equation;
  checks["canonical_idempotent"] = audit.canonical_idempotent;
  j["checks"] = checks;
  j["nondouble_tree_max_ratio"] = audit.nondouble_tree_max_ratio;
  j["double_tree_count"] = audit.double_tree_count ? Json(*audit.double_tree_count) : Json(nullptr);
  j["double_tree_count_by_enumeration"] =
      audit.double_tree_count_by_enumeration ? Json(*audit.double_tree_count_by_enumeration) : Json(nullptr);
  j["catalan"] = audit.catalan ? Json(*audit.catalan) : Json(nullptr);
  Json classes = Json::array();
  for (const auto& rec : audit.classes) {
    Json c;
    c["labels"] = rec.path.labels();
    c["l"] = rec.path.length();
    c["v"] = rec.path.vertex_count();
    c["simple"] = rec.simple;
    c["double_tree"] = rec.double_tree;
    c["W"] = rec.W;
    c["n_pow_l_minus_v_plus_1"] = rec.n_power;
    c["expectation_all"] = complex_json(rec.expectation_all);
    c["expectation_injective"] = complex_json(rec.expectation_injective);
    c["redundancy_holds"] = rec.redundancy_holds;
    classes.push_back(std::move(c));
  }
  j["classes"] = std::move(classes);
  j["pair_audit"] = audit.pair_audit_status;
  Json pairs = Json::array();
  for (const auto& rec : audit.pairs) {
    Json p;
    p["first"] = rec.pair.first();
    p["second"] = rec.pair.second();
    p["v_union"] = rec.pair.union_count();
    p["v_meet"] = rec.pair.meet_count();
    p["W_pair"] = rec.W_pair;
    p["W_first"] = rec.W_first;
    p["W_second"] = rec.W_second;
    p["difference"] = static_cast<double>(rec.difference);
    p["redundancy_holds"] = rec.redundancy_holds;
    pairs.push_back(std::move(p));
  }
  j["pairs"] = std::move(pairs);
  return j;
}

Json to_json(const SpectrumRun& run) {
  Json j;
  j["code"] = run.code_label;
  j["n"] = run.n;
  j["p"] = run.p;
  j["law"] = run.law.name();
  if (run.law.kind() == LawKind::marchenko_pastur) {
    j["law_y"] = run.law.y();
    const auto [a, b] = run.law.support();
    j["law_support"] = {a, b};
  }
  j["mode"] = to_string(run.mode);
  Json repeats = Json::array();
  std::vector<double> ks;
  for (const auto& r : run.repeats) {
    Json rj;
    rj["repeat"] = r.repeat;
    rj["stream"] = r.summary.metadata.stream;
    rj["ks"] = r.summary.ks_to_law;
    Json moments = Json::object();
    for (const auto& [l, value] : r.summary.moments) moments[std::to_string(l)] = value;
    rj["moments"] = moments;
    rj["min_eigenvalue"] = r.summary.eigenvalues.size() ? r.summary.eigenvalues.minCoeff() : 0.0;
    rj["max_eigenvalue"] = r.summary.eigenvalues.size() ? r.summary.eigenvalues.maxCoeff() : 0.0;
    rj["trace_residual"] = r.summary.check.trace_residual;
    rj["frobenius_residual"] = r.summary.check.frobenius_residual;
    repeats.push_back(std::move(rj));
    ks.push_back(r.summary.ks_to_law);
  }
  j["ks"] = ks;
  j["median_ks"] = run.median_ks;
  j["max_abs_eigenvalue"] = run.max_abs_eigenvalue;
  j["repeats"] = std::move(repeats);
  return j;
}

Json to_json(const MomentRun& run) {
  Json j;
  j["code"] = run.code_label;
  j["n"] = run.n;
  j["N"] = run.N;
  j["p"] = run.p;
  j["repeats"] = run.repeats;
  j["coherence_constant"] = run.coherence_constant;
  j["gate_multiplier"] = run.multiplier;
  Json rows = Json::array();
  for (const auto& r : run.rows) {
    rows.push_back({{"l", r.l},
                    {"mean", r.mean},
                    {"variance", r.variance},
                    {"sc_moment", r.sc_moment},
                    {"error_scale", r.error_scale},
                    {"deviation", r.deviation},
                    {"within_gate", r.within_gate}});
  }
  j["moments"] = std::move(rows);
  j["max_trace_residual"] = run.max_trace_residual;
  j["max_frobenius_residual"] = run.max_frobenius_residual;
  return j;
}

std::string eigenvalue_csv(const Eigen::VectorXd& eigs) {
  std::ostringstream out;
  write_eigenvalue_csv(out, eigs);
  return out.str();
}

std::string histogram_csv(const Histogram& histogram) {
  std::ostringstream out;
  out << "bin_left,bin_right,density\n";
  for (std::size_t b = 0; b < histogram.density.size(); ++b) {
    out << format_double(histogram.left[b]) << ',' << format_double(histogram.right[b]) << ','
        << format_double(histogram.density[b]) << '\n';
  }
  return out.str();
}

namespace {

std::string xml_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const Histogram& histogram, const LawSpec& law, const std::string& title) {
  constexpr double width = 640, height = 360, left = 50, right = 20, top = 30, bottom = 40;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;
  const double x_lo = histogram.left.empty() ? law.support().first : histogram.left.front();
  const double x_hi = histogram.right.empty() ? law.support().second : histogram.right.back();
  const auto [a, b] = law.support();
  constexpr int kCurvePoints = 400;

  double y_max = 0.0;
  for (double d : histogram.density) y_max = std::max(y_max, d);
  std::vector<std::pair<double, double>> curve;
  for (int i = 0; i <= kCurvePoints; ++i) {
    const double x = a + (b - a) * i / kCurvePoints;
    curve.emplace_back(x, law.pdf(x));
    y_max = std::max(y_max, curve.back().second);
  }
  y_max = y_max > 0 ? 1.1 * y_max : 1.0;
  const auto sx = [&](double x) { return left + (x - x_lo) / (x_hi - x_lo) * plot_w; };
  const auto sy = [&](double y) { return top + plot_h - y / y_max * plot_h; };
  const auto f = [](double v) { return format_double(v, 6); };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n"
      << "<text x=\"" << width / 2 << "\" y=\"18\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
      << xml_escape(title) << "</text>\n";
  svg << "<g fill=\"#9ecae1\" stroke=\"#3182bd\" stroke-width=\"0.5\">\n";
  for (std::size_t i = 0; i < histogram.density.size(); ++i) {
    const double x0 = sx(histogram.left[i]);
    const double x1 = sx(histogram.right[i]);
    const double y0 = sy(histogram.density[i]);
    svg << "<rect x=\"" << f(x0) << "\" y=\"" << f(y0) << "\" width=\"" << f(x1 - x0) << "\" height=\""
        << f(top + plot_h - y0) << "\"/>\n";
  }
  svg << "</g>\n<polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < curve.size(); ++i) {
    svg << (i ? " " : "") << f(sx(curve[i].first)) << ',' << f(sy(curve[i].second));
  }
  svg << "\"/>\n";
  if (law.kind() == LawKind::marchenko_pastur) {
    for (double edge : {a, b}) {
      svg << "<line x1=\"" << f(sx(edge)) << "\" y1=\"" << top << "\" x2=\"" << f(sx(edge)) << "\" y2=\""
          << top + plot_h << "\" stroke=\"#555\" stroke-dasharray=\"4 3\"/>\n";
    }
  }
  // axes and tick labels
  svg << "<g stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\"" << left + plot_w << "\" y2=\""
      << top + plot_h << "\"/>\n"
      << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << top + plot_h << "\"/>\n"
      << "</g>\n<g font-family=\"sans-serif\" font-size=\"10\">\n";
  for (int i = 0; i <= 4; ++i) {
    const double x = x_lo + (x_hi - x_lo) * i / 4;
    svg << "<text x=\"" << f(sx(x)) << "\" y=\"" << top + plot_h + 14 << "\" text-anchor=\"middle\">" << f(x)
        << "</text>\n";
    const double y = y_max * i / 4;
    svg << "<text x=\"" << left - 4 << "\" y=\"" << f(sy(y) + 3) << "\" text-anchor=\"end\">" << format_double(y, 3)
        << "</text>\n";
  }
  svg << "<text x=\"" << width - right << "\" y=\"" << height - 6 << "\" text-anchor=\"end\">"
      << xml_escape("ESD histogram vs " + law.name()) << "</text>\n</g>\n</svg>\n";
  return svg.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParameterError("cannot write " + path.string());
  out << text;
}

std::map<std::string, std::string> write_spectrum_artifacts(const SpectrumRun& run, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::map<std::string, std::string> checksums;
  const auto emit = [&](const std::string& name, const std::string& text) {
    write_text_file(dir / name, text);
    checksums[name] = fnv1a64_hex(text);
  };
  for (const auto& r : run.repeats) {
    const std::string stem = "repeat_" + std::to_string(r.repeat);
    emit(stem + "_eigenvalues.csv", eigenvalue_csv(r.summary.eigenvalues));
    emit(stem + "_histogram.csv", histogram_csv(r.histogram));
    const std::string title = run.code_label + ", n=" + std::to_string(run.n) + ", p=" + std::to_string(run.p) +
                              ", repeat " + std::to_string(r.repeat) + ", KS=" + format_double(r.summary.ks_to_law, 4);
    emit(stem + ".svg", render_svg(r.histogram, run.law, title));
  }
  return checksums;
}

}  // namespace codewig
