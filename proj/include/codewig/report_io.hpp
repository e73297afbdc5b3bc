#ifndef CODEWIG_REPORT_IO_HPP
#define CODEWIG_REPORT_IO_HPP

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

#include "codewig/experiments.hpp"
#include "codewig/linear_code.hpp"
#include "codewig/paths.hpp"

namespace codewig {

using Json = nlohmann::ordered_json;

/// FNV-1a 64-bit digest as 16 lowercase hex digits.
std::string fnv1a64_hex(std::string_view bytes);

Json to_json(const CodeSelector& selector);
Json to_json(const ExperimentConfig& config);
Json to_json(const CodeReport& report);
Json to_json(const PathsAudit& audit);
Json to_json(const SpectrumRun& run);
Json to_json(const MomentRun& run);

std::string eigenvalue_csv(const Eigen::VectorXd& eigs);
/// Header "bin_left,bin_right,density".
std::string histogram_csv(const Histogram& histogram);
/// Histogram bars with the law density drawn as a polyline over its whole support.
std::string render_svg(const Histogram& histogram, const LawSpec& law, const std::string& title);

/// Per-repeat eigenvalue CSV, histogram CSV and SVG under `dir`; returns file name -> checksum.
std::map<std::string, std::string> write_spectrum_artifacts(const SpectrumRun& run, const std::filesystem::path& dir);

void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace codewig

#endif  // CODEWIG_REPORT_IO_HPP
