// Command-line driver: spectrum | mp | moments | code-info | paths-audit.
#include <CLI11.hpp>
#include <filesystem>
#include <iostream>

#include "codewig/errors.hpp"
#include "codewig/experiments.hpp"
#include "codewig/report_io.hpp"

namespace {

using namespace codewig;

constexpr int kExitParameter = 2;
constexpr int kExitResource = 3;

struct RawOptions {
  std::string code;
  unsigned m = 0;
  unsigned n = 0;
  std::string file;
  std::optional<std::int64_t> p;
  std::optional<double> y;
  std::uint64_t seed = 1;
  unsigned repeats = 10;
  unsigned bins = 40;
  unsigned lmax = 4;
  unsigned bound = 5;
  std::string out;
  std::string mode;
};

void add_common_flags(CLI::App* sub, RawOptions& o) {
  sub->add_option("--code", o.code, "gold | rm1 | even | file")->required();
  sub->add_option("--m", o.m, "field degree for gold / rm1");
  sub->add_option("--n", o.n, "length for even");
  sub->add_option("--file", o.file, "generator matrix file for --code file");
  sub->add_option("--p", o.p, "rows (sampled codewords)");
  sub->add_option("--y", o.y, "aspect ratio p/n for mp");
  sub->add_option("--seed", o.seed, "64-bit seed");
  sub->add_option("--repeats", o.repeats, "independent repeats");
  sub->add_option("--bins", o.bins, "histogram bins");
  sub->add_option("--lmax", o.lmax, "largest moment order (paths-audit: path length)");
  sub->add_option("--bound", o.bound, "dual distance search bound");
  sub->add_option("--out", o.out, "output directory");
  sub->add_option("--mode", o.mode, "distinct | with_replacement");
}

ExperimentConfig resolve(const std::string& command, const RawOptions& o) {
  ExperimentConfig c;
  c.command = command;
  c.code = {o.code, o.m, o.n, o.file};
  if ((o.code == "gold" || o.code == "rm1") && o.m == 0) throw ParameterError("--code " + o.code + " needs --m");
  if (o.code == "even" && o.n == 0) throw ParameterError("--code even needs --n");
  if (o.code == "file" && o.file.empty()) throw ParameterError("--code file needs --file");
  c.p = o.p;
  c.y = o.y;
  c.seed = o.seed;
  c.repeats = o.repeats;
  c.bins = o.bins;
  c.l_max = o.lmax;
  c.dual_bound = o.bound;
  c.out_dir = o.out;
  if (command == "mp") {
    c.law = LawKind::marchenko_pastur;
    c.mode = o.mode.empty() ? SamplingMode::with_replacement : parse_sampling_mode(o.mode);
    if (c.mode == SamplingMode::distinct) {
      c.warnings.push_back("mp law with distinct sampling: the with-replacement setting is the reference one");
    }
    if (!c.y) throw ParameterError("mp needs --y");
  } else {
    c.law = LawKind::semicircle;
    c.mode = o.mode.empty() ? SamplingMode::distinct : parse_sampling_mode(o.mode);
    if ((command == "spectrum" || command == "moments") && c.mode != SamplingMode::distinct) {
      throw ParameterError("the semicircle setting requires --mode distinct");
    }
    if ((command == "spectrum" || command == "moments") && !c.p) throw ParameterError(command + " needs --p");
  }
  if (c.out_dir.empty() && (command == "spectrum" || command == "mp")) c.out_dir = "codewig-out";
  return c;
}

void emit(const ExperimentConfig& config, Json result, const std::map<std::string, std::string>& artifacts,
          const std::string& file_name) {
  Json doc;
  doc["config"] = to_json(config);
  for (auto& [key, value] : result.items()) doc[key] = value;
  doc["artifacts"] = artifacts;
  const std::string text = doc.dump(2) + "\n";
  if (!config.out_dir.empty()) {
    std::filesystem::create_directories(config.out_dir);
    write_text_file(std::filesystem::path(config.out_dir) / file_name, text);
  }
  std::cout << text;
}

void run(const std::string& command, const RawOptions& raw) {
  const auto config = resolve(command, raw);
  const auto code = make_code(config.code);

  if (command == "code-info") {
    emit(config, Json{{"code_report", to_json(code_report(code, kDefaultExhaustiveLimit, config.dual_bound))}}, {},
         "code_info.json");
  } else if (command == "paths-audit") {
    emit(config, Json{{"audit", to_json(audit_paths(code, config.l_max))}}, {}, "paths_audit.json");
  } else if (command == "moments") {
    const auto report = code_report(code, kDefaultExhaustiveLimit, config.dual_bound);
    const auto moments = run_moments(code, *config.p, config.seed, config.repeats, config.l_max,
                                     report.coherence_constant);
    emit(config, Json{{"code_report", to_json(report)}, {"moments", to_json(moments)}}, {}, "moments.json");
  } else {
    const auto spectrum =
        command == "spectrum"
            ? run_semicircle(code, *config.p, config.seed, config.repeats, config.l_max, config.bins)
            : run_marchenko_pastur(code, *config.y, config.mode, config.seed, config.repeats, config.l_max,
                                   config.bins);
    const auto artifacts = write_spectrum_artifacts(spectrum, config.out_dir);
    emit(config, Json{{"spectrum", to_json(spectrum)}}, artifacts, "summary.json");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra of matrices built from linear codes over finite fields"};
  app.require_subcommand(1);
  std::map<std::string, RawOptions> options;
  for (const char* name : {"spectrum", "mp", "moments", "code-info", "paths-audit"}) {
    add_common_flags(app.add_subcommand(name), options[name]);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParameter;
  }
  const auto* sub = app.get_subcommands().front();
  try {
    run(sub->get_name(), options[sub->get_name()]);
  } catch (const ParameterError& e) {
    std::cerr << "parameter error: " << e.what() << '\n';
    return kExitParameter;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
