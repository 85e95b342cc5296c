// Command-line rating of pairwise comparison matrices.
//
//   rate <input> [--format csv|json] [--arith rational|float]
//                [--out text|json] [--cap N] [--auto-symmetrize]
//
// Reads a square reciprocal comparison matrix, computes the optimal score
// family together with its least and most differentiating representatives,
// and prints a text or JSON report. Exit codes: 0 success, 1 invalid input,
// 2 a configured limit stopped the run.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

#include "maxtimes/cli.hpp"

int main(int argc, char** argv) {
  maxtimes::cli::CliConfig cfg;

  CLI::App app{"Rate alternatives from a pairwise comparison matrix"};
  app.add_option("input", cfg.input_path,
                 "Comparison matrix file (CSV or JSON)")
      ->required();
  std::map<std::string, maxtimes::cli::Format> formats{
      {"csv", maxtimes::cli::Format::kCsv},
      {"json", maxtimes::cli::Format::kJson}};
  app.add_option("--format", cfg.format, "Input format (default: by extension)")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  std::map<std::string, maxtimes::cli::Arithmetic> ariths{
      {"rational", maxtimes::cli::Arithmetic::kRational},
      {"float", maxtimes::cli::Arithmetic::kFloat}};
  app.add_option("--arith", cfg.arithmetic,
                 "Arithmetic realization (default: rational)")
      ->transform(CLI::CheckedTransformer(ariths, CLI::ignore_case));
  std::map<std::string, maxtimes::cli::Output> outputs{
      {"text", maxtimes::cli::Output::kText},
      {"json", maxtimes::cli::Output::kJson}};
  app.add_option("--out", cfg.output, "Report format (default: text)")
      ->transform(CLI::CheckedTransformer(outputs, CLI::ignore_case));
  app.add_option("--cap", cfg.selection_cap,
                 "Limit on enumerated row selections (default: 4096)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--auto-symmetrize", cfg.auto_symmetrize,
               "Derive the diagonal and lower triangle from the upper");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  return maxtimes::cli::run(cfg, std::cout, std::cerr);
}
