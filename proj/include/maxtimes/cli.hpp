#pragma once

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include "maxtimes/errors.hpp"
#include "maxtimes/io.hpp"
#include "maxtimes/radical.hpp"
#include "maxtimes/rating.hpp"

namespace maxtimes::cli {

enum class Format { kAuto, kCsv, kJson };
enum class Arithmetic { kRational, kFloat };
enum class Output { kText, kJson };

struct CliConfig {
  std::string input_path;
  Format format = Format::kAuto;
  Arithmetic arithmetic = Arithmetic::kRational;
  Output output = Output::kText;
  std::size_t selection_cap = 4096;
  bool auto_symmetrize = false;
};

namespace detail {

template <semiring_scalar S>
int run_typed(const CliConfig& cfg, const std::string& text, Format format,
              std::ostream& out, std::ostream& err) {
  io::ParsedMatrix<S> parsed;
  if (format == Format::kJson)
    parsed = io::parse_matrix_json<S>(text);
  else
    parsed = {io::parse_matrix_csv<S>(text), {}};
  ComparisonMatrix<S> cm =
      validate(std::move(parsed.matrix), std::move(parsed.labels),
               ValidateOptions{cfg.auto_symmetrize});
  RatingReport<S> report = rate(cm, cfg.selection_cap);
  out << (cfg.output == Output::kJson ? io::render_json(report)
                                      : io::render_text(report));
  if (report.truncated) {
    err << "warning: family enumeration truncated at cap "
        << cfg.selection_cap << "; reported families may be incomplete\n";
    return 2;
  }
  return 0;
}

inline bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace detail

// Rates the comparison matrix in cfg.input_path and writes the report to
// `out`. Returns 0 on success, 1 on input or validation errors, and 2 when
// a configured limit cut the run short (a truncated report is still
// written).
inline int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    std::ifstream in(cfg.input_path, std::ios::binary);
    if (!in) {
      err << "error: cannot open '" << cfg.input_path << "'\n";
      return 1;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();

    Format format = cfg.format;
    if (format == Format::kAuto) {
      if (detail::ends_with(cfg.input_path, ".csv"))
        format = Format::kCsv;
      else if (detail::ends_with(cfg.input_path, ".json"))
        format = Format::kJson;
      else {
        err << "error: cannot infer format of '" << cfg.input_path
            << "'; pass --format csv|json\n";
        return 1;
      }
    }
    if (cfg.arithmetic == Arithmetic::kFloat)
      return detail::run_typed<double>(cfg, text, format, out, err);
    return detail::run_typed<radical>(cfg, text, format, out, err);
  } catch (const limit_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace maxtimes::cli
