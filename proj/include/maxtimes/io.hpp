#pragma once

#include <json.hpp>

#include <array>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "maxtimes/errors.hpp"
#include "maxtimes/matrix.hpp"
#include "maxtimes/rating.hpp"
#include "maxtimes/scalar.hpp"

namespace maxtimes::io {

template <semiring_scalar S>
struct ParsedMatrix {
  Matrix<S> matrix;
  std::vector<std::string> labels;
};

// CSV: one matrix row per line, comma-separated values, each an integer
// ("3"), a fraction ("1/3"), or a decimal ("0.5"). Rows must have equal
// length. Errors carry 1-based line and field positions.
template <semiring_scalar S>
Matrix<S> parse_matrix_csv(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    lines.push_back(text.substr(pos, eol - pos));
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  for (auto& line : lines)
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw parse_error("empty input");

  std::vector<S> entries;
  std::size_t n_cols = 0;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::string_view line = lines[li];
    const std::size_t line_no = li + 1;
    if (line.empty())
      throw parse_error("line " + std::to_string(line_no) + ": blank line",
                        line_no);
    std::size_t field_no = 0, start = 0, row_len = 0;
    while (start <= line.size()) {
      const std::size_t comma = std::min(line.find(',', start), line.size());
      std::string_view tok = line.substr(start, comma - start);
      ++field_no;
      try {
        entries.push_back(scalar_traits<S>::parse(tok));
      } catch (const invalid_input_error& e) {
        throw parse_error("line " + std::to_string(line_no) + ", field " +
                              std::to_string(field_no) + ": " + e.what(),
                          line_no, field_no);
      }
      ++row_len;
      if (comma == line.size()) break;
      start = comma + 1;
    }
    if (n_cols == 0) n_cols = row_len;
    if (row_len != n_cols)
      throw parse_error("line " + std::to_string(line_no) + ": expected " +
                            std::to_string(n_cols) + " values, got " +
                            std::to_string(row_len),
                        line_no);
  }
  return Matrix<S>(lines.size(), n_cols, std::move(entries));
}

namespace detail {

template <semiring_scalar S>
S parse_json_value(const nlohmann::json& v, const std::string& path) {
  try {
    if (v.is_string()) return scalar_traits<S>::parse(v.get<std::string>());
    // Floats go through their shortest decimal form, so 0.1 means 1/10 in
    // the exact realizations rather than the nearest binary double.
    if (v.is_number()) return scalar_traits<S>::parse(v.dump());
  } catch (const invalid_input_error& e) {
    throw parse_error(path + ": " + e.what());
  }
  throw parse_error(path + ": expected a number or fraction string");
}

}  // namespace detail

// JSON: {"matrix": [[...], ...], "labels": ["a", ...]} with labels optional.
// Matrix values may be numbers or fraction strings. Errors name the JSON
// path of the offending element.
template <semiring_scalar S>
ParsedMatrix<S> parse_matrix_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw parse_error("$: expected an object");
  if (!j.contains("matrix")) throw parse_error("$.matrix: missing");
  const nlohmann::json& m = j["matrix"];
  if (!m.is_array() || m.empty())
    throw parse_error("$.matrix: expected a non-empty array of rows");
  std::vector<S> entries;
  std::size_t n_cols = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const nlohmann::json& row = m[i];
    const std::string row_path = "$.matrix[" + std::to_string(i) + "]";
    if (!row.is_array() || row.empty())
      throw parse_error(row_path + ": expected a non-empty array");
    if (n_cols == 0) n_cols = row.size();
    if (row.size() != n_cols)
      throw parse_error(row_path + ": expected " + std::to_string(n_cols) +
                        " values, got " + std::to_string(row.size()));
    for (std::size_t k = 0; k < row.size(); ++k)
      entries.push_back(detail::parse_json_value<S>(
          row[k], row_path + "[" + std::to_string(k) + "]"));
  }
  ParsedMatrix<S> out{Matrix<S>(m.size(), n_cols, std::move(entries)), {}};
  if (j.contains("labels")) {
    const nlohmann::json& labels = j["labels"];
    if (!labels.is_array())
      throw parse_error("$.labels: expected an array of strings");
    if (labels.size() != m.size())
      throw parse_error("$.labels: expected " + std::to_string(m.size()) +
                        " entries, got " + std::to_string(labels.size()));
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (!labels[i].is_string())
        throw parse_error("$.labels[" + std::to_string(i) +
                          "]: expected a string");
      out.labels.push_back(labels[i].get<std::string>());
    }
  }
  return out;
}

namespace detail {

template <semiring_scalar S>
nlohmann::json vector_strings(const Vector<S>& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t i = 0; i < v.dim(); ++i)
    arr.push_back(scalar_traits<S>::str(v[i]));
  return arr;
}

inline nlohmann::json ranking_json(const Ranking& r) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& group : r) {
    nlohmann::json g = nlohmann::json::array();
    for (std::size_t i : group) g.push_back(i + 1);
    arr.push_back(std::move(g));
  }
  return arr;
}

inline std::string alternative_name(const std::vector<std::string>& labels,
                                    std::size_t i) {
  return labels.empty() ? std::to_string(i + 1) : labels[i];
}

inline std::string ranking_text(const Ranking& r,
                                const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t g = 0; g < r.size(); ++g) {
    if (g) out += " > ";
    for (std::size_t t = 0; t < r[g].size(); ++t) {
      if (t) out += " = ";
      out += alternative_name(labels, r[g][t]);
    }
  }
  return out;
}

}  // namespace detail

// Deterministic JSON report: keys sorted, all numeric values rendered as
// strings (exact fractions whenever the value is rational), rankings as
// groups of 1-based indices tied groups first-to-last.
template <semiring_scalar S>
std::string render_json(const RatingReport<S>& report) {
  nlohmann::json j;
  j["spectral_radius"] = scalar_traits<S>::str(report.family.spectral_radius);
  nlohmann::json gens = nlohmann::json::array();
  for (std::size_t c = 0; c < report.family.generator.cols(); ++c)
    gens.push_back(
        detail::vector_strings(column(report.family.generator, c)));
  j["generators"] = std::move(gens);
  j["least_differentiating"] = {
      {"scores", detail::vector_strings(report.least_diff)},
      {"contrast", scalar_traits<S>::str(report.least_contrast)},
      {"ranking", detail::ranking_json(report.least_ranking)}};
  j["most_differentiating"] = {
      {"scores", detail::vector_strings(report.most_diff)},
      {"contrast", scalar_traits<S>::str(report.most_contrast)},
      {"ranking", detail::ranking_json(report.most_ranking)}};
  j["consistent"] = report.consistent;
  j["truncated"] = report.truncated;
  return j.dump(2) + "\n";
}

// Human-readable report with one aligned row per alternative.
template <semiring_scalar S>
std::string render_text(const RatingReport<S>& report) {
  const std::size_t n = report.family.alternatives();
  std::ostringstream out;
  out << "alternatives:     " << n << "\n";
  out << "spectral radius:  "
      << scalar_traits<S>::str(report.family.spectral_radius) << "\n";
  out << "consistent:       " << (report.consistent ? "yes" : "no") << "\n";
  out << "score generators: " << report.family.generators() << "\n";
  if (report.truncated) out << "truncated:        yes\n";
  out << "least contrast:   " << scalar_traits<S>::str(report.least_contrast)
      << "  (" << detail::ranking_text(report.least_ranking, report.labels)
      << ")\n";
  out << "most contrast:    " << scalar_traits<S>::str(report.most_contrast)
      << "  (" << detail::ranking_text(report.most_ranking, report.labels)
      << ")\n\n";

  std::vector<std::array<std::string, 3>> rows;
  rows.push_back({"alternative", "least", "most"});
  for (std::size_t i = 0; i < n; ++i)
    rows.push_back({detail::alternative_name(report.labels, i),
                    scalar_traits<S>::str(report.least_diff[i]),
                    scalar_traits<S>::str(report.most_diff[i])});
  std::array<std::size_t, 3> width{0, 0, 0};
  for (const auto& r : rows)
    for (std::size_t c = 0; c < 3; ++c)
      width[c] = std::max(width[c], r[c].size());
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < 3; ++c) {
      out << r[c];
      if (c + 1 < 3)
        out << std::string(width[c] - r[c].size() + 2, ' ');
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace maxtimes::io
