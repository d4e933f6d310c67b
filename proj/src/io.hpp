#pragma once
#include <optional>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "incidence.hpp"
#include "toric.hpp"

namespace ppcode {

// Structural part of an input file. Matrix inputs carry the exponent
// matrix; graph and clutter inputs carry the edge system.
struct ParsedInput {
  long long q = 0;
  std::string name;
  std::optional<ExponentMatrix> matrix;
  std::optional<Clutter> clutter;
};

// Strict JSON: {"q": ..., "matrix": [[...]]} for matrices,
// {"q": ..., "vertices": ..., "edges": [[...]]} for edge systems, plus an
// optional "name". Unknown keys, wrong types, and malformed JSON are input
// errors.
ParsedInput parse_input_text(const std::string& text, InputKind kind);
ParsedInput parse_input_file(const std::string& path, InputKind kind);

// Dispatches to the right analysis; the file's q lands in the config.
Analysis run_analysis(const ParsedInput& input, RunConfig cfg);

std::string render_table(const Analysis& a);
std::string render_csv(const Analysis& a);
std::string render_json(const Analysis& a);
// format: "table", "csv" or "json".
std::string render(const Analysis& a, const std::string& format);

// Reader for the CSV above, used to round-trip outputs.
struct CsvRow {
  long long d = 0, h_x = 0, h_t = 0, h_bar = 0, singleton = 0;
  std::optional<long long> delta_lower;
  std::optional<long long> delta_exact;
  std::string delta_exact_method;
};
std::vector<CsvRow> parse_csv(const std::string& text);

}  // namespace ppcode
