// Built-in worked examples with frozen expected values, used as a
// self-test battery: check_example runs the full pipeline and returns
// one message per mismatch (empty = pass).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "analysis.hpp"

namespace ppcode {

struct GoldenExample {
  std::string name;
  long long q = 0;
  InputKind kind = InputKind::matrix;
  // For graph/clutter kinds; ignored for plain matrices.
  long long vertices = 0;
  std::vector<std::vector<long long>> edges;
  // For matrix kind: row-major exponents.
  long long n = 0, m = 0;
  std::vector<long long> entries;

  // Frozen expectations.
  std::vector<long long> y_sizes;
  long long m_size = 0;
  long long x_size = 0;
  std::optional<long long> n_size;
  long long r_x = 0;
  // Per degree d = 1..r_x.
  std::vector<long long> h_x, h_t, h_bar, delta_lower, singleton;
};

const std::vector<GoldenExample>& builtin_examples();

// Runs the analysis pipeline on the example and compares every frozen
// value; returns human-readable mismatch descriptions.
std::vector<std::string> check_example(const GoldenExample& ex);

}  // namespace ppcode
