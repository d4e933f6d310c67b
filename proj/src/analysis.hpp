#pragma once
#include <optional>
#include <string>
#include <vector>

#include "distance.hpp"
#include "field.hpp"
#include "hilbert.hpp"
#include "incidence.hpp"
#include "length.hpp"
#include "toric.hpp"

namespace ppcode {

enum class InputKind { matrix, graph, clutter };

struct RunConfig {
  long long q = 0;
  InputKind kind = InputKind::matrix;
  // -1 picks the default (m-1)(q-2)-1, the last degree where the
  // torus-complement upper bound applies.
  long long d_max = -1;
  // 0 skips exact minimum distances; otherwise the message-enumeration
  // budget in codeword-symbol operations.
  unsigned long long exact_budget = 0;
  bool delta_ceil = false;  // report ceil(delta') instead of floor(delta')
  EnumBudget enum_budget;
  RankBudget rank_budget;
  std::vector<int> modulus;  // optional field modulus override (c0..ck)
};

struct DegreeRow {
  long long d = 0;
  long long h_x = 0;
  long long h_t = 0;
  long long h_bar = 0;
  HilbertMethod h_method = HilbertMethod::rank;
  // Present only for constant column sums.
  std::optional<long long> delta_lower;
  std::optional<Rational> delta_lower_exact;
  long long singleton = 0;
  // Present below the torus regularity when X is a proper subset.
  std::optional<long long> delta_upper;
  // Present when an exact budget was granted and the degree fit it.
  std::optional<long long> delta_exact;
  bool delta_exact_is_exact = false;
};

struct Analysis {
  RunConfig config;
  std::string name;
  long long n = 0, m = 0;
  std::optional<long long> alpha;
  std::optional<GraphInfo> graph;
  LengthCertificate cert;
  HilbertProfile profile;
  long long y_size = 0;
  long long r_t = 0;  // torus regularity (m-1)(q-2)
  std::vector<DegreeRow> rows;
  std::vector<CorollaryReport> checks;
};

// Full pipeline on an exponent matrix: field, point set, counting
// certificate (direct kernel walk, or indirect through |X| when the walk is
// over budget), Hilbert profile, degree table, validity checks.
Analysis analyze_matrix(const ExponentMatrix& a, const RunConfig& cfg,
                        const std::string& name = "");

// Same pipeline on an edge system through its incidence matrix; graph kind
// additionally classifies the graph and runs the graph checks.
Analysis analyze_clutter(const Clutter& c, const RunConfig& cfg,
                         const std::string& name = "");

}  // namespace ppcode
