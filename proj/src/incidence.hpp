#pragma once
#include <optional>
#include <vector>

#include "field.hpp"
#include "length.hpp"
#include "toric.hpp"

namespace ppcode {

// Edge system on a vertex set: every edge a nonempty set of vertices, no edge
// contained in another (Sperner). Vertices and edges keep input order; edge
// members are stored sorted, 0-based.
struct Clutter {
  long long vertices = 0;
  std::vector<std::vector<long long>> edges;
};

// Validates and normalizes 1-based input edges. Rejects out-of-range or
// repeated vertices within an edge, empty edges, duplicate edges, and
// Sperner violations.
Clutter make_clutter(long long vertices, const std::vector<std::vector<long long>>& edges);

// n x m 0/1 matrix: column i is the characteristic vector of edge i.
ExponentMatrix incidence_matrix(const Clutter& c);

struct GraphInfo {
  bool connected = false;
  bool bipartite = false;
};

// Requires every edge to have exactly two vertices. Isolated vertices make
// the graph disconnected.
GraphInfo classify_graph(const Clutter& c);

// Common column sum, when the matrix is uniform.
std::optional<long long> uniformity(const ExponentMatrix& a);

// Disconnected graphs over odd q satisfy the strict bound
// |X| < (q-1)^(n-1); violation is an internal error.
CorollaryReport disconnected_strict_check(const GraphInfo& g, const Field& f,
                                          const LengthCertificate& cert);

}  // namespace ppcode
