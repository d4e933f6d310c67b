#include "analysis.hpp"

#include <string>

#include "errors.hpp"
#include "util.hpp"

namespace ppcode {
namespace {

Field build_field(const RunConfig& cfg) {
  if (cfg.modulus.empty()) return Field::build(cfg.q);
  return Field::build_with_modulus(cfg.q, cfg.modulus);
}

// The closed graph forms must match the general bounds once the connected
// |X| values are in play; a mismatch means the machinery disagrees with
// itself.
void cross_check_graph_forms(const Analysis& a, const Field& f) {
  if (!a.graph || !a.graph->connected) return;
  for (const auto& row : a.rows) {
    if (!row.delta_lower_exact) continue;
    DistanceLowerBound g = graph_lower_bound(a.n, f.q(), row.d, a.graph->bipartite);
    if (g.exact.num != row.delta_lower_exact->num ||
        g.exact.den != row.delta_lower_exact->den)
      throw internal_error("graph distance form disagrees with the general bound at d = " +
                           std::to_string(row.d));
  }
  RegularityBound gb = graph_regularity_bound(a.n, f.q(), a.graph->bipartite);
  RegularityBound ub = regularity_lower_bound(a.cert.x_size, a.n, f.q(), 2);
  if (gb.exact.num != ub.exact.num || gb.exact.den != ub.exact.den)
    throw internal_error("graph regularity form disagrees with the general bound");
}

Analysis analyze_common(const ExponentMatrix& a, const RunConfig& cfg,
                        const std::string& name, std::optional<GraphInfo> graph) {
  if (cfg.q < 3) throw input_error("analysis needs a prime power q >= 3");
  Field f = build_field(cfg);
  Analysis out;
  out.config = cfg;
  out.name = name;
  out.n = a.n();
  out.m = a.m();
  out.alpha = a.uniform_alpha();
  out.graph = graph;

  ReducedMatrix b = reduce_matrix(a, f);
  ToricSet x = enumerate_x(a, f, cfg.enum_budget);
  try {
    out.cert = length_theorem(b, f, cfg.enum_budget);
  } catch (const budget_error&) {
    out.cert = length_certificate_indirect(b, f, x.size());
  }
  if (out.cert.x_size != x.size())
    throw internal_error("counting certificate disagrees with enumeration: " +
                         std::to_string(out.cert.x_size) + " vs " +
                         std::to_string(x.size()));

  out.profile = hilbert_profile(x, f, cfg.rank_budget);
  out.y_size = ipow_checked(f.q() - 1, out.m - 1) - out.cert.x_size;
  out.r_t = (out.m - 1) * (f.q() - 2);

  long long d_max = cfg.d_max >= 0 ? cfg.d_max : out.r_t - 1;
  for (long long d = 1; d <= d_max; ++d) {
    DegreeRow row;
    row.d = d;
    row.h_x = out.profile.value_at(d);
    row.h_method = d <= out.profile.r_x ? out.profile.methods[d] : HilbertMethod::stabilized;
    row.h_t = hilbert_torus(out.m, f.q(), d);
    row.h_bar = row.h_t - row.h_x;
    row.singleton = singleton_bound(out.cert.x_size, row.h_x);
    if (out.alpha) {
      DistanceLowerBound lb = lower_bound_delta(out.cert.x_size, out.n, f.q(), *out.alpha, d);
      row.delta_lower_exact = lb.exact;
      row.delta_lower = cfg.delta_ceil ? lb.value_ceil : lb.value;
    }
    row.delta_upper = upper_bound_delta(out.m, f.q(), d, out.cert.x_size);
    if (cfg.exact_budget > 0) {
      try {
        GfMatrix gen = generator_matrix(x, d, f, cfg.rank_budget);
        ExactDistance e = exact_min_distance(gen, f, cfg.exact_budget);
        row.delta_exact = e.value;
        row.delta_exact_is_exact = e.exact;
      } catch (const budget_error&) {
        // Generator construction itself over budget: leave the gap visible.
      }
    }
    out.rows.push_back(std::move(row));
  }

  out.checks.push_back(torus_criterion_check(out.cert));
  out.checks.push_back(uniform_bound_check(out.cert, out.alpha));
  if (out.alpha) {
    out.checks.push_back(regularity_bound_check(
        out.profile, regularity_lower_bound(out.cert.x_size, out.n, f.q(), *out.alpha)));
  } else {
    out.checks.push_back(
        {"regularity_lower_bound", CheckStatus::skipped, "matrix is not uniform"});
  }
  {
    std::vector<long long> hbar;
    for (long long d = 0; d <= out.r_t; ++d)
      hbar.push_back(hilbert_torus(out.m, f.q(), d) - out.profile.value_at(d));
    out.checks.push_back(regularity_identity_check(out.profile, out.y_size, hbar));
  }
  if (graph) {
    out.checks.push_back(
        graph_kernel_check(out.cert, true, graph->connected, graph->bipartite));
    out.checks.push_back(disconnected_strict_check(*graph, f, out.cert));
    cross_check_graph_forms(out, f);
  } else {
    out.checks.push_back(
        {"connected_graph_kernel", CheckStatus::skipped, "input is not a graph"});
    out.checks.push_back(
        {"disconnected_graph_strict", CheckStatus::skipped, "input is not a graph"});
  }
  return out;
}

}  // namespace

Analysis analyze_matrix(const ExponentMatrix& a, const RunConfig& cfg,
                        const std::string& name) {
  return analyze_common(a, cfg, name, std::nullopt);
}

Analysis analyze_clutter(const Clutter& c, const RunConfig& cfg, const std::string& name) {
  ExponentMatrix a = incidence_matrix(c);
  std::optional<GraphInfo> info;
  if (cfg.kind == InputKind::graph) info = classify_graph(c);
  return analyze_common(a, cfg, name, info);
}

}  // namespace ppcode
