#include "incidence.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "errors.hpp"
#include "util.hpp"

namespace ppcode {

Clutter make_clutter(long long vertices, const std::vector<std::vector<long long>>& edges) {
  if (vertices < 1) throw input_error("clutter needs at least one vertex");
  if (edges.empty()) throw input_error("clutter needs at least one edge");
  Clutter c;
  c.vertices = vertices;
  for (const auto& e : edges) {
    if (e.empty()) throw input_error("empty edge");
    std::vector<long long> s;
    for (long long v : e) {
      if (v < 1 || v > vertices)
        throw input_error("edge vertex " + std::to_string(v) + " out of range 1.." +
                          std::to_string(vertices));
      s.push_back(v - 1);
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw input_error("edge repeats a vertex");
    c.edges.push_back(std::move(s));
  }
  for (size_t i = 0; i < c.edges.size(); ++i)
    for (size_t j = 0; j < c.edges.size(); ++j) {
      if (i == j) continue;
      if (c.edges[i] == c.edges[j]) {
        if (i < j) throw input_error("duplicate edge");
        continue;
      }
      if (std::includes(c.edges[j].begin(), c.edges[j].end(), c.edges[i].begin(),
                        c.edges[i].end()))
        throw input_error("edge " + std::to_string(i + 1) + " is contained in edge " +
                          std::to_string(j + 1) + " (Sperner violation)");
    }
  return c;
}

ExponentMatrix incidence_matrix(const Clutter& c) {
  const long long n = c.vertices, m = (long long)c.edges.size();
  std::vector<long long> entries(n * m, 0);
  for (long long i = 0; i < m; ++i)
    for (long long v : c.edges[i]) entries[v * m + i] = 1;
  return ExponentMatrix(n, m, std::move(entries));
}

GraphInfo classify_graph(const Clutter& c) {
  for (const auto& e : c.edges)
    if (e.size() != 2) throw input_error("graph edges must have exactly two vertices");
  std::vector<std::vector<long long>> adj(c.vertices);
  for (const auto& e : c.edges) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  GraphInfo info;
  info.bipartite = true;
  std::vector<int> color(c.vertices, -1);
  long long seen = 0;
  long long components = 0;
  for (long long s = 0; s < c.vertices; ++s) {
    if (color[s] != -1) continue;
    ++components;
    color[s] = 0;
    ++seen;
    std::queue<long long> q;
    q.push(s);
    while (!q.empty()) {
      long long u = q.front();
      q.pop();
      for (long long v : adj[u]) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          ++seen;
          q.push(v);
        } else if (color[v] == color[u]) {
          info.bipartite = false;
        }
      }
    }
  }
  info.connected = components == 1 && seen == c.vertices;
  return info;
}

std::optional<long long> uniformity(const ExponentMatrix& a) { return a.uniform_alpha(); }

CorollaryReport disconnected_strict_check(const GraphInfo& g, const Field& f,
                                          const LengthCertificate& cert) {
  if (g.connected)
    return {"disconnected_graph_strict", CheckStatus::skipped, "graph is connected"};
  if (f.q() % 2 == 0)
    return {"disconnected_graph_strict", CheckStatus::skipped, "needs odd q"};
  long long tor = ipow_checked(f.q() - 1, cert.n - 1);
  if (cert.x_size >= tor)
    throw internal_error("disconnected strict bound violated: |X| = " +
                         std::to_string(cert.x_size) + " >= " + std::to_string(tor));
  return {"disconnected_graph_strict", CheckStatus::pass,
          "|X| = " + std::to_string(cert.x_size) + " < (q-1)^(n-1) = " + std::to_string(tor)};
}

}  // namespace ppcode
