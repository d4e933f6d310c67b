#include "length.hpp"

#include <numeric>

#include "errors.hpp"
#include "util.hpp"

namespace ppcode {
namespace {

unsigned long long saturating_product(const std::vector<long long>& v, long long factor) {
  unsigned long long c = (unsigned long long)factor;
  for (long long s : v) {
    if (c > (unsigned long long)1e18 / (unsigned long long)s) return ~0ULL;
    c *= (unsigned long long)s;
  }
  return c;
}

// Walk all tuples (i_1..i_n), i_j in [1, y_j], keeping partial congruence
// sums per level; call sink(tuple) for members of M. sink == nullptr counts only.
long long kernel_walk(const ReducedMatrix& b, const Field& f,
                      const std::vector<long long>& y,
                      std::vector<std::vector<long long>>* sink) {
  const long long qm1 = f.q() - 1;
  const long long n = b.n(), rows = b.rows();
  std::vector<long long> i(n, 1);
  std::vector<long long> partial((n + 1) * std::max<long long>(rows, 1), 0);
  long long count = 0;
  long long level = 0;
  while (true) {
    while (level < n) {
      const long long* prev = partial.data() + level * rows;
      long long* cur = partial.data() + (level + 1) * rows;
      for (long long r = 0; r < rows; ++r)
        cur[r] = (prev[r] + i[level] * b.entry(r, level)) % qm1;
      ++level;
    }
    const long long* leaf = partial.data() + n * rows;
    bool ok = true;
    for (long long r = 0; r < rows; ++r)
      if (leaf[r] != 0) {
        ok = false;
        break;
      }
    if (ok) {
      ++count;
      if (sink) sink->push_back(i);
    }
    long long j = n - 1;
    while (j >= 0 && i[j] == y[j]) {
      i[j] = 1;
      --j;
    }
    if (j < 0) break;
    ++i[j];
    level = j;
  }
  return count;
}

}  // namespace

std::vector<long long> y_sizes(const ReducedMatrix& b, const Field& f) {
  const long long qm1 = f.q() - 1;
  std::vector<long long> y(b.n());
  for (long long j = 0; j < b.n(); ++j) {
    long long g = qm1;  // gcd over the empty column is q-1, so |Y_j| = 1
    for (long long r = 0; r < b.rows(); ++r) g = std::gcd(g, (long long)b.entry(r, j));
    y[j] = qm1 / g;
  }
  return y;
}

long long count_kernel_m(const ReducedMatrix& b, const Field& f, const EnumBudget& budget) {
  std::vector<long long> y = y_sizes(b, f);
  if (saturating_product(y, b.m()) > budget.coord_evals)
    throw budget_error("kernel enumeration over the " + std::to_string(b.n()) +
                       "-fold tuple box is over budget");
  return kernel_walk(b, f, y, nullptr);
}

std::vector<std::vector<long long>> kernel_elements(const ReducedMatrix& b, const Field& f) {
  std::vector<long long> y = y_sizes(b, f);
  if (saturating_product(y, 1) > (unsigned long long)kMaxKernelList)
    throw budget_error("kernel element listing capped at " + std::to_string(kMaxKernelList) +
                       " tuples");
  std::vector<std::vector<long long>> out;
  kernel_walk(b, f, y, &out);
  return out;
}

LengthCertificate length_theorem(const ReducedMatrix& b, const Field& f,
                                 const EnumBudget& budget) {
  LengthCertificate cert;
  cert.q = f.q();
  cert.n = b.n();
  cert.m = b.m();
  cert.y_sizes = y_sizes(b, f);
  unsigned long long prod = saturating_product(cert.y_sizes, 1);
  if (prod > (unsigned long long)4e18)
    throw budget_error("product of the |Y_j| exceeds 64-bit range");
  cert.y_product = (long long)prod;
  cert.m_size = count_kernel_m(b, f, budget);
  if (cert.y_product % cert.m_size != 0)
    throw internal_error("|M| does not divide the product of the |Y_j|");
  cert.x_size = cert.y_product / cert.m_size;
  long long tor = ipow_checked(f.q() - 1, cert.n - 1);
  if (tor % cert.x_size == 0) cert.n_size = tor / cert.x_size;
  return cert;
}

LengthCertificate length_certificate_indirect(const ReducedMatrix& b, const Field& f,
                                              long long x_enumerated) {
  LengthCertificate cert;
  cert.q = f.q();
  cert.n = b.n();
  cert.m = b.m();
  cert.y_sizes = y_sizes(b, f);
  unsigned long long prod = saturating_product(cert.y_sizes, 1);
  if (prod > (unsigned long long)4e18)
    throw budget_error("product of the |Y_j| exceeds 64-bit range");
  cert.y_product = (long long)prod;
  if (cert.y_product % x_enumerated != 0)
    throw internal_error("enumerated |X| does not divide the product of the |Y_j|");
  cert.m_size = cert.y_product / x_enumerated;
  cert.m_size_indirect = true;
  cert.x_size = x_enumerated;
  long long tor = ipow_checked(f.q() - 1, cert.n - 1);
  if (tor % cert.x_size == 0) cert.n_size = tor / cert.x_size;
  return cert;
}

CorollaryReport torus_criterion_check(const LengthCertificate& cert) {
  if (cert.n != cert.m)
    return {"torus_criterion", CheckStatus::skipped, "needs n = m"};
  const long long qm1 = cert.q - 1;
  bool gcds_one = true;
  for (long long s : cert.y_sizes)
    if (s != qm1) gcds_one = false;
  const bool rhs = cert.m_size == 1 && gcds_one;
  const bool lhs = cert.x_size == ipow_checked(qm1, cert.m - 1);
  std::string details = "|X| = " + std::to_string(cert.x_size) + ", torus order = " +
                        std::to_string(ipow_checked(qm1, cert.m - 1)) + ", |M| = " +
                        std::to_string(cert.m_size) + ", all gcds 1: " +
                        (gcds_one ? "yes" : "no");
  return {"torus_criterion", lhs == rhs ? CheckStatus::pass : CheckStatus::discrepant,
          details};
}

CorollaryReport uniform_bound_check(const LengthCertificate& cert,
                                    std::optional<long long> alpha) {
  if (!alpha) return {"uniform_length_bound", CheckStatus::skipped, "matrix is not uniform"};
  long long tor = ipow_checked(cert.q - 1, cert.n - 1);
  if (cert.x_size > tor)
    throw internal_error("uniform bound violated: |X| = " + std::to_string(cert.x_size) +
                         " > " + std::to_string(tor));
  return {"uniform_length_bound", CheckStatus::pass,
          "|X| = " + std::to_string(cert.x_size) + " <= (q-1)^(n-1) = " + std::to_string(tor)};
}

CorollaryReport graph_kernel_check(const LengthCertificate& cert, bool is_graph,
                                   bool connected, bool bipartite) {
  if (!is_graph)
    return {"connected_graph_kernel", CheckStatus::skipped, "input is not a graph"};
  if (!connected)
    return {"connected_graph_kernel", CheckStatus::skipped, "graph is not connected"};
  const long long qm1 = cert.q - 1;
  for (long long s : cert.y_sizes)
    if (s != qm1)
      // Some vertex sits in every edge (star-shaped graphs, including the
      // 2-edge path): the factor set of that vertex collapses and the fixed
      // kernel sizes below no longer apply. |X| itself is still certified.
      return {"connected_graph_kernel", CheckStatus::skipped,
              "some |Y_j| < q-1 (a vertex lies in every edge), |M| = " +
                  std::to_string(cert.m_size)};
  long long expected = bipartite ? qm1 * qm1 : qm1;
  if (cert.m_size != expected)
    throw internal_error("connected-graph kernel rule violated: |M| = " +
                         std::to_string(cert.m_size) + ", expected " +
                         std::to_string(expected));
  return {"connected_graph_kernel", CheckStatus::pass,
          std::string("graph is ") + (bipartite ? "bipartite" : "non-bipartite") +
              ", |M| = " + std::to_string(expected)};
}

}  // namespace ppcode
