#pragma once
#include <optional>
#include <string>
#include <vector>

#include "field.hpp"
#include "toric.hpp"

namespace ppcode {

// Everything the counting theorem yields for |X|:
//   |X| = prod |Y_j| / |M|,
// where |Y_j| = (q-1)/gcd(q-1, column j of the reduced matrix) and M is the
// set of tuples (i_1..i_n), 1 <= i_j <= |Y_j|, annihilating every reduced row
// mod q-1.
struct LengthCertificate {
  long long q = 0, n = 0, m = 0;
  std::vector<long long> y_sizes;
  long long y_product = 0;
  long long m_size = 0;
  // True when |M| was derived as y_product / |X|_enumerated because direct
  // kernel enumeration was over budget.
  bool m_size_indirect = false;
  long long x_size = 0;
  // (q-1)^(n-1) / |X| when |X| divides that power.
  std::optional<long long> n_size;
};

std::vector<long long> y_sizes(const ReducedMatrix& b, const Field& f);

long long count_kernel_m(const ReducedMatrix& b, const Field& f, const EnumBudget& budget = {});

// The tuples of M themselves (1-based, i_j in [1, |Y_j|]). Only for small
// search spaces; the product of the |Y_j| must stay within kMaxKernelList.
std::vector<std::vector<long long>> kernel_elements(const ReducedMatrix& b, const Field& f);
inline constexpr long long kMaxKernelList = 1'000'000;

LengthCertificate length_theorem(const ReducedMatrix& b, const Field& f,
                                 const EnumBudget& budget = {});

// Fallback when the kernel walk is over budget but X itself was enumerated.
LengthCertificate length_certificate_indirect(const ReducedMatrix& b, const Field& f,
                                              long long x_enumerated);

enum class CheckStatus { pass, discrepant, skipped };

struct CorollaryReport {
  std::string name;
  CheckStatus status;
  std::string details;
};

// n = m criterion, checked literally in both directions: X = T_{m-1} iff
// |M| = 1 and every per-variable gcd is 1. Known to disagree with itself on
// some inputs (e.g. identity matrices); those come back as discrepant rather
// than as assertion failures.
CorollaryReport torus_criterion_check(const LengthCertificate& cert);

// Uniform matrices: |X| <= (q-1)^(n-1). Violation is an internal error.
CorollaryReport uniform_bound_check(const LengthCertificate& cert,
                                    std::optional<long long> alpha);

// Connected graphs with every |Y_j| = q-1 (no vertex lies in every edge):
// |M| = (q-1)^2 if bipartite, q-1 otherwise. Violation under that premise is
// an internal error; star-shaped graphs, where the premise fails (the 2-edge
// path over GF(5) has |M| = 4, not 16), come back as skipped.
CorollaryReport graph_kernel_check(const LengthCertificate& cert, bool is_graph,
                                   bool connected, bool bipartite);

}  // namespace ppcode
