#pragma once
#include <cstdint>
#include <vector>

#include "field.hpp"
#include "length.hpp"
#include "toric.hpp"

namespace ppcode {

// Number of degree-d monomials in m variables: C(d+m-1, m-1).
long long monomial_count(long long d, long long m);

// Exponent vectors of total degree d in m variables, lexicographically
// descending (the usual graded order read within one degree).
std::vector<std::vector<std::uint16_t>> degree_monomials(long long d, long long m,
                                                         long long max_count = 2'000'000);

struct GfMatrix {
  long long rows = 0, cols = 0;
  std::vector<Elem> a;
  Elem& at(long long r, long long c) { return a[r * cols + c]; }
  Elem at(long long r, long long c) const { return a[r * cols + c]; }
};

// In-place row reduction, returns the rank. Deterministic pivoting: first
// usable row of each column in order.
long long rank_gf(GfMatrix& m, const Field& f);

struct RankBudget {
  long long max_cols = 5'000;
  long long max_rows = 10'000;
};

// Degree-d evaluation matrix of X: one row per point, one column per
// degree-d monomial, entries are monomial values at the canonical
// representative (first coordinate 1).
GfMatrix evaluation_matrix(const ToricSet& x, long long d, const Field& f,
                           const RankBudget& budget = {});

// H_X(d) as the rank of the degree-d evaluation matrix.
long long hilbert_x_rank(const ToricSet& x, long long d, const Field& f,
                         const RankBudget& budget = {});

// H_X(d) by counting distinct residue vectors sum_k e_k b_k mod (q-1) over
// degree-d monomials; needs only the reduced matrix. Distinct multiplicative
// characters of the parameter torus are linearly independent, so the count
// equals the rank above.
long long hilbert_character(const ReducedMatrix& b, const Field& f, long long d,
                            long long max_count = 2'000'000);

// H_T(d) for the full torus in m coordinates: the number of residue tuples
// r in {0..q-2}^(m-1) with sum <= d, by inclusion-exclusion.
long long hilbert_torus(long long m, long long q, long long d);

enum class HilbertMethod : std::uint8_t { rank, character, stabilized };

struct HilbertProfile {
  long long m = 0, q = 0;
  long long x_size = 0;
  long long r_x = 0;                   // least d with H_X(d) = |X|
  std::vector<long long> values;       // H_X(0), ..., H_X(r_x)
  std::vector<HilbertMethod> methods;  // how each value was computed
  std::vector<long long> numerator;    // first differences, sum = |X|

  // Monotone extension: degrees past r_x sit at |X|.
  long long value_at(long long d) const;
};

// Walks degrees upward until H_X reaches |X|. Ranks are preferred; past the
// rank budget the character count takes over for sets that carry their
// reduced matrix, otherwise the budget error propagates. The walk is capped
// by the torus regularity (m-1)(q-2); H_X must strictly increase up to r_x.
HilbertProfile hilbert_profile(const ToricSet& x, const Field& f,
                               const RankBudget& budget = {});

// max(r_X, r_Hbar) must equal the torus regularity (m-1)(q-2), where r_Hbar
// is the least degree with Hbar = |Y|. hbar holds Hbar(0..(m-1)(q-2)).
CorollaryReport regularity_identity_check(const HilbertProfile& p, long long y_size,
                                          const std::vector<long long>& hbar);

}  // namespace ppcode
