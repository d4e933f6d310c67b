#pragma once
#include <optional>
#include <string>
#include <vector>

#include "field.hpp"
#include "hilbert.hpp"
#include "length.hpp"
#include "toric.hpp"

namespace ppcode {

// d = k(q-2) + l with k >= 0 and 1 <= l <= q-2 (unique for d >= 1).
struct TorusDecomposition {
  long long k = 0, l = 0;
};
TorusDecomposition torus_decompose(long long d, long long q);

// Minimum distance of the order-d code on the projective torus with n
// coordinates: (q-1)^(n-1) at d = 0, then (q-1)^(n-k-2)(q-1-l) until the
// torus regularity (n-1)(q-2), then 1.
long long torus_min_distance(long long n, long long q, long long d);

// Exact fraction with positive denominator, lowest terms.
struct Rational {
  long long num = 0;
  long long den = 1;
};
Rational make_rational(long long num, long long den);
long long floor_rational(const Rational& r);
long long ceil_rational(const Rational& r);

struct DistanceLowerBound {
  Rational exact;        // |X| * delta_T(alpha d) / (q-1)^(n-1)
  long long value = 1;   // max(1, floor(exact)) – the default convention
  long long value_ceil = 1;  // max(1, ceil(exact)) – alternative convention
};

// Lower bound for matrices with constant column sum alpha.
DistanceLowerBound lower_bound_delta(long long x_size, long long n, long long q,
                                     long long alpha, long long d);

// Closed forms for connected graphs (alpha = 2): delta_T(2d)/(q-1) when
// bipartite, delta_T(2d) otherwise; numerically identical to the general
// bound through |X|.
DistanceLowerBound graph_lower_bound(long long n, long long q, long long d,
                                     bool bipartite);

// |X| - H_X(d) + 1.
long long singleton_bound(long long x_size, long long h_xd);

// delta_X(d) <= delta_T(d) - delta_Y, valid for 0 <= d < (m-1)(q-2) and X a
// proper subset of the torus; delta_y defaults to the trivial 1. Not
// applicable cases return nothing.
std::optional<long long> upper_bound_delta(long long m, long long q, long long d,
                                           long long x_size, long long delta_y = 1);

// Row basis of the degree-d code: the echelon rows of the evaluation matrix.
GfMatrix generator_matrix(const ToricSet& x, long long d, const Field& f,
                          const RankBudget& budget = {});

long long vector_weight(const Elem* v, long long len);

struct ExactDistance {
  long long value = 0;          // minimum weight found
  bool exact = false;           // false: sampled upper bound only
  unsigned long long ops = 0;   // symbol operations spent
};

// Walks all q^k messages when q^k * length fits the budget, updating the
// codeword incrementally; otherwise falls back to a deterministic sample
// (fixed seed) and reports the result as inexact.
ExactDistance exact_min_distance(const GfMatrix& gen, const Field& f,
                                 unsigned long long budget = 100'000'000ULL,
                                 long long samples = 20'000);

// Exact minimum weight by information-set enumeration: disjoint-leaning
// pivot sets, combinations of growing support weight, and the standard
// lower-bound cutoff sum_s max(0, w+1-def_s). Throws past op_budget.
long long min_weight_bz(const GfMatrix& gen, const Field& f,
                        unsigned long long op_budget = 4'000'000'000ULL);

struct RegularityBound {
  Rational exact;
  long long ceiling = 0;  // smallest integer satisfying the bound
};

// r_X >= |X| (q-2)(n-1) / (alpha (q-1)^(n-1)) for constant column sum alpha.
RegularityBound regularity_lower_bound(long long x_size, long long n, long long q,
                                       long long alpha);

// Connected graphs: (q-2)(n-1)/(2(q-1)) bipartite, (q-2)(n-1)/2 otherwise.
RegularityBound graph_regularity_bound(long long n, long long q, bool bipartite);

// The profile's r_X must sit at or above the bound (a theorem for uniform
// matrices); violations are internal errors.
CorollaryReport regularity_bound_check(const HilbertProfile& p, const RegularityBound& b);

}  // namespace ppcode
