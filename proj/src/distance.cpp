#include "distance.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "errors.hpp"
#include "util.hpp"

namespace ppcode {

TorusDecomposition torus_decompose(long long d, long long q) {
  if (d < 1) throw input_error("torus decomposition needs d >= 1");
  if (q < 3) throw input_error("torus decomposition needs q >= 3");
  TorusDecomposition t;
  t.l = d % (q - 2);
  if (t.l == 0) {
    t.l = q - 2;
    t.k = d / (q - 2) - 1;
  } else {
    t.k = d / (q - 2);
  }
  return t;
}

long long torus_min_distance(long long n, long long q, long long d) {
  if (d < 0) throw input_error("torus distance needs d >= 0");
  const long long s = n - 1;
  if (d == 0) return ipow_checked(q - 1, s);
  if (d >= s * (q - 2)) return 1;
  TorusDecomposition t = torus_decompose(d, q);
  return ipow_checked(q - 1, s - t.k - 1) * (q - 1 - t.l);
}

Rational make_rational(long long num, long long den) {
  if (den == 0) throw internal_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

long long floor_rational(const Rational& r) {
  long long q = r.num / r.den;
  if (r.num % r.den != 0 && r.num < 0) --q;
  return q;
}

long long ceil_rational(const Rational& r) {
  long long q = r.num / r.den;
  if (r.num % r.den != 0 && r.num > 0) ++q;
  return q;
}

namespace {

Rational scaled_torus_bound(long long numerator_factor, long long n, long long q,
                            long long degree) {
  const long long dt = torus_min_distance(n, q, degree);
  __int128 num = (__int128)numerator_factor * dt;
  if (num > (__int128)4e18) throw internal_error("distance bound exceeds 64-bit range");
  return make_rational((long long)num, ipow_checked(q - 1, n - 1));
}

DistanceLowerBound finish_bound(const Rational& exact) {
  DistanceLowerBound b;
  b.exact = exact;
  b.value = std::max<long long>(1, floor_rational(exact));
  b.value_ceil = std::max<long long>(1, ceil_rational(exact));
  return b;
}

}  // namespace

DistanceLowerBound lower_bound_delta(long long x_size, long long n, long long q,
                                     long long alpha, long long d) {
  if (alpha < 1) throw input_error("lower bound needs a constant column sum alpha >= 1");
  if (d < 0) throw input_error("lower bound needs d >= 0");
  return finish_bound(scaled_torus_bound(x_size, n, q, alpha * d));
}

DistanceLowerBound graph_lower_bound(long long n, long long q, long long d,
                                     bool bipartite) {
  const long long dt = torus_min_distance(n, q, 2 * d);
  Rational exact = bipartite ? make_rational(dt, q - 1) : make_rational(dt, 1);
  return finish_bound(exact);
}

long long singleton_bound(long long x_size, long long h_xd) {
  return x_size - h_xd + 1;
}

std::optional<long long> upper_bound_delta(long long m, long long q, long long d,
                                           long long x_size, long long delta_y) {
  if (d < 0 || d >= (m - 1) * (q - 2)) return std::nullopt;
  if (x_size >= ipow_checked(q - 1, m - 1)) return std::nullopt;  // X fills the torus
  return torus_min_distance(m, q, d) - delta_y;
}

GfMatrix generator_matrix(const ToricSet& x, long long d, const Field& f,
                          const RankBudget& budget) {
  // Codewords are indexed by points, so the code is spanned by the
  // monomial rows of the transposed evaluation matrix.
  GfMatrix ev = evaluation_matrix(x, d, f, budget);
  GfMatrix tr;
  tr.rows = ev.cols;
  tr.cols = ev.rows;
  tr.a.resize(tr.rows * tr.cols);
  for (long long r = 0; r < ev.rows; ++r)
    for (long long c = 0; c < ev.cols; ++c) tr.at(c, r) = ev.at(r, c);
  const long long rank = rank_gf(tr, f);
  GfMatrix gen;
  gen.rows = rank;
  gen.cols = tr.cols;
  gen.a.assign(tr.a.begin(), tr.a.begin() + rank * tr.cols);
  return gen;
}

long long vector_weight(const Elem* v, long long len) {
  long long w = 0;
  for (long long i = 0; i < len; ++i)
    if (v[i] != 0) ++w;
  return w;
}

ExactDistance exact_min_distance(const GfMatrix& gen, const Field& f,
                                 unsigned long long budget, long long samples) {
  if (gen.rows < 1) throw input_error("minimum distance needs a nonzero code");
  const long long k = gen.rows, len = gen.cols, q = f.q();
  ExactDistance out;
  out.value = len + 1;
  // Generator rows are codewords: free upper bounds.
  for (long long r = 0; r < k; ++r)
    out.value = std::min(out.value, vector_weight(gen.a.data() + r * len, len));

  unsigned long long messages = 1;
  bool fits = true;
  for (long long i = 0; i < k; ++i) {
    if (messages > budget / (unsigned long long)q) {
      fits = false;
      break;
    }
    messages *= (unsigned long long)q;
  }
  if (fits && messages > budget / (unsigned long long)len) fits = false;

  const Elem* mul = f.mul_table();
  const Elem* add = f.add_table();

  if (fits) {
    // Odometer over all messages; each digit change folds one scaled row
    // into the running codeword.
    std::vector<Elem> msg(k, 0);
    std::vector<Elem> cw(len, 0);
    while (true) {
      long long j = k - 1;
      while (j >= 0 && msg[j] == q - 1) {
        // Roll the digit back to 0: add (0 - old) times the row.
        const Elem delta = f.sub(0, msg[j]);
        const Elem* grow = gen.a.data() + j * len;
        const Elem* dmul = mul + (long long)delta * q;
        for (long long c = 0; c < len; ++c) cw[c] = add[(long long)cw[c] * q + dmul[grow[c]]];
        msg[j] = 0;
        --j;
        out.ops += len;
      }
      if (j < 0) break;
      const Elem delta = f.sub(Elem(msg[j] + 1), msg[j]);
      const Elem* grow = gen.a.data() + j * len;
      const Elem* dmul = mul + (long long)delta * q;
      for (long long c = 0; c < len; ++c) cw[c] = add[(long long)cw[c] * q + dmul[grow[c]]];
      msg[j] = Elem(msg[j] + 1);
      out.ops += len;
      long long w = vector_weight(cw.data(), len);
      out.ops += len;
      if (w < out.value) out.value = w;
    }
    out.exact = true;
    return out;
  }

  // Deterministic random sample: an upper bound only.
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ ((unsigned long long)k << 32) ^
                      (unsigned long long)len);
  std::vector<Elem> cw(len);
  for (long long s = 0; s < samples; ++s) {
    std::fill(cw.begin(), cw.end(), 0);
    bool nonzero = false;
    for (long long j = 0; j < k; ++j) {
      const Elem v = Elem(rng() % (unsigned long long)q);
      if (v == 0) continue;
      nonzero = true;
      const Elem* grow = gen.a.data() + j * len;
      const Elem* vmul = mul + (long long)v * q;
      for (long long c = 0; c < len; ++c) cw[c] = add[(long long)cw[c] * q + vmul[grow[c]]];
      out.ops += len;
    }
    if (!nonzero) continue;
    long long w = vector_weight(cw.data(), len);
    out.ops += len;
    if (w < out.value) out.value = w;
  }
  out.exact = false;
  return out;
}

namespace {

struct InfoSet {
  GfMatrix gen;                   // reduced so the pivot columns carry identity
  std::vector<long long> pivots;  // pivot column per row
  long long deficiency = 0;       // pivots drawn from already-used columns
};

// Gauss-Jordan on a copy of gen, preferring fresh columns as pivots.
InfoSet reduce_preferring(const GfMatrix& gen, const Field& f,
                          const std::vector<bool>& used) {
  InfoSet s;
  s.gen = gen;
  const long long k = gen.rows, len = gen.cols, q = f.q();
  const Elem* mul = f.mul_table();
  const Elem* add = f.add_table();
  std::vector<long long> order;
  order.reserve(len);
  for (long long c = 0; c < len; ++c)
    if (!used[c]) order.push_back(c);
  for (long long c = 0; c < len; ++c)
    if (used[c]) order.push_back(c);

  std::vector<Elem> npiv(len);
  long long row = 0;
  for (long long oi = 0; oi < len && row < k; ++oi) {
    const long long c = order[oi];
    long long p = -1;
    for (long long r = row; r < k; ++r)
      if (s.gen.at(r, c) != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    Elem* prow = s.gen.a.data() + row * len;
    if (p != row) std::swap_ranges(prow, prow + len, s.gen.a.data() + p * len);
    const Elem inv = f.inv(prow[c]);
    for (long long cc = 0; cc < len; ++cc) {
      prow[cc] = mul[(long long)inv * q + prow[cc]];
      npiv[cc] = f.neg(prow[cc]);
    }
    for (long long r = 0; r < k; ++r) {
      if (r == row) continue;
      Elem* rr = s.gen.a.data() + r * len;
      const Elem g = rr[c];
      if (g == 0) continue;
      const Elem* gmul = mul + (long long)g * q;
      for (long long cc = 0; cc < len; ++cc)
        rr[cc] = add[(long long)rr[cc] * q + gmul[npiv[cc]]];
    }
    s.pivots.push_back(c);
    if (used[c]) ++s.deficiency;
    ++row;
  }
  if (row < k) throw internal_error("generator rows are not independent");
  return s;
}

}  // namespace

long long min_weight_bz(const GfMatrix& gen, const Field& f,
                        unsigned long long op_budget) {
  if (gen.rows < 1) throw input_error("minimum weight needs a nonzero code");
  const long long k = gen.rows, len = gen.cols, q = f.q();
  const Elem* mul = f.mul_table();
  const Elem* add = f.add_table();

  std::vector<InfoSet> sets;
  std::vector<bool> used(len, false);
  while (true) {
    InfoSet s = reduce_preferring(gen, f, used);
    if (s.deficiency == k) break;  // nothing fresh left to pin down
    for (long long c : s.pivots)
      used[c] = true;
    sets.push_back(std::move(s));
  }

  long long best = len + 1;
  for (const auto& s : sets)
    for (long long r = 0; r < k; ++r)
      best = std::min(best, vector_weight(s.gen.a.data() + r * len, len));

  unsigned long long ops = 0;
  auto charge = [&](unsigned long long c) {
    ops += c;
    if (ops > op_budget)
      throw budget_error("information-set enumeration exceeded " +
                         std::to_string(op_budget) + " symbol operations");
  };

  // Partial codeword per DFS depth; support positions chosen increasingly.
  std::vector<std::vector<Elem>> stack;
  for (long long w = 1; w <= k; ++w) {
    // All supports of weight < w are done for every set, so every unseen
    // codeword weighs at least this much.
    long long lb = 0;
    for (const auto& s : sets) lb += std::max<long long>(0, w - s.deficiency);
    if (lb >= best) return best;

    stack.assign(w + 1, std::vector<Elem>(len, 0));
    for (const auto& s : sets) {
      // DFS over supports i_0 < ... < i_{w-1} and values; the first value is
      // pinned to 1 (weights are scalar-invariant).
      auto rec = [&](auto&& self, long long depth, long long from) -> void {
        for (long long i = from; i <= k - (w - depth); ++i) {
          const Elem* grow = s.gen.a.data() + i * len;
          const Elem* prev = stack[depth].data();
          Elem* cur = stack[depth + 1].data();
          for (long long v = 1; v < (depth == 0 ? 2 : q); ++v) {
            const Elem* vmul = mul + (long long)v * q;
            for (long long c = 0; c < len; ++c)
              cur[c] = add[(long long)prev[c] * q + vmul[grow[c]]];
            charge(len);
            if (depth + 1 == w) {
              long long wt = vector_weight(cur, len);
              charge(len);
              if (wt < best) best = wt;
            } else {
              self(self, depth + 1, i + 1);
            }
          }
        }
      };
      rec(rec, 0, 0);
    }
  }
  return best;
}

RegularityBound regularity_lower_bound(long long x_size, long long n, long long q,
                                       long long alpha) {
  if (alpha < 1) throw input_error("regularity bound needs alpha >= 1");
  __int128 num = (__int128)x_size * (q - 2) * (n - 1);
  if (num > (__int128)4e18) throw internal_error("regularity bound exceeds 64-bit range");
  __int128 den = (__int128)alpha * ipow_checked(q - 1, n - 1);
  if (den > (__int128)4e18) throw internal_error("regularity bound exceeds 64-bit range");
  RegularityBound b;
  b.exact = make_rational((long long)num, (long long)den);
  b.ceiling = ceil_rational(b.exact);
  return b;
}

RegularityBound graph_regularity_bound(long long n, long long q, bool bipartite) {
  RegularityBound b;
  b.exact = bipartite ? make_rational((q - 2) * (n - 1), 2 * (q - 1))
                      : make_rational((q - 2) * (n - 1), 2);
  b.ceiling = ceil_rational(b.exact);
  return b;
}

CorollaryReport regularity_bound_check(const HilbertProfile& p, const RegularityBound& b) {
  // r_x >= num/den  <=>  r_x * den >= num.
  if ((__int128)p.r_x * b.exact.den < (__int128)b.exact.num)
    throw internal_error("regularity bound violated: r_X = " + std::to_string(p.r_x) +
                         " < " + std::to_string(b.exact.num) + "/" +
                         std::to_string(b.exact.den));
  return {"regularity_lower_bound", CheckStatus::pass,
          "r_X = " + std::to_string(p.r_x) + " >= " + std::to_string(b.exact.num) + "/" +
              std::to_string(b.exact.den)};
}

}  // namespace ppcode
