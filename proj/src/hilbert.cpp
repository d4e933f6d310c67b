#include "hilbert.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "errors.hpp"
#include "util.hpp"

namespace ppcode {
namespace {

// Sort a flat tuple buffer lexicographically and count distinct tuples.
long long count_distinct(std::vector<std::uint16_t>& flat, long long stride,
                         long long count) {
  if (stride == 0) return count > 0 ? 1 : 0;
  std::vector<std::uint32_t> perm(count);
  std::iota(perm.begin(), perm.end(), 0);
  const std::uint16_t* base = flat.data();
  std::sort(perm.begin(), perm.end(), [&](std::uint32_t x, std::uint32_t y) {
    return std::lexicographical_compare(base + (long long)x * stride,
                                        base + (long long)x * stride + stride,
                                        base + (long long)y * stride,
                                        base + (long long)y * stride + stride);
  });
  long long distinct = count > 0 ? 1 : 0;
  for (long long i = 1; i < count; ++i)
    if (!std::equal(base + (long long)perm[i - 1] * stride,
                    base + (long long)perm[i - 1] * stride + stride,
                    base + (long long)perm[i] * stride))
      ++distinct;
  return distinct;
}

}  // namespace

long long monomial_count(long long d, long long m) {
  if (d < 0) return 0;
  return binomial_ll(d + m - 1, m - 1);
}

std::vector<std::vector<std::uint16_t>> degree_monomials(long long d, long long m,
                                                         long long max_count) {
  if (d < 0 || m < 1) throw input_error("degree monomials need d >= 0 and m >= 1");
  if (monomial_count(d, m) > max_count)
    throw budget_error("degree " + std::to_string(d) + " has " +
                       std::to_string(monomial_count(d, m)) + " monomials, over cap " +
                       std::to_string(max_count));
  std::vector<std::vector<std::uint16_t>> out;
  out.reserve(monomial_count(d, m));
  std::vector<std::uint16_t> e(m, 0);
  // Descending-lex walk: position j takes the largest unplaced share first.
  auto rec = [&](auto&& self, long long pos, long long left) -> void {
    if (pos == m - 1) {
      e[pos] = std::uint16_t(left);
      out.push_back(e);
      return;
    }
    for (long long v = left; v >= 0; --v) {
      e[pos] = std::uint16_t(v);
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, d);
  return out;
}

long long rank_gf(GfMatrix& m, const Field& f) {
  const Elem* mul = f.mul_table();
  const Elem* add = f.add_table();
  const long long q = f.q();
  long long rank = 0;
  std::vector<Elem> npiv(m.cols);
  for (long long c = 0; c < m.cols && rank < m.rows; ++c) {
    long long p = -1;
    for (long long r = rank; r < m.rows; ++r)
      if (m.at(r, c) != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    Elem* prow = m.a.data() + rank * m.cols;
    if (p != rank)
      std::swap_ranges(prow + c, prow + m.cols, m.a.data() + p * m.cols + c);
    const Elem s = f.inv(prow[c]);
    for (long long cc = c; cc < m.cols; ++cc) {
      prow[cc] = mul[(long long)s * q + prow[cc]];
      npiv[cc] = f.neg(prow[cc]);
    }
    for (long long r = rank + 1; r < m.rows; ++r) {
      Elem* row = m.a.data() + r * m.cols;
      const Elem g = row[c];
      if (g == 0) continue;
      const Elem* gmul = mul + (long long)g * q;
      for (long long cc = c; cc < m.cols; ++cc)
        row[cc] = add[(long long)row[cc] * q + gmul[npiv[cc]]];
    }
    ++rank;
  }
  return rank;
}

GfMatrix evaluation_matrix(const ToricSet& x, long long d, const Field& f,
                           const RankBudget& budget) {
  const long long cols = monomial_count(d, x.m());
  if (cols > budget.max_cols)
    throw budget_error("degree " + std::to_string(d) + " needs " + std::to_string(cols) +
                       " monomial columns, over budget " + std::to_string(budget.max_cols));
  if (x.size() > budget.max_rows)
    throw budget_error("point set has " + std::to_string(x.size()) +
                       " rows, over budget " + std::to_string(budget.max_rows));
  auto mons = degree_monomials(d, x.m());
  const long long qm1 = f.q() - 1;
  GfMatrix mat;
  mat.rows = x.size();
  mat.cols = cols;
  mat.a.resize(mat.rows * mat.cols);
  for (long long i = 0; i < mat.rows; ++i) {
    const std::uint16_t* t = x.tuple(i);
    for (long long c = 0; c < cols; ++c) {
      long long s = 0;
      // Coordinate 1 of the representative is 1; it contributes nothing.
      for (long long k = 1; k < x.m(); ++k) s += (long long)mons[c][k] * t[k - 1];
      mat.at(i, c) = f.exp(s % qm1);
    }
  }
  return mat;
}

long long hilbert_x_rank(const ToricSet& x, long long d, const Field& f,
                         const RankBudget& budget) {
  GfMatrix m = evaluation_matrix(x, d, f, budget);
  return rank_gf(m, f);
}

long long hilbert_character(const ReducedMatrix& b, const Field& f, long long d,
                            long long max_count) {
  if (d < 0) throw input_error("character count needs d >= 0");
  const long long total = monomial_count(d, b.m());
  if (total > max_count)
    throw budget_error("degree " + std::to_string(d) + " has " + std::to_string(total) +
                       " monomials, over cap " + std::to_string(max_count));
  const long long qm1 = f.q() - 1;
  const long long n = b.n(), rows = b.rows();
  std::vector<std::uint16_t> flat;
  flat.reserve(total * std::max<long long>(n, 1));
  // Residue vector of the monomial with exponents e_2..e_m, built per level.
  std::vector<std::uint16_t> partial((rows + 1) * std::max<long long>(n, 1), 0);
  long long count = 0;
  auto rec = [&](auto&& self, long long lvl, long long left) -> void {
    if (lvl == rows) {
      const std::uint16_t* v = partial.data() + lvl * n;
      flat.insert(flat.end(), v, v + n);
      ++count;
      return;
    }
    const std::uint16_t* prev = partial.data() + lvl * n;
    std::uint16_t* cur = partial.data() + (lvl + 1) * n;
    for (long long e = left; e >= 0; --e) {
      for (long long j = 0; j < n; ++j)
        cur[j] = std::uint16_t((prev[j] + e * (long long)b.entry(lvl, j)) % qm1);
      self(self, lvl + 1, left - e);
    }
  };
  rec(rec, 0, d);
  return count_distinct(flat, n, count);
}

long long hilbert_torus(long long m, long long q, long long d) {
  if (d < 0) return 0;
  const long long s = m - 1;
  if (d >= s * (q - 2)) return ipow_checked(q - 1, s);
  long long total = 0;
  for (long long j = 0; j * (q - 1) <= d; ++j) {
    long long term = binomial_ll(s, j) * binomial_ll(d - j * (q - 1) + s, s);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

long long HilbertProfile::value_at(long long d) const {
  if (d < 0) throw input_error("Hilbert function is indexed by d >= 0");
  if (d <= r_x) return values[d];
  return x_size;
}

HilbertProfile hilbert_profile(const ToricSet& x, const Field& f,
                               const RankBudget& budget) {
  if (x.size() == 0) throw input_error("Hilbert profile needs a nonempty point set");
  HilbertProfile p;
  p.m = x.m();
  p.q = x.q();
  p.x_size = x.size();
  const long long cap = (p.m - 1) * (f.q() - 2);
  for (long long d = 0;; ++d) {
    long long h;
    HilbertMethod meth = HilbertMethod::rank;
    try {
      h = hilbert_x_rank(x, d, f, budget);
    } catch (const budget_error&) {
      if (!x.provenance()) throw;
      h = hilbert_character(*x.provenance(), f, d);
      meth = HilbertMethod::character;
    }
    p.values.push_back(h);
    p.methods.push_back(meth);
    if (h > p.x_size) throw internal_error("Hilbert value exceeds |X|");
    if (d > 0 && p.values[d] <= p.values[d - 1])
      throw internal_error("Hilbert function must strictly increase below its regularity");
    if (h == p.x_size) {
      p.r_x = d;
      break;
    }
    if (d == cap)
      throw internal_error("Hilbert function failed to reach |X| by the torus regularity");
  }
  p.numerator.resize(p.values.size());
  for (std::size_t i = 0; i < p.values.size(); ++i)
    p.numerator[i] = p.values[i] - (i ? p.values[i - 1] : 0);
  return p;
}

CorollaryReport regularity_identity_check(const HilbertProfile& p, long long y_size,
                                          const std::vector<long long>& hbar) {
  const long long r_t = (p.m - 1) * (p.q - 2);
  if ((long long)hbar.size() != r_t + 1)
    throw input_error("identity check needs Hbar over degrees 0..(m-1)(q-2)");
  long long r_hbar = -1;
  for (long long d = 0; d <= r_t; ++d)
    if (hbar[d] == y_size) {
      r_hbar = d;
      break;
    }
  if (r_hbar < 0 || hbar.back() != y_size)
    throw internal_error("Hbar fails to settle at |Y| by the torus regularity");
  const long long got = std::max(p.r_x, r_hbar);
  if (got != r_t)
    throw internal_error("regularity identity violated: max(" + std::to_string(p.r_x) +
                         ", " + std::to_string(r_hbar) + ") != " + std::to_string(r_t));
  return {"regularity_max_identity", CheckStatus::pass,
          "max(r_X = " + std::to_string(p.r_x) + ", r_Hbar = " + std::to_string(r_hbar) +
              ") = " + std::to_string(r_t)};
}

}  // namespace ppcode
