#include "toric.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "errors.hpp"

namespace ppcode {
namespace {

// (q-1)^n * m with saturation, for budget gates.
unsigned long long enum_cost(long long q, long long n, long long m) {
  unsigned long long c = (unsigned long long)m;
  for (long long j = 0; j < n; ++j) {
    if (c > (unsigned long long)1e18 / (q - 1)) return ~0ULL;
    c *= (unsigned long long)(q - 1);
  }
  return c;
}

void check_enum_budget(long long q, long long n, long long m, const EnumBudget& budget) {
  if (enum_cost(q, n, m) > budget.coord_evals)
    throw budget_error("parameter enumeration needs (q-1)^" + std::to_string(n) + " * " +
                       std::to_string(m) + " coordinate evaluations, over budget " +
                       std::to_string(budget.coord_evals));
}

// Sort the flat tuple buffer lexicographically and drop duplicates.
std::vector<std::uint16_t> sort_unique(std::vector<std::uint16_t> flat, long long stride,
                                       long long count) {
  if (stride == 0) return {};
  std::vector<std::uint32_t> perm(count);
  std::iota(perm.begin(), perm.end(), 0);
  const std::uint16_t* base = flat.data();
  auto less = [&](std::uint32_t a, std::uint32_t b) {
    return std::lexicographical_compare(base + (long long)a * stride,
                                        base + (long long)a * stride + stride,
                                        base + (long long)b * stride,
                                        base + (long long)b * stride + stride);
  };
  auto eq = [&](std::uint32_t a, std::uint32_t b) {
    return std::equal(base + (long long)a * stride, base + (long long)a * stride + stride,
                      base + (long long)b * stride);
  };
  std::sort(perm.begin(), perm.end(), less);
  std::vector<std::uint16_t> out;
  out.reserve(count * stride);
  for (long long i = 0; i < count; ++i) {
    if (i > 0 && eq(perm[i - 1], perm[i])) continue;
    out.insert(out.end(), base + (long long)perm[i] * stride,
               base + (long long)perm[i] * stride + stride);
  }
  return out;
}

}  // namespace

ExponentMatrix::ExponentMatrix(long long n, long long m, std::vector<long long> entries)
    : n_(n), m_(m), e_(std::move(entries)) {
  if (n_ < 1) throw input_error("matrix needs at least one variable row");
  if (m_ < 1) throw input_error("matrix needs at least one monomial column");
  if ((long long)e_.size() != n_ * m_)
    throw input_error("matrix entry count does not match dimensions");
  for (long long v : e_)
    if (v < 0) throw input_error("matrix entries must be nonnegative");
}

std::optional<long long> ExponentMatrix::uniform_alpha() const {
  long long alpha = 0;
  for (long long j = 0; j < n_; ++j) alpha += at(j, 0);
  for (long long i = 1; i < m_; ++i) {
    long long s = 0;
    for (long long j = 0; j < n_; ++j) s += at(j, i);
    if (s != alpha) return std::nullopt;
  }
  return alpha;
}

ReducedMatrix::ReducedMatrix(long long q, long long n, long long m, std::vector<Elem> entries)
    : q_(q), n_(n), m_(m), b_(std::move(entries)) {
  if ((long long)b_.size() != (m_ - 1) * n_)
    throw input_error("reduced matrix entry count does not match dimensions");
}

ReducedMatrix reduce_matrix(const ExponentMatrix& a, const Field& f) {
  const long long qm1 = f.q() - 1;
  std::vector<Elem> b((a.m() - 1) * a.n());
  for (long long r = 0; r + 1 < a.m(); ++r)
    for (long long j = 0; j < a.n(); ++j) {
      long long d = (a.at(j, r + 1) - a.at(j, 0)) % qm1;
      b[r * a.n() + j] = Elem((d + qm1) % qm1);
    }
  return ReducedMatrix(f.q(), a.n(), a.m(), std::move(b));
}

void ProjectivePoint::canonicalize(const Field& f) {
  for (Elem c : coords)
    if (c != 0) {
      Elem s = f.inv(c);
      for (Elem& x : coords) x = f.mul(x, s);
      return;
    }
  throw input_error("projective point cannot be the zero vector");
}

ToricSet::ToricSet(long long q, long long m, std::vector<std::uint16_t> flat,
                   std::optional<ReducedMatrix> provenance, long long explicit_size)
    : q_(q), m_(m), flat_(std::move(flat)), prov_(std::move(provenance)) {
  if (explicit_size >= 0)
    size_ = explicit_size;
  else
    size_ = m_ > 1 ? (long long)flat_.size() / (m_ - 1) : 1;
}

bool ToricSet::contains(const std::uint16_t* t) const {
  if (stride() == 0) return true;
  long long lo = 0, hi = size_;
  while (lo < hi) {
    long long mid = (lo + hi) / 2;
    const std::uint16_t* p = tuple(mid);
    int c = 0;
    for (long long i = 0; i < stride(); ++i)
      if (p[i] != t[i]) {
        c = p[i] < t[i] ? -1 : 1;
        break;
      }
    if (c == 0) return true;
    if (c < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  return false;
}

ProjectivePoint ToricSet::point(long long i, const Field& f) const {
  ProjectivePoint p;
  p.coords.resize(m_);
  p.coords[0] = 1;
  const std::uint16_t* t = tuple(i);
  for (long long c = 1; c < m_; ++c) p.coords[c] = f.exp(t[c - 1]);
  return p;
}

ToricSet enumerate_x(const ExponentMatrix& a, const Field& f, const EnumBudget& budget) {
  check_enum_budget(f.q(), a.n(), a.m(), budget);
  ReducedMatrix b = reduce_matrix(a, f);
  const long long qm1 = f.q() - 1;
  const long long n = a.n(), stride = a.m() - 1;

  std::vector<std::uint16_t> flat;
  flat.reserve(std::min<unsigned long long>(enum_cost(f.q(), n, 1), 1u << 22) *
               std::max<long long>(stride, 1));
  // Odometer over exponent tuples with per-level partial sums.
  std::vector<long long> e(n, 0);
  std::vector<std::uint16_t> partial((n + 1) * std::max<long long>(stride, 1), 0);
  long long level = 0;
  while (true) {
    while (level < n) {
      const std::uint16_t* prev = partial.data() + level * stride;
      std::uint16_t* cur = partial.data() + (level + 1) * stride;
      for (long long r = 0; r < stride; ++r)
        cur[r] = std::uint16_t((prev[r] + (long long)e[level] * b.entry(r, level)) % qm1);
      ++level;
    }
    const std::uint16_t* leaf = partial.data() + n * stride;
    flat.insert(flat.end(), leaf, leaf + stride);
    // Advance the odometer.
    long long j = n - 1;
    while (j >= 0 && e[j] == qm1 - 1) {
      e[j] = 0;
      --j;
    }
    if (j < 0) break;
    ++e[j];
    level = j;
  }
  long long count = stride > 0 ? (long long)flat.size() / stride : 1;
  return ToricSet(f.q(), a.m(), sort_unique(std::move(flat), stride, count), std::move(b));
}

ToricSet enumerate_x_raw(const ExponentMatrix& a, const Field& f, const EnumBudget& budget) {
  check_enum_budget(f.q(), a.n(), a.m(), budget);
  const long long qm1 = f.q() - 1;
  const long long n = a.n(), m = a.m(), stride = m - 1;

  std::vector<std::uint16_t> flat;
  std::vector<long long> e(n, 0);
  while (true) {
    ProjectivePoint p;
    p.coords.assign(m, 1);
    for (long long i = 0; i < m; ++i)
      for (long long j = 0; j < n; ++j)
        p.coords[i] = f.mul(p.coords[i], f.pow(f.exp(e[j]), a.at(j, i)));
    p.canonicalize(f);
    for (long long i = 1; i < m; ++i) flat.push_back(std::uint16_t(f.dlog(p.coords[i])));
    long long j = n - 1;
    while (j >= 0 && e[j] == qm1 - 1) {
      e[j] = 0;
      --j;
    }
    if (j < 0) break;
    ++e[j];
  }
  long long count = stride > 0 ? (long long)flat.size() / stride : 1;
  return ToricSet(f.q(), m, sort_unique(std::move(flat), stride, count),
                  reduce_matrix(a, f));
}

ToricSet enumerate_torus(long long m, const Field& f, const EnumBudget& budget) {
  if (m < 1) throw input_error("torus needs at least one coordinate");
  check_enum_budget(f.q(), m - 1, m, budget);
  const long long qm1 = f.q() - 1, stride = m - 1;
  std::vector<std::uint16_t> flat;
  std::vector<std::uint16_t> t(std::max<long long>(stride, 1), 0);
  if (stride == 0) return ToricSet(f.q(), m, {}, std::nullopt);
  while (true) {
    flat.insert(flat.end(), t.begin(), t.begin() + stride);
    long long j = stride - 1;
    while (j >= 0 && t[j] == qm1 - 1) {
      t[j] = 0;
      --j;
    }
    if (j < 0) break;
    ++t[j];
  }
  // Already generated in sorted order, no duplicates.
  return ToricSet(f.q(), m, std::move(flat), std::nullopt);
}

ToricSet complement_y(const ToricSet& x, const Field& f, const EnumBudget& budget) {
  ToricSet torus = enumerate_torus(x.m(), f, budget);
  const long long stride = x.stride();
  if (stride == 0) return ToricSet(x.q(), x.m(), {}, std::nullopt, 0);
  std::vector<std::uint16_t> flat;
  flat.reserve((torus.size() - x.size()) * stride);
  for (long long i = 0; i < torus.size(); ++i) {
    const std::uint16_t* t = torus.tuple(i);
    if (!x.contains(t)) flat.insert(flat.end(), t, t + stride);
  }
  return ToricSet(x.q(), x.m(), std::move(flat), std::nullopt);
}

}  // namespace ppcode
