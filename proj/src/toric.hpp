#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include "field.hpp"

namespace ppcode {

// Integer exponent matrix: n rows (one per variable) by m columns (one per
// monomial); at(j, i) is the exponent of variable j in monomial i (0-based).
class ExponentMatrix {
 public:
  ExponentMatrix(long long n, long long m, std::vector<long long> entries);

  long long n() const { return n_; }
  long long m() const { return m_; }
  long long at(long long j, long long i) const { return e_[j * m_ + i]; }

  // Common column sum when every column has the same one.
  std::optional<long long> uniform_alpha() const;

 private:
  long long n_, m_;
  std::vector<long long> e_;
};

// Row r (0-based) holds the residues (a_{r+2,j} - a_{1,j}) mod (q-1) for the
// monomial r+2 relative to monomial 1; m-1 rows by n columns, entries in
// [0, q-2].
class ReducedMatrix {
 public:
  ReducedMatrix(long long q, long long n, long long m, std::vector<Elem> entries);

  long long q() const { return q_; }
  long long n() const { return n_; }
  long long m() const { return m_; }
  long long rows() const { return m_ - 1; }
  Elem entry(long long r, long long j) const { return b_[r * n_ + j]; }

 private:
  long long q_, n_, m_;
  std::vector<Elem> b_;
};

ReducedMatrix reduce_matrix(const ExponentMatrix& a, const Field& f);

// Point of projective (m-1)-space, stored by its canonical representative
// (first nonzero coordinate scaled to 1).
struct ProjectivePoint {
  std::vector<Elem> coords;
  void canonicalize(const Field& f);
};

struct EnumBudget {
  // Tuple-coordinate evaluations: (#parameter tuples) * (coords per point).
  unsigned long long coord_evals = 100'000'000ULL;
};

// Deduplicated, lexicographically sorted list of torus points. Each point is
// stored as its m-1 discrete logs (coordinates 2..m; the first coordinate of
// the canonical representative is always 1). Sets produced from a matrix
// carry it as provenance.
class ToricSet {
 public:
  // explicit_size disambiguates m = 1 sets (stride 0): they are a single
  // point unless explicitly empty.
  ToricSet(long long q, long long m, std::vector<std::uint16_t> flat,
           std::optional<ReducedMatrix> provenance, long long explicit_size = -1);

  long long q() const { return q_; }
  long long m() const { return m_; }
  long long size() const { return size_; }
  long long stride() const { return m_ - 1; }
  const std::uint16_t* tuple(long long i) const { return flat_.data() + i * stride(); }
  const std::vector<std::uint16_t>& flat() const { return flat_; }
  const std::optional<ReducedMatrix>& provenance() const { return prov_; }

  bool contains(const std::uint16_t* t) const;
  ProjectivePoint point(long long i, const Field& f) const;

 private:
  long long q_, m_, size_;
  std::vector<std::uint16_t> flat_;
  std::optional<ReducedMatrix> prov_;
};

// Enumerate X = {[(z^{a_1}(t), ..., z^{a_m}(t))] : t in (K*)^n} by walking
// discrete-log exponent tuples through the reduced matrix.
ToricSet enumerate_x(const ExponentMatrix& a, const Field& f, const EnumBudget& budget = {});

// Same set computed from the unreduced matrix with genuine field arithmetic
// (power, multiply, projective scaling); slower, used as a cross-check.
ToricSet enumerate_x_raw(const ExponentMatrix& a, const Field& f, const EnumBudget& budget = {});

// The projective torus T_{m-1}: all points with every coordinate nonzero.
ToricSet enumerate_torus(long long m, const Field& f, const EnumBudget& budget = {});

// Y = T_{m-1} \ X.
ToricSet complement_y(const ToricSet& x, const Field& f, const EnumBudget& budget = {});

}  // namespace ppcode
