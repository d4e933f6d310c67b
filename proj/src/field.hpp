#pragma once
#include <cstdint>
#include <vector>

namespace ppcode {

// Canonical element encoding: the polynomial c0 + c1*z + ... + c{k-1}*z^{k-1}
// over GF(p) is stored as the integer c0 + c1*p + ... + c{k-1}*p^{k-1}.
// Elements are bound to the Field that produced them; ops validate the range.
using Elem = std::uint16_t;

// GF(p^k) with an explicitly chosen irreducible modulus and a fixed generator.
//
// Two arithmetic layers: mul_poly/inv_poly do explicit polynomial arithmetic
// mod the modulus (the reference), while mul/inv/pow/dlog run on tables built
// from generator powers. The layers agree bit for bit (tested exhaustively).
//
// Deterministic construction: the modulus is the first irreducible monic
// degree-k polynomial in encoding order, and beta is the first element in
// encoding order whose multiplicative order is exactly q-1.
class Field {
 public:
  // Fields are desk scale: q <= kMaxQ keeps the q*q op tables cache resident.
  static constexpr long long kMaxQ = 1024;

  static Field build(long long q);
  // modulus: monic degree-k coefficients c0..ck (ck = 1), entries in [0, p).
  static Field build_with_modulus(long long q, const std::vector<int>& modulus);

  long long q() const { return q_; }
  long long p() const { return p_; }
  int k() const { return k_; }
  const std::vector<int>& modulus() const { return mod_; }
  Elem beta() const { return beta_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  // e may be negative (a must be nonzero then); 0^0 = 1.
  Elem pow(Elem a, long long e) const;
  long long dlog(Elem a) const;  // a != 0; dlog(exp(i)) = i in [0, q-2]
  Elem exp(long long i) const;   // beta^(i mod (q-1)), any integer i

  // Reference layer.
  Elem mul_poly(Elem a, Elem b) const;
  Elem inv_poly(Elem a) const;
  // Negative exponents via pow(inv(a), -e) on the reference layer.
  Elem pow_via_inverse(Elem a, long long e) const;

  bool is_prime() const { return k_ == 1; }
  void check_elem(Elem a) const;

  // Flat tables for hot loops; add/mul are row-major with stride q.
  const Elem* add_table() const { return add_tab_.data(); }
  const Elem* mul_table() const { return mul_tab_.data(); }
  const Elem* exp_table() const { return exp_tab_.data(); }  // size q-1

 private:
  Field() = default;
  void init_tables();

  long long q_ = 0, p_ = 0;
  int k_ = 0;
  std::vector<int> mod_;  // c0..ck
  Elem beta_ = 0;
  std::vector<Elem> add_tab_, mul_tab_, inv_tab_, exp_tab_;
  std::vector<long long> log_tab_;
};

}  // namespace ppcode
