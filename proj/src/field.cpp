#include "field.hpp"

#include <algorithm>
#include <string>

#include "errors.hpp"

namespace ppcode {
namespace {

std::vector<int> to_digits(long long v, long long p, int k) {
  std::vector<int> d(k, 0);
  for (int i = 0; i < k && v > 0; ++i) {
    d[i] = int(v % p);
    v /= p;
  }
  return d;
}

long long from_digits(const std::vector<int>& d, long long p) {
  long long v = 0;
  for (size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

int poly_deg(const std::vector<int>& a) {
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != 0) return int(i);
  return -1;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b,
                          long long p) {
  std::vector<int> c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = int((c[i + j] + (long long)a[i] * b[j]) % p);
  }
  return c;
}

// Remainder of a modulo the monic polynomial m.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m,
                          long long p) {
  int dm = poly_deg(m);
  for (int da = poly_deg(a); da >= dm; da = poly_deg(a)) {
    long long f = a[da];  // leading coeff of m is 1
    for (int i = 0; i <= dm; ++i) {
      long long t = a[da - dm + i] - f * m[i];
      a[da - dm + i] = int(((t % p) + p) % p);
    }
  }
  a.resize(std::max(dm, 1));
  return a;
}

bool poly_divides(const std::vector<int>& d, const std::vector<int>& a,
                  long long p) {
  return poly_deg(poly_mod(a, d, p)) < 0;
}

// Trial division by every monic polynomial of degree 1..deg(m)/2.
bool poly_irreducible(const std::vector<int>& m, long long p) {
  int dm = poly_deg(m);
  if (dm < 1) return false;
  for (int dd = 1; dd <= dm / 2; ++dd) {
    long long count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (long long t = 0; t < count; ++t) {
      std::vector<int> d = to_digits(t, p, dd);
      d.push_back(1);  // monic
      if (poly_divides(d, m, p)) return false;
    }
  }
  return true;
}

void factor_prime_power(long long q, long long& p, int& k) {
  if (q < 3) throw input_error("field order must be at least 3, got " + std::to_string(q));
  if (q > Field::kMaxQ)
    throw input_error("field order " + std::to_string(q) + " exceeds the supported cap " +
                      std::to_string(Field::kMaxQ));
  long long d = 2;
  while (d * d <= q && q % d != 0) ++d;
  p = (d * d <= q) ? d : q;
  long long r = q;
  k = 0;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1)
    throw input_error("field order " + std::to_string(q) + " is not a prime power");
}

}  // namespace

Field Field::build(long long q) {
  long long p;
  int k;
  factor_prime_power(q, p, k);
  // First irreducible monic degree-k polynomial in encoding order.
  std::vector<int> m;
  for (long long t = 0;; ++t) {
    m = to_digits(t, p, k);
    m.push_back(1);
    if (poly_irreducible(m, p)) break;
  }
  Field f;
  f.q_ = q;
  f.p_ = p;
  f.k_ = k;
  f.mod_ = m;
  f.init_tables();
  return f;
}

Field Field::build_with_modulus(long long q, const std::vector<int>& modulus) {
  long long p;
  int k;
  factor_prime_power(q, p, k);
  if ((int)modulus.size() != k + 1 || modulus[k] != 1)
    throw input_error("modulus must be monic of degree " + std::to_string(k));
  for (int c : modulus)
    if (c < 0 || c >= p) throw input_error("modulus coefficient out of range [0, p)");
  if (!poly_irreducible(modulus, p)) throw input_error("modulus is reducible");
  Field f;
  f.q_ = q;
  f.p_ = p;
  f.k_ = k;
  f.mod_ = modulus;
  f.init_tables();
  return f;
}

void Field::check_elem(Elem a) const {
  if (a >= q_)
    throw input_error("element " + std::to_string(a) + " out of range for GF(" +
                      std::to_string(q_) + ")");
}

Elem Field::mul_poly(Elem a, Elem b) const {
  check_elem(a);
  check_elem(b);
  std::vector<int> c =
      poly_mod(poly_mul(to_digits(a, p_, k_), to_digits(b, p_, k_), p_), mod_, p_);
  return Elem(from_digits(c, p_));
}

Elem Field::inv_poly(Elem a) const {
  check_elem(a);
  if (a == 0) throw input_error("inverse of 0");
  for (long long b = 1; b < q_; ++b)
    if (mul_poly(a, Elem(b)) == 1) return Elem(b);
  throw internal_error("no inverse found; field tables corrupt");
}

Elem Field::pow_via_inverse(Elem a, long long e) const {
  check_elem(a);
  if (a == 0) {
    if (e < 0) throw input_error("negative power of 0");
    return e == 0 ? Elem(1) : Elem(0);
  }
  Elem base = a;
  unsigned long long ue;
  if (e < 0) {
    base = inv_poly(a);
    ue = 0ULL - (unsigned long long)e;
  } else {
    ue = (unsigned long long)e;
  }
  Elem r = 1;
  while (ue > 0) {
    if (ue & 1) r = mul_poly(r, base);
    base = mul_poly(base, base);
    ue >>= 1;
  }
  return r;
}

void Field::init_tables() {
  // Generator: first element in encoding order of order exactly q-1,
  // found on the polynomial layer.
  for (long long a = 2; a < q_; ++a) {
    Elem x = Elem(a);
    long long ord = 1;
    while (x != 1) {
      x = mul_poly(x, Elem(a));
      ++ord;
    }
    if (ord == q_ - 1) {
      beta_ = Elem(a);
      break;
    }
  }
  if (beta_ == 0) throw internal_error("no generator found; modulus not irreducible?");

  exp_tab_.assign(q_ - 1, 0);
  log_tab_.assign(q_, -1);
  Elem x = 1;
  for (long long i = 0; i < q_ - 1; ++i) {
    exp_tab_[i] = x;
    log_tab_[x] = i;
    x = mul_poly(x, beta_);
  }
  if (x != 1) throw internal_error("generator order mismatch");

  add_tab_.assign(q_ * q_, 0);
  for (long long a = 0; a < q_; ++a) {
    std::vector<int> da = to_digits(a, p_, k_);
    for (long long b = 0; b < q_; ++b) {
      std::vector<int> db = to_digits(b, p_, k_);
      std::vector<int> dc(k_);
      for (int i = 0; i < k_; ++i) dc[i] = int((da[i] + db[i]) % p_);
      add_tab_[a * q_ + b] = Elem(from_digits(dc, p_));
    }
  }

  mul_tab_.assign(q_ * q_, 0);
  inv_tab_.assign(q_, 0);
  for (long long a = 1; a < q_; ++a) {
    for (long long b = 1; b < q_; ++b)
      mul_tab_[a * q_ + b] = exp_tab_[(log_tab_[a] + log_tab_[b]) % (q_ - 1)];
    inv_tab_[a] = exp_tab_[(q_ - 1 - log_tab_[a]) % (q_ - 1)];
  }
}

Elem Field::add(Elem a, Elem b) const {
  check_elem(a);
  check_elem(b);
  return add_tab_[(long long)a * q_ + b];
}

Elem Field::neg(Elem a) const {
  check_elem(a);
  std::vector<int> d = to_digits(a, p_, k_);
  for (int& c : d) c = int((p_ - c) % p_);
  return Elem(from_digits(d, p_));
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
  check_elem(a);
  check_elem(b);
  return mul_tab_[(long long)a * q_ + b];
}

Elem Field::inv(Elem a) const {
  check_elem(a);
  if (a == 0) throw input_error("inverse of 0");
  return inv_tab_[a];
}

Elem Field::pow(Elem a, long long e) const {
  check_elem(a);
  if (a == 0) {
    if (e < 0) throw input_error("negative power of 0");
    return e == 0 ? Elem(1) : Elem(0);
  }
  long long r = ((e % (q_ - 1)) + (q_ - 1)) % (q_ - 1);
  return exp_tab_[(log_tab_[a] * r) % (q_ - 1)];
}

long long Field::dlog(Elem a) const {
  check_elem(a);
  if (a == 0) throw input_error("discrete log of 0");
  return log_tab_[a];
}

Elem Field::exp(long long i) const {
  long long r = ((i % (q_ - 1)) + (q_ - 1)) % (q_ - 1);
  return exp_tab_[r];
}

}  // namespace ppcode
