#include "qclust/finite_field.hpp"

#include <string>

#include "qclust/error.hpp"

namespace qclust {

bool prime_power(int q, int& p, int& r) {
  if (q < 2) return false;
  p = 0;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = q;
  r = 0;
  int x = q;
  while (x % p == 0) x /= p, ++r;
  return x == 1;
}

namespace {

using Poly = std::vector<int>;  // low degree first, coefficients mod p

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mod(Poly a, const Poly& m, int p) {
  a = trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
    a = trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return trim(out);
}

Poly digits(int x, int p, int r) {
  Poly d(static_cast<std::size_t>(r), 0);
  for (int i = 0; i < r; ++i) d[static_cast<std::size_t>(i)] = x % p, x /= p;
  return trim(d);
}

int undigits(const Poly& d, int p) {
  int x = 0;
  for (std::size_t i = d.size(); i-- > 0;) x = x * p + d[i];
  return x;
}

bool irreducible(const Poly& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  // try every monic divisor of degree 1..deg/2
  for (int d = 1; d <= deg / 2; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int c = 0; c < count; ++c) {
      Poly g = digits(c, p, d);
      g.resize(static_cast<std::size_t>(d) + 1, 0);
      g[static_cast<std::size_t>(d)] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(int q) : q_(q) {
  if (!prime_power(q, p_, r_)) throw Error(Errc::InvalidInput, std::to_string(q) + " is not a prime power");
  if (q > 256) throw Error(Errc::InvalidInput, "field too large for table arithmetic");
  // smallest monic irreducible of degree r in digit order
  int count = 1;
  for (int i = 0; i < r_; ++i) count *= p_;
  for (int c = 0; c < count; ++c) {
    Poly f = digits(c, p_, r_);
    f.resize(static_cast<std::size_t>(r_) + 1, 0);
    f[static_cast<std::size_t>(r_)] = 1;
    if (r_ == 1 || irreducible(f, p_)) {
      modulus_ = f;
      break;
    }
  }
  const std::size_t qq = static_cast<std::size_t>(q_);
  add_.assign(qq * qq, 0);
  mul_.assign(qq * qq, 0);
  neg_.assign(qq, 0);
  inv_.assign(qq, 0);
  for (int a = 0; a < q_; ++a) {
    const Poly pa = digits(a, p_, r_);
    Poly na(pa);
    for (auto& x : na) x = (p_ - x) % p_;
    neg_[static_cast<std::size_t>(a)] = undigits(trim(na), p_);
    for (int b = 0; b < q_; ++b) {
      const Poly pb = digits(b, p_, r_);
      Poly s(std::max(pa.size(), pb.size()), 0);
      for (std::size_t i = 0; i < s.size(); ++i)
        s[i] = ((i < pa.size() ? pa[i] : 0) + (i < pb.size() ? pb[i] : 0)) % p_;
      add_[static_cast<std::size_t>(a) * qq + static_cast<std::size_t>(b)] = undigits(trim(s), p_);
      mul_[static_cast<std::size_t>(a) * qq + static_cast<std::size_t>(b)] =
          undigits(poly_mod(poly_mul(pa, pb, p_), modulus_, p_), p_);
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul(a, b) == 1) inv_[static_cast<std::size_t>(a)] = b;
}

int FiniteField::inv(int a) const {
  if (a == 0) throw Error(Errc::InvalidInput, "inverse of zero in a finite field");
  return inv_[static_cast<std::size_t>(a)];
}

int FiniteField::from_integer(long x) const { return static_cast<int>(((x % p_) + p_) % p_); }

}  // namespace qclust
