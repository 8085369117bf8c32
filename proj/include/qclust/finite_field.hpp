#pragma once

#include <cstdint>
#include <vector>

namespace qclust {

/// The field with q = p^r elements, small q only. Elements are 0..q−1,
/// read as base-p digit vectors of polynomials modulo a fixed irreducible.
class FiniteField {
 public:
  explicit FiniteField(int q);

  int order() const noexcept { return q_; }
  int characteristic() const noexcept { return p_; }
  int degree() const noexcept { return r_; }

  int add(int a, int b) const { return add_[static_cast<std::size_t>(a * q_ + b)]; }
  int sub(int a, int b) const { return add(a, neg_[static_cast<std::size_t>(b)]); }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a * q_ + b)]; }
  int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
  int inv(int a) const;  // a ≠ 0
  /// The image of an integer in the prime subfield.
  int from_integer(long x) const;

  /// Irreducible modulus as coefficients c_0..c_r (monic).
  const std::vector<int>& modulus() const noexcept { return modulus_; }

 private:
  int q_, p_, r_;
  std::vector<int> modulus_;
  std::vector<int> add_, mul_, neg_, inv_;
};

/// True for prime powers ≥ 2; fills p and r.
bool prime_power(int q, int& p, int& r);

}  // namespace qclust
