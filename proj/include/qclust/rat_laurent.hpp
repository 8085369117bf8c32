#pragma once

#include <map>
#include <string>

#include "qclust/laurent.hpp"

namespace qclust {

/// num / Π_j (1 − v^{2j})^{e_j}. Series coefficients of q-Pochhammer
/// expansions are of this shape, so products and sums stay exact and the
/// final Laurent-ness is a divisibility check instead of a truncation window.
class RatLaurent {
 public:
  RatLaurent() = default;
  RatLaurent(const QLaurent& num) : num_(num) {}  // NOLINT
  RatLaurent(long c) : num_(c) {}                 // NOLINT

  /// 1 / ((1−T)(1−T²)···(1−T^n)) with T = v².
  static RatLaurent inverse_pochhammer(int n);

  const QLaurent& numerator() const noexcept { return num_; }
  const std::map<int, int>& denominator() const noexcept { return den_; }
  QLaurent denominator_poly() const;
  bool is_zero() const noexcept { return num_.is_zero(); }

  RatLaurent& operator+=(const RatLaurent& o);
  RatLaurent& operator-=(const RatLaurent& o);
  friend RatLaurent operator+(RatLaurent a, const RatLaurent& b) { return a += b; }
  friend RatLaurent operator-(RatLaurent a, const RatLaurent& b) { return a -= b; }
  friend RatLaurent operator*(const RatLaurent& a, const RatLaurent& b);
  RatLaurent operator-() const;
  RatLaurent shifted(int k) const;
  friend bool operator==(const RatLaurent& a, const RatLaurent& b);

  /// Exact Laurent value; throws NotLaurent when the denominator does not cancel.
  QLaurent to_laurent() const;
  bool is_laurent() const;

  /// Power-series expansion in v, all terms of v-degree ≤ max_degree.
  QLaurent expand_series(int max_degree) const;

  std::string to_string() const;

 private:
  void cancel();

  QLaurent num_;
  std::map<int, int> den_;
};

}  // namespace qclust
