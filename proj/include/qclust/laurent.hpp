#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

namespace qclust {

/// Laurent polynomial in v = q^{1/2} with big-integer coefficients.
/// The same type carries classes in T^{1/2} on the DT side.
class QLaurent {
 public:
  using Terms = std::map<int, mpz_class>;

  QLaurent() = default;
  QLaurent(long c);  // NOLINT: constants convert implicitly
  QLaurent(const mpz_class& c);  // NOLINT

  static QLaurent monomial(int exp, const mpz_class& coeff = 1);
  static QLaurent from_terms(const Terms& terms);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  int min_degree() const;  // requires nonzero
  int max_degree() const;
  mpz_class coeff(int exp) const;
  const mpz_class& leading_coeff() const { return terms_.rbegin()->second; }

  QLaurent& operator+=(const QLaurent& o);
  QLaurent& operator-=(const QLaurent& o);
  QLaurent& operator*=(const QLaurent& o);
  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
  QLaurent operator-() const;
  friend bool operator==(const QLaurent& a, const QLaurent& b) = default;

  void add_term(int exp, const mpz_class& c);

  QLaurent shifted(int k) const;  // times v^k
  QLaurent bar() const;           // v -> v^{-1}
  mpz_class at_one() const;
  bool nonnegative() const;

  /// Exact quotient in Z[v^{±1}], or nothing when this is not a multiple of d.
  std::optional<QLaurent> divide(const QLaurent& d) const;

  /// Ascending powers rendered as q^(k/2), e.g. "q^(-1/2) + 2*q".
  std::string to_string() const;
  /// Same polynomial with exponents shown as powers of T, reading v as T^{1/2}.
  std::string to_string(const char* var) const;

 private:
  Terms terms_;
};

std::string render_q_power(int v_exp, const char* var = "q");

enum class LefschetzFailure { None, Asymmetric, MixedParity, NegativeMultiplicity };

const char* lefschetz_failure_name(LefschetzFailure f);

struct LefschetzDecomposition {
  int center = 0;                    // N, as a v-exponent
  std::map<int, mpz_class> mult;     // k -> c_k, only nonzero entries
};

struct LefschetzResult {
  std::optional<LefschetzDecomposition> value;
  LefschetzFailure failure = LefschetzFailure::None;
};

/// P(N,k) = v^N (v^{-k} + v^{-k+2} + ... + v^k).
QLaurent lefschetz_string(int center, int k);

LefschetzResult lefschetz_decompose(const QLaurent& p);

}  // namespace qclust
