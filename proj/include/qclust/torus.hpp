#pragma once

#include <map>
#include <memory>
#include <string>

#include "qclust/error.hpp"
#include "qclust/int_matrix.hpp"
#include "qclust/laurent.hpp"

namespace qclust {

class SkewForm {
 public:
  explicit SkewForm(IntMatrix entries);

  std::size_t dim() const noexcept { return entries_.rows(); }
  const IntMatrix& matrix() const noexcept { return entries_; }
  long operator()(const IntVec& e, const IntVec& f) const;
  long operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

  friend bool operator==(const SkewForm& a, const SkewForm& b) = default;

 private:
  IntMatrix entries_;
};

using FormPtr = std::shared_ptr<const SkewForm>;
FormPtr make_form(IntMatrix entries);

/// Total degree first, then lexicographic. Translation invariant, so leading
/// exponents add under multiplication.
struct GradedLex {
  bool operator()(const IntVec& a, const IntVec& b) const;
};

class TorusElement {
 public:
  using Terms = std::map<IntVec, QLaurent, GradedLex>;

  TorusElement() = default;
  explicit TorusElement(FormPtr form) : form_(std::move(form)) {}

  static TorusElement monomial(FormPtr form, IntVec e, QLaurent coeff = 1);
  static TorusElement one(FormPtr form);

  const FormPtr& form() const noexcept { return form_; }
  std::size_t dim() const { return form_ ? form_->dim() : 0; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const IntVec& leading_exponent() const;
  const QLaurent& leading_coeff() const;
  QLaurent coeff(const IntVec& e) const;

  void add_term(const IntVec& e, const QLaurent& c);

  TorusElement& operator+=(const TorusElement& o);
  TorusElement& operator-=(const TorusElement& o);
  friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
  friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
  friend TorusElement operator*(const TorusElement& a, const TorusElement& b);
  friend TorusElement operator*(const QLaurent& s, const TorusElement& a);
  TorusElement operator-() const;
  friend bool operator==(const TorusElement& a, const TorusElement& b);

  /// v = 1: the commutative Laurent polynomial with the same support.
  std::map<IntVec, mpz_class> at_v_one() const;

  /// Terms ascending in graded-lex order, e.g. "X[-1,0] + X[-1,1]".
  std::string to_string() const;

 private:
  void check_same_form(const TorusElement& o) const;

  FormPtr form_;
  Terms terms_;
};

TorusElement mul(const TorusElement& a, const TorusElement& b);
TorusElement add(const TorusElement& a, const TorusElement& b);
TorusElement power(const TorusElement& a, unsigned k);

/// Division failure keeps the remainder that could not be cancelled.
class NotDivisibleError : public Error {
 public:
  NotDivisibleError(const std::string& what, TorusElement remainder)
      : Error(Errc::NotDivisible, what), remainder_(std::move(remainder)) {}
  const TorusElement& remainder() const noexcept { return remainder_; }

 private:
  TorusElement remainder_;
};

/// The q with q * d == n, found by leading-term cancellation.
TorusElement exact_right_divide(const TorusElement& n, const TorusElement& d);

bool is_positive(const TorusElement& a);

}  // namespace qclust
