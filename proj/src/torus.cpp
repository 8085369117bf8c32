#include "qclust/torus.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

namespace qclust {

SkewForm::SkewForm(IntMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols())
    throw Error(Errc::DimensionMismatch, "skew form must be square, got " + entries_.to_string());
  if (!entries_.is_skew_symmetric())
    throw Error(Errc::NotSkewSymmetric, "form " + entries_.to_string());
}

long SkewForm::operator()(const IntVec& e, const IntVec& f) const {
  const std::size_t m = dim();
  if (e.size() != m || f.size() != m) throw Error(Errc::DimensionMismatch, "skew form argument length");
  long s = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (e[i] == 0) continue;
    long row = 0;
    for (std::size_t j = 0; j < m; ++j) row += entries_(i, j) * f[j];
    s += e[i] * row;
  }
  return s;
}

FormPtr make_form(IntMatrix entries) { return std::make_shared<const SkewForm>(std::move(entries)); }

bool GradedLex::operator()(const IntVec& a, const IntVec& b) const {
  const long da = std::accumulate(a.begin(), a.end(), 0L);
  const long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  return a < b;
}

TorusElement TorusElement::monomial(FormPtr form, IntVec e, QLaurent coeff) {
  TorusElement out(std::move(form));
  if (e.size() != out.dim()) throw Error(Errc::DimensionMismatch, "exponent length " + qclust::to_string(e));
  out.add_term(e, coeff);
  return out;
}

TorusElement TorusElement::one(FormPtr form) {
  IntVec zero(form->dim(), 0);
  return monomial(std::move(form), std::move(zero));
}

const IntVec& TorusElement::leading_exponent() const {
  if (terms_.empty()) throw Error(Errc::InvalidInput, "leading term of zero element");
  return terms_.rbegin()->first;
}

const QLaurent& TorusElement::leading_coeff() const {
  if (terms_.empty()) throw Error(Errc::InvalidInput, "leading term of zero element");
  return terms_.rbegin()->second;
}

QLaurent TorusElement::coeff(const IntVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? QLaurent() : it->second;
}

void TorusElement::add_term(const IntVec& e, const QLaurent& c) {
  if (c.is_zero()) return;
  if (e.size() != dim()) throw Error(Errc::DimensionMismatch, "exponent length " + qclust::to_string(e));
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TorusElement::check_same_form(const TorusElement& o) const {
  if (form_ == o.form_) return;
  if (!form_ || !o.form_ || !(*form_ == *o.form_))
    throw Error(Errc::DimensionMismatch, "torus elements live over different forms");
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
  if (!form_) form_ = o.form_;
  check_same_form(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
  if (!form_) form_ = o.form_;
  check_same_form(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

TorusElement operator*(const TorusElement& a, const TorusElement& b) {
  a.check_same_form(b);
  TorusElement out(a.form_);
  const SkewForm& lam = *a.form_;
  for (const auto& [eb, cb] : b.terms_) {
    const IntVec lf = lam.matrix().apply(eb);
    for (const auto& [ea, ca] : a.terms_) {
      out.add_term(ea + eb, (ca * cb).shifted(static_cast<int>(dot(ea, lf))));
    }
  }
  return out;
}

TorusElement operator*(const QLaurent& s, const TorusElement& a) {
  TorusElement out(a.form_);
  if (s.is_zero()) return out;
  for (const auto& [e, c] : a.terms_) out.terms_.emplace_hint(out.terms_.end(), e, s * c);
  return out;
}

TorusElement TorusElement::operator-() const { return QLaurent(-1) * *this; }

bool operator==(const TorusElement& a, const TorusElement& b) {
  if (a.form_ != b.form_) {
    if (!a.form_ || !b.form_) return a.terms_.empty() && b.terms_.empty();
    if (!(*a.form_ == *b.form_)) return false;
  }
  return a.terms_ == b.terms_;
}

std::map<IntVec, mpz_class> TorusElement::at_v_one() const {
  std::map<IntVec, mpz_class> out;
  for (const auto& [e, c] : terms_) {
    mpz_class s = c.at_one();
    if (s != 0) out.emplace(e, s);
  }
  return out;
}

std::string TorusElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    std::string mono = "X" + qclust::to_string(e);
    if (c.is_one()) {
      out += mono;
    } else if (c == QLaurent(-1)) {
      out += "-" + mono;
    } else if (c.is_monomial() && c.leading_coeff() > 0) {
      out += c.to_string() + "*" + mono;
    } else {
      out += "(" + c.to_string() + ")*" + mono;
    }
  }
  return out;
}

TorusElement mul(const TorusElement& a, const TorusElement& b) { return a * b; }
TorusElement add(const TorusElement& a, const TorusElement& b) { return a + b; }

TorusElement power(const TorusElement& a, unsigned k) {
  TorusElement out = TorusElement::one(a.form());
  for (unsigned i = 0; i < k; ++i) out = out * a;
  return out;
}

TorusElement exact_right_divide(const TorusElement& n, const TorusElement& d) {
  if (d.is_zero()) throw Error(Errc::InvalidInput, "division by zero torus element");
  TorusElement q(d.form());
  if (n.is_zero()) return q;
  if (n.dim() != d.dim()) throw Error(Errc::DimensionMismatch, "division over different forms");
  const std::size_t m = d.dim();
  // The torus is a domain, so coordinatewise extreme exponents add under products.
  IntVec lo(m), hi(m);
  for (std::size_t i = 0; i < m; ++i) {
    long nmin = LONG_MAX, nmax = LONG_MIN, dmin = LONG_MAX, dmax = LONG_MIN;
    for (const auto& [e, c] : n.terms()) nmin = std::min(nmin, e[i]), nmax = std::max(nmax, e[i]);
    for (const auto& [e, c] : d.terms()) dmin = std::min(dmin, e[i]), dmax = std::max(dmax, e[i]);
    lo[i] = nmin - dmin;
    hi[i] = nmax - dmax;
  }
  const SkewForm& lam = *d.form();
  const IntVec& dlead = d.leading_exponent();
  const QLaurent& dlc = d.leading_coeff();
  TorusElement r = n;
  while (!r.is_zero()) {
    IntVec a = r.leading_exponent() - dlead;
    bool inside = true;
    for (std::size_t i = 0; i < m; ++i) inside = inside && lo[i] <= a[i] && a[i] <= hi[i];
    if (!inside) throw NotDivisibleError("leading term escapes the quotient support", r);
    auto t = r.leading_coeff().divide(dlc.shifted(static_cast<int>(lam(a, dlead))));
    if (!t) throw NotDivisibleError("leading coefficient not divisible", r);
    TorusElement term = TorusElement::monomial(d.form(), a, *t);
    r -= term * d;
    q += term;
  }
  return q;
}

bool is_positive(const TorusElement& a) {
  for (const auto& [e, c] : a.terms())
    if (!c.nonnegative()) return false;
  return true;
}

}  // namespace qclust
