#include "qclust/rat_laurent.hpp"

#include "qclust/error.hpp"

namespace qclust {

namespace {

QLaurent one_minus_t(int j) { return QLaurent(1) - QLaurent::monomial(2 * j); }

QLaurent factor_power(int j, int e) {
  QLaurent out(1);
  const QLaurent f = one_minus_t(j);
  for (int i = 0; i < e; ++i) out *= f;
  return out;
}

}  // namespace

RatLaurent RatLaurent::inverse_pochhammer(int n) {
  RatLaurent r(1);
  for (int j = 1; j <= n; ++j) r.den_[j] += 1;
  return r;
}

QLaurent RatLaurent::denominator_poly() const {
  QLaurent d(1);
  for (const auto& [j, e] : den_) d *= factor_power(j, e);
  return d;
}

void RatLaurent::cancel() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    const QLaurent f = one_minus_t(it->first);
    while (it->second > 0) {
      auto q = num_.divide(f);
      if (!q) break;
      num_ = std::move(*q);
      --it->second;
    }
    it = it->second == 0 ? den_.erase(it) : std::next(it);
  }
}

RatLaurent& RatLaurent::operator+=(const RatLaurent& o) {
  if (o.num_.is_zero()) return *this;
  if (num_.is_zero()) return *this = o;
  std::map<int, int> common = den_;
  for (const auto& [j, e] : o.den_) common[j] = std::max(common[j], e);
  QLaurent a = num_, b = o.num_;
  for (const auto& [j, e] : common) {
    auto ia = den_.find(j);
    auto ib = o.den_.find(j);
    const int ea = ia == den_.end() ? 0 : ia->second;
    const int eb = ib == o.den_.end() ? 0 : ib->second;
    if (e > ea) a *= factor_power(j, e - ea);
    if (e > eb) b *= factor_power(j, e - eb);
  }
  num_ = a + b;
  den_ = std::move(common);
  cancel();
  return *this;
}

RatLaurent RatLaurent::operator-() const {
  RatLaurent r = *this;
  r.num_ = -r.num_;
  return r;
}

RatLaurent& RatLaurent::operator-=(const RatLaurent& o) { return *this += -o; }

RatLaurent operator*(const RatLaurent& a, const RatLaurent& b) {
  RatLaurent r;
  if (a.num_.is_zero() || b.num_.is_zero()) return r;
  r.num_ = a.num_ * b.num_;
  r.den_ = a.den_;
  for (const auto& [j, e] : b.den_) r.den_[j] += e;
  r.cancel();
  return r;
}

RatLaurent RatLaurent::shifted(int k) const {
  RatLaurent r = *this;
  r.num_ = r.num_.shifted(k);
  return r;
}

bool operator==(const RatLaurent& a, const RatLaurent& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.denominator_poly() == b.num_ * a.denominator_poly();
}

bool RatLaurent::is_laurent() const { return den_.empty() || num_.divide(denominator_poly()).has_value(); }

QLaurent RatLaurent::to_laurent() const {
  if (den_.empty()) return num_;
  auto q = num_.divide(denominator_poly());
  if (!q) throw Error(Errc::NotLaurent, "coefficient " + to_string() + " is not a Laurent polynomial");
  return *q;
}

QLaurent RatLaurent::expand_series(int max_degree) const {
  QLaurent out;
  if (num_.is_zero()) return out;
  // 1/D as a power series in v: D has constant term 1.
  const QLaurent d = denominator_poly();
  const int span = max_degree - num_.min_degree();
  if (span < 0) return out;
  std::vector<mpz_class> inv(static_cast<std::size_t>(span) + 1);
  inv[0] = 1;
  for (int i = 1; i <= span; ++i) {
    mpz_class s = 0;
    for (const auto& [e, c] : d.terms())
      if (e >= 1 && e <= i) s -= c * inv[static_cast<std::size_t>(i - e)];
    inv[static_cast<std::size_t>(i)] = s;
  }
  for (const auto& [e, c] : num_.terms())
    for (int i = 0; e + i <= max_degree; ++i) out.add_term(e + i, c * inv[static_cast<std::size_t>(i)]);
  return out;
}

std::string RatLaurent::to_string() const {
  if (den_.empty()) return num_.to_string();
  std::string s = "(" + num_.to_string() + ")/(";
  bool first = true;
  for (const auto& [j, e] : den_) {
    if (!first) s += "*";
    first = false;
    s += "(1 - " + render_q_power(2 * j) + ")";
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s + ")";
}

}  // namespace qclust
