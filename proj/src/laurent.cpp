#include "qclust/laurent.hpp"

#include "qclust/error.hpp"

namespace qclust {

QLaurent::QLaurent(long c) {
  if (c != 0) terms_.emplace(0, c);
}

QLaurent::QLaurent(const mpz_class& c) {
  if (c != 0) terms_.emplace(0, c);
}

QLaurent QLaurent::monomial(int exp, const mpz_class& coeff) {
  QLaurent out;
  if (coeff != 0) out.terms_.emplace(exp, coeff);
  return out;
}

QLaurent QLaurent::from_terms(const Terms& terms) {
  QLaurent out;
  for (const auto& [e, c] : terms)
    if (c != 0) out.terms_.emplace(e, c);
  return out;
}

bool QLaurent::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

int QLaurent::min_degree() const {
  if (terms_.empty()) throw Error(Errc::InvalidInput, "degree of zero polynomial");
  return terms_.begin()->first;
}

int QLaurent::max_degree() const {
  if (terms_.empty()) throw Error(Errc::InvalidInput, "degree of zero polynomial");
  return terms_.rbegin()->first;
}

mpz_class QLaurent::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void QLaurent::add_term(int exp, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  QLaurent out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

QLaurent& QLaurent::operator*=(const QLaurent& o) { return *this = *this * o; }

QLaurent QLaurent::operator-() const {
  QLaurent out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

QLaurent QLaurent::shifted(int k) const {
  QLaurent out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

QLaurent QLaurent::bar() const {
  QLaurent out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

mpz_class QLaurent::at_one() const {
  mpz_class s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

bool QLaurent::nonnegative() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

std::optional<QLaurent> QLaurent::divide(const QLaurent& d) const {
  if (d.is_zero()) throw Error(Errc::InvalidInput, "division by zero polynomial");
  if (is_zero()) return QLaurent();
  // Any quotient has exponents in [min r - min d, max r - max d]; peel from the top.
  const int lo = min_degree() - d.min_degree();
  QLaurent r(*this), q;
  const int dtop = d.max_degree();
  const mpz_class& dlc = d.leading_coeff();
  while (!r.is_zero()) {
    const int e = r.max_degree() - dtop;
    if (e < lo) return std::nullopt;
    const mpz_class& rlc = r.leading_coeff();
    if (!mpz_divisible_p(rlc.get_mpz_t(), dlc.get_mpz_t())) return std::nullopt;
    mpz_class t = rlc / dlc;
    q.add_term(e, t);
    for (const auto& [de, dc] : d.terms_) r.add_term(de + e, -t * dc);
  }
  return q;
}

std::string render_q_power(int v_exp, const char* var) {
  std::string base(var);
  if (v_exp == 0) return "1";
  if (v_exp % 2 != 0) return base + "^(" + std::to_string(v_exp) + "/2)";
  const int k = v_exp / 2;
  if (k == 1) return base;
  return base + "^" + std::to_string(k);
}

std::string QLaurent::to_string() const { return to_string("q"); }

std::string QLaurent::to_string(const char* var) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += render_q_power(e, var);
    }
  }
  return out;
}

const char* lefschetz_failure_name(LefschetzFailure f) {
  switch (f) {
    case LefschetzFailure::None: return "none";
    case LefschetzFailure::Asymmetric: return "asymmetric";
    case LefschetzFailure::MixedParity: return "mixed-parity";
    case LefschetzFailure::NegativeMultiplicity: return "negative-multiplicity";
  }
  return "unknown";
}

QLaurent lefschetz_string(int center, int k) {
  QLaurent out;
  for (int e = center - k; e <= center + k; e += 2) out.add_term(e, 1);
  return out;
}

LefschetzResult lefschetz_decompose(const QLaurent& p) {
  if (p.is_zero()) throw Error(Errc::InvalidInput, "lefschetz_decompose of zero");
  LefschetzResult res;
  const int lo = p.min_degree(), hi = p.max_degree();
  for (const auto& [e, c] : p.terms()) {
    if (((e - lo) % 2) != 0) {
      res.failure = LefschetzFailure::MixedParity;
      return res;
    }
  }
  const int n = (lo + hi) / 2;
  for (const auto& [e, c] : p.terms()) {
    if (p.coeff(2 * n - e) != c) {
      res.failure = LefschetzFailure::Asymmetric;
      return res;
    }
  }
  LefschetzDecomposition dec{n, {}};
  QLaurent rest = p;
  while (!rest.is_zero()) {
    const int k = rest.max_degree() - n;
    const mpz_class c = rest.leading_coeff();
    if (c < 0 || k < 0) {
      res.failure = LefschetzFailure::NegativeMultiplicity;
      return res;
    }
    dec.mult.emplace(k, c);
    rest -= lefschetz_string(n, k) * QLaurent(c);
  }
  res.value = std::move(dec);
  return res;
}

}  // namespace qclust
