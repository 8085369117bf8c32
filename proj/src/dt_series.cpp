#include "qclust/dt_series.hpp"

#include <algorithm>
#include <string>

#include "qclust/seed.hpp"

namespace qclust {

namespace {

void check_sequence(const std::vector<int>& ks, std::size_t n) {
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (ks[i] < 1 || static_cast<std::size_t>(ks[i]) > n)
      throw Error(Errc::InvalidInput, "mutation direction " + std::to_string(ks[i]) + " outside 1.." + std::to_string(n));
    if (i > 0 && ks[i] == ks[i - 1]) throw Error(Errc::InvalidInput, "consecutive repeated mutation direction");
  }
}

}  // namespace

SignSeqResult sign_sequence(const IntMatrix& btilde, const std::vector<int>& ks) {
  const std::size_t n = btilde.cols();
  check_sequence(ks, n);
  SignSeqResult res;
  // [B; C] mutates as one 2n×n exchange matrix
  IntMatrix stacked(2 * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) stacked(i, j) = btilde(i, j);
  for (std::size_t i = 0; i < n; ++i) stacked(n + i, i) = 1;
  for (int k : ks) {
    const IntMatrix c = stacked.block(n, 0, n, n);
    res.c_matrix_trace.push_back(c);
    const IntVec col = c.column(static_cast<std::size_t>(k - 1));
    const bool nonneg = std::all_of(col.begin(), col.end(), [](long x) { return x >= 0; });
    const bool nonpos = std::all_of(col.begin(), col.end(), [](long x) { return x <= 0; });
    if (nonneg == nonpos) throw Error(Errc::SignAmbiguous, "c-vector " + to_string(col) + " at direction " + std::to_string(k));
    res.signs.push_back(nonneg ? 1 : -1);
    IntVec a(col);
    for (auto& x : a) x = std::abs(x);
    res.s_classes.push_back(std::move(a));
    stacked = mutate_btilde(stacked, k);
  }
  res.c_matrix_trace.push_back(stacked.block(n, 0, n, n));
  return res;
}

IntMatrix g_matrix(const IntMatrix& btilde, const std::vector<int>& ks) {
  const std::size_t m = btilde.rows();
  const SignSeqResult ss = sign_sequence(btilde, ks);
  IntMatrix g = IntMatrix::identity(m);
  IntMatrix b = btilde;
  for (std::size_t step = 0; step < ks.size(); ++step) {
    const std::size_t k = static_cast<std::size_t>(ks[step] - 1);
    const long eps = ss.signs[step];
    IntVec col = scaled(g.column(k), -1);
    for (std::size_t i = 0; i < m; ++i) {
      const long w = std::max(0L, -eps * b(i, k));
      if (w != 0) col = col + scaled(g.column(i), w);
    }
    for (std::size_t i = 0; i < m; ++i) g(i, k) = col[i];
    b = mutate_btilde(b, ks[step]);
  }
  return g;
}

ConeSeries ConeSeries::one(FormPtr form, IntMatrix embed, IntVec bound) {
  IntVec base(form->dim(), 0);
  return monomial(std::move(form), std::move(embed), std::move(bound), std::move(base));
}

ConeSeries ConeSeries::monomial(FormPtr form, IntMatrix embed, IntVec bound, IntVec base) {
  if (embed.rows() != form->dim() || bound.size() != embed.cols() || base.size() != form->dim())
    throw Error(Errc::DimensionMismatch, "cone series shape");
  ConeSeries s{std::move(form), std::move(embed), std::move(base), std::move(bound), {}};
  s.coeffs.emplace(IntVec(s.embed.cols(), 0), RatLaurent(1));
  return s;
}

RatLaurent ConeSeries::coeff(const IntVec& gamma) const {
  auto it = coeffs.find(gamma);
  return it == coeffs.end() ? RatLaurent() : it->second;
}

void ConeSeries::add(const IntVec& gamma, const RatLaurent& c) {
  if (c.is_zero() || !leq(gamma, bound)) return;
  auto [it, inserted] = coeffs.emplace(gamma, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
  }
}

ConeSeries operator*(const ConeSeries& a, const ConeSeries& b) {
  if (a.bound != b.bound || !(*a.form == *b.form) || !(a.embed == b.embed))
    throw Error(Errc::DimensionMismatch, "cone series over different data");
  ConeSeries out{a.form, a.embed, a.base + b.base, a.bound, {}};
  std::vector<std::pair<const IntVec*, IntVec>> bexp;
  for (const auto& [d, c] : b.coeffs) bexp.emplace_back(&d, b.base + b.embed.apply(d));
  const IntMatrix& lam = a.form->matrix();
  for (const auto& [g, ca] : a.coeffs) {
    const IntVec ea = a.base + a.embed.apply(g);
    const IntVec row = lam.transposed().apply(ea);  // ea^T Λ as a vector
    auto itb = b.coeffs.begin();
    for (const auto& [dptr, eb] : bexp) {
      const RatLaurent& cb = itb->second;
      ++itb;
      IntVec s = g + *dptr;
      if (!leq(s, out.bound)) continue;
      out.add(s, (ca * cb).shifted(static_cast<int>(dot(row, eb))));
    }
  }
  return out;
}

bool operator==(const ConeSeries& a, const ConeSeries& b) {
  if (a.base != b.base || a.bound != b.bound || !(a.embed == b.embed)) return false;
  for (const auto& [g, c] : a.coeffs)
    if (!(b.coeff(g) == c)) return false;
  for (const auto& [g, c] : b.coeffs)
    if (!(a.coeff(g) == c)) return false;
  return true;
}

ConeSeries inverse(const ConeSeries& a) {
  const IntVec zero(a.rank(), 0);
  if (std::any_of(a.base.begin(), a.base.end(), [](long x) { return x != 0; }) || !(a.coeff(zero) == RatLaurent(1)))
    throw Error(Errc::InvalidInput, "series without unit constant term");
  ConeSeries x = a;
  x.coeffs.erase(zero);
  for (auto& [g, c] : x.coeffs) c = -c;
  ConeSeries out = ConeSeries::one(a.form, a.embed, a.bound);
  ConeSeries pw = out;
  while (true) {
    pw = pw * x;
    if (pw.coeffs.empty()) break;
    for (const auto& [g, c] : pw.coeffs) out.add(g, c);
  }
  return out;
}

ConeSeries pochhammer(const FormPtr& form, const IntMatrix& embed, const IntVec& cls, int sign, const IntVec& bound) {
  if (std::all_of(cls.begin(), cls.end(), [](long x) { return x == 0; }))
    throw Error(Errc::InvalidInput, "pochhammer class must be nonzero");
  if (!all_nonnegative(cls)) throw Error(Errc::InvalidInput, "pochhammer class must be nonnegative");
  ConeSeries s = ConeSeries::one(form, embed, bound);
  for (int k = 1;; ++k) {
    const IntVec g = scaled(cls, k);
    if (!leq(g, bound)) break;
    RatLaurent c = RatLaurent::inverse_pochhammer(k);
    // + : T^{k²/2}/(T;T)_k     − : (−1)^k T^{k/2}/(T;T)_k
    if (sign > 0)
      c = c.shifted(k * k);
    else
      c = (k % 2 ? -c : c).shifted(k);
    s.add(g, c);
  }
  return s;
}

namespace {

std::vector<ConeSeries> dt_factors(const IntMatrix& btilde, const FormPtr& form, const std::vector<int>& ks,
                                   const IntVec& bound, bool inverted) {
  const SignSeqResult ss = sign_sequence(btilde, ks);
  std::vector<ConeSeries> out;
  for (std::size_t i = 0; i < ks.size(); ++i)
    out.push_back(pochhammer(form, btilde, ss.s_classes[i], inverted ? -ss.signs[i] : ss.signs[i], bound));
  return out;
}

ConeSeries product(const std::vector<ConeSeries>& fs, const FormPtr& form, const IntMatrix& embed, const IntVec& bound) {
  ConeSeries acc = ConeSeries::one(form, embed, bound);
  for (const auto& f : fs) acc = acc * f;
  return acc;
}

TorusElement finish_conjugation(const ConeSeries& r, const IntVec& g) {
  for (const auto& [gamma, c] : r.coeffs) {
    bool shell = false;
    for (std::size_t i = 0; i < gamma.size(); ++i) shell = shell || gamma[i] == r.bound[i];
    if (shell)
      throw Error(Errc::TailNotVanishing, "nonzero coefficient at " + to_string(gamma) + " on the boundary of " +
                                              to_string(r.bound) + "; try a cone bound of " +
                                              to_string(r.bound + IntVec(r.bound.size(), 2)));
  }
  TorusElement out(r.form);
  for (const auto& [gamma, c] : r.coeffs) out.add_term(g + r.embed.apply(gamma), c.to_laurent());
  return out;
}

}  // namespace

ConeSeries dt_product(const IntMatrix& btilde, const FormPtr& form, const std::vector<int>& ks, const IntVec& bound) {
  return product(dt_factors(btilde, form, ks, bound, false), form, btilde, bound);
}

TorusElement conjugate(const ConeSeries& a, const IntVec& g) {
  const ConeSeries x = ConeSeries::monomial(a.form, a.embed, a.bound, g);
  return finish_conjugation(a * x * inverse(a), g);
}

TorusElement dilog_step(const IntVec& x, const TorusElement& y, int eps) {
  if (eps != 1 && eps != -1) throw Error(Errc::InvalidInput, "dilog_step sign must be +1 or -1");
  const SkewForm& lam = *y.form();
  for (const auto& [u, c] : y.terms())
    if (lam(x, u) != eps)
      throw Error(Errc::CommutationMismatch, "exponent " + to_string(u) + " pairs with " + to_string(x) + " to " +
                                                 std::to_string(lam(x, u)));
  return y + y * TorusElement::monomial(y.form(), x, QLaurent::monomial(eps));
}

ConeSeries framed_extract(const ConeSeries& a, const IntVec& lam) {
  const std::size_t n = a.rank();
  if (lam.size() < n) throw Error(Errc::DimensionMismatch, "framing vector shorter than the cone rank");
  ConeSeries twisted = a;
  for (auto& [g, c] : twisted.coeffs) {
    long pair = 0;
    for (std::size_t i = 0; i < n; ++i) pair += lam[i] * g[i];
    c = c.shifted(static_cast<int>(-2 * pair));
  }
  return twisted * inverse(a);
}

bool factorization_check(const ConeSeries& lhs, const std::vector<ConeSeries>& rhs_factors) {
  if (rhs_factors.empty()) return lhs == ConeSeries::one(lhs.form, lhs.embed, lhs.bound);
  ConeSeries acc = rhs_factors.front();
  for (std::size_t i = 1; i < rhs_factors.size(); ++i) acc = acc * rhs_factors[i];
  return lhs == acc;
}

DtRouteResult dt_cluster_monomial(const IntMatrix& lambda, const IntMatrix& btilde, const std::vector<int>& ks,
                                  const IntVec& lam, const IntVec& dims, const IntVec* fixed_bound, int max_raise) {
  const FormPtr form = make_form(lambda);
  DtRouteResult res;
  res.g_vector = g_matrix(btilde, ks).apply(lam);
  res.bound = fixed_bound ? *fixed_bound : dims + IntVec(dims.size(), 2);
  for (int attempt = 0;; ++attempt) {
    try {
      const auto fwd = dt_factors(btilde, form, ks, res.bound, false);
      auto inv = dt_factors(btilde, form, ks, res.bound, true);
      std::reverse(inv.begin(), inv.end());
      const ConeSeries x = ConeSeries::monomial(form, btilde, res.bound, res.g_vector);
      const ConeSeries r = product(fwd, form, btilde, res.bound) * x * product(inv, form, btilde, res.bound);
      res.element = finish_conjugation(r, res.g_vector);
      return res;
    } catch (const Error& e) {
      if (e.code() != Errc::TailNotVanishing || fixed_bound || attempt >= max_raise) throw;
      res.bound = res.bound + IntVec(res.bound.size(), 2);
    }
  }
}

}  // namespace qclust
