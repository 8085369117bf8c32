#include "qclust/seed.hpp"

#include <string>

namespace qclust {

namespace {

std::size_t direction(const QuantumSeed& s, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > s.n)
    throw Error(Errc::InvalidInput, "mutation direction " + std::to_string(k) + " outside 1.." + std::to_string(s.n));
  return static_cast<std::size_t>(k - 1);
}

long lambda_pair(const IntMatrix& lam, const IntVec& e, const IntVec& f) {
  long s = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0)
      for (std::size_t j = 0; j < f.size(); ++j) s += e[i] * lam(i, j) * f[j];
  return s;
}

}  // namespace

void check_compatible(const IntMatrix& lambda, const IntMatrix& btilde) {
  const std::size_t m = btilde.rows(), n = btilde.cols();
  if (lambda.rows() != m || lambda.cols() != m)
    throw Error(Errc::DimensionMismatch, "lambda must be " + std::to_string(m) + "x" + std::to_string(m));
  if (n == 0 || n > m) throw Error(Errc::DimensionMismatch, "need 1 <= n <= m");
  if (!btilde.block(0, 0, n, n).is_skew_symmetric())
    throw Error(Errc::NotSkewSymmetric, "principal part of btilde " + btilde.to_string());
  if (!lambda.is_skew_symmetric()) throw Error(Errc::NotSkewSymmetric, "lambda " + lambda.to_string());
  const IntMatrix prod = btilde.transposed() * lambda;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (prod(i, j) != (i == j ? 1 : 0))
        throw Error(Errc::IncompatiblePair, "btilde^t lambda = " + prod.to_string());
}

QuantumSeed initial_seed(const IntMatrix& lambda, const IntMatrix& btilde) {
  check_compatible(lambda, btilde);
  QuantumSeed s;
  s.m = btilde.rows();
  s.n = btilde.cols();
  s.lambda = lambda;
  s.btilde = btilde;
  s.initial_form = make_form(lambda);
  for (std::size_t i = 0; i < s.m; ++i) s.vars.push_back(TorusElement::monomial(s.initial_form, unit_vector(s.m, i)));
  return s;
}

IntMatrix mutate_btilde(const IntMatrix& b, int k1) {
  const std::size_t k = static_cast<std::size_t>(k1 - 1);
  IntMatrix out(b.rows(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (i == k || j == k) {
        out(i, j) = -b(i, j);
      } else {
        const long bik = b(i, k), bkj = b(k, j);
        out(i, j) = b(i, j) + (std::abs(bik) * bkj + bik * std::abs(bkj)) / 2;
      }
    }
  return out;
}

IntMatrix mutate_lambda_fast(const IntMatrix& lambda, const IntMatrix& btilde, int k1) {
  const std::size_t k = static_cast<std::size_t>(k1 - 1), m = lambda.rows();
  IntMatrix e = IntMatrix::identity(m);
  e(k, k) = -1;
  for (std::size_t i = 0; i < m; ++i)
    if (i != k) e(i, k) = std::max(0L, -btilde(i, k));
  return e.transposed() * lambda * e;
}

TorusElement frame_monomial(const QuantumSeed& s, const IntVec& c) {
  if (c.size() != s.m) throw Error(Errc::DimensionMismatch, "frame exponent " + to_string(c));
  IntVec pos(s.m, 0), neg(s.m, 0);
  for (std::size_t i = 0; i < s.m; ++i) (c[i] >= 0 ? pos[i] : neg[i]) = std::abs(c[i]);
  auto ordered = [&](const IntVec& d) {
    long twist = 0;
    for (std::size_t i = 0; i < s.m; ++i)
      for (std::size_t j = i + 1; j < s.m; ++j) twist += s.lambda(i, j) * d[i] * d[j];
    TorusElement acc = TorusElement::one(s.initial_form);
    for (std::size_t i = 0; i < s.m; ++i) acc = acc * power(s.vars[i], static_cast<unsigned>(d[i]));
    return QLaurent::monomial(static_cast<int>(-twist)) * acc;
  };
  TorusElement top = ordered(pos);
  if (all_nonnegative(c)) return top;
  // M(c) M(c⁻) = v^{Λ(c, c⁻)} M(c⁺)
  const long shift = lambda_pair(s.lambda, c, neg);
  return exact_right_divide(QLaurent::monomial(static_cast<int>(shift)) * top, ordered(neg));
}

void verify_commutation(const QuantumSeed& s) {
  for (std::size_t i = 0; i < s.m; ++i)
    for (std::size_t j = i + 1; j < s.m; ++j) {
      const TorusElement lhs = s.vars[i] * s.vars[j];
      const TorusElement rhs = QLaurent::monomial(static_cast<int>(2 * s.lambda(i, j))) * (s.vars[j] * s.vars[i]);
      if (!(lhs == rhs))
        throw Error(Errc::CommutationMismatch, "variables " + std::to_string(i + 1) + " and " + std::to_string(j + 1));
    }
}

QuantumSeed mutate(const QuantumSeed& s, int k1) {
  const std::size_t k = direction(s, k1);
  IntVec a(s.m, 0), b(s.m, 0);
  for (std::size_t i = 0; i < s.m; ++i) {
    if (s.btilde(i, k) > 0) a[i] = s.btilde(i, k);
    if (s.btilde(i, k) < 0) b[i] = -s.btilde(i, k);
  }
  // M(a - e_k) + M(b - e_k), with both summands sharing the right factor M(e_k)^{-1}.
  const IntVec ek = unit_vector(s.m, k);
  TorusElement numer = QLaurent::monomial(static_cast<int>(lambda_pair(s.lambda, a, ek))) * frame_monomial(s, a);
  numer += QLaurent::monomial(static_cast<int>(lambda_pair(s.lambda, b, ek))) * frame_monomial(s, b);

  QuantumSeed out = s;
  out.vars[k] = exact_right_divide(numer, s.vars[k]);
  out.btilde = mutate_btilde(s.btilde, k1);

  std::vector<IntVec> leads;
  for (const auto& x : out.vars) leads.push_back(x.leading_exponent());
  const SkewForm& lam0 = *s.initial_form;
  for (std::size_t i = 0; i < s.m; ++i)
    for (std::size_t j = 0; j < s.m; ++j) out.lambda(i, j) = lam0(leads[i], leads[j]);

  for (std::size_t j = 0; j < s.m; ++j) {
    if (j == k) continue;
    const TorusElement lhs = out.vars[k] * out.vars[j];
    const TorusElement rhs = QLaurent::monomial(static_cast<int>(2 * out.lambda(k, j))) * (out.vars[j] * out.vars[k]);
    if (!(lhs == rhs))
      throw Error(Errc::CommutationMismatch, "new variable " + std::to_string(k1) + " against " + std::to_string(j + 1));
  }
  check_compatible(out.lambda, out.btilde);
  return out;
}

QuantumSeed mutate_along(const QuantumSeed& s, const std::vector<int>& ks) {
  QuantumSeed cur = s;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (i > 0 && ks[i] == ks[i - 1]) throw Error(Errc::InvalidInput, "consecutive repeated mutation direction");
    cur = mutate(cur, ks[i]);
  }
  return cur;
}

IntVec g_vector(const TorusElement& r, const QuantumSeed& s0) {
  if (r.is_zero()) throw Error(Errc::NoGVector, "zero element");
  const SkewForm lam(s0.lambda);
  std::vector<IntVec> found;
  for (const auto& [g, cg] : r.terms()) {
    bool ok = true;
    for (const auto& [u, cu] : r.terms()) {
      const IntVec d = u - g;
      const IntVec ld = s0.lambda.apply(d);
      IntVec gamma(s0.n);
      for (std::size_t j = 0; j < s0.n; ++j) gamma[j] = -ld[j];
      if (!all_nonnegative(gamma) || s0.btilde.apply(gamma) != d) {
        ok = false;
        break;
      }
    }
    if (ok) found.push_back(g);
  }
  if (found.size() != 1)
    throw Error(Errc::NoGVector, std::to_string(found.size()) + " dominating exponents in " + r.to_string());
  return found.front();
}

FCoefficients f_polynomial(const TorusElement& r, const IntVec& g, const QuantumSeed& s0) {
  FCoefficients out;
  for (const auto& [u, cu] : r.terms()) {
    const IntVec d = u - g;
    const IntVec ld = s0.lambda.apply(d);
    IntVec gamma(s0.n);
    for (std::size_t j = 0; j < s0.n; ++j) gamma[j] = -ld[j];
    const IntVec bg = s0.btilde.apply(gamma);
    if (bg != d) throw Error(Errc::InconsistentLattice, "exponent " + to_string(u) + " is not g + B̃γ");
    const long twist = lambda_pair(s0.lambda, g, bg);
    out.emplace(gamma, cu.shifted(static_cast<int>(-twist)));
  }
  return out;
}

TorusElement reexpand(const FCoefficients& f, const IntVec& g, const QuantumSeed& s0) {
  TorusElement out(s0.initial_form);
  const TorusElement xg = TorusElement::monomial(s0.initial_form, g);
  for (const auto& [gamma, c] : f)
    out += c * (xg * TorusElement::monomial(s0.initial_form, s0.btilde.apply(gamma)));
  return out;
}

ClusterMonomialResult cluster_monomial(const QuantumSeed& s0, const std::vector<int>& ks, const IntVec& lam) {
  if (!all_nonnegative(lam)) throw Error(Errc::InvalidInput, "cluster monomial exponent must be nonnegative");
  const QuantumSeed s = mutate_along(s0, ks);
  ClusterMonomialResult res;
  res.element = frame_monomial(s, lam);
  res.g_vector = g_vector(res.element, s0);
  res.f_coefficients = f_polynomial(res.element, res.g_vector, s0);
  return res;
}

}  // namespace qclust
