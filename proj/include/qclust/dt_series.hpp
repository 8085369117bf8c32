#pragma once

#include <map>
#include <vector>

#include "qclust/int_matrix.hpp"
#include "qclust/rat_laurent.hpp"
#include "qclust/torus.hpp"

namespace qclust {

struct SignSeqResult {
  std::vector<int> signs;               // +1 / −1
  std::vector<IntVec> s_classes;        // |k_i-th c-vector| before step i
  std::vector<IntMatrix> c_matrix_trace;  // C before each step, then the final one
};

/// c-vector bookkeeping under the principal-coefficient extension of matrix mutation.
SignSeqResult sign_sequence(const IntMatrix& btilde, const std::vector<int>& ks);

/// m×m matrix whose columns are the g-vectors of the cluster reached along ks
/// (frozen columns stay unit vectors). Driven by the signs, independent of any torus computation.
IntMatrix g_matrix(const IntMatrix& btilde, const std::vector<int>& ks);

/// Σ_γ coeffs[γ] X^{base + Eγ} over 0 ≤ γ ≤ bound, products twisted by the ambient form.
struct ConeSeries {
  FormPtr form;
  IntMatrix embed;  // m×n
  IntVec base;
  IntVec bound;
  std::map<IntVec, RatLaurent> coeffs;

  static ConeSeries one(FormPtr form, IntMatrix embed, IntVec bound);
  static ConeSeries monomial(FormPtr form, IntMatrix embed, IntVec bound, IntVec base);

  std::size_t rank() const noexcept { return embed.cols(); }
  RatLaurent coeff(const IntVec& gamma) const;
  void add(const IntVec& gamma, const RatLaurent& c);
};

ConeSeries operator*(const ConeSeries& a, const ConeSeries& b);
bool operator==(const ConeSeries& a, const ConeSeries& b);

/// Inverse of a series with constant term 1, by the geometric series in (1 − a).
ConeSeries inverse(const ConeSeries& a);

/// (−T^{1/2} ŵ_cls; T)_∞^{sign} with ŵ_γ ↦ X^{Eγ}, expanded up to `bound`.
ConeSeries pochhammer(const FormPtr& form, const IntMatrix& embed, const IntVec& cls, int sign, const IntVec& bound);

/// Ordered product of the Pochhammer factors of the sign sequence.
ConeSeries dt_product(const IntMatrix& btilde, const FormPtr& form, const std::vector<int>& ks, const IntVec& bound);

/// A X^g A^{-1} as a finite torus element; the outer shell of the cone must vanish.
TorusElement conjugate(const ConeSeries& a, const IntVec& g);

/// y(1 + v^ε X^x), valid when Λ(x, u) = ε for every exponent u of y.
TorusElement dilog_step(const IntVec& x, const TorusElement& y, int eps);

/// ŵ_{(0,1)}^{-1} A ŵ_{(0,1)} A^{-1} in the lattice extended by one framing vertex.
ConeSeries framed_extract(const ConeSeries& a, const IntVec& lam);

bool factorization_check(const ConeSeries& lhs, const std::vector<ConeSeries>& rhs_factors);

struct DtRouteResult {
  TorusElement element;
  IntVec g_vector;
  IntVec bound;
};

/// Cluster monomial through the DT route. `dims` is an entrywise bound on the support
/// (the H^1 dimension vector); the cone bound starts at dims + 2 and is raised on tail failures
/// up to `max_raise` times, unless `fixed_bound` is given.
DtRouteResult dt_cluster_monomial(const IntMatrix& lambda, const IntMatrix& btilde, const std::vector<int>& ks,
                                  const IntVec& lam, const IntVec& dims, const IntVec* fixed_bound = nullptr,
                                  int max_raise = 3);

}  // namespace qclust
