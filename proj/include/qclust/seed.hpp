#pragma once

#include <map>
#include <vector>

#include "qclust/int_matrix.hpp"
#include "qclust/torus.hpp"

namespace qclust {

/// A compatible pair together with the current cluster written in the
/// initial torus. Vertex labels in the public API are 1-based.
struct QuantumSeed {
  std::size_t m = 0;
  std::size_t n = 0;
  IntMatrix lambda;  // current Λ_M
  IntMatrix btilde;  // m×n
  std::vector<TorusElement> vars;
  FormPtr initial_form;
};

/// Checks that the upper block is skew-symmetric and B̃ᵀΛ = [I_n | 0].
void check_compatible(const IntMatrix& lambda, const IntMatrix& btilde);

QuantumSeed initial_seed(const IntMatrix& lambda, const IntMatrix& btilde);

/// Matrix mutation of an m×n exchange matrix at the 1-based direction k.
IntMatrix mutate_btilde(const IntMatrix& btilde, int k);

/// Λ' = EᵀΛE for the sign + elementary matrix. Used to cross-check the
/// commutation-derived Λ' computed by `mutate`.
IntMatrix mutate_lambda_fast(const IntMatrix& lambda, const IntMatrix& btilde, int k);

TorusElement frame_monomial(const QuantumSeed& s, const IntVec& c);

QuantumSeed mutate(const QuantumSeed& s, int k);
QuantumSeed mutate_along(const QuantumSeed& s, const std::vector<int>& ks);

/// Throws CommutationMismatch unless vars[i]vars[j] = v^{2Λ[i][j]} vars[j]vars[i] for all pairs.
void verify_commutation(const QuantumSeed& s);

using FCoefficients = std::map<IntVec, QLaurent>;

struct ClusterMonomialResult {
  TorusElement element;
  IntVec g_vector;
  FCoefficients f_coefficients;
};

ClusterMonomialResult cluster_monomial(const QuantumSeed& s0, const std::vector<int>& ks, const IntVec& lam);

IntVec g_vector(const TorusElement& r, const QuantumSeed& s0);

/// Coefficients c_γ with r = Σ c_γ X^g X^{B̃γ}.
FCoefficients f_polynomial(const TorusElement& r, const IntVec& g, const QuantumSeed& s0);

/// Σ c_γ X^g X^{B̃γ}, the inverse of f_polynomial.
TorusElement reexpand(const FCoefficients& f, const IntVec& g, const QuantumSeed& s0);

}  // namespace qclust
