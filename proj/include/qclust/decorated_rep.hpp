#pragma once

#include <map>
#include <string>
#include <vector>

#include "qclust/int_matrix.hpp"
#include "qclust/linalg.hpp"
#include "qclust/qp_mutation.hpp"

namespace qclust {

/// Decorated representation. The arrow s→t acts by a dims[t]×dims[s] matrix;
/// a path walked p_1, ..., p_l acts by mats[p_l] ··· mats[p_1].
struct DecRep {
  QPData qp;
  IntVec dims;
  std::map<int, QMatrix> mats;
  IntVec vdims;
};

QMatrix evaluate_path(const DecRep& d, int start, const Word& w);
/// Evaluates a combination of paths all running from `start` to `end`.
QMatrix evaluate(const DecRep& d, int start, int end, const PathCombo& p);

/// Throws RelationViolation unless every cyclic derivative acts by zero, and
/// checks nilpotency.
void verify_jacobi_module(const DecRep& d);

DecRep negative_simple(const QPData& qp, int j);
DecRep simple(const QPData& qp, int j);

/// How complements are chosen when splitting kernels and images.
enum class Pivoting { Leftmost, Rightmost };

DecRep mutate_rep(const DecRep& d, int k, Pivoting piv = Pivoting::Leftmost);

/// The module reached from negative_simple(qp_r, j) by mutating back along ks.
DecRep h1_gamma(const QPData& qp0, const std::vector<int>& ks, int j, Pivoting piv = Pivoting::Leftmost);

/// Direct sum of λ_j copies of h1_gamma(qp0, ks, j) over the vertices of qp0.
DecRep h1_gamma_sum(const QPData& qp0, const std::vector<int>& ks, const IntVec& lam,
                    Pivoting piv = Pivoting::Leftmost);

DecRep direct_sum(const DecRep& a, const DecRep& b);

/// Applies the automorphisms recorded by a reduction and drops the deleted arrows.
DecRep transport(const DecRep& d, const QPData& reduced, const ReductionTrace& trace);

std::string dump(const DecRep& d);

}  // namespace qclust
