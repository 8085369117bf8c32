#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qclust/linalg.hpp"
#include "qclust/potential.hpp"
#include "qclust/quiver.hpp"

namespace qclust {

struct QPData {
  Quiver quiver;
  Potential potential;
};

QPData make_qp(Quiver q, Potential w);

struct Premutation {
  QPData qp;
  int k = 0;
  std::vector<int> in;   // arrows into k, by id
  std::vector<int> out;  // arrows out of k, by id
  /// composite id → (a, b) with a into k walked first, then b out of k
  std::map<int, std::pair<int, int>> composites;
  /// the original potential with every "a then b" replaced by its composite
  Potential replaced;
};

Premutation premutate_full(const QPData& qp, int k);
QPData premutate(const QPData& qp, int k);

/// One automorphism applied during reduction.
/// Linear: φ(x_s) = Σ_u p(s,u) x_u on a block of parallel arrows `ids`.
/// Shift: φ(c) = c + shift[c] with every shift of length at least 2.
struct ReductionStep {
  std::vector<int> ids;
  QMatrix p;
  std::map<int, PathCombo> shift;
  bool linear() const { return !ids.empty(); }
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  std::vector<int> deleted;
};

/// Splits off the trivial part: returns the reduced QP, arrows of cancelled pairs removed.
QPData reduce(const QPData& qp, ReductionTrace* trace = nullptr);

bool has_two_cycles(const Quiver& q);

struct QPMutation {
  QPData qp;
  bool well_mutable = true;
  Premutation pre;
  ReductionTrace trace;
};

QPMutation mutate_qp_full(const QPData& qp, int k);
QPData mutate_qp(const QPData& qp, int k);

/// Graded pieces of the Jacobi algebra for the arrow-length filtration, degrees 0..up_to.
std::vector<long> jacobi_dims(const QPData& qp, int up_to);

}  // namespace qclust
