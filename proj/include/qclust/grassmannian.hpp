#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qclust/decorated_rep.hpp"
#include "qclust/finite_field.hpp"
#include "qclust/laurent.hpp"
#include "qclust/quiver.hpp"
#include "qclust/seed.hpp"

namespace qclust {

/// Row-major matrix over a finite field.
struct FqMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<int> data;
  int at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

struct FqRep {
  std::shared_ptr<const FiniteField> field;
  Quiver quiver;
  IntVec dims;
  std::map<int, FqMatrix> mats;  // dims[tgt] × dims[src]
};

/// Reduces the rational arrow matrices; throws InvalidInput if a denominator vanishes mod p.
FqRep reduce_mod(const DecRep& d, int q);

inline constexpr double kDefaultCountBudget = 2e6;

/// Number of subrepresentations E' with dim(E/E') = gamma.
mpz_class gr_count(const FqRep& rep, const IntVec& gamma, double budget = kDefaultCountBudget);

/// Number of subspaces of dimension k in F_q^n.
mpz_class gaussian_binomial(int n, int k, int q);

struct CountTable {
  IntVec gamma;
  std::map<int, mpz_class> counts;  // field order → points
  std::optional<QLaurent> interpolated;  // in T, stored with v = T^{1/2}

  std::string dump() const;
};

inline const std::vector<int> kDefaultPrimes{2, 3, 4, 5, 7, 8, 9};

/// Polynomial in T of degree ≤ degree_bound through all points except the largest
/// field order, which is held out for verification.
QLaurent serre_interpolate(const CountTable& tbl, int degree_bound);

/// Whether the polynomial s in T (stored with v = T^{1/2}) reproduces every count.
bool verify_counts(const CountTable& tbl, const QLaurent& s);

struct CrosscheckRow {
  IntVec gamma;
  QLaurent coefficient;
  CountTable table;
  bool counted = false;
  std::string skipped;      // reason when not counted
  bool match = false;       // coefficient = v^shift · S(v²)
  int shift = 0;
  bool euler_match = false; // coefficient at v=1 equals S(1)
  bool pure = false;
  bool candidate = false;   // degree too high to interpolate; the coefficient's polynomial fits every count
};

struct CrosscheckReport {
  std::vector<CrosscheckRow> rows;
  bool hard = true;  // acyclic at one end: mismatches are failures
  bool passed() const;
  std::string to_string() const;
};

/// Compares each F-coefficient with the Serre polynomial of the matching quiver Grassmannian of h1.
CrosscheckReport coefficient_crosscheck(const ClusterMonomialResult& seed_result, const DecRep& h1, bool hard,
                                        const std::vector<int>& primes = kDefaultPrimes,
                                        double budget = kDefaultCountBudget, int jobs = 1);

/// Whether the mutable quiver contains an oriented cycle.
bool is_acyclic(const Quiver& q);

}  // namespace qclust
