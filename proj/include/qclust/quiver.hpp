#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qclust/int_matrix.hpp"

namespace qclust {

struct Arrow {
  int id = 0;
  int src = 0;  // 1-based
  int tgt = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Multigraph on vertices 1..m. Arrow ids are stable labels; they are not
/// renumbered after deletions so potentials and matrices stay keyed.
class Quiver {
 public:
  Quiver() = default;
  explicit Quiver(std::size_t m) : m_(m) {}

  std::size_t vertices() const noexcept { return m_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const Arrow& arrow(int id) const;
  bool has_arrow(int id) const;
  int next_id() const;

  /// Appends an arrow; id 0 picks the next free id. Returns the id used.
  int add_arrow(int src, int tgt, int id = 0);
  void remove_arrows(const std::vector<int>& ids);

  std::vector<int> arrows_into(int v) const;  // sorted by id
  std::vector<int> arrows_out_of(int v) const;
  /// a(i,j) = number of arrows i→j, 0-based.
  IntMatrix adjacency() const;

  std::string to_string() const;

 private:
  std::size_t m_ = 0;
  std::vector<Arrow> arrows_;  // sorted by id
};

bool same_multigraph(const Quiver& a, const Quiver& b);

/// Reads arrows off the exchange matrix: b_ij > 0 gives b_ij arrows j→i.
/// `extra`, if present, is an (m−n)×(m−n) multiplicity matrix among the frozen vertices.
Quiver from_btilde(const IntMatrix& btilde, const std::optional<IntMatrix>& extra = std::nullopt);

/// b_ij = a_ji − a_ij for 1 ≤ i ≤ m, 1 ≤ j ≤ n.
IntMatrix exchange_matrix(const Quiver& q, std::size_t n);

Quiver quiver_mutate(const Quiver& q, int k);

/// χ(γ1,γ2) = Σ γ1^i γ2^i − Σ a_ji γ1^i γ2^j with a_ji the number of arrows j→i.
long euler_form(const Quiver& q, const IntVec& g1, const IntVec& g2);

}  // namespace qclust
