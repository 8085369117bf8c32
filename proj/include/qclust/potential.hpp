#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "qclust/quiver.hpp"

namespace qclust {

/// Arrow ids in traversal order: the first arrow is walked first.
using Word = std::vector<int>;

/// Linear combination of (open) paths.
using PathCombo = std::map<Word, mpq_class>;

void add_to(PathCombo& p, const Word& w, const mpq_class& c);

/// Lexicographically least rotation.
Word canonical_rotation(const Word& w);

/// Formal potential truncated at total length `cap`.
class Potential {
 public:
  explicit Potential(int cap = 12) : cap_(cap) {}

  int cap() const noexcept { return cap_; }
  const std::map<Word, mpq_class>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t max_degree() const;

  /// Adds c times the cyclic word; rotates to canonical form and drops words longer than the cap.
  void add(const Word& w, const mpq_class& c);
  mpq_class coeff(const Word& w) const;

  friend bool operator==(const Potential&, const Potential&) = default;

  std::string to_string() const;

 private:
  int cap_;
  std::map<Word, mpq_class> terms_;
};

/// Checks that every word is a closed path of q.
void check_potential(const Quiver& q, const Potential& w);

PathCombo cyclic_derivative(const Potential& w, int arrow);

/// Replaces each arrow c in `subst` by the path combination subst[c], keeping words up to the cap.
Potential substitute(const Potential& w, const std::map<int, PathCombo>& subst);

std::string word_to_string(const Word& w);

}  // namespace qclust
