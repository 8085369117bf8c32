#include "qclust/quiver.hpp"

#include <algorithm>

#include "qclust/error.hpp"

namespace qclust {

const Arrow& Quiver::arrow(int id) const {
  auto it = std::lower_bound(arrows_.begin(), arrows_.end(), id, [](const Arrow& a, int x) { return a.id < x; });
  if (it == arrows_.end() || it->id != id) throw Error(Errc::InvalidInput, "no arrow with id " + std::to_string(id));
  return *it;
}

bool Quiver::has_arrow(int id) const {
  auto it = std::lower_bound(arrows_.begin(), arrows_.end(), id, [](const Arrow& a, int x) { return a.id < x; });
  return it != arrows_.end() && it->id == id;
}

int Quiver::next_id() const { return arrows_.empty() ? 1 : arrows_.back().id + 1; }

int Quiver::add_arrow(int src, int tgt, int id) {
  const int mm = static_cast<int>(m_);
  if (src < 1 || src > mm || tgt < 1 || tgt > mm)
    throw Error(Errc::InvalidInput, "arrow endpoint outside 1.." + std::to_string(m_));
  if (id == 0) id = next_id();
  if (id < 1 || has_arrow(id)) throw Error(Errc::InvalidInput, "duplicate or invalid arrow id " + std::to_string(id));
  Arrow a{id, src, tgt};
  arrows_.insert(std::upper_bound(arrows_.begin(), arrows_.end(), a, [](const Arrow& x, const Arrow& y) { return x.id < y.id; }), a);
  return id;
}

void Quiver::remove_arrows(const std::vector<int>& ids) {
  std::erase_if(arrows_, [&](const Arrow& a) { return std::find(ids.begin(), ids.end(), a.id) != ids.end(); });
}

std::vector<int> Quiver::arrows_into(int v) const {
  std::vector<int> out;
  for (const auto& a : arrows_)
    if (a.tgt == v) out.push_back(a.id);
  return out;
}

std::vector<int> Quiver::arrows_out_of(int v) const {
  std::vector<int> out;
  for (const auto& a : arrows_)
    if (a.src == v) out.push_back(a.id);
  return out;
}

IntMatrix Quiver::adjacency() const {
  IntMatrix a(m_, m_);
  for (const auto& x : arrows_) a(static_cast<std::size_t>(x.src - 1), static_cast<std::size_t>(x.tgt - 1)) += 1;
  return a;
}

std::string Quiver::to_string() const {
  std::string s = "vertices " + std::to_string(m_) + ";";
  for (const auto& a : arrows_)
    s += " " + std::to_string(a.id) + ":" + std::to_string(a.src) + "->" + std::to_string(a.tgt);
  return s;
}

bool same_multigraph(const Quiver& a, const Quiver& b) {
  return a.vertices() == b.vertices() && a.adjacency() == b.adjacency();
}

Quiver from_btilde(const IntMatrix& b, const std::optional<IntMatrix>& extra) {
  const std::size_t m = b.rows(), n = b.cols();
  if (n > m || !b.block(0, 0, n, n).is_skew_symmetric())
    throw Error(Errc::NotSkewSymmetric, "principal part of " + b.to_string());
  Quiver q(m);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i) {
      const long bij = b(i, j);
      const int vi = static_cast<int>(i + 1), vj = static_cast<int>(j + 1);
      if (bij > 0) {
        for (long r = 0; r < bij; ++r) q.add_arrow(vj, vi);
      } else if (bij < 0 && i >= n) {
        for (long r = 0; r < -bij; ++r) q.add_arrow(vi, vj);
      }
    }
  if (extra) {
    if (extra->rows() != m - n || extra->cols() != m - n)
      throw Error(Errc::DimensionMismatch, "frozen multiplicity block");
    for (std::size_t i = 0; i < m - n; ++i)
      for (std::size_t j = 0; j < m - n; ++j)
        for (long r = 0; r < (*extra)(i, j); ++r)
          q.add_arrow(static_cast<int>(n + i + 1), static_cast<int>(n + j + 1));
  }
  return q;
}

IntMatrix exchange_matrix(const Quiver& q, std::size_t n) {
  const IntMatrix a = q.adjacency();
  const std::size_t m = q.vertices();
  IntMatrix b(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = a(j, i) - a(i, j);
  return b;
}

Quiver quiver_mutate(const Quiver& q, int k) {
  const std::size_t m = q.vertices();
  if (k < 1 || static_cast<std::size_t>(k) > m) throw Error(Errc::InvalidInput, "vertex outside the quiver");
  for (const auto& a : q.arrows())
    if (a.src == k && a.tgt == k) throw Error(Errc::LoopAtVertex, "loop at vertex " + std::to_string(k));
  IntMatrix a = q.adjacency();
  const std::size_t kk = static_cast<std::size_t>(k - 1);
  IntMatrix out = a;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == kk || j == kk) {
        out(i, j) = a(j, i);
      } else {
        out(i, j) = a(i, j) + a(i, kk) * a(kk, j);
      }
    }
  // cancel 2-cycles away from k
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      if (i == kk || j == kk) continue;
      const long c = std::min(out(i, j), out(j, i));
      out(i, j) -= c;
      out(j, i) -= c;
    }
  Quiver r(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (long t = 0; t < out(i, j); ++t) r.add_arrow(static_cast<int>(i + 1), static_cast<int>(j + 1));
  return r;
}

long euler_form(const Quiver& q, const IntVec& g1, const IntVec& g2) {
  const std::size_t m = q.vertices();
  if (g1.size() != m || g2.size() != m) throw Error(Errc::DimensionMismatch, "euler form arguments");
  long s = dot(g1, g2);
  for (const auto& a : q.arrows()) {
    // an arrow j→i contributes −γ1^i γ2^j
    s -= g1[static_cast<std::size_t>(a.tgt - 1)] * g2[static_cast<std::size_t>(a.src - 1)];
  }
  return s;
}

}  // namespace qclust
