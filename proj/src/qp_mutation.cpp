#include "qclust/qp_mutation.hpp"

#include <algorithm>
#include <set>

#include "qclust/error.hpp"

namespace qclust {

QPData make_qp(Quiver q, Potential w) {
  check_potential(q, w);
  return QPData{std::move(q), std::move(w)};
}

namespace {

void check_mutable_at(const Quiver& q, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > q.vertices())
    throw Error(Errc::InvalidInput, "vertex " + std::to_string(k) + " outside the quiver");
  std::set<int> into, outof;
  for (const auto& a : q.arrows()) {
    if (a.src == k && a.tgt == k) throw Error(Errc::LoopAtVertex, "loop at vertex " + std::to_string(k));
    if (a.tgt == k) into.insert(a.src);
    if (a.src == k) outof.insert(a.tgt);
  }
  for (int v : into)
    if (outof.count(v)) throw Error(Errc::InvalidInput, "2-cycle through vertex " + std::to_string(k));
}

}  // namespace

Premutation premutate_full(const QPData& qp, int k) {
  const Quiver& q = qp.quiver;
  check_mutable_at(q, k);
  Premutation pre;
  pre.k = k;
  pre.in = q.arrows_into(k);
  pre.out = q.arrows_out_of(k);
  Quiver nq(q.vertices());
  for (const auto& a : q.arrows()) {
    if (a.tgt == k || a.src == k)
      nq.add_arrow(a.tgt, a.src, a.id);
    else
      nq.add_arrow(a.src, a.tgt, a.id);
  }
  std::map<std::pair<int, int>, int> comp_of;
  int fresh = q.next_id();
  for (int a : pre.in)
    for (int b : pre.out) {
      const int id = fresh++;
      nq.add_arrow(q.arrow(a).src, q.arrow(b).tgt, id);
      pre.composites.emplace(id, std::make_pair(a, b));
      comp_of.emplace(std::make_pair(a, b), id);
    }

  const std::set<int> in(pre.in.begin(), pre.in.end()), out(pre.out.begin(), pre.out.end());
  Potential replaced(qp.potential.cap());
  for (const auto& [word, c] : qp.potential.terms()) {
    const std::size_t l = word.size();
    std::size_t start = 0;
    while (start < l && out.count(word[start])) ++start;
    if (start == l) throw Error(Errc::InvalidInput, "potential word through k without incoming arrow");
    Word nw;
    for (std::size_t s = 0; s < l; ++s) {
      const int x = word[(start + s) % l];
      if (in.count(x)) {
        const int y = word[(start + s + 1) % l];
        nw.push_back(comp_of.at({x, y}));
        ++s;
      } else {
        nw.push_back(x);
      }
    }
    replaced.add(nw, c);
  }
  Potential w = replaced;
  for (const auto& [id, ab] : pre.composites) w.add({ab.second, ab.first, id}, 1);
  pre.replaced = std::move(replaced);
  pre.qp = QPData{std::move(nq), std::move(w)};
  return pre;
}

QPData premutate(const QPData& qp, int k) { return premutate_full(qp, k).qp; }

namespace {

PathCombo single(int arrow, const mpq_class& c = 1) { return PathCombo{{Word{arrow}, c}}; }

bool mentions(const Word& w, const std::map<int, std::pair<std::size_t, bool>>& pair_of) {
  return std::any_of(w.begin(), w.end(), [&](int a) { return pair_of.count(a) > 0; });
}

}  // namespace

QPData reduce(const QPData& input, ReductionTrace* trace) {
  QPData qp = input;
  Potential& w = qp.potential;
  const std::size_t m = qp.quiver.vertices();
  std::vector<std::pair<int, int>> pairs;  // (x, y) with x y a cancelled 2-cycle

  // Normalize each quadratic block to Σ x_l y_l by a linear change of parallel arrows.
  for (int i = 1; i <= static_cast<int>(m); ++i)
    for (int j = i + 1; j <= static_cast<int>(m); ++j) {
      std::vector<int> xs, ys;
      for (const auto& a : qp.quiver.arrows()) {
        if (a.src == i && a.tgt == j) xs.push_back(a.id);
        if (a.src == j && a.tgt == i) ys.push_back(a.id);
      }
      if (xs.empty() || ys.empty()) continue;
      const std::size_t p = xs.size(), r = ys.size();
      QMatrix c(p, r);
      for (std::size_t s = 0; s < p; ++s)
        for (std::size_t t = 0; t < r; ++t) c(s, t) = w.coeff({xs[s], ys[t]});
      if (c.is_zero()) continue;
      const Echelon e = row_reduce(hcat({c, QMatrix::identity(p)}, p));
      const QMatrix ech = e.rref.block(0, 0, p, r);
      const QMatrix u = e.rref.block(0, r, p, p);
      std::vector<std::size_t> piv;
      for (auto col : e.pivots)
        if (col < r) piv.push_back(col);
      const std::size_t rk = piv.size();
      std::vector<std::vector<mpq_class>> vcols;
      for (auto col : piv) {
        std::vector<mpq_class> uv(r);
        uv[col] = 1;
        vcols.push_back(uv);
      }
      for (auto& kc : kernel(ech).columns()) vcols.push_back(kc);
      const QMatrix pm = u.transposed();
      const QMatrix rm = QMatrix::from_columns(r, vcols);
      std::map<int, PathCombo> subst;
      for (std::size_t s = 0; s < p; ++s) {
        PathCombo img;
        for (std::size_t t = 0; t < p; ++t) add_to(img, {xs[t]}, pm(s, t));
        subst[xs[s]] = img;
      }
      for (std::size_t s = 0; s < r; ++s) {
        PathCombo img;
        for (std::size_t t = 0; t < r; ++t) add_to(img, {ys[t]}, rm(s, t));
        subst[ys[s]] = img;
      }
      w = substitute(w, subst);
      if (trace) {
        trace->steps.push_back(ReductionStep{xs, pm, {}});
        trace->steps.push_back(ReductionStep{ys, rm, {}});
      }
      for (std::size_t l = 0; l < rk; ++l) pairs.emplace_back(xs[l], ys[l]);
    }

  std::map<int, std::pair<std::size_t, bool>> pair_of;
  for (std::size_t l = 0; l < pairs.size(); ++l) {
    pair_of[pairs[l].first] = {l, true};
    pair_of[pairs[l].second] = {l, false};
  }

  // Push cancelled arrows out of the higher terms degree by degree.
  for (int pass = 0; pass <= w.cap(); ++pass) {
    std::size_t d = 0;
    for (const auto& [word, c] : w.terms())
      if (word.size() >= 3 && mentions(word, pair_of) && (d == 0 || word.size() < d)) d = word.size();
    if (d == 0) break;
    std::vector<PathCombo> ushift(pairs.size()), vshift(pairs.size());
    for (const auto& [word, c] : w.terms()) {
      if (word.size() != d || !mentions(word, pair_of)) continue;
      std::size_t t = 0;
      while (!pair_of.count(word[t])) ++t;
      Word rest;
      for (std::size_t s = 1; s < d; ++s) rest.push_back(word[(t + s) % d]);
      const auto [l, is_x] = pair_of.at(word[t]);
      add_to(is_x ? ushift[l] : vshift[l], rest, c);
    }
    std::map<int, PathCombo> subst, shift;
    for (std::size_t l = 0; l < pairs.size(); ++l) {
      const auto [x, y] = pairs[l];
      if (!ushift[l].empty()) {
        PathCombo img = single(y), neg;
        for (const auto& [pw, pc] : ushift[l]) add_to(img, pw, -pc), add_to(neg, pw, -pc);
        subst[y] = img;
        shift[y] = neg;
      }
      if (!vshift[l].empty()) {
        PathCombo img = single(x), neg;
        for (const auto& [pw, pc] : vshift[l]) add_to(img, pw, -pc), add_to(neg, pw, -pc);
        subst[x] = img;
        shift[x] = neg;
      }
    }
    w = substitute(w, subst);
    if (trace) trace->steps.push_back(ReductionStep{{}, {}, std::move(shift)});
    for (const auto& [word, c] : w.terms())
      if (word.size() <= d && word.size() >= 3 && mentions(word, pair_of))
        throw Error(Errc::DegreeCapExceeded, "reduction failed to clear degree " + std::to_string(d));
  }

  std::vector<int> gone;
  for (const auto& [x, y] : pairs) {
    gone.push_back(x);
    gone.push_back(y);
  }
  Potential clean(w.cap());
  for (const auto& [word, c] : w.terms()) {
    if (!mentions(word, pair_of)) {
      clean.add(word, c);
      continue;
    }
    const bool quadratic_pair = word.size() == 2 && c == 1 && pair_of.count(word[0]) && pair_of.count(word[1]) &&
                                pair_of.at(word[0]).first == pair_of.at(word[1]).first;
    if (!quadratic_pair)
      throw Error(Errc::DegreeCapExceeded, "cancelled arrow survives in " + word_to_string(word));
  }
  qp.quiver.remove_arrows(gone);
  qp.potential = std::move(clean);
  if (trace) trace->deleted = gone;
  return qp;
}

bool has_two_cycles(const Quiver& q) {
  const IntMatrix a = q.adjacency();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (a(i, j) > 0 && a(j, i) > 0) return true;
  return false;
}

QPMutation mutate_qp_full(const QPData& qp, int k) {
  QPMutation res;
  res.pre = premutate_full(qp, k);
  res.qp = reduce(res.pre.qp, &res.trace);
  res.well_mutable = !has_two_cycles(res.qp.quiver);
  return res;
}

QPData mutate_qp(const QPData& qp, int k) { return mutate_qp_full(qp, k).qp; }

namespace {

/// All paths of length ≤ d starting at each vertex, length-0 paths included.
std::vector<std::pair<int, Word>> paths_up_to(const Quiver& q, int d) {
  std::vector<std::pair<int, Word>> out;  // (start vertex, word)
  std::vector<std::tuple<int, int, Word>> frontier;  // (start, end, word)
  for (int v = 1; v <= static_cast<int>(q.vertices()); ++v) {
    out.emplace_back(v, Word{});
    frontier.emplace_back(v, v, Word{});
  }
  for (int len = 1; len <= d; ++len) {
    std::vector<std::tuple<int, int, Word>> next;
    for (const auto& [s, e, w] : frontier)
      for (const auto& a : q.arrows()) {
        if (a.src != e) continue;
        Word nw = w;
        nw.push_back(a.id);
        out.emplace_back(s, nw);
        next.emplace_back(s, a.tgt, std::move(nw));
      }
    frontier = std::move(next);
  }
  return out;
}

int end_vertex(const Quiver& q, int start, const Word& w) { return w.empty() ? start : q.arrow(w.back()).tgt; }

long quotient_dim(const QPData& qp, int d, const std::vector<std::pair<int, PathCombo>>& rels) {
  const Quiver& q = qp.quiver;
  const auto paths = paths_up_to(q, d);
  // index paths by (start, end) block
  std::map<std::pair<int, int>, std::map<Word, std::size_t>> index;
  for (const auto& [s, w] : paths) {
    auto& blk = index[{s, end_vertex(q, s, w)}];
    blk.emplace(w, blk.size());
  }
  std::map<std::pair<int, int>, std::vector<std::vector<mpq_class>>> rows;
  for (const auto& [rsrc, rel] : rels) {
    // rel is a combination of paths from rsrc to some vertex; find its end from any term
    const int rend = end_vertex(q, rsrc, rel.begin()->first);
    std::size_t mindeg = SIZE_MAX;
    for (const auto& [w, c] : rel) mindeg = std::min(mindeg, w.size());
    for (const auto& [us, uw] : paths) {
      if (end_vertex(q, us, uw) != rsrc || uw.size() + mindeg > static_cast<std::size_t>(d)) continue;
      for (const auto& [ws, ww] : paths) {
        if (ws != rend || uw.size() + ww.size() + mindeg > static_cast<std::size_t>(d)) continue;
        const std::pair<int, int> key{us, end_vertex(q, ws, ww)};
        const auto& blk = index.at(key);
        std::vector<mpq_class> row(blk.size());
        bool nonzero = false;
        for (const auto& [rw, rc] : rel) {
          if (uw.size() + rw.size() + ww.size() > static_cast<std::size_t>(d)) continue;
          Word full = uw;
          full.insert(full.end(), rw.begin(), rw.end());
          full.insert(full.end(), ww.begin(), ww.end());
          row[blk.at(full)] += rc;
          nonzero = true;
        }
        if (nonzero) rows[key].push_back(std::move(row));
      }
    }
  }
  long total = static_cast<long>(paths.size());
  for (auto& [key, rs] : rows) {
    const std::size_t cols = index.at(key).size();
    QMatrix mat(rs.size(), cols);
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) mat(i, j) = rs[i][j];
    total -= static_cast<long>(rank(mat));
  }
  return total;
}

}  // namespace

std::vector<long> jacobi_dims(const QPData& qp, int up_to) {
  const int bound = qp.potential.cap() - static_cast<int>(qp.potential.max_degree()) + 1;
  if (up_to > bound)
    throw Error(Errc::DegreeCapExceeded, "jacobi_dims up to " + std::to_string(up_to) + " needs degree cap " +
                                             std::to_string(up_to + static_cast<int>(qp.potential.max_degree()) - 1));
  std::vector<std::pair<int, PathCombo>> rels;
  for (const auto& a : qp.quiver.arrows()) {
    PathCombo r = cyclic_derivative(qp.potential, a.id);
    if (!r.empty()) rels.emplace_back(a.tgt, std::move(r));
  }
  std::vector<long> out;
  long prev = 0;
  for (int d = 0; d <= up_to; ++d) {
    const long cur = quotient_dim(qp, d, rels);
    out.push_back(cur - prev);
    prev = cur;
  }
  return out;
}

}  // namespace qclust
