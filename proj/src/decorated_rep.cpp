#include "qclust/decorated_rep.hpp"

#include <algorithm>
#include <numeric>

#include "qclust/error.hpp"

namespace qclust {

namespace {

std::size_t vx(int v) { return static_cast<std::size_t>(v - 1); }

std::size_t dim_at(const DecRep& d, int v) { return static_cast<std::size_t>(d.dims[vx(v)]); }

QMatrix mat_of(const DecRep& d, int arrow) {
  auto it = d.mats.find(arrow);
  const Arrow& a = d.qp.quiver.arrow(arrow);
  if (it == d.mats.end()) return QMatrix(dim_at(d, a.tgt), dim_at(d, a.src));
  return it->second;
}

QMatrix complement_by(const QMatrix& part, std::size_t n, Pivoting piv) {
  if (piv == Pivoting::Leftmost) return complement(part, n);
  QMatrix rev(n, n);
  for (std::size_t i = 0; i < n; ++i) rev(n - 1 - i, i) = 1;
  const Echelon e = row_reduce(hcat({part, rev}, n));
  std::vector<std::vector<mpq_class>> added;
  for (auto p : e.pivots)
    if (p >= part.cols()) added.push_back(rev.column(p - part.cols()));
  return QMatrix::from_columns(n, added);
}

}  // namespace

QMatrix evaluate_path(const DecRep& d, int start, const Word& w) {
  QMatrix acc = QMatrix::identity(dim_at(d, start));
  for (int a : w) acc = mat_of(d, a) * acc;
  return acc;
}

QMatrix evaluate(const DecRep& d, int start, int end, const PathCombo& p) {
  QMatrix acc(dim_at(d, end), dim_at(d, start));
  for (const auto& [w, c] : p) {
    if (c == 0) continue;
    acc = acc + c * evaluate_path(d, start, w);
  }
  return acc;
}

void verify_jacobi_module(const DecRep& d) {
  const Quiver& q = d.qp.quiver;
  if (d.dims.size() != q.vertices() || d.vdims.size() != q.vertices())
    throw Error(Errc::DimensionMismatch, "dimension vectors do not match the quiver");
  for (const auto& a : q.arrows()) {
    const QMatrix m = mat_of(d, a.id);
    if (m.rows() != dim_at(d, a.tgt) || m.cols() != dim_at(d, a.src))
      throw Error(Errc::DimensionMismatch, "matrix of arrow " + std::to_string(a.id));
  }
  for (const auto& a : q.arrows()) {
    const PathCombo r = cyclic_derivative(d.qp.potential, a.id);
    if (r.empty()) continue;
    if (!evaluate(d, a.tgt, a.src, r).is_zero())
      throw Error(Errc::RelationViolation, "derivative by arrow " + std::to_string(a.id) + " acts nontrivially");
  }
  // nilpotency: the arrow ideal must drive the whole module to zero
  const std::size_t total = static_cast<std::size_t>(std::accumulate(d.dims.begin(), d.dims.end(), 0L));
  std::vector<std::size_t> off(q.vertices() + 1, 0);
  for (std::size_t i = 0; i < q.vertices(); ++i) off[i + 1] = off[i] + static_cast<std::size_t>(d.dims[i]);
  std::vector<QMatrix> ops;
  for (const auto& a : q.arrows()) {
    QMatrix big(total, total);
    big.set_block(off[vx(a.tgt)], off[vx(a.src)], mat_of(d, a.id));
    ops.push_back(std::move(big));
  }
  QMatrix span = QMatrix::identity(total);
  for (std::size_t step = 0; step <= total && span.cols() > 0; ++step) {
    std::vector<QMatrix> imgs;
    for (const auto& op : ops) imgs.push_back(op * span);
    span = image(hcat(imgs, total));
  }
  if (span.cols() > 0) throw Error(Errc::RelationViolation, "representation is not nilpotent");
}

DecRep negative_simple(const QPData& qp, int j) {
  const std::size_t m = qp.quiver.vertices();
  if (j < 1 || static_cast<std::size_t>(j) > m) throw Error(Errc::InvalidInput, "vertex outside the quiver");
  DecRep d{qp, IntVec(m, 0), {}, unit_vector(m, vx(j))};
  for (const auto& a : qp.quiver.arrows()) d.mats.emplace(a.id, QMatrix(0, 0));
  return d;
}

DecRep simple(const QPData& qp, int j) {
  const std::size_t m = qp.quiver.vertices();
  if (j < 1 || static_cast<std::size_t>(j) > m) throw Error(Errc::InvalidInput, "vertex outside the quiver");
  DecRep d{qp, unit_vector(m, vx(j)), {}, IntVec(m, 0)};
  for (const auto& a : qp.quiver.arrows()) d.mats.emplace(a.id, QMatrix(dim_at(d, a.tgt), dim_at(d, a.src)));
  return d;
}

DecRep transport(const DecRep& d, const QPData& reduced, const ReductionTrace& trace) {
  std::map<int, QMatrix> cur;
  for (const auto& a : d.qp.quiver.arrows()) cur[a.id] = mat_of(d, a.id);
  const std::size_t total = static_cast<std::size_t>(std::accumulate(d.dims.begin(), d.dims.end(), 0L));
  for (const auto& step : trace.steps) {
    if (step.linear()) {
      const QMatrix inv = inverse(step.p);
      std::map<int, QMatrix> next;
      for (std::size_t u = 0; u < step.ids.size(); ++u) {
        QMatrix acc(cur.at(step.ids[u]).rows(), cur.at(step.ids[u]).cols());
        for (std::size_t s = 0; s < step.ids.size(); ++s) acc = acc + inv(u, s) * cur.at(step.ids[s]);
        next[step.ids[u]] = acc;
      }
      for (auto& [id, m] : next) cur[id] = std::move(m);
      continue;
    }
    // Solve N(c) = ρ(c) − N(shift_c) by iteration; nilpotency makes it stabilize.
    const std::map<int, QMatrix> base = cur;
    DecRep probe{d.qp, d.dims, cur, d.vdims};
    bool stable = false;
    for (std::size_t it = 0; it <= total + 2 && !stable; ++it) {
      std::map<int, QMatrix> next = base;
      for (const auto& [c, sh] : step.shift) {
        const Arrow& a = d.qp.quiver.arrow(c);
        next[c] = base.at(c) - evaluate(probe, a.src, a.tgt, sh);
      }
      stable = next == probe.mats;
      probe.mats = std::move(next);
    }
    if (!stable) throw Error(Errc::RelationViolation, "module transport did not stabilize");
    cur = std::move(probe.mats);
  }
  for (int id : trace.deleted)
    if (!cur.at(id).is_zero())
      throw Error(Errc::RelationViolation, "cancelled arrow " + std::to_string(id) + " acts nontrivially");
  DecRep out{reduced, d.dims, {}, d.vdims};
  for (const auto& a : reduced.quiver.arrows()) out.mats[a.id] = cur.at(a.id);
  return out;
}

DecRep mutate_rep(const DecRep& d, int k, Pivoting piv) {
  const QPMutation mu = mutate_qp_full(d.qp, k);
  const Premutation& pre = mu.pre;
  const Quiver& q = d.qp.quiver;
  const std::size_t kk = vx(k);
  const std::size_t dk = dim_at(d, k);

  // M_in gathers the sources of arrows into k, M_out the targets of arrows out of k.
  std::vector<std::size_t> off_in{0}, off_out{0};
  for (int a : pre.in) off_in.push_back(off_in.back() + dim_at(d, q.arrow(a).src));
  for (int b : pre.out) off_out.push_back(off_out.back() + dim_at(d, q.arrow(b).tgt));
  const std::size_t din = off_in.back(), dout = off_out.back();

  QMatrix alpha(dk, din), beta(dout, dk);
  for (std::size_t i = 0; i < pre.in.size(); ++i) alpha.set_block(0, off_in[i], mat_of(d, pre.in[i]));
  for (std::size_t i = 0; i < pre.out.size(); ++i) beta.set_block(off_out[i], 0, mat_of(d, pre.out[i]));

  // Representation of the premutated quiver away from k: composites act as b∘a.
  DecRep tmp{pre.qp, d.dims, {}, d.vdims};
  for (const auto& a : q.arrows())
    if (a.src != k && a.tgt != k) tmp.mats[a.id] = mat_of(d, a.id);
  for (const auto& [id, ab] : pre.composites) tmp.mats[id] = mat_of(d, ab.second) * mat_of(d, ab.first);

  QMatrix gamma(din, dout);
  for (std::size_t i = 0; i < pre.in.size(); ++i)
    for (std::size_t j = 0; j < pre.out.size(); ++j) {
      int comp = 0;
      for (const auto& [id, ab] : pre.composites)
        if (ab.first == pre.in[i] && ab.second == pre.out[j]) comp = id;
      const PathCombo r = cyclic_derivative(pre.replaced, comp);
      if (r.empty()) continue;
      const int from = q.arrow(pre.out[j]).tgt, to = q.arrow(pre.in[i]).src;
      gamma.set_block(off_in[i], off_out[j], evaluate(tmp, from, to, r));
    }
  if (!(alpha * gamma).is_zero()) throw Error(Errc::RelationViolation, "alpha gamma != 0 at vertex " + std::to_string(k));
  if (!(gamma * beta).is_zero()) throw Error(Errc::RelationViolation, "gamma beta != 0 at vertex " + std::to_string(k));

  const QMatrix kg = kernel(gamma);
  const std::size_t nkg = kg.cols();
  const QMatrix retract = inverse(hcat({kg, complement_by(kg, dout, piv)}, dout)).block(0, 0, nkg, dout);
  const QMatrix bcoords = solve(kg, image(beta));
  const std::size_t rb = bcoords.cols();
  const QMatrix proj = inverse(hcat({bcoords, complement_by(bcoords, nkg, piv)}, nkg)).block(rb, 0, nkg - rb, nkg);
  const QMatrix ig = image(gamma);
  const std::size_t rg = ig.cols();
  const QMatrix ka = kernel(alpha);
  const QMatrix gcoords = solve(ka, ig);
  const QMatrix section = ka * complement_by(gcoords, ka.cols(), piv);
  const std::size_t n1 = nkg - rb, n2 = rg, n3 = section.cols(), n4 = static_cast<std::size_t>(d.vdims[kk]);
  const std::size_t nk = n1 + n2 + n3 + n4;

  const QMatrix abar =
      vcat({mpq_class(-1) * (proj * retract), mpq_class(-1) * solve(ig, gamma), QMatrix(n3 + n4, dout)}, dout);
  const QMatrix bbar = hcat({QMatrix(din, n1), ig, section, QMatrix(din, n4)}, din);

  const long vbar = static_cast<long>(dk - rank(beta)) - static_cast<long>(rank(alpha) - rank(beta * alpha));

  tmp.dims[kk] = static_cast<long>(nk);
  tmp.vdims[kk] = vbar;
  for (std::size_t j = 0; j < pre.out.size(); ++j) {
    const int b = pre.out[j];
    tmp.mats[b] = abar.block(0, off_out[j], nk, off_out[j + 1] - off_out[j]);
  }
  for (std::size_t i = 0; i < pre.in.size(); ++i) {
    const int a = pre.in[i];
    tmp.mats[a] = bbar.block(off_in[i], 0, off_in[i + 1] - off_in[i], nk);
  }
  verify_jacobi_module(tmp);
  DecRep out = transport(tmp, mu.qp, mu.trace);
  verify_jacobi_module(out);
  return out;
}

DecRep h1_gamma(const QPData& qp0, const std::vector<int>& ks, int j, Pivoting piv) {
  QPData cur = qp0;
  for (int k : ks) {
    QPMutation mu = mutate_qp_full(cur, k);
    if (!mu.well_mutable) throw Error(Errc::InvalidInput, "potential is not well-mutable along the sequence");
    cur = std::move(mu.qp);
  }
  DecRep d = negative_simple(cur, j);
  for (auto it = ks.rbegin(); it != ks.rend(); ++it) d = mutate_rep(d, *it, piv);
  return d;
}

DecRep direct_sum(const DecRep& a, const DecRep& b) {
  if (!(a.qp.quiver.arrows() == b.qp.quiver.arrows()) || !(a.qp.potential == b.qp.potential))
    throw Error(Errc::InvalidInput, "direct sum over different quivers with potential");
  DecRep out{a.qp, a.dims + b.dims, {}, a.vdims + b.vdims};
  for (const auto& ar : a.qp.quiver.arrows()) {
    const QMatrix ma = mat_of(a, ar.id), mb = mat_of(b, ar.id);
    QMatrix s(ma.rows() + mb.rows(), ma.cols() + mb.cols());
    s.set_block(0, 0, ma);
    s.set_block(ma.rows(), ma.cols(), mb);
    out.mats[ar.id] = std::move(s);
  }
  return out;
}

DecRep h1_gamma_sum(const QPData& qp0, const std::vector<int>& ks, const IntVec& lam, Pivoting piv) {
  const std::size_t m = qp0.quiver.vertices();
  if (lam.size() < m) throw Error(Errc::DimensionMismatch, "lambda shorter than the vertex count");
  std::optional<DecRep> acc;
  for (std::size_t j = 0; j < m; ++j) {
    if (lam[j] == 0) continue;
    const DecRep one = h1_gamma(qp0, ks, static_cast<int>(j + 1), piv);
    for (long c = 0; c < lam[j]; ++c) acc = acc ? direct_sum(*acc, one) : one;
  }
  if (!acc) {
    QPData cur = qp0;
    for (int k : ks) cur = mutate_qp(cur, k);
    for (auto it = ks.rbegin(); it != ks.rend(); ++it) cur = mutate_qp(cur, *it);
    DecRep zero{cur, IntVec(m, 0), {}, IntVec(m, 0)};
    for (const auto& a : cur.quiver.arrows()) zero.mats.emplace(a.id, QMatrix(0, 0));
    return zero;
  }
  return *acc;
}

std::string dump(const DecRep& d) {
  std::string s = "dims " + to_string(d.dims) + "\nvdims " + to_string(d.vdims) + "\n";
  for (const auto& a : d.qp.quiver.arrows())
    s += "arrow " + std::to_string(a.id) + " " + std::to_string(a.src) + "->" + std::to_string(a.tgt) + " " +
         mat_of(d, a.id).to_string() + "\n";
  return s;
}

}  // namespace qclust
