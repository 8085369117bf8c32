#include "qclust/grassmannian.hpp"

#include <algorithm>
#include <future>
#include <functional>
#include <sstream>

#include "qclust/error.hpp"
#include "qclust/linalg.hpp"

namespace qclust {

FqRep reduce_mod(const DecRep& d, int q) {
  FqRep rep{std::make_shared<const FiniteField>(q), d.qp.quiver, d.dims, {}};
  const FiniteField& f = *rep.field;
  const long p = f.characteristic();
  for (const auto& a : d.qp.quiver.arrows()) {
    const std::size_t r = static_cast<std::size_t>(d.dims[static_cast<std::size_t>(a.tgt - 1)]);
    const std::size_t c = static_cast<std::size_t>(d.dims[static_cast<std::size_t>(a.src - 1)]);
    FqMatrix m{r, c, std::vector<int>(r * c, 0)};
    auto it = d.mats.find(a.id);
    if (it != d.mats.end() && it->second.rows() == r && it->second.cols() == c) {
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
          const mpq_class& x = it->second(i, j);
          const mpz_class den = x.get_den();
          if (mpz_class(den % p) == 0)
            throw Error(Errc::InvalidInput, "denominator divisible by " + std::to_string(p));
          const int nu = f.from_integer(mpz_class(mpz_class(x.get_num() % p) + p).get_si() % p);
          const int de = f.from_integer(mpz_class(den % p).get_si());
          m.data[i * c + j] = f.mul(nu, f.inv(de));
        }
    }
    rep.mats.emplace(a.id, std::move(m));
  }
  return rep;
}

mpz_class gaussian_binomial(int n, int k, int q) {
  if (k < 0 || k > n) return 0;
  mpz_class num = 1, den = 1, qq = q;
  for (int i = 0; i < k; ++i) {
    mpz_class a, b;
    mpz_pow_ui(a.get_mpz_t(), qq.get_mpz_t(), static_cast<unsigned long>(n - i));
    mpz_pow_ui(b.get_mpz_t(), qq.get_mpz_t(), static_cast<unsigned long>(i + 1));
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

namespace {

using Rows = std::vector<std::vector<int>>;  // RREF basis rows

void enumerate_subspaces(const FiniteField& f, int n, int k, std::vector<Rows>& out) {
  std::vector<int> piv;
  std::function<void(int)> choose = [&](int start) {
    if (static_cast<int>(piv.size()) == k) {
      // free slots: row r, column c > piv[r] and not a pivot column
      std::vector<std::pair<int, int>> slots;
      for (int r = 0; r < k; ++r)
        for (int c = piv[static_cast<std::size_t>(r)] + 1; c < n; ++c)
          if (std::find(piv.begin(), piv.end(), c) == piv.end()) slots.emplace_back(r, c);
      Rows rows(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(n), 0));
      for (int r = 0; r < k; ++r) rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(piv[static_cast<std::size_t>(r)])] = 1;
      std::function<void(std::size_t)> fill = [&](std::size_t s) {
        if (s == slots.size()) {
          out.push_back(rows);
          return;
        }
        for (int x = 0; x < f.order(); ++x) {
          rows[static_cast<std::size_t>(slots[s].first)][static_cast<std::size_t>(slots[s].second)] = x;
          fill(s + 1);
        }
        rows[static_cast<std::size_t>(slots[s].first)][static_cast<std::size_t>(slots[s].second)] = 0;
      };
      fill(0);
      return;
    }
    for (int c = start; c < n; ++c) {
      piv.push_back(c);
      choose(c + 1);
      piv.pop_back();
    }
  };
  choose(0);
}

int pivot_of(const std::vector<int>& row) {
  for (std::size_t i = 0; i < row.size(); ++i)
    if (row[i] != 0) return static_cast<int>(i);
  return -1;
}

bool in_span(const FiniteField& f, const Rows& basis, std::vector<int> w) {
  for (const auto& row : basis) {
    const int p = pivot_of(row);
    const int c = w[static_cast<std::size_t>(p)];
    if (c == 0) continue;
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = f.sub(w[j], f.mul(c, row[j]));
  }
  return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
}

bool maps_into(const FiniteField& f, const FqMatrix& m, const Rows& from, const Rows& to) {
  for (const auto& u : from) {
    std::vector<int> img(m.rows, 0);
    for (std::size_t i = 0; i < m.rows; ++i) {
      int s = 0;
      for (std::size_t j = 0; j < m.cols; ++j) s = f.add(s, f.mul(m.at(i, j), u[j]));
      img[i] = s;
    }
    if (!in_span(f, to, img)) return false;
  }
  return true;
}

}  // namespace

mpz_class gr_count(const FqRep& rep, const IntVec& gamma, double budget) {
  const std::size_t m = rep.dims.size();
  if (gamma.size() != m) throw Error(Errc::DimensionMismatch, "gamma length");
  for (std::size_t i = 0; i < m; ++i)
    if (gamma[i] < 0 || gamma[i] > rep.dims[i]) return 0;
  const FiniteField& f = *rep.field;
  double work = 1;
  for (std::size_t i = 0; i < m; ++i)
    work *= gaussian_binomial(static_cast<int>(rep.dims[i]), static_cast<int>(rep.dims[i] - gamma[i]), f.order()).get_d();
  if (work > budget)
    throw Error(Errc::BudgetExceeded, "enumeration needs " + std::to_string(static_cast<long long>(work)) + " candidates");
  std::vector<std::vector<Rows>> cand(m);
  for (std::size_t i = 0; i < m; ++i)
    enumerate_subspaces(f, static_cast<int>(rep.dims[i]), static_cast<int>(rep.dims[i] - gamma[i]), cand[i]);
  std::vector<const Rows*> chosen(m, nullptr);
  mpz_class total = 0;
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    if (v == m) {
      ++total;
      return;
    }
    for (const auto& sub : cand[v]) {
      chosen[v] = &sub;
      bool ok = true;
      for (const auto& a : rep.quiver.arrows()) {
        const std::size_t s = static_cast<std::size_t>(a.src - 1), t = static_cast<std::size_t>(a.tgt - 1);
        if ((s != v && t != v) || s > v || t > v) continue;
        if (!maps_into(f, rep.mats.at(a.id), *chosen[s], *chosen[t])) {
          ok = false;
          break;
        }
      }
      if (ok) walk(v + 1);
    }
    chosen[v] = nullptr;
  };
  walk(0);
  return total;
}

std::string CountTable::dump() const {
  std::ostringstream os;
  os << "gamma " << to_string(gamma);
  for (const auto& [q, c] : counts) os << " q=" << q << ":" << c.get_str();
  if (interpolated) os << " serre " << interpolated->to_string("T");
  return os.str();
}

QLaurent serre_interpolate(const CountTable& tbl, int degree_bound) {
  if (static_cast<int>(tbl.counts.size()) < degree_bound + 2)
    throw Error(Errc::InvalidInput, "need at least degree_bound + 2 points");
  std::vector<std::pair<int, mpz_class>> pts(tbl.counts.begin(), tbl.counts.end());
  const auto held = pts.back();
  pts.pop_back();
  const std::size_t npts = pts.size();
  QMatrix vander(npts, npts), rhs(npts, 1);
  for (std::size_t i = 0; i < npts; ++i) {
    mpq_class x = 1;
    for (std::size_t j = 0; j < npts; ++j) {
      vander(i, j) = x;
      x *= pts[i].first;
    }
    rhs(i, 0) = pts[i].second;
  }
  const QMatrix coeffs = solve(vander, rhs);
  QLaurent out;
  for (std::size_t j = 0; j < npts; ++j) {
    const mpq_class& c = coeffs(j, 0);
    if (c == 0) continue;
    if (c.get_den() != 1) throw Error(Errc::NotPolynomialCount, "non-integral interpolation coefficient " + c.get_str());
    if (static_cast<int>(j) > degree_bound)
      throw Error(Errc::NotPolynomialCount, "interpolated degree " + std::to_string(j) + " exceeds bound");
    out.add_term(2 * static_cast<int>(j), c.get_num());
  }
  mpz_class at = 0, x = 1;
  for (int j = 0; j <= 2 * degree_bound; j += 2) {
    at += out.coeff(j) * x;
    x *= held.first;
  }
  if (at != held.second)
    throw Error(Errc::NotPolynomialCount, "held-out point q=" + std::to_string(held.first) + " gives " +
                                              held.second.get_str() + ", polynomial predicts " + at.get_str());
  return out;
}

bool is_acyclic(const Quiver& q) {
  const std::size_t m = q.vertices();
  std::vector<int> indeg(m, 0);
  for (const auto& a : q.arrows()) ++indeg[static_cast<std::size_t>(a.tgt - 1)];
  std::vector<int> stack;
  for (std::size_t i = 0; i < m; ++i)
    if (indeg[i] == 0) stack.push_back(static_cast<int>(i + 1));
  std::size_t seen = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++seen;
    for (const auto& a : q.arrows())
      if (a.src == v && --indeg[static_cast<std::size_t>(a.tgt - 1)] == 0) stack.push_back(a.tgt);
  }
  return seen == m;
}

bool verify_counts(const CountTable& tbl, const QLaurent& s) {
  if (s.is_zero() || s.min_degree() < 0) return false;
  for (const auto& [e, x] : s.terms())
    if (e % 2) return false;
  for (const auto& [q, count] : tbl.counts) {
    mpz_class at = 0, pw;
    for (const auto& [e, x] : s.terms()) {
      mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(e / 2));
      at += x * pw;
    }
    if (at != count) return false;
  }
  return true;
}

bool CrosscheckReport::passed() const {
  if (!hard) return true;
  for (const auto& r : rows)
    if (r.counted && (!r.match || !r.pure)) return false;
  return true;
}

std::string CrosscheckReport::to_string() const {
  std::ostringstream os;
  for (const auto& r : rows) {
    os << "F " << qclust::to_string(r.gamma) << " quotient " << r.table.dump() << " coefficient " << r.coefficient.to_string();
    if (!r.counted) {
      os << " " << (r.skipped.empty() ? "SKIPPED" : r.skipped) << "\n";
      continue;
    }
    if (r.match)
      os << " MATCH shift " << r.shift << (r.candidate ? " (degree uncertified, fits all counts)" : "");
    else
      os << " MISMATCH" << (r.skipped.empty() ? "" : " (" + r.skipped + ")");
    os << (r.pure ? " pure" : " impure") << "\n";
  }
  return os.str();
}

CrosscheckReport coefficient_crosscheck(const ClusterMonomialResult& seed_result, const DecRep& h1, bool hard,
                                        const std::vector<int>& primes, double budget, int jobs) {
  CrosscheckReport rep;
  rep.hard = hard;
  std::vector<FqRep> fields;
  for (int q : primes) {
    try {
      fields.push_back(reduce_mod(h1, q));
    } catch (const Error&) {
      // a bad prime for this module; the others still interpolate
    }
  }
  const std::size_t n = h1.dims.size();
  for (const auto& [gamma, c] : seed_result.f_coefficients) {
    CrosscheckRow row;
    row.gamma = gamma;
    row.coefficient = c;
    rep.rows.push_back(std::move(row));
  }

  auto fill = [&](CrosscheckRow& row) {
    const IntVec& gamma = row.gamma;
    const QLaurent& c = row.coefficient;
    if (gamma.size() != n) {
      row.skipped = "dimension mismatch";
      return;
    }
    const QLaurent twisted = c.shifted(static_cast<int>(euler_form(h1.qp.quiver, gamma, gamma)));
    row.pure = twisted.nonnegative() &&
               std::all_of(twisted.terms().begin(), twisted.terms().end(), [](const auto& t) { return t.first % 2 == 0; });
    // F-coefficients are indexed by the dimension of the subobject.
    const IntVec quot = h1.dims - gamma;
    row.table.gamma = quot;
    if (!all_nonnegative(quot)) {
      // nonzero coefficient against an empty Grassmannian
      row.counted = true;
      row.skipped = "gamma exceeds dims";
      return;
    }
    try {
      for (const auto& fr : fields) row.table.counts[fr.field->order()] = gr_count(fr, quot, budget);
      row.counted = true;
      // the product of ordinary Grassmannians bounds the dimension
      long dim_bound = 0;
      for (std::size_t i = 0; i < n; ++i) dim_bound += gamma[i] * quot[i];
      const int points = static_cast<int>(row.table.counts.size());
      const int bound = static_cast<int>(std::min<long>(dim_bound, points - 2));
      try {
        row.table.interpolated = serre_interpolate(row.table, bound);
      } catch (const Error& e) {
        if (e.code() != Errc::NotPolynomialCount || dim_bound <= points - 2) throw;
        // too few field sizes to certify the degree; test the polynomial the coefficient predicts
        const QLaurent cand = c.shifted(-c.min_degree());
        if (!verify_counts(row.table, cand)) throw;
        row.table.interpolated = cand;
        row.candidate = true;
      }
      const QLaurent& s = *row.table.interpolated;
      row.euler_match = s.at_one() == c.at_one();
      if (!s.is_zero()) {
        row.shift = c.min_degree() - s.min_degree();
        row.match = s.shifted(row.shift) == c;
      }
    } catch (const Error& e) {
      if (e.code() == Errc::BudgetExceeded) {
        row.counted = false;
        row.skipped = "SKIPPED " + std::string(e.what());
      } else if (e.code() == Errc::NotPolynomialCount) {
        row.skipped = e.what();
      } else {
        throw;
      }
    }
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, rep.rows.size()));
  std::vector<std::future<void>> futs;
  for (std::size_t t = 0; t < workers; ++t)
    futs.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred, [&, t] {
      for (std::size_t i = t; i < rep.rows.size(); i += workers) fill(rep.rows[i]);
    }));
  for (auto& f : futs) f.get();
  return rep;
}

}  // namespace qclust
