// One line per acceptance criterion; exits nonzero if any fails.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "corpus.hpp"
#include "oracles.hpp"
#include "qclust/decorated_rep.hpp"
#include "qclust/dt_series.hpp"
#include "qclust/grassmannian.hpp"
#include "qclust/seed.hpp"

using namespace qclust;

namespace {

constexpr int kMaxLen = 6;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::string first_failure;

  void fail(const std::string& what) {
    if (pass) first_failure = what;
    pass = false;
  }
};

std::string seq_str(const std::vector<int>& ks) {
  std::string s = "(";
  for (std::size_t i = 0; i < ks.size(); ++i) s += (i ? "," : "") + std::to_string(ks[i]);
  return s + ")";
}

std::vector<std::vector<long>> rows_of(const IntMatrix& b) {
  std::vector<std::vector<long>> r;
  for (std::size_t i = 0; i < b.rows(); ++i) r.push_back(b.row(i));
  return r;
}

// e_j for each mutable j, the all-ones mutable vector, and optionally 2e_1
std::vector<IntVec> lams(const corpus::Case& c, bool with_double) {
  const std::size_t m = c.btilde.rows();
  std::vector<IntVec> out;
  IntVec ones(m, 0);
  for (int j = 0; j < c.n; ++j) {
    out.push_back(unit_vector(m, static_cast<std::size_t>(j)));
    ones[static_cast<std::size_t>(j)] = 1;
  }
  out.push_back(ones);
  if (with_double) out.push_back(unit_vector(m, 0) + unit_vector(m, 0));
  return out;
}

IntVec mutable_part(const IntVec& lam, int n) { return IntVec(lam.begin(), lam.begin() + n); }

bool acyclic_at_either_end(const corpus::Case& c, const std::vector<int>& ks) {
  if (is_acyclic(c.qp.quiver)) return true;
  QPData end = c.qp;
  for (int k : ks) end = mutate_qp(end, k);
  return is_acyclic(end.quiver);
}

Outcome laurent_phenomenon() {
  Outcome o;
  long count = 0;
  for (const auto& c : corpus::all()) {
    const auto s0 = initial_seed(c.lambda, c.btilde);
    for (const auto& ks : corpus::sequences(c.n, kMaxLen))
      for (const auto& lam : lams(c, true)) {
        try {
          cluster_monomial(s0, ks, lam);
          ++count;
        } catch (const NotDivisibleError&) {
          o.fail(c.name + " ks " + seq_str(ks));
        }
      }
  }
  o.detail << count << " cluster monomials over 5 seeds, sequences of length <= " << kMaxLen;
  return o;
}

// criteria 2 and 3 share the cases
void two_routes(Outcome& agree, Outcome& positive) {
  long compared = 0, skipped = 0, terms = 0;
  for (const auto& c : corpus::all()) {
    const auto s0 = initial_seed(c.lambda, c.btilde);
    for (const auto& ks : corpus::sequences(c.n, kMaxLen)) {
      if (!acyclic_at_either_end(c, ks)) {
        ++skipped;
        continue;
      }
      for (const auto& lam : lams(c, false)) {
        const std::string where = c.name + " ks " + seq_str(ks);
        const auto r = cluster_monomial(s0, ks, lam);
        const DecRep h = h1_gamma_sum(c.qp, ks, mutable_part(lam, c.n));
        try {
          const auto d = dt_cluster_monomial(c.lambda, c.btilde, ks, lam, h.dims);
          if (!(d.element == r.element)) agree.fail(where);
        } catch (const Error& e) {
          agree.fail(where + ": " + e.what());
        }
        ++compared;
        if (!is_positive(r.element)) positive.fail(where + " not positive");
        for (const auto& [e, x] : r.element.terms()) {
          ++terms;
          if (!lefschetz_decompose(x).value) positive.fail(where + " Lefschetz fails");
        }
      }
    }
  }
  agree.detail << compared << " monomials compared exactly, " << skipped << " sequences cyclic at both ends";
  positive.detail << compared << " monomials, " << terms << " coefficients";
}

Outcome pentagon() {
  Outcome o;
  auto f = make_form(IntMatrix::from_rows({{0, 1}, {-1, 0}}));
  const IntMatrix e = IntMatrix::identity(2);
  const IntVec box{12, 12};
  const auto e1 = pochhammer(f, e, {1, 0}, 1, box), e2 = pochhammer(f, e, {0, 1}, 1, box);
  const auto e12 = pochhammer(f, e, {1, 1}, 1, box);
  if (!factorization_check(e2 * e1, {e1, e12, e2})) o.fail("E(X[0,1])E(X[1,0]) != E(X[1,0])E(X[1,1])E(X[0,1])");
  o.detail << "A2, cone depth 12";
  return o;
}

Outcome pochhammer_series() {
  Outcome o;
  auto f = make_form(IntMatrix::from_rows({{0, 1}, {-1, 0}}));
  const auto plus = pochhammer(f, IntMatrix::identity(2), {1, 0}, 1, {2, 0});
  const auto series = oracle::inverse_product_series({1, 2}, 13);
  const QLaurent got = plus.coeff({2, 0}).expand_series(2 * 13);
  for (int k = 0; k <= 13; ++k)
    if (got.coeff(2 * k) != (k >= 2 ? series[static_cast<std::size_t>(k - 2)] : mpz_class(0)))
      o.fail("T^" + std::to_string(k));
  for (const auto& [ex, c] : got.terms())
    if (ex % 2) o.fail("odd power of T^(1/2)");
  o.detail << "T^2/((1-T)(1-T^2)) through T^13, 12 nonzero terms";
  return o;
}

Outcome triangle_example() {
  Outcome o;
  const auto tri = corpus::triangle();
  const std::vector<int> ks{1, 2, 3, 1};
  IntVec lam(6, 0);
  for (int j = 0; j < 3; ++j) lam[static_cast<std::size_t>(j)] = 1;
  const auto r = cluster_monomial(initial_seed(tri.lambda, tri.btilde), ks, lam);
  const auto it = r.f_coefficients.find({1, 1, 1});
  if (it == r.f_coefficients.end()) {
    o.fail("no coefficient at (1,1,1)");
    return o;
  }
  const QLaurent& c = it->second;
  std::vector<mpz_class> weights;
  mpz_class mass = 0;
  for (const auto& [ex, x] : c.terms()) {
    weights.push_back(x);
    mass += x;
  }
  if (!c.nonnegative() || weights != std::vector<mpz_class>{2, 2} || mass != 4) o.fail("coefficient " + c.to_string());

  const DecRep h = h1_gamma_sum(tri.qp, ks, {1, 1, 1});
  CountTable t;
  for (int q : kDefaultPrimes) t.counts[q] = gr_count(reduce_mod(h, q), h.dims - IntVec{1, 1, 1});
  for (int q : {2, 3, 5})
    if (t.counts[q] != 3 * q + 1) o.fail("gr_count at q=" + std::to_string(q) + " is " + t.counts[q].get_str());
  const QLaurent s = serre_interpolate(t, 3);
  if (s != QLaurent(1) + QLaurent::monomial(2, 3)) o.fail("Serre polynomial " + s.to_string("T"));
  if (s.at_one() != 4) o.fail("Euler characteristic " + s.at_one().get_str());
  o.detail << "coefficient " << c.to_string() << ", counts " << t.counts[2] << "," << t.counts[3] << ","
           << t.counts[5] << ", Serre " << s.to_string("T");
  return o;
}

Outcome classical_limit() {
  Outcome o;
  long vars = 0;
  for (const auto& c : corpus::all()) {
    const auto s0 = initial_seed(c.lambda, c.btilde);
    const auto rows = rows_of(c.btilde);
    // depth-first so each seed is one mutation away from its parent
    std::function<void(const QuantumSeed&, std::vector<int>&)> walk = [&](const QuantumSeed& s, std::vector<int>& ks) {
      const auto classical = oracle::commutative_cluster(rows, ks);
      for (std::size_t i = 0; i < s.m; ++i) {
        oracle::Poly p;
        for (const auto& [e, x] : s.vars[i].at_v_one()) oracle::add_term(p, e, x);
        if (p != classical[i]) o.fail(c.name + " ks " + seq_str(ks) + " x" + std::to_string(i + 1));
        ++vars;
      }
      if (static_cast<int>(ks.size()) == kMaxLen) return;
      for (int k = 1; k <= c.n; ++k) {
        if (!ks.empty() && ks.back() == k) continue;
        ks.push_back(k);
        walk(mutate(s, k), ks);
        ks.pop_back();
      }
    };
    std::vector<int> ks;
    walk(s0, ks);
  }
  o.detail << vars << " cluster variables at v=1";
  return o;
}

Outcome involutions() {
  Outcome o;
  long seeds = 0, qps = 0, reps = 0;
  for (const auto& c : corpus::all()) {
    const auto s0 = initial_seed(c.lambda, c.btilde);
    for (const auto& ks : corpus::sequences(c.n, 4)) {
      const auto s = mutate_along(s0, ks);
      for (int k = 1; k <= c.n; ++k) {
        const auto back = mutate(mutate(s, k), k);
        if (!(back.lambda == s.lambda && back.btilde == s.btilde && back.vars == s.vars))
          o.fail("seed " + c.name + " ks " + seq_str(ks) + " k " + std::to_string(k));
        ++seeds;
      }
      for (int j = 1; j <= c.n; ++j) {
        const DecRep h = h1_gamma(c.qp, ks, j);
        for (int k = 1; k <= c.n; ++k) {
          const DecRep back = mutate_rep(mutate_rep(h, k), k);
          if (back.dims != h.dims || back.vdims != h.vdims)
            o.fail("decorated rep " + c.name + " ks " + seq_str(ks) + " k " + std::to_string(k));
          ++reps;
        }
      }
    }
    Potential capped(8);
    for (const auto& [word, x] : c.qp.potential.terms()) capped.add(word, x);
    for (const auto& ks : corpus::sequences(c.n, 3)) {
      QPData cur = make_qp(c.qp.quiver, capped);
      for (int k : ks) cur = mutate_qp(cur, k);
      for (int k = 1; k <= c.n; ++k) {
        const QPData back = mutate_qp(mutate_qp(cur, k), k);
        const int up = std::min<int>(
            6, 8 - static_cast<int>(std::max(back.potential.max_degree(), cur.potential.max_degree())) + 1);
        if (!same_multigraph(back.quiver, cur.quiver) || jacobi_dims(back, up) != jacobi_dims(cur, up))
          o.fail("QP " + c.name + " ks " + seq_str(ks) + " k " + std::to_string(k));
        ++qps;
      }
    }
  }
  o.detail << seeds << " seeds, " << qps << " QPs (cap 8), " << reps << " decorated representations";
  return o;
}

Outcome sign_sanity() {
  Outcome o;
  long seqs = 0;
  for (const auto& c : corpus::all())
    for (const auto& ks : corpus::sequences(c.n, kMaxLen)) {
      try {
        const auto r = sign_sequence(c.btilde, ks);
        if (!ks.empty() && r.signs.front() != 1) o.fail(c.name + " ks " + seq_str(ks) + " starts with -");
      } catch (const Error& e) {
        o.fail(c.name + " ks " + seq_str(ks) + ": " + e.what());
      }
      ++seqs;
    }
  o.detail << seqs << " sequences";
  return o;
}

}  // namespace

int main() {
  bool all = true;
  auto report = [&](int n, const std::string& name, std::function<Outcome()> run) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << " " << name << " [" << o.detail.str()
              << "]";
    if (!o.pass) std::cout << " first failure: " << o.first_failure;
    std::cout << " (" << std::fixed << std::setprecision(1) << secs << "s)" << std::endl;
    all = all && o.pass;
  };

  Outcome agree, positive;
  bool ran = false;
  auto both = [&] {
    if (!ran) two_routes(agree, positive);
    ran = true;
  };

  report(1, "Laurent phenomenon", laurent_phenomenon);
  report(2, "two-route agreement", [&] {
    both();
    Outcome o;
    o.pass = agree.pass;
    o.first_failure = agree.first_failure;
    o.detail << agree.detail.str();
    return o;
  });
  report(3, "positivity and Lefschetz", [&] {
    both();
    Outcome o;
    o.pass = positive.pass;
    o.first_failure = positive.first_failure;
    o.detail << positive.detail.str();
    return o;
  });
  report(4, "pentagon identity", pentagon);
  report(5, "Pochhammer series", pochhammer_series);
  report(6, "cyclic triangle example", triangle_example);
  report(7, "classical limit", classical_limit);
  report(8, "mutation involutions", involutions);
  report(9, "sign sequences", sign_sanity);
  return all ? 0 : 1;
}
