#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "corpus.hpp"
#include "qclust/decorated_rep.hpp"
#include "qclust/grassmannian.hpp"

using namespace qclust;

namespace {

QPData a2_forward() {
  Quiver q(2);
  q.add_arrow(1, 2, 1);
  return make_qp(q, Potential{});
}

std::vector<long> arrow_ranks(const DecRep& d) {
  std::vector<long> r;
  for (const auto& [id, m] : d.mats) r.push_back(static_cast<long>(rank(m)));
  return r;
}

}  // namespace

TEST_CASE("negative simples") {
  const QPData t = corpus::triangle().qp;
  const DecRep d1 = negative_simple(t, 1);
  CHECK(d1.dims == IntVec{0, 0, 0});
  CHECK(d1.vdims == IntVec{1, 0, 0});
  CHECK(negative_simple(t, 2).vdims != d1.vdims);
  CHECK_NOTHROW(verify_jacobi_module(d1));
}

TEST_CASE("mutation of simples and negative simples") {
  const QPData t = corpus::triangle().qp;
  for (int k = 1; k <= 3; ++k) {
    const DecRep s = mutate_rep(negative_simple(t, k), k);
    CHECK(s.dims == unit_vector(3, k - 1));
    CHECK(s.vdims == IntVec{0, 0, 0});
    const DecRep back = mutate_rep(s, k);
    CHECK(back.dims == IntVec{0, 0, 0});
    CHECK(back.vdims == unit_vector(3, k - 1));
  }
}

TEST_CASE("A2 indecomposable of dimension (1,1)") {
  DecRep d{a2_forward(), {1, 1}, {{1, QMatrix::identity(1)}}, {0, 0}};
  CHECK_NOTHROW(verify_jacobi_module(d));
  const DecRep m2 = mutate_rep(d, 2);
  CHECK(m2.dims == IntVec{1, 0});
  CHECK(m2.vdims == IntVec{0, 0});
  const DecRep back = mutate_rep(m2, 2);
  CHECK(back.dims == d.dims);
  CHECK(back.vdims == d.vdims);
}

TEST_CASE("relation violations are detected") {
  const QPData t = corpus::triangle().qp;
  // all three arrows nonzero on the dimension vector (1,1,1) violates ∂W = 0
  DecRep bad{t, {1, 1, 1}, {{1, QMatrix::identity(1)}, {2, QMatrix::identity(1)}, {3, QMatrix::identity(1)}}, {0, 0, 0}};
  try {
    verify_jacobi_module(bad);
    FAIL("relations not checked");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::RelationViolation);
  }
  CHECK_THROWS_AS(mutate_rep(bad, 1), Error);
}

TEST_CASE("H^1 modules") {
  const auto a2 = corpus::a2();
  CHECK(h1_gamma(a2.qp, {}, 1).dims == IntVec{0, 0});
  CHECK(h1_gamma(a2.qp, {1}, 1).dims == IntVec{1, 0});
  CHECK(h1_gamma(a2.qp, {1}, 2).dims == IntVec{0, 0});

  const auto tri = corpus::triangle();
  const DecRep h = h1_gamma_sum(tri.qp, {1, 2, 3, 1}, {1, 1, 1});
  CHECK(h.dims == IntVec{2, 2, 2});
  CHECK(h.vdims == IntVec{0, 0, 0});
  CHECK_NOTHROW(verify_jacobi_module(h));
  // the three summands
  CHECK(h1_gamma(tri.qp, {1, 2, 3, 1}, 1).dims == IntVec{0, 1, 1});
  CHECK(h1_gamma(tri.qp, {1, 2, 3, 1}, 2).dims == IntVec{1, 1, 0});
  CHECK(h1_gamma(tri.qp, {1, 2, 3, 1}, 3).dims == IntVec{1, 0, 1});
}

TEST_CASE("property: decorated mutation over the corpus") {
  for (const auto& c : corpus::all()) {
    CAPTURE(c.name);
    for (const auto& ks : corpus::sequences(c.n, 4)) {
      for (int j = 1; j <= c.n; ++j) {
        const DecRep h = h1_gamma(c.qp, ks, j);
        const DecRep r = h1_gamma(c.qp, ks, j, Pivoting::Rightmost);
        CHECK_NOTHROW(verify_jacobi_module(h));
        // splitting independence
        CHECK(h.dims == r.dims);
        CHECK(h.vdims == r.vdims);
        CHECK(arrow_ranks(h) == arrow_ranks(r));
        if (ks.size() <= 2 && std::accumulate(h.dims.begin(), h.dims.end(), 0L) <= 4) {
          for (int q : {2, 3}) {
            const FqRep fh = reduce_mod(h, q), fr = reduce_mod(r, q);
            for (long a = 0; a <= h.dims[0]; ++a)
              for (long b = 0; b <= (c.n > 1 ? h.dims[1] : 0); ++b) {
                IntVec g(h.dims.size(), 0);
                g[0] = a;
                if (c.n > 1) g[1] = b;
                CHECK(gr_count(fh, g) == gr_count(fr, g));
              }
          }
        }
        // involution on (dims, vdims)
        for (int k = 1; k <= c.n; ++k) {
          const DecRep back = mutate_rep(mutate_rep(h, k), k);
          CHECK(back.dims == h.dims);
          CHECK(back.vdims == h.vdims);
          CHECK_NOTHROW(verify_jacobi_module(back));
        }
      }
    }
  }
}
